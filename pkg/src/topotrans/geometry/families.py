"""Instance generators and instance-level verification of the theorems."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Mapping, Optional, Sequence

from .. import checkers
from ..checkers import ColorSpec, TheoremReport
from .polytope import (
    ColoredFamily,
    FlatCandidate,
    GeometryError,
    Polytope,
    check_heterochromatic,
    check_heterochromatic_semintersecting,
    flat_meets_polytope,
    rank,
    vector,
)
from .transversal import flat_search

TARGET_HALF_WIDTH = Fraction(1, 8)
OUTER_HALF_WIDTH = Fraction(4)


def _color_sizes(specs) -> list[int]:
    sizes = []
    for s in specs:
        if isinstance(s, int):
            sizes.append(s)
        elif isinstance(s, ColorSpec):
            sizes.append(s.size)
        else:
            sizes.append(ColorSpec(*s).size)
    if not sizes or any(n < 1 for n in sizes):
        raise GeometryError(f"invalid color sizes {sizes}")
    return sizes


def _random_directions(rng: random.Random, d: int, rho: int) -> list[tuple]:
    while True:
        dirs = [tuple(Fraction(rng.randint(-2, 2)) for _ in range(d)) for _ in range(rho)]
        if rank(dirs) == rho:
            return dirs


def plant_family(d: int, target_color: int, flat_dim: int, specs: Sequence,
                 seed: int = 0) -> ColoredFamily:
    """Family whose target color has a known flat_dim-transversal.

    Target sets are boxes of half-width 1/8 centred at distinct points of a
    random rational flat inside [-1, 1]^d; every other color consists of
    boxes around [-2, 2]^d, so each system of representatives meets in a
    target box.  ``specs`` gives one entry per color: a set count, or a
    ColorSpec / (rho, k[, count]) tuple.
    """
    sizes = _color_sizes(specs)
    if not 0 <= target_color < len(sizes):
        raise GeometryError(f"target color {target_color} outside [0, {len(sizes) - 1}]")
    if not 0 <= flat_dim < d:
        raise GeometryError(f"flat dimension {flat_dim} outside [0, {d - 1}]")
    rng = random.Random(seed)
    base = tuple(Fraction(rng.randint(-4, 4), 8) for _ in range(d))
    dirs = _random_directions(rng, d, flat_dim)
    scale = 12 * max(flat_dim, 1)

    n_target = sizes[target_color]
    if flat_dim == 0:
        coeffs = [()] * n_target
    else:
        pool = [c for c in product(range(-3, 4), repeat=flat_dim)]
        rng.shuffle(pool)
        if len(pool) < n_target:
            raise GeometryError("too many target sets for distinct centres")
        coeffs = pool[:n_target]

    h = TARGET_HALF_WIDTH
    target = []
    for c in coeffs:
        centre = tuple(
            base[a] + sum((Fraction(ct) * u[a] for ct, u in zip(c, dirs)), Fraction(0)) / scale
            for a in range(d)
        )
        target.append(Polytope.box([x - h for x in centre], [x + h for x in centre]))

    colors = []
    for i, n in enumerate(sizes):
        if i == target_color:
            colors.append(target)
            continue
        boxes = []
        for _ in range(n):
            lo = [-OUTER_HALF_WIDTH + Fraction(rng.randint(0, 8), 4) for _ in range(d)]
            hi = [OUTER_HALF_WIDTH - Fraction(rng.randint(0, 8), 4) for _ in range(d)]
            boxes.append(Polytope.box(lo, hi))
        colors.append(boxes)

    flat = FlatCandidate(flat_dim, base, tuple(dirs), tuple(Fraction(0) for _ in target), True)
    for p in target:
        if not flat_meets_polytope(flat, p):
            raise AssertionError("planted flat misses a target box")
    return ColoredFamily(d, tuple(colors), target_color, flat)


def leta_vertices(eta: Sequence[int]):
    return list(product(*[range(n) for n in eta]))


def random_leta_coords(eta: Sequence[int], d: int, seed: int = 0, spread: int = 6) -> dict:
    rng = random.Random(seed)
    return {v: tuple(Fraction(rng.randint(-spread, spread)) for _ in range(d))
            for v in leta_vertices(eta)}


def build_Leta_family(eta: Sequence[int], vertex_coords: Mapping) -> ColoredFamily:
    """Images of the maximal simplices of L_eta under the given vertex map.

    Vertices are 0-based index tuples.  Color i holds, for each j < n_i, the
    hull of the images of all vertices whose i-th index is j.
    """
    eta = list(eta)
    if not eta or any(n < 1 for n in eta):
        raise GeometryError(f"invalid eta {eta}")
    coords = {}
    for v in leta_vertices(eta):
        if v not in vertex_coords:
            raise GeometryError(f"no coordinates for vertex {v}")
        coords[v] = vector(vertex_coords[v])
    d = len(next(iter(coords.values())))
    if any(len(x) != d for x in coords.values()):
        raise GeometryError("vertex coordinates differ in dimension")
    colors = []
    for i, n in enumerate(eta):
        colors.append([
            Polytope(d, tuple(coords[v] for v in coords if v[i] == j)) for j in range(n)
        ])
    return ColoredFamily(d, tuple(colors))


# --- verification -----------------------------------------------------------

SEMI_THEOREMS = {"semi_trans", "semi_ineq", "semi_ls"}


def _theorem_shape(theorem: str, params: dict):
    """(condition report, ambient dimension, per-color rho, per-color size or None)."""
    p = params
    if theorem == "colorful_trans":
        rep = checkers.check_colorful_trans(p["d"], p["m"], p["rho"], p["k"])
        n = p["d"] - p["m"] + 1
        return rep, p["d"], [p["rho"]] * n, [p["rho"] + p["k"] + 1] * n
    if theorem in ("colorful_trans_multi", "semi_trans"):
        fn = checkers.check_colorful_trans_multi if theorem == "colorful_trans_multi" \
            else checkers.check_semi_trans
        specs = [ColorSpec(*s) for s in p["specs"]]
        rep = fn(p["d"], p["m"], specs)
        return rep, p["d"], [s.rho for s in specs], [s.size for s in specs]
    if theorem in ("ineq_corollary", "semi_ineq"):
        fn = checkers.check_ineq_corollary if theorem == "ineq_corollary" else checkers.check_semi_ineq
        rep = fn(p["d"], p["k"], p["rhos"])
        return rep, p["d"], list(p["rhos"]), [r + p["k"] + 1 for r in p["rhos"]]
    if theorem == "ls_trans":
        rep = checkers.check_ls_trans(p["n"], p["rho"])
        return rep, p["n"] + p["rho"], [p["rho"]] * p["n"], [p["rho"] + 2] * p["n"]
    if theorem == "semi_ls":
        rep = checkers.check_semi_ls(p["n"], p["rho"])
        return rep, p["n"] + p["rho"] - 1, [p["rho"]] * p["n"], [p["rho"] + 2] * p["n"]
    if theorem == "linear_map":
        rep = checkers.check_linear_map(p["eta"], p["d"])
        l = len(p["eta"])
        return rep, p["d"], [n - l for n in p["eta"]], None
    raise GeometryError(f"no instance verification for theorem {theorem!r}")


@dataclass
class InstanceReport:
    theorem: str
    params: dict
    hypothesis: bool
    hypothesis_kind: str
    condition: TheoremReport
    status: str
    color: Optional[int] = None
    rho: Optional[int] = None
    flat: Optional[FlatCandidate] = None
    searched: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "params": self.params,
            "hypothesis": self.hypothesis,
            "hypothesis_kind": self.hypothesis_kind,
            "condition_applies": self.condition.applies,
            "condition": self.condition.to_json(),
            "status": self.status,
            "color": self.color,
            "rho": self.rho,
            "flat": None if self.flat is None else self.flat.to_json(),
            "searched": self.searched,
        }


def verify_theorem_on_instance(fam: ColoredFamily, theorem: str, params: dict,
                               budget: int = 400, order: Optional[Sequence[int]] = None,
                               seed: int = 0) -> InstanceReport:
    """Check hypothesis and condition, then look for the promised transversal.

    The search visits colors in ``order`` (default: the family's target color
    first, then the rest) and stops at the first certified transversal.  A
    failed search is reported as ``search_exhausted``; it is never evidence
    against the theorem.
    """
    condition, d, rhos, sizes = _theorem_shape(theorem, params)
    if fam.dim != d:
        raise GeometryError(f"family lives in R^{fam.dim}, theorem parameters give R^{d}")
    if len(fam.colors) != len(rhos):
        raise GeometryError(f"family has {len(fam.colors)} colors, theorem needs {len(rhos)}")
    if sizes is not None and fam.sizes != sizes:
        raise GeometryError(f"color sizes {fam.sizes} do not match {sizes}")

    if theorem in SEMI_THEOREMS:
        kind = "heterochromatic_semintersecting"
        hypothesis = check_heterochromatic_semintersecting(fam)
    else:
        kind = "heterochromatic_intersecting"
        hypothesis = check_heterochromatic(fam)
    report = InstanceReport(theorem, params, hypothesis, kind, condition, "")
    if not hypothesis:
        report.status = "hypothesis_failed"
        return report
    if not condition.applies:
        report.status = "condition_fails"
        return report

    if order is None:
        order = list(range(len(fam.colors)))
        if fam.target_color is not None:
            order.remove(fam.target_color)
            order.insert(0, fam.target_color)
    for i in order:
        rho = rhos[i]
        if rho >= d:
            report.searched.append({"color": i, "rho": rho, "found": True, "trivial": True})
            report.status, report.color, report.rho = "transversal_found", i, rho
            return report
        out = flat_search(list(fam.colors[i]), rho, budget, seed=seed)
        report.searched.append({"color": i, "rho": rho, "found": out.candidate is not None,
                                "method": out.method, "tried": out.directions_tried})
        if out.candidate is not None:
            report.status, report.color, report.rho, report.flat = (
                "transversal_found", i, rho, out.candidate)
            return report
    report.status = "search_exhausted"
    return report
