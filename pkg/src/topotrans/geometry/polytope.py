"""Convex polytopes in V-representation and exact intersection tests."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from typing import Optional, Sequence

from .lp import feasible_point


class GeometryError(ValueError):
    """Malformed geometric input."""


def to_fraction(x) -> Fraction:
    if isinstance(x, bool):
        raise GeometryError(f"not a number: {x!r}")
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except ValueError as exc:
            raise GeometryError(f"not a rational: {x!r}") from exc
    raise GeometryError(f"expected an integer or 'p/q' string, got {x!r}")


def fraction_json(x: Fraction):
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def vector(v) -> tuple:
    return tuple(to_fraction(x) for x in v)


@dataclass(frozen=True)
class Polytope:
    """Convex hull of finitely many rational points."""

    dim: int
    vertices: tuple

    def __post_init__(self):
        if not self.vertices:
            raise GeometryError("a polytope needs at least one vertex")
        verts = []
        seen = set()
        for v in self.vertices:
            v = vector(v)
            if len(v) != self.dim:
                raise GeometryError(f"vertex {v} does not have length {self.dim}")
            if v not in seen:
                seen.add(v)
                verts.append(v)
        object.__setattr__(self, "vertices", tuple(verts))

    @classmethod
    def from_points(cls, points) -> "Polytope":
        points = [vector(p) for p in points]
        if not points:
            raise GeometryError("a polytope needs at least one vertex")
        return cls(len(points[0]), tuple(points))

    @classmethod
    def box(cls, lo, hi) -> "Polytope":
        lo, hi = vector(lo), vector(hi)
        if len(lo) != len(hi):
            raise GeometryError("box corners differ in dimension")
        return cls(len(lo), tuple(product(*[(a, b) for a, b in zip(lo, hi)])))

    def to_json(self) -> dict:
        return {"vertices": [[fraction_json(x) for x in v] for v in self.vertices]}

    @classmethod
    def from_json(cls, data: dict, dim: Optional[int] = None) -> "Polytope":
        try:
            verts = [vector(v) for v in data["vertices"]]
        except (KeyError, TypeError) as exc:
            raise GeometryError(f"malformed polytope JSON: {exc}") from exc
        if not verts:
            raise GeometryError("a polytope needs at least one vertex")
        return cls(dim if dim is not None else len(verts[0]), tuple(verts))


@dataclass(frozen=True)
class FlatCandidate:
    """Affine flat ``base + span(directions)`` with per-set distance bounds."""

    dim_flat: int
    base: tuple
    directions: tuple
    residuals: tuple = ()
    exact: bool = True

    def __post_init__(self):
        if len(self.directions) != self.dim_flat:
            raise GeometryError("number of directions must equal dim_flat")
        if not 0 <= self.dim_flat < len(self.base):
            raise GeometryError(f"flat dimension {self.dim_flat} outside [0, {len(self.base) - 1}]")
        if any(len(u) != len(self.base) for u in self.directions):
            raise GeometryError("direction length differs from the ambient dimension")
        if rank(self.directions) != self.dim_flat:
            raise GeometryError("flat directions are linearly dependent")

    @property
    def dim(self) -> int:
        return len(self.base)

    def to_json(self) -> dict:
        return {
            "dim_flat": self.dim_flat,
            "base": [fraction_json(x) for x in self.base],
            "directions": [[fraction_json(x) for x in u] for u in self.directions],
            "residuals": [fraction_json(r) if isinstance(r, (int, Fraction)) else r
                          for r in self.residuals],
            "exact": self.exact,
        }


@dataclass(frozen=True)
class ColoredFamily:
    dim: int
    colors: tuple
    target_color: Optional[int] = None
    planted: Optional[FlatCandidate] = field(default=None, compare=False)

    def __post_init__(self):
        colors = tuple(tuple(c) for c in self.colors)
        for cls_ in colors:
            if not cls_:
                raise GeometryError("every color class must be nonempty")
            for p in cls_:
                if p.dim != self.dim:
                    raise GeometryError(f"polytope of dimension {p.dim} in a family of dimension {self.dim}")
        object.__setattr__(self, "colors", colors)

    @property
    def sizes(self) -> list[int]:
        return [len(c) for c in self.colors]

    def to_json(self) -> dict:
        out = {"d": self.dim, "colors": [[p.to_json() for p in c] for c in self.colors]}
        if self.target_color is not None:
            out["target_color"] = self.target_color
        if self.planted is not None:
            out["planted"] = self.planted.to_json()
        return out

    @classmethod
    def from_json(cls, data: dict) -> "ColoredFamily":
        try:
            d = int(data["d"])
            colors = [[Polytope.from_json(p, d) for p in c] for c in data["colors"]]
        except (KeyError, TypeError) as exc:
            raise GeometryError(f"malformed family JSON: {exc}") from exc
        return cls(d, tuple(colors), data.get("target_color"))


def rank(vectors) -> int:
    rows = [list(map(Fraction, v)) for v in vectors]
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(r + 1, len(rows)):
            f = rows[i][c] / rows[r][c]
            if f:
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
    return r


def _check_dims(sets: Sequence[Polytope]) -> int:
    if not sets:
        raise GeometryError("need at least one set")
    d = sets[0].dim
    if any(p.dim != d for p in sets):
        raise GeometryError("dimension mismatch among polytopes")
    return d


def _common_point_system(sets, directions=()):
    """Linear system for: points x_j in sets[j] with x_j - x_0 in span(directions).

    Variables are barycentric weights of every set followed, for j >= 1, by
    split free coefficients (t+, t-) of the directions.
    """
    d = sets[0].dim
    k = len(directions)
    offsets = []
    col = 0
    for p in sets:
        offsets.append(col)
        col += len(p.vertices)
    t_offsets = []
    for _ in sets[1:]:
        t_offsets.append(col)
        col += 2 * k
    A, b = [], []
    for j, p in enumerate(sets[1:], start=1):
        for axis in range(d):
            row = [0] * col
            for i, v in enumerate(sets[0].vertices):
                row[offsets[0] + i] = v[axis]
            for i, v in enumerate(p.vertices):
                row[offsets[j] + i] -= v[axis]
            for t, u in enumerate(directions):
                row[t_offsets[j - 1] + 2 * t] = u[axis]
                row[t_offsets[j - 1] + 2 * t + 1] = -u[axis]
            A.append(row)
            b.append(0)
    for j, p in enumerate(sets):
        row = [0] * col
        for i in range(len(p.vertices)):
            row[offsets[j] + i] = 1
        A.append(row)
        b.append(1)
    return A, b, offsets


def _combine(p: Polytope, weights) -> tuple:
    return tuple(sum((w * v[a] for w, v in zip(weights, p.vertices)), Fraction(0))
                 for a in range(p.dim))


def common_point_modulo(sets: Sequence[Polytope], directions=()) -> Optional[tuple]:
    """A point x of sets[0] such that x + span(directions) meets every set, or None."""
    d = _check_dims(sets)
    if len(sets) == 1:
        return sets[0].vertices[0]
    if any(len(u) != d for u in directions):
        raise GeometryError("direction length differs from the ambient dimension")
    A, b, offsets = _common_point_system(sets, directions)
    y = feasible_point(A, b)
    if y is None:
        return None
    n0 = len(sets[0].vertices)
    return _combine(sets[0], y[offsets[0]:offsets[0] + n0])


def find_point_transversal(sets: Sequence[Polytope]) -> Optional[tuple]:
    """Exact rational point common to all sets, or None if they do not meet."""
    return common_point_modulo(sets)


def intersects(sets: Sequence[Polytope]) -> bool:
    return find_point_transversal(sets) is not None


def contains(p: Polytope, x) -> bool:
    return intersects([p, Polytope(p.dim, (vector(x),))])


def flat_meets_polytope(flat: FlatCandidate, p: Polytope) -> bool:
    if flat.dim != p.dim:
        raise GeometryError("flat and polytope differ in dimension")
    point = Polytope(p.dim, (tuple(Fraction(x) for x in flat.base),))
    dirs = [tuple(Fraction(x) for x in u) for u in flat.directions]
    return common_point_modulo([point, p], dirs) is not None


def check_semintersecting(sets: Sequence[Polytope]) -> bool:
    """At most one of the (k-1)-subfamilies of the k sets fails to intersect."""
    if len(sets) < 2:
        raise GeometryError("semintersecting needs at least two sets")
    _check_dims(sets)
    if intersects(sets):
        return True
    failures = 0
    for sub in combinations(range(len(sets)), len(sets) - 1):
        if not intersects([sets[i] for i in sub]):
            failures += 1
            if failures > 1:
                return False
    return True


def representative_systems(fam: ColoredFamily):
    return product(*fam.colors)


def check_heterochromatic(fam: ColoredFamily) -> bool:
    """Every system of representatives (one set per color) intersects."""
    return all(intersects(list(system)) for system in representative_systems(fam))


def check_heterochromatic_semintersecting(fam: ColoredFamily) -> bool:
    """Every system of representatives is semintersecting."""
    if len(fam.colors) < 2:
        return True
    return all(check_semintersecting(list(s)) for s in representative_systems(fam))
