"""Search for rho-flats meeting every set of a family.

Positive answers are certified; a ``None`` result only means the budget ran
out.  The one complete case is a line in the plane: if a line transversal
exists, one can be moved to pass through two vertices of distinct sets, so
trying every such vertex direction decides the question.

Every candidate is a direction space U.  Whether some translate of U meets
all the sets is a linear feasibility problem, so it is settled exactly by
:func:`common_point_modulo`.  Directions come from vertex tuples and from a
float descent that pulls one point of each set onto a common rho-flat.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Optional, Sequence

import numpy as np

from .polytope import (
    FlatCandidate,
    GeometryError,
    Polytope,
    _check_dims,
    common_point_modulo,
    find_point_transversal,
    rank,
)

log = logging.getLogger(__name__)

RESIDUAL_TOL = 1e-8


@dataclass
class SearchOutcome:
    candidate: Optional[FlatCandidate]
    exhaustive: bool
    directions_tried: int
    method: str = ""


def _complete_basis(vectors, d, rho):
    """Extend independent vectors to rho independent ones with unit vectors."""
    out = [tuple(Fraction(x) for x in v) for v in vectors]
    for axis in range(d):
        if len(out) == rho:
            break
        e = tuple(Fraction(int(i == axis)) for i in range(d))
        if rank(out + [e]) == len(out) + 1:
            out.append(e)
    return out


def _independent_subset(vectors):
    chosen = []
    for v in vectors:
        if any(v) and rank(chosen + [v]) == len(chosen) + 1:
            chosen.append(v)
    return chosen


def _try_directions(sets, directions, rho) -> Optional[FlatCandidate]:
    base = common_point_modulo(sets, directions)
    if base is None:
        return None
    return FlatCandidate(rho, base, tuple(tuple(u) for u in directions),
                         tuple(Fraction(0) for _ in sets), True)


def _span_flat(sets, rho) -> FlatCandidate:
    d = sets[0].dim
    pts = [p.vertices[0] for p in sets]
    base = pts[0]
    diffs = [tuple(a - b for a, b in zip(q, base)) for q in pts[1:]]
    dirs = _complete_basis(_independent_subset(diffs), d, rho)
    return FlatCandidate(rho, base, tuple(dirs), tuple(Fraction(0) for _ in sets), True)


# --- float descent ----------------------------------------------------------


def _project_simplex(v: np.ndarray) -> np.ndarray:
    """Euclidean projection onto the probability simplex."""
    u = np.sort(v)[::-1]
    css = np.cumsum(u) - 1.0
    idx = np.arange(1, len(v) + 1)
    cond = u - css / idx > 0
    r = idx[cond][-1]
    theta = css[r - 1] / r
    return np.maximum(v - theta, 0.0)


def _fit_flat(points: np.ndarray, rho: int):
    center = points.mean(axis=0)
    centered = points - center
    if rho == 0:
        return center, np.zeros((0, points.shape[1]))
    _, _, vt = np.linalg.svd(centered, full_matrices=True)
    return center, vt[:rho]


def _distances(points, center, U):
    diff = points - center
    if len(U):
        diff = diff - (diff @ U.T) @ U
    return np.linalg.norm(diff, axis=1)


def descend(sets, rho, weights, iters=300, step=None):
    """Alternate between fitting a rho-flat and pulling each point toward it.

    ``weights`` are initial barycentric coordinates per set.  Returns
    (center, U, points).
    """
    V = [np.array([[float(x) for x in v] for v in p.vertices]) for p in sets]
    lam = [np.asarray(w, dtype=float) for w in weights]
    for _sweep in range(iters):
        pts = np.array([l @ v for l, v in zip(lam, V)])
        center, U = _fit_flat(pts, rho)
        moved = 0.0
        for j, (l, v) in enumerate(zip(lam, V)):
            # projected gradient on ||(I - UU^T)(v^T l - c)||^2 over the simplex
            P = np.eye(v.shape[1]) - U.T @ U
            M = v @ P
            lip = 2 * np.linalg.norm(M @ M.T, 2) + 1e-12
            eta = step or 1.0 / lip
            for _step in range(5):
                r = (l @ v - center) @ P
                grad = 2 * v @ (P @ r)
                new = _project_simplex(l - eta * grad)
                moved = max(moved, float(np.abs(new - l).max()))
                l = new
            lam[j] = l
        if moved < 1e-13:
            break
    pts = np.array([l @ v for l, v in zip(lam, V)])
    center, U = _fit_flat(pts, rho)
    return center, U, pts


def _rationalize(U: np.ndarray, max_den: int) -> list[tuple]:
    return [tuple(Fraction(float(x)).limit_denominator(max_den) for x in row) for row in U]


def _certify_float(sets, rho, center, U, pts, tol):
    """Try exact certification of a float flat, falling back to residuals."""
    for max_den in (10 ** 3, 10 ** 6):
        dirs = _rationalize(U, max_den)
        if rank(dirs) != rho:
            continue
        flat = _try_directions(sets, dirs, rho)
        if flat is not None:
            return flat
    res = _distances(pts, center, U)
    if res.max() <= tol:
        base = tuple(Fraction(float(x)) for x in center)
        dirs = tuple(tuple(Fraction(float(x)) for x in row) for row in U)
        if rank(dirs) == rho:
            return FlatCandidate(rho, base, dirs, tuple(float(r) for r in res), False)
    return None


def flat_search(sets: Sequence[Polytope], rho: int, budget: int = 400,
                restarts: int = 8, seed: int = 0, tol: float = RESIDUAL_TOL) -> SearchOutcome:
    d = _check_dims(sets)
    if not 0 <= rho < d:
        raise GeometryError(f"flat dimension rho={rho} outside [0, {d - 1}]")
    sets = list(sets)

    point = find_point_transversal(sets)
    if rho == 0:
        if point is None:
            return SearchOutcome(None, True, 0, "point-lp")
        flat = FlatCandidate(0, point, (), tuple(Fraction(0) for _ in sets), True)
        return SearchOutcome(flat, True, 0, "point-lp")
    if len(sets) <= rho + 1:
        return SearchOutcome(_span_flat(sets, rho), True, 0, "span")
    if point is not None:
        dirs = _complete_basis([], d, rho)
        return SearchOutcome(_try_directions(sets, dirs, rho), True, 0, "point-lp")

    tried = 0
    rng = np.random.default_rng(seed)

    # centroids first: cheap, and exact for families built around a flat
    init = [np.full(len(p.vertices), 1.0 / len(p.vertices)) for p in sets]
    center, U, pts = descend(sets, rho, init)
    tried += 1
    flat = _certify_float(sets, rho, center, U, pts, tol)
    if flat is not None:
        return SearchOutcome(flat, False, tried, "descent")

    # vertex tuples from rho + 1 distinct sets
    exhaustive = True
    seen = set()
    for idx in combinations(range(len(sets)), rho + 1):
        for verts in product(*[sets[i].vertices for i in idx]):
            diffs = [tuple(a - b for a, b in zip(v, verts[0])) for v in verts[1:]]
            if rank(diffs) != rho:
                continue
            key = _direction_key(diffs)
            if key in seen:
                continue
            seen.add(key)
            if tried >= budget:
                exhaustive = False
                break
            tried += 1
            flat = _try_directions(sets, diffs, rho)
            if flat is not None:
                return SearchOutcome(flat, False, tried, "vertex-directions")
        if not exhaustive:
            break

    for _ in range(restarts):
        init = [rng.dirichlet(np.ones(len(p.vertices))) for p in sets]
        center, U, pts = descend(sets, rho, init)
        tried += 1
        flat = _certify_float(sets, rho, center, U, pts, tol)
        if flat is not None:
            return SearchOutcome(flat, False, tried, "descent")

    complete = exhaustive and d == 2 and rho == 1
    log.debug("no %d-flat found after %d directions", rho, tried)
    return SearchOutcome(None, complete, tried, "exhausted")


def _direction_key(diffs):
    """Canonical form of span(diffs): reduced row echelon form."""
    rows = [list(v) for v in diffs]
    ncols = len(rows[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][c]
        rows[r] = [x / p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
    return tuple(tuple(row) for row in rows)


def find_flat_transversal(sets: Sequence[Polytope], rho: int, budget: int = 400,
                          **kwargs) -> Optional[FlatCandidate]:
    """A rho-flat meeting every set, or None if none was found within budget."""
    return flat_search(sets, rho, budget, **kwargs).candidate
