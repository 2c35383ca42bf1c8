"""Stiefel-Whitney classes, heights of w_1 and category bounds for G(d, m)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

from .mult import pieri_multiply
from .schubert import CohClass, GrassmannContext, SchubertError


def stiefel_whitney(ctx: GrassmannContext, i: int) -> CohClass:
    """w_i = [0, ..., 0, 1, ..., 1] with i ones."""
    if not 1 <= i <= ctx.m:
        raise SchubertError(f"w_{i} undefined on G({ctx.d},{ctx.m}): need 1 <= i <= {ctx.m}")
    return CohClass.from_symbol((0,) * (ctx.m - i) + (1,) * i, ctx)


def dual_stiefel_whitney(ctx: GrassmannContext, i: int) -> CohClass:
    """Dual class [0, ..., 0, i]."""
    if not 1 <= i <= ctx.width:
        raise SchubertError(
            f"dual w_{i} undefined on G({ctx.d},{ctx.m}): need 1 <= i <= {ctx.width}"
        )
    return CohClass.from_symbol((0,) * (ctx.m - 1) + (i,), ctx)


def _normalize(d: int, m: int) -> tuple[int, int]:
    GrassmannContext(d, m)
    return (d, d - m) if 2 * m > d else (d, m)


def w1_height_computed(ctx: GrassmannContext) -> int:
    """Largest n with w_1^n != 0 in H*(G(d, m); Z2), by iterated Pieri steps."""
    ctx = ctx.with_ring("Z2")
    x = CohClass.unit(ctx)
    n = 0
    while n < ctx.dim:
        x = pieri_multiply(x, 1)
        if x.is_zero():
            break
        n += 1
    return n


def _min_power_of_two_exponent(d: int) -> int:
    s = 0
    while (1 << s) < d:
        s += 1
    return s


@dataclass(frozen=True)
class HeightReport:
    d: int
    m: int
    s: int
    computed_height: int
    closed_form_lower: int
    closed_form_exact: Optional[int]

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "m": self.m,
            "s": self.s,
            "computed": self.computed_height,
            "lower": self.closed_form_lower,
            "exact": self.closed_form_exact,
        }


def w1_height_closed_form(d: int, m: int) -> HeightReport:
    """Closed-form height data for w_1, checked against the Pieri computation.

    After swapping to 2m <= d: m = 1 gives exactly d - 1, m = 2 gives exactly
    2^s - 2, and m > 2 only gives lower bounds (2^(s-1) when d = 2m = 2^s,
    otherwise 2^s - 2).  Every lower bound is at least d - m.
    """
    dd, mm = _normalize(d, m)
    s = _min_power_of_two_exponent(dd)
    exact = None
    if mm == 1:
        exact = lower = dd - 1
    elif mm == 2:
        exact = lower = (1 << s) - 2
    elif dd == 2 * mm and dd == (1 << s):
        lower = 1 << (s - 1)
    else:
        lower = (1 << s) - 2
    computed = w1_height_computed(GrassmannContext(dd, mm))
    return HeightReport(d, m, s, computed, lower, exact)


class CategoryBound(NamedTuple):
    height: int
    sharp: int
    unconditional: int


def ls_category_bounds(ctx: GrassmannContext) -> CategoryBound:
    d, m = _normalize(ctx.d, ctx.m)
    n = w1_height_computed(GrassmannContext(d, m))
    dim = m * (d - m)
    # the unconditional bound uses the original m, not the swapped one
    return CategoryBound(n, min(n + 2, dim + 1), min(ctx.d - ctx.m + 2, dim + 1))


def ls_category_lower_bound(ctx: GrassmannContext) -> int:
    """Lower bound min{n + 2, m(d - m) + 1} on cat G(d, m), n the height of w_1."""
    return ls_category_bounds(ctx).sharp


class RankLocus(NamedTuple):
    cls: CohClass
    in_box: bool


def rank_locus_class(l: int, r: int, n_bundle: int, ctx: GrassmannContext) -> RankLocus:
    """Class dual to the locus where l generic sections of the tautological bundle have rank <= r.

    It is [0, ..., 0 (r times), l - r, ..., l - r (n - r times)].  When
    l - r exceeds d - m the symbol leaves the box; the zero class is
    returned with ``in_box`` False.
    """
    if n_bundle != ctx.m:
        raise SchubertError(f"bundle rank {n_bundle} must equal m={ctx.m}")
    if not 0 <= r <= n_bundle:
        raise SchubertError(f"need 0 <= r <= {n_bundle}, got r={r}")
    if l <= r:
        raise SchubertError(f"need l > r, got l={l}, r={r}")
    height = l - r
    degree = height * (n_bundle - r)
    if height > ctx.width:
        return RankLocus(CohClass.zero(ctx, degree), False)
    sym = (0,) * r + (height,) * (n_bundle - r)
    return RankLocus(CohClass.from_symbol(sym, ctx), True)
