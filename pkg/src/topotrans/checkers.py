"""Applicability checks for the colorful Helly-type transversal theorems.

Each ``check_*`` function takes the numeric parameters of one theorem and
decides whether its cohomological or arithmetic condition holds.  No
geometry is involved here; see :mod:`topotrans.geometry` for instances.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, NamedTuple, Optional, Sequence

from .charclasses import ls_category_bounds
from .mult import product_of
from .schubert import CohClass, GrassmannContext, SchubertError


class ColorSpec(NamedTuple):
    """Transversal dimension ``rho`` and index ``k`` of one color.

    ``count`` defaults to rho + k + 1, the number of sets the theorems ask for.
    """

    rho: int
    k: int
    count: Optional[int] = None

    @property
    def size(self) -> int:
        return self.rho + self.k + 1 if self.count is None else self.count

    def check(self, ctx: GrassmannContext) -> None:
        if not 0 <= self.rho < ctx.m:
            raise SchubertError(f"rho={self.rho} outside [0, {ctx.m - 1}]")
        if not 0 < self.k <= ctx.width:
            raise SchubertError(f"k={self.k} outside [1, {ctx.width}]")


@dataclass(frozen=True)
class TheoremReport:
    theorem: str
    params: dict
    applies: bool
    witness: Optional[CohClass] = None
    trace: list = field(default_factory=list)
    notes: str = ""

    def __post_init__(self):
        if self.witness is not None and self.applies != (not self.witness.is_zero()):
            raise ValueError("report verdict disagrees with its witness class")

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "params": self.params,
            "applies": self.applies,
            "witness": None if self.witness is None else self.witness.to_json(),
            "trace": [{"check": c, "value": _jsonable(v)} for c, v in self.trace],
            "notes": self.notes,
        }


def _jsonable(v: Any):
    if isinstance(v, CohClass):
        return v.to_json()
    if isinstance(v, (bool, int, str)) or v is None:
        return v
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return str(v)


def _specs(specs) -> list[ColorSpec]:
    return [s if isinstance(s, ColorSpec) else ColorSpec(*s) for s in specs]


def transversal_class(ctx: GrassmannContext, rho: int, k: int) -> CohClass:
    """[0, ..., 0 (rho times), k, ..., k (m - rho times)]."""
    ColorSpec(rho, k).check(ctx)
    return CohClass.from_symbol((0,) * rho + (k,) * (ctx.m - rho), ctx)


def _product_report(theorem, params, ctx, specs, notes="") -> TheoremReport:
    for s in specs:
        s.check(ctx)
    degree = sum(s.k * (ctx.m - s.rho) for s in specs)
    trace = [("degree", degree), ("dim", ctx.dim)]
    if degree > ctx.dim:
        witness = CohClass.zero(ctx, degree)
        trace.append(("degree_fits", False))
    else:
        witness = product_of([transversal_class(ctx, s.rho, s.k) for s in specs], ctx)
        trace.append(("degree_fits", True))
    trace.append(("product_nonzero", not witness.is_zero()))
    return TheoremReport(theorem, params, not witness.is_zero(), witness, trace, notes)


def _need_count(specs, expected, what):
    if len(specs) != expected:
        raise SchubertError(f"{what} needs exactly {expected} color specs, got {len(specs)}")


def check_colorful_trans(d: int, m: int, rho: int, k: int) -> TheoremReport:
    """d - m + 1 colors of rho + k + 1 sets; needs [0^rho, k^(m-rho)]^(d-m+1) != 0 over Z2."""
    ctx = GrassmannContext(d, m, "Z2")
    specs = [ColorSpec(rho, k)] * (d - m + 1)
    return _product_report(
        "colorful_trans", {"d": d, "m": m, "rho": rho, "k": k}, ctx, specs,
        f"{d - m + 1} colors of {rho + k + 1} sets in R^{d}",
    )


def check_colorful_trans_multi(d: int, m: int, specs: Sequence) -> TheoremReport:
    ctx = GrassmannContext(d, m, "Z2")
    specs = _specs(specs)
    _need_count(specs, d - m + 1, "colorful_trans_multi")
    return _product_report(
        "colorful_trans_multi",
        {"d": d, "m": m, "specs": [[s.rho, s.k] for s in specs]},
        ctx, specs,
    )


def _inequality_cross_check(d, k, rhos, n_colors, theorem, bound, family_bound):
    if not 0 < k < d:
        raise SchubertError(f"need 0 < k < d, got k={k}, d={d}")
    if len(rhos) != n_colors:
        raise SchubertError(f"{theorem} needs {n_colors} values of rho, got {len(rhos)}")
    m = d - k
    ctx = GrassmannContext(d, m, "Z2")
    specs = [ColorSpec(r, k) for r in rhos]
    for s in specs:
        s.check(ctx)
    total = sum(rhos)
    applies = total >= bound
    family = sum(s.size for s in specs)
    coh = _product_report(theorem, {}, ctx, specs)
    trace = [
        ("sum_rho", total),
        ("bound", bound),
        ("inequality", applies),
        ("family_size", family),
        ("family_bound", family_bound),
        ("cohomology_product", coh.witness),
        ("cohomology_product_nonzero", coh.applies),
        ("agrees", applies == coh.applies),
    ]
    params = {"d": d, "k": k, "rhos": list(rhos)}
    return TheoremReport(theorem, params, applies, None, trace,
                         f"sum rho = {total} vs {bound}; |F| = {family}")


def check_ineq_corollary(d: int, k: int, rhos: Sequence[int]) -> TheoremReport:
    """k + 1 colors, color i with rho_i + k + 1 sets; applies iff sum rho_i >= k(d - k)."""
    return _inequality_cross_check(
        d, k, rhos, k + 1, "ineq_corollary", k * (d - k), k * d + 2 * k + 1
    )


def check_semi_ineq(d: int, k: int, rhos: Sequence[int]) -> TheoremReport:
    """k + 2 colors; applies iff sum rho_i >= (d - k)(k + 1)."""
    return _inequality_cross_check(
        d, k, rhos, k + 2, "semi_ineq", (d - k) * (k + 1), (d + 2) * (k + 1)
    )


def trace_value(report: TheoremReport, name: str):
    for check, value in report.trace:
        if check == name:
            return value
    raise KeyError(name)


def check_ls_trans(n: int, rho: int) -> TheoremReport:
    """n colors of rho + 2 sets in R^(n + rho), rho-transversal by category of G(n + rho, rho + 1)."""
    trace = [("rho>=1", rho >= 1), ("n>=2", n >= 2)]
    applies = rho >= 1 and n >= 2
    if applies:
        d = n + rho
        dim = (rho + 1) * (n - 1)
        bounds = ls_category_bounds(GrassmannContext(d, rho + 1))
        trace += [
            ("n<=dim G", n <= dim),
            ("w1_height", bounds.height),
            ("cat_lower_bound", bounds.sharp),
            ("n<cat", n < bounds.sharp),
        ]
        applies = n <= dim and n < bounds.sharp
    return TheoremReport("ls_trans", {"n": n, "rho": rho}, applies, None, trace,
                         f"{n} colors of {rho + 2} sets in R^{n + rho}")


def check_semi_trans(d: int, m: int, specs: Sequence) -> TheoremReport:
    ctx = GrassmannContext(d, m, "Z2")
    specs = _specs(specs)
    _need_count(specs, d - m + 2, "semi_trans")
    return _product_report(
        "semi_trans", {"d": d, "m": m, "specs": [[s.rho, s.k] for s in specs]}, ctx, specs,
        "heterochromatic subfamilies of size d - m + 2 must be semintersecting",
    )


def check_semi_ls(n: int, rho: int) -> TheoremReport:
    """n colors of rho + 2 sets in R^(n + rho - 1) under the semintersecting hypothesis."""
    trace = [("rho>=2", rho >= 2), ("n>=3", n >= 3)]
    applies = rho >= 2 and n >= 3
    if applies:
        d = n + rho - 1
        dim = (rho + 1) * (n - 2)
        bounds = ls_category_bounds(GrassmannContext(d, rho + 1))
        trace += [
            ("n<=dim G", n <= dim),
            ("branch", "n-2<rho+1" if n - 2 < rho + 1 else "n-2>=rho+1"),
            ("w1_height", bounds.height),
            ("cat_lower_bound", bounds.sharp),
            ("n<cat", n < bounds.sharp),
        ]
        applies = n <= dim and n < bounds.sharp
    return TheoremReport("semi_ls", {"n": n, "rho": rho}, applies, None, trace,
                         f"{n} colors of {rho + 2} sets in R^{n + rho - 1}")


def fast_path_eligible(spec: ColorSpec, ctx: GrassmannContext) -> bool:
    return spec.k == 1 or spec.k == ctx.width or spec.rho == ctx.m - 1 or spec.rho == 0


def check_complex_trans(d: int, m: int, specs: Sequence) -> TheoremReport:
    """Complex version: 2d - 2m + 1 colors, product taken over the integers."""
    ctx = GrassmannContext(d, m, "Z")
    specs = _specs(specs)
    _need_count(specs, 2 * d - 2 * m + 1, "complex_trans")
    report = _product_report(
        "complex_trans", {"d": d, "m": m, "specs": [[s.rho, s.k] for s in specs]}, ctx, specs
    )
    trace = list(report.trace)
    if all(fast_path_eligible(s, ctx) for s in specs):
        count = sum(s.k * (m - s.rho) for s in specs)
        trace += [("fast_path", True), ("dimension_count", count <= ctx.dim),
                  ("fast_path_agrees", (count <= ctx.dim) == report.applies)]
    else:
        trace.append(("fast_path", False))
    return TheoremReport(report.theorem, report.params, report.applies, report.witness, trace)


def check_linear_map(eta: Sequence[int], d: int) -> TheoremReport:
    """Images of the maximal faces of L_eta under a linear map to R^d."""
    eta = list(eta)
    l = len(eta)
    if l == 0:
        raise SchubertError("eta must be nonempty")
    if any(n < l for n in eta):
        raise SchubertError(f"every entry of eta must be >= {l}, got {eta}")
    total = sum(eta)
    bound = (l - 1) * (d + 2) + 1
    dims = [n - l for n in eta]
    trace = [("sum_eta", total), ("bound", bound), ("transversal_dims", dims)]
    return TheoremReport("linear_map", {"eta": eta, "d": d}, total >= bound, None, trace,
                         f"transversal of dimension n_i - {l} for some color i")
