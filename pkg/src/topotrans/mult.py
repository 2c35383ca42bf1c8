"""Products in H*(G(d, m)): Pieri rule, Littlewood-Richardson rule, powers.

Also carries an independent oracle that multiplies Schur polynomials in m
variables and re-expands the result in the Schur basis.  The oracle is slow
and exists only to check :func:`lr_product`.
"""

from __future__ import annotations

import threading
from functools import lru_cache

from .schubert import (
    CohClass,
    GrassmannContext,
    SchubertError,
    check_symbol,
    enumerate_basis,
    from_partition,
    to_partition,
    transpose_symbol,
)


def _accumulate(acc: dict, sym, c: int) -> None:
    acc[sym] = acc.get(sym, 0) + c


def pieri_multiply(cls: CohClass, k: int) -> CohClass:
    """Multiply by the special class [0, ..., 0, k] (a dual Stiefel-Whitney class)."""
    ctx = cls.ctx
    if not 0 <= k <= ctx.width:
        raise SchubertError(f"Pieri index k={k} outside [0, {ctx.width}]")
    degree = cls.degree + k
    if degree > ctx.dim:
        return CohClass.zero(ctx, degree)
    acc: dict = {}
    m = ctx.m
    for lam, c in cls.items():
        upper = lam[1:] + (ctx.width,)
        target = degree

        def rec(j, prefix, total):
            if j == m:
                if total == target:
                    _accumulate(acc, tuple(prefix), c)
                return
            # remaining entries can add at most sum(upper[j:]) - sum(lam[j:])
            lo, hi = lam[j], upper[j]
            for x in range(lo, hi + 1):
                rest = total + x
                if rest + sum(lam[j + 1:]) > target:
                    break
                if rest + sum(upper[j + 1:]) < target:
                    continue
                prefix.append(x)
                rec(j + 1, prefix, rest)
                prefix.pop()

        rec(0, [], 0)
    return CohClass(ctx, degree, acc)


def dual_pieri_multiply(cls: CohClass, i: int) -> CohClass:
    """Multiply by the Stiefel-Whitney class w_i = [0, ..., 0, 1, ..., 1].

    Conjugation G(d, m) ~ G(d, d - m) exchanges w_i with the special class
    [0, ..., 0, i], so this is transpose, Pieri, transpose back.
    """
    ctx = cls.ctx
    if not 1 <= i <= ctx.m:
        raise SchubertError(f"Stiefel-Whitney index i={i} outside [1, {ctx.m}]")
    tterms = {}
    tctx = None
    for sym, c in cls.items():
        tsym, tctx = transpose_symbol(sym, ctx)
        tterms[tsym] = c
    if tctx is None:
        return CohClass.zero(ctx, cls.degree + i)
    tprod = pieri_multiply(CohClass(tctx, cls.degree, tterms), i)
    out = {}
    for sym, c in tprod.items():
        back, _ = transpose_symbol(sym, tctx)
        out[back] = c
    return CohClass(ctx, tprod.degree, out)


def _contains(outer, inner) -> bool:
    if len(inner) > len(outer):
        return False
    return all(o >= i for o, i in zip(outer, inner))


def lr_coefficient(lam, mu, nu) -> int:
    """Number of LR skew tableaux of shape lam/mu and content nu.

    Cells are filled in reading order (rows top to bottom, right to left);
    column strictness and the lattice-word condition prune the search.
    """
    lam, mu, nu = tuple(lam), tuple(mu), tuple(nu)
    if sum(lam) != sum(mu) + sum(nu) or not _contains(lam, mu) or not _contains(lam, nu):
        return 0
    if not nu:
        return 1
    rows = len(lam)
    mu = mu + (0,) * (rows - len(mu))
    cells = [(r, c) for r in range(rows) for c in range(lam[r] - 1, mu[r] - 1, -1)]
    filled: dict = {}
    count = [0] * (len(nu) + 1)
    n_letters = len(nu)

    def rec(idx):
        if idx == len(cells):
            return 1
        r, c = cells[idx]
        hi = min(n_letters, r + 1)
        right = filled.get((r, c + 1))
        if right is not None:
            hi = min(hi, right)
        lo = 1
        if r > 0 and c >= mu[r - 1]:
            lo = filled[(r - 1, c)] + 1
        total = 0
        for x in range(lo, hi + 1):
            if count[x] >= nu[x - 1]:
                continue
            if x > 1 and count[x] + 1 > count[x - 1]:
                continue
            count[x] += 1
            filled[(r, c)] = x
            total += rec(idx + 1)
            del filled[(r, c)]
            count[x] -= 1
        return total

    return rec(0)


def _lr_integer(a, b, ctx: GrassmannContext) -> dict:
    mu, nu = to_partition(a), to_partition(b)
    degree = sum(a) + sum(b)
    out = {}
    if degree > ctx.dim:
        return out
    for sym in enumerate_basis(ctx, degree):
        c = lr_coefficient(to_partition(sym), mu, nu)
        if c:
            out[sym] = c
    return out


def lr_product(a, b, ctx: GrassmannContext) -> CohClass:
    """Product of two Schubert classes by the Littlewood-Richardson rule."""
    a = check_symbol(a, ctx)
    b = check_symbol(b, ctx)
    return CohClass(ctx, sum(a) + sum(b), _lr_integer(a, b, ctx))


class ProductTable:
    """Memo of symbol products for one context.

    Keys are the sorted symbol pair, so (a, b) and (b, a) share an entry.
    Fills are guarded by a lock; a racing fill recomputes the same value.
    """

    def __init__(self, ctx: GrassmannContext):
        self.ctx = ctx
        self.entries: dict = {}
        self._lock = threading.Lock()

    def product(self, a, b) -> CohClass:
        key = (a, b) if a <= b else (b, a)
        hit = self.entries.get(key)
        if hit is not None:
            return hit
        value = lr_product(key[0], key[1], self.ctx)
        with self._lock:
            return self.entries.setdefault(key, value)

    def __len__(self):
        return len(self.entries)


@lru_cache(maxsize=None)
def product_table(ctx: GrassmannContext) -> ProductTable:
    return ProductTable(ctx)


def multiply(a: CohClass, b: CohClass, table: ProductTable | None = None) -> CohClass:
    if a.ctx != b.ctx:
        raise SchubertError(f"context mismatch: {a.ctx} vs {b.ctx}")
    ctx = a.ctx
    degree = a.degree + b.degree
    if degree > ctx.dim:
        return CohClass.zero(ctx, degree)
    table = table or product_table(ctx)
    acc: dict = {}
    for sa, ca in a.items():
        for sb, cb in b.items():
            for s, c in table.product(sa, sb).items():
                _accumulate(acc, s, ca * cb * c)
    return CohClass(ctx, degree, acc)


def power(cls: CohClass, n: int) -> CohClass:
    if n < 0:
        raise SchubertError(f"exponent must be non-negative, got {n}")
    result = CohClass.unit(cls.ctx)
    for _ in range(n):
        result = multiply(result, cls)
        if result.is_zero():
            return CohClass.zero(cls.ctx, cls.degree * n)
    return result


def product_of(classes, ctx: GrassmannContext) -> CohClass:
    result = CohClass.unit(ctx)
    for c in classes:
        result = multiply(result, c)
    return result


# --- symmetric polynomial oracle ---------------------------------------------


def _ssyt_fillings(shape, n: int):
    """Yield content vectors of all SSYT of ``shape`` with entries in 1..n."""
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    grid: dict = {}
    content = [0] * n

    def rec(idx):
        if idx == len(cells):
            yield tuple(content)
            return
        r, c = cells[idx]
        lo = 1
        if c > 0:
            lo = grid[(r, c - 1)]
        if r > 0:
            lo = max(lo, grid[(r - 1, c)] + 1)
        # column below needs room: entry + (rows below in this column) <= n
        below = sum(1 for rr in range(r + 1, len(shape)) if shape[rr] > c)
        for x in range(lo, n - below + 1):
            grid[(r, c)] = x
            content[x - 1] += 1
            yield from rec(idx + 1)
            content[x - 1] -= 1
        grid.pop((r, c), None)

    yield from rec(0)


@lru_cache(maxsize=None)
def schur_polynomial(shape: tuple, n: int) -> dict:
    """Schur polynomial s_shape(x_1..x_n) as {exponent tuple: coefficient}."""
    poly: dict = {}
    if len(shape) > n:
        return poly
    for expo in _ssyt_fillings(shape, n):
        poly[expo] = poly.get(expo, 0) + 1
    return poly


def _poly_mul(p: dict, q: dict) -> dict:
    out: dict = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            out[e] = out.get(e, 0) + c1 * c2
    return out


def schur_expand(poly: dict, n: int) -> dict:
    """Write a symmetric polynomial in the Schur basis by leading-monomial elimination.

    Returns {partition: coefficient}.  Raises ArithmeticError if a leading
    exponent is not a partition or a coefficient comes out negative; neither
    can happen for products of Schur polynomials.
    """
    poly = {e: c for e, c in poly.items() if c}
    out = {}
    while poly:
        lead = max(poly)
        c = poly[lead]
        if any(x < y for x, y in zip(lead, lead[1:])):
            raise ArithmeticError(f"leading exponent {lead} is not a partition")
        if c < 0:
            raise ArithmeticError(f"negative Schur coefficient {c} at {lead}")
        part = tuple(x for x in lead if x)
        out[part] = c
        for e, sc in schur_polynomial(part, n).items():
            v = poly.get(e, 0) - c * sc
            if v:
                poly[e] = v
            else:
                poly.pop(e, None)
    return out


def schur_oracle_product(a, b, ctx: GrassmannContext) -> CohClass:
    a = check_symbol(a, ctx)
    b = check_symbol(b, ctx)
    n = ctx.m
    prod = _poly_mul(schur_polynomial(to_partition(a), n), schur_polynomial(to_partition(b), n))
    expansion = schur_expand(prod, n)
    terms = {}
    for part, c in expansion.items():
        if part and part[0] > ctx.width:
            continue
        terms[from_partition(part, n)] = c
    return CohClass(ctx, sum(a) + sum(b), terms)
