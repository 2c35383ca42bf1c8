"""Schubert symbols and cohomology classes of the real/complex Grassmannian.

A Schubert symbol of G(d, m) is a weakly increasing tuple
``(l_1, ..., l_m)`` with ``0 <= l_1 <= ... <= l_m <= d - m``.  Symbols are
plain tuples of ints throughout; the increasing convention is kept in all
input and output, and conversion to decreasing partitions only happens in
the multiplication internals.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

Symbol = tuple  # tuple[int, ...], weakly increasing

RINGS = ("Z2", "Z")


class SchubertError(ValueError):
    """Invalid context, symbol or class data."""


@dataclass(frozen=True)
class GrassmannContext:
    d: int
    m: int
    ring: str = "Z2"

    def __post_init__(self):
        if not (isinstance(self.d, int) and isinstance(self.m, int)):
            raise SchubertError(f"d and m must be integers, got {self.d!r}, {self.m!r}")
        if not 0 < self.m < self.d:
            raise SchubertError(f"need 0 < m < d, got d={self.d}, m={self.m}")
        if self.ring not in RINGS:
            raise SchubertError(f"ring must be one of {RINGS}, got {self.ring!r}")

    @property
    def width(self) -> int:
        """Largest allowed entry, d - m."""
        return self.d - self.m

    @property
    def dim(self) -> int:
        return self.m * (self.d - self.m)

    def with_ring(self, ring: str) -> "GrassmannContext":
        return GrassmannContext(self.d, self.m, ring)

    def reduce(self, c: int) -> int:
        return c % 2 if self.ring == "Z2" else c

    def __str__(self):
        return f"G({self.d},{self.m};{self.ring})"


def check_symbol(sym: Iterable[int], ctx: GrassmannContext) -> Symbol:
    sym = tuple(sym)
    if len(sym) != ctx.m:
        raise SchubertError(f"symbol {list(sym)} has length {len(sym)}, expected m={ctx.m}")
    if any(not isinstance(x, int) or isinstance(x, bool) for x in sym):
        raise SchubertError(f"symbol entries must be integers: {list(sym)}")
    if sym and (sym[0] < 0 or sym[-1] > ctx.width):
        raise SchubertError(f"symbol {list(sym)} leaves the range [0, {ctx.width}]")
    if any(a > b for a, b in zip(sym, sym[1:])):
        raise SchubertError(f"symbol {list(sym)} is not weakly increasing")
    return sym


def symbol_dimension(sym: Iterable[int]) -> int:
    return sum(sym)


def enumerate_basis(ctx: GrassmannContext, degree: int) -> list[Symbol]:
    """All symbols of the given degree, in lexicographic order."""
    if degree < 0:
        raise SchubertError(f"degree must be non-negative, got {degree}")
    out: list[Symbol] = []

    def extend(prefix, lo, remaining, slots):
        if slots == 0:
            if remaining == 0:
                out.append(tuple(prefix))
            return
        # each later slot is >= v, and each is <= width
        for v in range(lo, ctx.width + 1):
            if v * slots > remaining:
                break
            if remaining - v > ctx.width * (slots - 1):
                continue
            prefix.append(v)
            extend(prefix, v, remaining - v, slots - 1)
            prefix.pop()

    extend([], 0, degree, ctx.m)
    return out


def all_symbols(ctx: GrassmannContext) -> list[Symbol]:
    return [s for g in range(ctx.dim + 1) for s in enumerate_basis(ctx, g)]


def poincare_dual(sym, ctx: GrassmannContext) -> Symbol:
    sym = check_symbol(sym, ctx)
    return tuple(ctx.width - x for x in reversed(sym))


def to_partition(sym) -> tuple[int, ...]:
    """Increasing symbol -> decreasing partition with zero parts dropped."""
    return tuple(x for x in reversed(sym) if x)


def from_partition(part, m: int) -> Symbol:
    part = [x for x in part if x]
    if len(part) > m:
        raise SchubertError(f"partition {part} has more than {m} rows")
    return tuple([0] * (m - len(part)) + list(reversed(part)))


def conjugate(part) -> tuple[int, ...]:
    part = [x for x in part if x]
    if not part:
        return ()
    return tuple(sum(1 for p in part if p > i) for i in range(part[0]))


def transpose_symbol(sym, ctx: GrassmannContext) -> tuple[Symbol, GrassmannContext]:
    """Conjugate the Young diagram, moving from G(d, m) to G(d, d - m)."""
    sym = check_symbol(sym, ctx)
    tctx = GrassmannContext(ctx.d, ctx.d - ctx.m, ctx.ring)
    return from_partition(conjugate(to_partition(sym)), tctx.m), tctx


def affine_embed(sym, ctx: GrassmannContext) -> tuple[Symbol, GrassmannContext]:
    """Image of a symbol under G(d, m) -> G(d+1, m+1): prepend a zero."""
    sym = check_symbol(sym, ctx)
    return (0,) + sym, GrassmannContext(ctx.d + 1, ctx.m + 1, ctx.ring)


class CohClass:
    """Homogeneous element of H^degree(G(d, m)) in the Schubert basis.

    Immutable.  Zero coefficients are never stored; the zero class keeps its
    degree tag with an empty term map.
    """

    __slots__ = ("ctx", "degree", "_terms")

    def __init__(self, ctx: GrassmannContext, degree: int, terms: Mapping | None = None):
        if degree < 0:
            raise SchubertError(f"degree must be non-negative, got {degree}")
        clean = {}
        for sym, c in (terms or {}).items():
            sym = check_symbol(sym, ctx)
            if sum(sym) != degree:
                raise SchubertError(f"symbol {list(sym)} does not have degree {degree}")
            c = ctx.reduce(int(c))
            if c:
                clean[sym] = c
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "_terms", tuple(sorted(clean.items())))

    def __setattr__(self, name, value):
        raise AttributeError("CohClass is immutable")

    @classmethod
    def from_symbol(cls, sym, ctx: GrassmannContext, coeff: int = 1) -> "CohClass":
        sym = check_symbol(sym, ctx)
        return cls(ctx, sum(sym), {sym: coeff})

    @classmethod
    def unit(cls, ctx: GrassmannContext) -> "CohClass":
        return cls.from_symbol((0,) * ctx.m, ctx)

    @classmethod
    def zero(cls, ctx: GrassmannContext, degree: int = 0) -> "CohClass":
        return cls(ctx, degree)

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return iter(self._terms)

    def coeff(self, sym) -> int:
        return dict(self._terms).get(tuple(sym), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if not isinstance(other, CohClass):
            return NotImplemented
        return (self.ctx, self.degree, self._terms) == (other.ctx, other.degree, other._terms)

    def __hash__(self):
        return hash((self.ctx, self.degree, self._terms))

    def __add__(self, other: "CohClass") -> "CohClass":
        if self.ctx != other.ctx or self.degree != other.degree:
            raise SchubertError("can only add classes of the same context and degree")
        acc = self.terms
        for s, c in other._terms:
            acc[s] = acc.get(s, 0) + c
        return CohClass(self.ctx, self.degree, acc)

    def reduce_mod2(self) -> "CohClass":
        return CohClass(self.ctx.with_ring("Z2"), self.degree, self.terms)

    def __repr__(self):
        if not self._terms:
            return f"CohClass(0, degree={self.degree}, {self.ctx})"
        body = " + ".join(
            (f"{c}*" if c != 1 else "") + str(list(s)) for s, c in self._terms
        )
        return f"CohClass({body}, {self.ctx})"

    def to_json(self) -> dict:
        return {
            "d": self.ctx.d,
            "m": self.ctx.m,
            "ring": self.ctx.ring,
            "degree": self.degree,
            "terms": [{"symbol": list(s), "coeff": c} for s, c in self._terms],
        }

    @classmethod
    def from_json(cls, data: dict) -> "CohClass":
        try:
            ctx = GrassmannContext(int(data["d"]), int(data["m"]), data.get("ring", "Z2"))
            terms = {}
            for t in data.get("terms", []):
                sym = tuple(t["symbol"])
                terms[sym] = terms.get(sym, 0) + int(t.get("coeff", 1))
            if "degree" in data:
                degree = int(data["degree"])
            elif terms:
                degree = sum(next(iter(terms)))
            else:
                degree = 0
        except (KeyError, TypeError) as exc:
            raise SchubertError(f"malformed class JSON: {exc}") from exc
        return cls(ctx, degree, terms)
