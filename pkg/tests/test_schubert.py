import json
from math import comb

import pytest
from hypothesis import given, strategies as st

from topotrans.schubert import (
    CohClass,
    GrassmannContext,
    SchubertError,
    affine_embed,
    all_symbols,
    check_symbol,
    conjugate,
    enumerate_basis,
    from_partition,
    poincare_dual,
    symbol_dimension,
    to_partition,
    transpose_symbol,
)

from conftest import grassmannians


def test_context_validation():
    with pytest.raises(SchubertError):
        GrassmannContext(3, 3)
    with pytest.raises(SchubertError):
        GrassmannContext(3, 0)
    with pytest.raises(SchubertError):
        GrassmannContext(4, 2, "Q")
    ctx = GrassmannContext(5, 2)
    assert ctx.width == 3 and ctx.dim == 6


@pytest.mark.parametrize("sym, dim", [((0, 0, 0), 0), ((1, 1, 1), 3), ((1, 2), 3)])
def test_symbol_dimension(sym, dim):
    assert symbol_dimension(sym) == dim


def test_check_symbol_rejects(g42):
    for bad in [(0,), (2, 1), (0, 3), (-1, 0)]:
        with pytest.raises(SchubertError):
            check_symbol(bad, g42)
    assert check_symbol([0, 2], g42) == (0, 2)


def test_enumerate_basis_examples(g42):
    assert enumerate_basis(g42, 2) == [(0, 2), (1, 1)]
    assert enumerate_basis(g42, 0) == [(0, 0)]
    assert enumerate_basis(g42, 5) == []


def test_basis_count_is_binomial():
    for ctx in grassmannians(8):
        assert len(all_symbols(ctx)) == comb(ctx.d, ctx.m)
        for sym in all_symbols(ctx):
            check_symbol(sym, ctx)


def test_poincare_dual_examples(g42):
    assert poincare_dual((0, 1), g42) == (1, 2)
    assert poincare_dual((1, 1), g42) == (1, 1)
    ctx = GrassmannContext(7, 3)
    assert poincare_dual((0, 0, 0), ctx) == (4, 4, 4)


def test_dual_is_involution_and_complements_degree():
    for ctx in grassmannians(8):
        for sym in all_symbols(ctx):
            dual = poincare_dual(sym, ctx)
            assert poincare_dual(dual, ctx) == sym
            assert symbol_dimension(sym) + symbol_dimension(dual) == ctx.dim


def test_transpose_examples(g42):
    assert transpose_symbol((1, 2), GrassmannContext(5, 2)) == ((0, 1, 2), GrassmannContext(5, 3))
    assert transpose_symbol((0, 0), g42) == ((0, 0), g42)
    assert transpose_symbol((2, 2), g42) == ((2, 2), g42)


def test_transpose_is_involution():
    for ctx in grassmannians(8):
        for sym in all_symbols(ctx):
            t, tctx = transpose_symbol(sym, ctx)
            assert tctx.m == ctx.d - ctx.m
            assert symbol_dimension(t) == symbol_dimension(sym)
            assert transpose_symbol(t, tctx) == (sym, ctx)


def test_affine_embed_examples(g42):
    assert affine_embed((1, 1), g42) == ((0, 1, 1), GrassmannContext(5, 3))
    assert affine_embed((0, 0), g42) == ((0, 0, 0), GrassmannContext(5, 3))
    ctx = GrassmannContext(7, 4)
    rho, k = 1, 2
    sym = (0,) * rho + (k,) * (ctx.m - rho)
    assert affine_embed(sym, ctx)[0] == (0,) * (rho + 1) + (k,) * (ctx.m - rho)


@given(st.lists(st.integers(0, 6), max_size=6))
def test_partition_roundtrip(parts):
    part = tuple(sorted((p for p in parts if p), reverse=True))
    m = max(len(part), 1)
    assert to_partition(from_partition(part, m)) == part
    assert conjugate(conjugate(part)) == part


def test_cohclass_basics(g42):
    a = CohClass.from_symbol((0, 1), g42)
    assert a.degree == 1 and a.coeff((0, 1)) == 1 and bool(a)
    assert (a + a).is_zero()  # Z2
    z = CohClass.from_symbol((0, 1), g42.with_ring("Z"))
    assert (z + z).coeff((0, 1)) == 2
    assert (z + z).reduce_mod2().is_zero()
    assert CohClass.zero(g42, 3).is_zero()
    assert CohClass.unit(g42).terms == {(0, 0): 1}
    with pytest.raises(SchubertError):
        a + CohClass.from_symbol((1, 1), g42)


def test_cohclass_immutable(g42):
    a = CohClass.from_symbol((0, 1), g42)
    with pytest.raises(AttributeError):
        a.degree = 3


def test_cohclass_json_roundtrip():
    ctx = GrassmannContext(6, 3, "Z")
    c = CohClass(ctx, 6, {(0, 3, 3): 1, (1, 2, 3): 2, (2, 2, 2): 1})
    data = json.loads(json.dumps(c.to_json()))
    assert CohClass.from_json(data) == c
    assert data["terms"][0] == {"symbol": [0, 3, 3], "coeff": 1}


def test_cohclass_json_rejects_bad_degree():
    data = {"d": 4, "m": 2, "ring": "Z2", "degree": 2, "terms": [{"symbol": [0, 1], "coeff": 1}]}
    with pytest.raises(SchubertError):
        CohClass.from_json(data)
