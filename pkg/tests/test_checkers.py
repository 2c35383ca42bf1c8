from itertools import product

import pytest

from topotrans.checkers import (
    ColorSpec,
    TheoremReport,
    check_colorful_trans,
    check_colorful_trans_multi,
    check_complex_trans,
    check_ineq_corollary,
    check_linear_map,
    check_ls_trans,
    check_semi_ineq,
    check_semi_ls,
    check_semi_trans,
    fast_path_eligible,
    trace_value,
    transversal_class,
)
from topotrans.schubert import CohClass, GrassmannContext, SchubertError

from conftest import grassmannians


def witness_terms(rep):
    return rep.witness.terms


def test_transversal_class_examples(g43):
    assert transversal_class(g43, 2, 1) == CohClass.from_symbol((0, 0, 1), g43)
    ctx = GrassmannContext(7, 3)
    assert transversal_class(ctx, 2, 3).terms == {(0, 0, 3): 1}
    assert transversal_class(ctx, 0, 4).terms == {(4, 4, 4): 1}
    with pytest.raises(SchubertError):
        transversal_class(ctx, 3, 1)


def test_colorful_examples():
    r = check_colorful_trans(4, 3, 2, 1)
    assert r.applies and witness_terms(r) == {(0, 1, 1): 1}
    r = check_colorful_trans(4, 3, 0, 1)
    assert not r.applies and trace_value(r, "degree") == 6
    assert trace_value(r, "degree_fits") is False


def test_colorful_with_many_rows_applies():
    # rho = m - 1 with m >= d - m + 1: the product of d - m + 1 copies of
    # [0,...,0,k] always contains the rectangle (k^(d-m+1)) once
    for ctx in grassmannians(9):
        d, m = ctx.d, ctx.m
        if m >= d - m + 1:
            for k in range(1, d - m + 1):
                assert check_colorful_trans(d, m, m - 1, k).applies, (d, m, k)


def test_colorful_multi_examples():
    r = check_colorful_trans_multi(4, 3, [(2, 1), (2, 1)])
    assert r.applies and witness_terms(r) == {(0, 1, 1): 1}
    assert not check_colorful_trans_multi(4, 2, [(1, 1)] * 3).applies
    assert not check_colorful_trans_multi(4, 2, [(0, 2), (0, 2), (0, 1)]).applies
    with pytest.raises(SchubertError):
        check_colorful_trans_multi(4, 3, [(2, 1)])


def test_colorful_single_equals_multi():
    for ctx in grassmannians(7):
        d, m = ctx.d, ctx.m
        for rho in range(m):
            for k in range(1, d - m + 1):
                a = check_colorful_trans(d, m, rho, k)
                b = check_colorful_trans_multi(d, m, [(rho, k)] * (d - m + 1))
                assert a.applies == b.applies and a.witness == b.witness


def _spec_vectors(ctx, n):
    choices = [(r, k) for r in range(ctx.m) for k in range(1, ctx.width + 1)]
    return product(choices, repeat=n)


def _z_product(ctx, specs):
    from topotrans.mult import product_of
    return product_of([transversal_class(ctx, r, k) for r, k in specs], ctx)


def test_monotone_in_rho_over_integers():
    # raising a rho shrinks its rectangle; by positivity of structure
    # constants a nonzero integer product stays nonzero
    for ctx in grassmannians(6, ring="Z"):
        n = ctx.d - ctx.m + 1
        for specs in _spec_vectors(ctx, n):
            if _z_product(ctx, specs).is_zero():
                continue
            for i, (r, k) in enumerate(specs):
                if r + 1 < ctx.m:
                    bigger = list(specs)
                    bigger[i] = (r + 1, k)
                    assert not _z_product(ctx, bigger).is_zero()


def test_monotone_in_rho_fails_mod_two():
    # w1^2 w2 = [2,2] but w1^3 = 0 in G(4,2) with Z2 coefficients
    assert check_colorful_trans_multi(4, 2, [(1, 1), (1, 1), (0, 1)]).applies
    assert not check_colorful_trans_multi(4, 2, [(1, 1), (1, 1), (1, 1)]).applies


def test_ineq_examples():
    r = check_ineq_corollary(4, 1, [2, 1])
    assert r.applies and trace_value(r, "family_size") == 7 == trace_value(r, "family_bound")
    assert not check_ineq_corollary(4, 1, [1, 1]).applies
    r = check_semi_ineq(4, 1, [2, 2, 2])
    assert r.applies and trace_value(r, "family_size") == 12 == trace_value(r, "family_bound")
    assert not check_semi_ineq(4, 1, [2, 2, 1]).applies
    assert isinstance(trace_value(r, "cohomology_product"), CohClass)


def test_ineq_bad_arity():
    with pytest.raises(SchubertError):
        check_ineq_corollary(4, 1, [2])
    with pytest.raises(SchubertError):
        check_semi_ineq(4, 0, [1, 1])


def test_ls_examples():
    assert check_ls_trans(3, 1).applies
    assert not check_ls_trans(1, 2).applies
    r = check_ls_trans(2, 1)
    assert r.applies and trace_value(r, "w1_height") == 2 and trace_value(r, "cat_lower_bound") == 3


def test_semi_examples():
    r = check_semi_trans(4, 3, [(2, 1)] * 3)
    assert r.applies and witness_terms(r) == {(1, 1, 1): 1}
    assert not check_semi_trans(4, 2, [(1, 1)] * 4).applies
    assert not check_semi_trans(4, 2, [(0, 2)] * 4).applies


def test_semi_ls_examples():
    assert check_semi_ls(3, 2).applies
    assert not check_semi_ls(3, 1).applies
    r = check_semi_ls(4, 2)
    assert r.applies and trace_value(r, "w1_height") == 6 and trace_value(r, "cat_lower_bound") == 7


def test_complex_examples():
    r = check_complex_trans(4, 3, [(2, 1)] * 3)
    assert r.applies and r.witness.ctx.ring == "Z"
    assert r.witness.terms == {(1, 1, 1): 1}
    assert trace_value(r, "fast_path") and trace_value(r, "fast_path_agrees")
    r = check_complex_trans(4, 2, [(1, 1)] * 5)
    assert not r.applies and trace_value(r, "fast_path_agrees")


def test_z2_nonzero_implies_z_nonzero():
    from topotrans.mult import product_of
    for ctx in grassmannians(6):
        zctx = ctx.with_ring("Z")
        n = ctx.d - ctx.m + 1
        for specs in _spec_vectors(ctx, n):
            a = product_of([transversal_class(ctx, r, k) for r, k in specs], ctx)
            if not a.is_zero():
                b = product_of([transversal_class(zctx, r, k) for r, k in specs], zctx)
                assert not b.is_zero()
                assert b.reduce_mod2().terms == a.terms


def test_linear_map_examples():
    r = check_linear_map([3, 3], 2)
    assert r.applies and trace_value(r, "transversal_dims") == [1, 1]
    assert not check_linear_map([2, 2], 2).applies
    assert not check_linear_map([4, 4, 4], 4).applies
    with pytest.raises(SchubertError):
        check_linear_map([1, 3], 2)


def test_report_invariant_and_json(g43):
    w = CohClass.from_symbol((0, 0, 1), g43)
    with pytest.raises(ValueError):
        TheoremReport("x", {}, False, w)
    js = check_semi_trans(4, 3, [(2, 1)] * 3).to_json()
    assert js["applies"] is True
    assert js["witness"]["terms"] == [{"symbol": [1, 1, 1], "coeff": 1}]
    assert {"check": "product_nonzero", "value": True} in js["trace"]


def test_color_spec():
    assert ColorSpec(2, 1).size == 4
    assert ColorSpec(2, 1, 7).size == 7
    g = GrassmannContext(5, 3)
    assert fast_path_eligible(ColorSpec(0, 1), g)
    assert not fast_path_eligible(ColorSpec(1, 1, None)._replace(k=2), GrassmannContext(7, 3))
