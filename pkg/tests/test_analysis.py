from itertools import product
from math import comb

import numpy as np
import pytest

from bchlab import formulas as fm
from bchlab.analysis import (
    WeightEnumerator,
    bch_bound,
    consecutive_union,
    extend_matrix,
    is_dually_bch,
    krawtchouk,
    krawtchouk_column,
    macwilliams_transform,
    min_distance,
    sphere_packing_check,
    weight_enumerator_exhaustive,
    weights_of_matrix,
    weights_via_dual,
)
from bchlab.codes import DefiningSet, bch_code, dual_code, model_from_defining_set, two_orbit_code
from bchlab.errors import BudgetExceeded, NonIntegerResult, SpecMismatch
from bchlab.field import build_field


def naive_weights(model, extended=False):
    """Enumerate messages one by one through polynomial multiplication."""
    gf = model.gf
    counts = {}
    for msg in product(range(model.q), repeat=model.k):
        word = model.encode(list(msg)) if model.k else [0] * model.n
        if extended:
            s = 0
            for c in word:
                s = gf.add[s][c]
            word = word + [gf.neg[s]]
        w = sum(1 for c in word if c)
        counts[w] = counts.get(w, 0) + 1
    return counts


def test_bch_bound_examples():
    assert bch_bound(DefiningSet(8, frozenset({1, 3}), "odd")) == 3
    assert bch_bound(DefiningSet(8, frozenset(), "odd")) == 1
    assert bch_bound(DefiningSet(13, frozenset({1, 3, 9}), "all")) == 2
    assert bch_bound(DefiningSet(13, frozenset(range(1, 13)), "all")) == 13


def test_bch_bound_over_primitive_roots():
    T = DefiningSet(13, frozenset({1, 3, 9}), "all")
    # multiplier 9 maps {1,3,9} onto {9, 1, 3} ... runs of consecutive exponents
    assert bch_bound(T, all_primitive=True) >= bch_bound(T)


def test_theorem22_subset_certifies_distance():
    for q, m in [(3, 3), (3, 4), (5, 3)]:
        model, claim, _ = two_orbit_code(build_field(q, m))
        lo, hi = (q ** (m - 1) + 1) // 2, (q**m - q ** (m - 1) - 4) // 2
        H = {1 + 2 * i for i in range(lo, hi + 1)}
        assert H <= model.defining_set.exponents
        assert bch_bound(model.defining_set) >= claim.d_lower


@pytest.mark.parametrize("q,m,lam,delta,b", [(3, 2, -1, 2, 0), (3, 3, 1, 5, 1), (3, 3, -1, 3, 0), (5, 2, 1, 4, 1),
                                              (5, 2, -1, 3, 1), (9, 2, 1, 30, 1), (7, 2, -1, 15, 0)])
def test_enumeration_matches_naive(q, m, lam, delta, b):
    model = bch_code(q, m, lam, delta, b)
    assert weight_enumerator_exhaustive(model).counts == naive_weights(model)
    assert weight_enumerator_exhaustive(model, extended=True).counts == naive_weights(model, extended=True)


def test_zero_code_enumerator():
    model = model_from_defining_set(build_field(3, 2), -1, [1, 3, 5, 7])
    assert model.k == 0
    assert weight_enumerator_exhaustive(model).counts == {0: 1}
    with pytest.raises(ValueError):
        min_distance(model)


def test_budget_is_enforced():
    model = bch_code(3, 4, -1, 5, 1)
    with pytest.raises(BudgetExceeded):
        weight_enumerator_exhaustive(model, budget=3**10)
    assert min_distance(model, budget=10) == (bch_bound(model.defining_set), "lower-bound-only")


def test_table_examples_by_enumeration():
    W = weight_enumerator_exhaustive(bch_code(3, 3, 1, fm.top_leaders(3, 3).delta1, 1), extended=True)
    assert W.counts == {0: 1, 8: 26, 9: 26, 11: 26, 14: 2}
    assert W.polynomial() == "1+26z^8+26z^9+26z^11+2z^14"


def test_delta2_example_as_printed():
    # printed enumerator of the extended C(13, 1, delta_2, 1)
    W = weight_enumerator_exhaustive(bch_code(3, 3, 1, fm.top_leaders(3, 3).delta2, 1), extended=True)
    assert W.total == 3**7
    assert W.counts == {0: 1, 5: 26, 6: 156, 8: 624, 9: 494, 11: 780, 12: 78, 13: 26, 14: 2}


def test_macwilliams_of_zero_code():
    W = WeightEnumerator(6, 3, {0: 1})
    B = macwilliams_transform(W)
    assert B.counts == {w: comb(6, w) * 2**w for w in range(7)}


def test_macwilliams_rejects_non_enumerators():
    with pytest.raises(NonIntegerResult):
        macwilliams_transform(WeightEnumerator(3, 3, {0: 1, 1: 1}))


def test_krawtchouk_recurrence_equals_sum():
    for n, q in [(5, 3), (8, 5), (13, 3), (20, 9)]:
        for i in range(n + 1):
            assert krawtchouk_column(n, q, i) == [krawtchouk(n, q, w, i) for w in range(n + 1)]


@pytest.mark.parametrize("q,m,lam,delta,b", [(3, 3, 1, 4, 1), (3, 3, -1, 3, 0), (5, 2, 1, 4, 1), (5, 2, -1, 3, 1)])
def test_macwilliams_against_dual_enumeration(q, m, lam, delta, b):
    model = bch_code(q, m, lam, delta, b)
    dual = dual_code(model)
    W = weight_enumerator_exhaustive(model)
    Wd = weight_enumerator_exhaustive(dual)
    assert macwilliams_transform(W) == Wd
    assert macwilliams_transform(Wd) == W
    assert weights_via_dual(model) == W


def test_dual_is_orthogonal():
    model = bch_code(3, 3, -1, 3, 0)
    dual = dual_code(model)
    G, H = model.generator_matrix(), dual.generator_matrix()
    assert not ((G @ H.T) % 3).any()


def test_exact_parameters_40_28_6():
    model = bch_code(3, 4, -1, 5, 1)
    assert (model.n, model.k) == (40, 28)
    assert dual_code(model).k == 12
    W = weights_via_dual(model, budget=3**12)
    assert W.min_distance() == 6
    assert min_distance(model, budget=3**12) == (6, "exact")
    bounds = fm.low_weight_bounds(3, 40, 1, 10)
    assert bounds.d_lower <= 6 <= bounds.d_upper


def test_min_distance_of_full_space():
    F = build_field(3, 2)
    assert min_distance(model_from_defining_set(F, 1, [])) == (1, "exact")


def test_sphere_packing_examples():
    sp = sphere_packing_check(13, 7, 6, 3)
    assert (sp.even_lhs, sp.even_rhs) == (289, 243) and not sp.feasible
    sp = sphere_packing_check(13, 7, 7, 3)
    assert (sp.ball_lhs, sp.ball_rhs) == (2627, 729) and not sp.feasible
    assert sphere_packing_check(5, 5, 1, 3).feasible


def test_sphere_packing_holds_for_real_codes():
    for q, m, lam, delta, b in [(3, 3, 1, 4, 1), (3, 3, -1, 3, 0), (5, 2, 1, 4, 1)]:
        model = bch_code(q, m, lam, delta, b)
        d, _ = min_distance(model)
        assert sphere_packing_check(model.n, model.k, d, q).feasible


def test_extend_matrix_rows_sum_to_zero():
    model = bch_code(5, 2, 1, 4, 1)
    Ge = extend_matrix(model.generator_matrix(), model.gf)
    assert not (Ge.sum(axis=1) % 5).any()


def test_weights_of_matrix_over_gf9():
    F = build_field(9, 2)
    gf = F.gfq()
    G = np.array([[1, 2, 3]])
    W = weights_of_matrix(G, gf)
    assert W.counts == {0: 1, 3: 8}


def test_dually_bch_examples():
    res = is_dually_bch(bch_code(3, 3, 1, 7, 2))
    assert res.dually_bch and res.witness == (0, 2)
    assert res.dual_defining_set.exponents == {0}
    with pytest.raises(SpecMismatch):
        is_dually_bch(bch_code(3, 3, -1, 3, 0))


def test_dually_bch_negative_case_length_13():
    assert not is_dually_bch(bch_code(3, 3, 1, 2, 2))


def test_dually_bch_negative_case_length_4():
    assert not is_dually_bch(bch_code(3, 2, 1, 2, 2))


def test_consecutive_union_witness_is_verified():
    # whatever witness is reported must reproduce T exactly
    from bchlab.cyclotomic import leader_table

    for q, m in [(3, 3), (3, 4), (5, 2), (7, 2)]:
        n = (q**m - 1) // 2
        table = leader_table(n, q)
        for delta in range(2, n):
            res = is_dually_bch(bch_code(q, m, 1, delta, 2))
            if res.witness:
                b, d = res.witness
                U = set(table.union([(b + j) % n for j in range(d - 1)]).tolist())
                assert U == set(res.dual_defining_set.exponents)
    assert consecutive_union(DefiningSet(13, frozenset(), "all"), 3) == (False, None)
