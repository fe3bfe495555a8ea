from itertools import product

import pytest

from bchlab import formulas as fm
from bchlab.analysis import weight_enumerator_exhaustive
from bchlab.codes import (
    CodeSpec,
    bch_code,
    bch_dimension,
    code_length,
    defining_set,
    dual_defining_set,
    extended_codeword,
    generator_polynomial,
    low_weight_codeword,
    minimal_polynomial,
    model_from_defining_set,
    parity_check_polynomial,
    polynomial_root_exponents,
    trace_codeword,
    two_orbit_code,
)
from bchlab.cyclotomic import leader_table
from bchlab.errors import ConjugateRoots, DivisibilityViolation, SpecMismatch
from bchlab.field import build_field
from bchlab.poly import UnivariatePoly


def test_defining_set_examples():
    F = build_field(3, 2)
    assert defining_set(CodeSpec(4, -1, 2, 0), F).exponents == {1, 3}
    assert defining_set(CodeSpec(4, 1, 2, 1), F).exponents == {1, 3}
    assert defining_set(CodeSpec(4, 1, 2, 0), F).exponents == {0}


def test_spec_validation():
    with pytest.raises(SpecMismatch):
        CodeSpec(4, 2, 2, 0)
    with pytest.raises(SpecMismatch):
        CodeSpec(4, 1, 1, 0)
    with pytest.raises(SpecMismatch):
        CodeSpec(4, 1, 5, 0)
    with pytest.raises(SpecMismatch):
        CodeSpec(4, 1, 2, 0).check(3, 3)


def test_minimal_polynomials():
    F = build_field(3, 2)
    gf = F.gfq()
    assert minimal_polynomial(F, 4, 0) == UnivariatePoly(gf, [2, 1])  # x - 1
    # alpha itself has order 8, so M_1 is the field modulus x^2 + x + 2
    assert minimal_polynomial(F, 8, 1) == UnivariatePoly(gf, [2, 1, 1])
    # x^2 + 1 has roots of order 4: it is M_2 modulo 8
    assert minimal_polynomial(F, 8, 2) == UnivariatePoly(gf, [1, 0, 1])


@pytest.mark.parametrize("q,m", [(3, 2), (3, 3), (5, 2), (9, 2)])
def test_minimal_polynomial_degree_and_roots(q, m):
    F = build_field(q, m)
    n = code_length(q, m)
    for N, parity in ((n, "all"), (2 * n, "odd")):
        table = leader_table(N, q)
        for l in table.leaders:
            if parity == "odd" and l % 2 == 0:
                continue
            M = minimal_polynomial(F, N, int(l))
            assert M.degree == table.size_of(int(l))
            assert polynomial_root_exponents(F, M, N, parity) == set(int(t) for t in table.members(int(l)))


@pytest.mark.parametrize("q,m,lam", [(3, 2, -1), (3, 3, 1), (3, 3, -1), (5, 2, -1), (5, 3, 1), (9, 2, -1)])
def test_generator_roots_are_the_defining_set(q, m, lam):
    F = build_field(q, m)
    n = code_length(q, m)
    for delta in range(2, min(n, 12) + 1):
        for b in (0, 1, 2):
            model = generator_polynomial(CodeSpec(n, lam, delta, b), F)
            parity = "all" if lam == 1 else "odd"
            roots = polynomial_root_exponents(F, model.generator, model.defining_set.modulus, parity)
            assert roots == model.defining_set.exponents
            assert model.k == n - len(model.defining_set)
            h = parity_check_polynomial(model)
            assert h * model.generator == UnivariatePoly.x_n_minus(F.gfq(), n, lam)
            assert h.degree == model.k


def test_worked_dimension_examples():
    assert bch_code(5, 3, -1, 16, 0).k == 32
    assert bch_code(7, 3, -1, 58, 0).k == 62
    model = bch_code(3, 2, -1, 2, 0)
    assert model.generator.degree == 2 and model.k == 2
    h = parity_check_polynomial(model)
    assert h.degree == 2 and h * model.generator == UnivariatePoly.x_n_minus(model.gf, 4, -1)


def test_full_length_generator_has_trivial_check():
    F = build_field(3, 2)
    T = range(1, 8, 2)
    model = model_from_defining_set(F, -1, T)
    assert model.k == 0
    assert parity_check_polynomial(model) == UnivariatePoly(F.gfq(), [1])


def test_high_rate_construction_agrees_with_product():
    # 2|T| > n triggers the division path
    for q, m, lam, delta in [(3, 3, 1, 12), (3, 4, -1, 30), (5, 2, 1, 11)]:
        model = bch_code(q, m, lam, delta, 1)
        parity = "all" if lam == 1 else "odd"
        F = model.field
        assert polynomial_root_exponents(F, model.generator, model.defining_set.modulus, parity) == model.defining_set.exponents


def test_defining_set_must_be_coset_union():
    F = build_field(3, 2)
    with pytest.raises(SpecMismatch):
        model_from_defining_set(F, -1, [1])
    with pytest.raises(SpecMismatch):
        model_from_defining_set(F, -1, [2, 6])


def test_dual_defining_set_examples():
    F = build_field(3, 3)
    model = model_from_defining_set(F, 1, range(1, 13))
    assert dual_defining_set(model).exponents == {0}
    full = model_from_defining_set(F, 1, [])
    assert dual_defining_set(full).exponents == set(range(13))
    # delta in (delta_2, delta_1]: T^perp = C_0 u C_2
    lp = fm.top_leaders(3, 3)
    for delta in range(lp.delta2 + 1, lp.delta1 + 1):
        T = dual_defining_set(bch_code(3, 3, 1, delta, 1)).exponents
        assert T == {0} | set(leader_table(13, 3).members(2).tolist())


def test_extended_codeword():
    gf = build_field(3, 2).gfq()
    assert extended_codeword([0, 0, 0, 0], gf) == [0, 0, 0, 0, 0]
    assert extended_codeword([1, 1, 1, 1], gf) == [1, 1, 1, 1, 2]


def test_trace_codewords():
    F = build_field(3, 3)
    assert trace_codeword(F, [1], [F.zero]) == [0] * 13
    for c in range(3):
        # C_0 has size 1, so the trace is taken down from GF(q): constant words
        assert trace_codeword(F, [0], [F.from_symbol(c)]) == [c] * 13
    with pytest.raises(ConjugateRoots):
        trace_codeword(F, [1, 3], [F.one, F.one])


def test_trace_form_spans_the_bch_code():
    F = build_field(3, 3)
    n = 13
    lp = fm.top_leaders(3, 3)
    model = bch_code(3, 3, 1, lp.delta1, 1)
    words = set()
    for a in F.elements():
        for c in range(3):
            # nonzeros beta^delta_1 and 1
            w = trace_codeword(F, [lp.delta1, 0], [a, F.from_symbol(c)])
            words.add(tuple(w))
    assert len(words) == 81 == 3**model.k
    assert all(model.contains(list(w)) for w in words)


def test_two_orbit_code():
    model, claim, dual_claim = two_orbit_code(build_field(3, 3))
    assert (model.n, model.k) == (13, 6)
    assert claim.d_lower == 4
    assert (dual_claim.k, dual_claim.d_lower, dual_claim.d_upper) == (7, 3, 5)
    assert weight_enumerator_exhaustive(model).min_distance() >= 4


def test_low_weight_codeword_example():
    F = build_field(3, 4)
    # k = 1: the product is empty
    f = low_weight_codeword(F, 5, 1)
    bounds = fm.low_weight_bounds(3, 40, 1, 5)
    assert f.weight() == 5 <= bounds.d_upper
    assert f.vanishes_at([1 + 2 * i for i in range(1, bounds.delta)])
    # f(y) = 0 iff y^40 = -1 and y^8 != -1, so gamma^5 is not a root
    assert not f.vanishes_at([5])
    for k in (1, 2):
        f = low_weight_codeword(F, 5, k)
        bounds = fm.low_weight_bounds(3, 40, k, 5)
        assert f.weight() <= bounds.d_upper
        assert f.vanishes_at([1 + 2 * i for i in range(1, bounds.delta)])
    with pytest.raises(DivisibilityViolation):
        low_weight_codeword(F, 10, 1)
    with pytest.raises(DivisibilityViolation):
        low_weight_codeword(F, 3, 1)


def test_low_weight_codeword_geometric_series():
    F = build_field(3, 4)
    for da in (1, 5):
        f = low_weight_codeword(F, da, 1)
        assert f.weight() == da
        assert f.over_base_field()


def test_bulk_and_scalar_evaluation_agree():
    F = build_field(5, 2)
    f = low_weight_codeword(F, 3, 4)
    for e in range(0, 24):
        assert f.vanishes_at([e]) == f.evaluate(F.elem(e)).is_zero()


def test_membership_and_encoding():
    model = bch_code(3, 3, -1, 3, 0)
    for msg in product(range(3), repeat=2):
        assert model.contains(model.encode(list(msg) + [0] * (model.k - 2)))
    assert bch_dimension(3, 3, -1, 3, 0) == model.k
