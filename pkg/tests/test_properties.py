"""Randomised structural checks over small fields."""

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from bchlab.analysis import (
    bch_bound,
    macwilliams_transform,
    min_distance,
    weight_enumerator_exhaustive,
)
from bchlab.codes import bch_code, code_length, dual_code, parity_check_polynomial
from bchlab.cyclotomic import leader_table, shift_test_leader, small_leader_predicate, small_leader_range
from bchlab.field import build_field
from bchlab.poly import UnivariatePoly

FIELDS = [(3, 2), (3, 3), (3, 4), (5, 2), (5, 3), (7, 2), (9, 2)]
SETTINGS = settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])


@st.composite
def codes(draw, max_k=None):
    q, m = draw(st.sampled_from(FIELDS))
    n = code_length(q, m)
    lam = draw(st.sampled_from([1, -1]))
    delta = draw(st.integers(2, n))
    b = draw(st.integers(0, 2 * n - 1))
    return bch_code(q, m, lam, delta, b)


@SETTINGS
@given(codes())
def test_generator_times_check_is_x_n_minus_lambda(model):
    h = parity_check_polynomial(model)
    assert h * model.generator == UnivariatePoly.x_n_minus(model.gf, model.n, model.lam)
    assert model.k == model.n - len(model.defining_set)


@SETTINGS
@given(codes())
def test_weights_sum_to_q_to_the_k(model):
    if model.q ** model.k > 1 << 14:
        model = dual_code(model)
    if model.q ** model.k > 1 << 14:
        return
    W = weight_enumerator_exhaustive(model)
    assert W.total == model.q ** model.k
    assert W.counts[0] == 1


@SETTINGS
@given(codes())
def test_macwilliams_is_an_involution(model):
    small = model if model.q ** model.k <= model.q ** (model.n - model.k) else dual_code(model)
    if small.q ** small.k > 1 << 14:
        return
    W = weight_enumerator_exhaustive(small)
    B = macwilliams_transform(W)
    assert B.total == small.q ** (small.n - small.k)
    assert macwilliams_transform(B) == W


@SETTINGS
@given(codes())
def test_bch_bound_is_sound(model):
    if model.k == 0:
        return
    d, cert = min_distance(model, budget=1 << 14)
    if cert == "exact":
        assert d >= bch_bound(model.defining_set)
        assert d >= bch_bound(model.defining_set, all_primitive=True)


@SETTINGS
@given(st.sampled_from(FIELDS), st.data())
def test_field_exponent_arithmetic(qm, data):
    F = build_field(*qm)
    a = data.draw(st.integers(0, F.order - 1))
    b = data.draw(st.integers(0, F.order - 1))
    x, y = F.elem(a), F.elem(b)
    assert x * y == F.elem((a + b) % F.order)
    assert (x + y) * (x - y) == x * x - y * y
    assert x.inv() == F.elem((-a) % F.order)


@SETTINGS
@given(st.sampled_from(FIELDS), st.data())
def test_cosets_partition_and_close(qm, data):
    q, m = qm
    N = data.draw(st.sampled_from([code_length(q, m), 2 * code_length(q, m)]))
    t = leader_table(N, q)
    assert int(t.sizes.sum()) == N
    r = data.draw(st.integers(0, N - 1))
    assert t.leader_of(r * q % N) == t.leader_of(r)
    assert t.leader_of(r) <= r


SMALL_QM = [(3, 2), (3, 3), (3, 4), (3, 5), (5, 2), (5, 3), (7, 2), (9, 2), (3, 8)]


@SETTINGS
@given(st.sampled_from(SMALL_QM), st.data())
def test_shift_test_matches_coset_leaders(qm, data):
    q, m = qm
    N = q**m - 1
    i = data.draw(st.integers(1, N - 1))
    assert shift_test_leader(q, m, i) == (leader_table(N, q).leader_of(i) == i)


@pytest.mark.parametrize("q,m", [(3, 3), (3, 4), (3, 5), (3, 6), (5, 3), (5, 4), (7, 3), (9, 2)])
def test_small_leader_predicate_over_full_range(q, m):
    N = q**m - 1
    t = leader_table(N, q)
    for i in range(1, small_leader_range(q, m) + 1):
        is_leader, size = small_leader_predicate(q, m, i)
        assert is_leader == (t.leader_of(i) == i), i
        if is_leader:
            assert size == t.size_of(i), i
