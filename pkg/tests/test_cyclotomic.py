import numpy as np
import pytest

from bchlab import cyclotomic as cy
from bchlab.errors import NotCoprime, OutOfRange


def orbits(N, q):
    """Reference partition of Z_N into q-orbits by plain iteration."""
    seen, out = set(), []
    for t in range(N):
        if t in seen:
            continue
        orb, u = [], t
        while u not in orb:
            orb.append(u)
            u = u * q % N
        seen.update(orb)
        out.append(sorted(orb))
    return out


def test_coset_examples():
    c = cy.coset(26, 3, 17)
    assert c.members == (17, 23, 25) and c.leader == 17 and c.size == 3
    assert cy.coset(13, 3, 5).members == (2, 5, 6)
    assert cy.coset(13, 3, 0).members == (0,)


def test_coset_leader_examples():
    assert cy.coset_leader(26, 3, 25) == 17
    assert cy.coset_leader(26, 3, 0) == 0
    assert cy.coset_leader(8, 3, 7) == 5


def test_coset_errors():
    with pytest.raises(NotCoprime):
        cy.coset(12, 3, 1)
    with pytest.raises(OutOfRange):
        cy.coset(13, 3, 13)


def test_leader_table_examples():
    t = cy.leader_table(13, 3)
    assert list(t.leaders) == [0, 1, 2, 4, 7] and list(t.sizes) == [1, 3, 3, 3, 3]
    t = cy.leader_table(8, 3)
    assert list(t.leaders) == [0, 1, 2, 4, 5] and list(t.sizes) == [1, 2, 2, 1, 2]


@pytest.mark.parametrize("q", [3, 5, 7, 9])
def test_trivial_action_modulo_q_minus_one(q):
    t = cy.leader_table(q - 1, q)
    assert list(t.leaders) == list(range(q - 1))


@pytest.mark.parametrize("N,q", [(13, 3), (26, 3), (40, 3), (80, 3), (62, 5), (124, 5), (171, 7), (242, 3), (40, 9)])
def test_leader_table_matches_orbit_iteration(N, q):
    ref = orbits(N, q)
    t = cy.leader_table(N, q)
    assert [o[0] for o in ref] == list(t.leaders)
    assert [len(o) for o in ref] == list(t.sizes)
    for o in ref:
        for x in o:
            assert t.leader_of(x) == o[0]
    assert sum(t.sizes) == N


def test_ith_largest():
    assert cy.ith_largest_leader(13, 3, 1) == 7
    assert cy.ith_largest_leader(13, 3, 2) == 4
    assert cy.ith_largest_odd_leader(8, 3, 1) == 5
    assert cy.ith_largest_odd_leader(26, 3, 1) == 17
    assert cy.leader_table(26, 3).size_of(17) == 3
    with pytest.raises(OutOfRange):
        cy.ith_largest_leader(13, 3, 6)


def test_shift_test_examples():
    assert cy.shift_test_leader(3, 3, 17)
    assert not cy.shift_test_leader(3, 3, 9)
    assert all(cy.shift_test_leader(q, m, 1) for q, m in [(3, 2), (5, 3), (7, 4)])


@pytest.mark.parametrize("q,m", [(3, m) for m in range(2, 9)] + [(5, 2), (5, 3), (5, 4), (7, 2), (7, 3), (9, 2)])
def test_shift_test_equals_leader_exhaustive(q, m):
    t = cy.leader_table(q**m - 1, q)
    for i in range(1, q**m - 1):
        assert cy.shift_test_leader(q, m, i) == t.is_leader(i), i


def test_small_leader_examples():
    assert cy.small_leader_predicate(3, 2, 4) == (True, 1)
    assert cy.small_leader_predicate(3, 3, 3)[0] is False
    assert cy.small_leader_predicate(5, 3, 7) == (True, 3)


@pytest.mark.parametrize("q,m", [(3, 2), (3, 3), (3, 4), (3, 5), (3, 6), (3, 7), (5, 2), (5, 3), (5, 4), (7, 2), (7, 3)])
def test_small_leader_predicate_full_range(q, m):
    t = cy.leader_table(q**m - 1, q)
    for i in range(1, cy.small_leader_range(q, m) + 1):
        leader, size = cy.small_leader_predicate(q, m, i)
        assert leader == t.is_leader(i), i
        if leader:
            assert size == t.size_of(i), i


def test_odd_leaders_in_range():
    assert cy.odd_leaders_in_range(8, 3, 1, 7) == [1, 5]
    assert cy.odd_leaders_in_range(8, 3, 4, 3) == []
    # 11 is in the orbit {7, 11, 21}; 13 is fixed by x3
    ref = [o[0] for o in orbits(26, 3) if o[0] % 2 == 1]
    assert cy.odd_leaders_in_range(26, 3, 1, 25) == ref == [1, 5, 7, 13, 17]


def test_multiplicative_order():
    assert cy.multiplicative_order(3, 13) == 3
    assert cy.multiplicative_order(3, 8) == 2


def test_disk_cache_round_trip(tmp_path):
    N = 3**8 - 1
    t = cy.leader_table(N, 3)
    path = cy.write_cache(t, tmp_path)
    assert path.exists()
    back = cy.read_cache(N, 3, tmp_path)
    assert np.array_equal(back.leaders, t.leaders) and np.array_equal(back.cl, t.cl)
    assert cy.read_cache(N + 2, 3, tmp_path) is None
