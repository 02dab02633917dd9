import random

import repkit as rk
from helpers import random_clause_set


def gn(n: int) -> rk.ClauseSet:
    """n positive units plus the all-negative clause."""
    return frozenset({frozenset({i}) for i in range(1, n + 1)} |
                     {frozenset(range(-n, 0))})


def test_pure_clause():
    f = rk.clause_set([[1, 2], [-2, 3], [1, 3]])
    assert rk.pure_clause(f) == rk.clause(1, 3)
    assert rk.pure_clause(rk.clause_set([[1], [-1]])) == rk.BOT


def test_dope_shape():
    f = rk.clause_set([[1, 2], [-1, -2]])
    d = rk.dope(f)
    assert len(d.clauses) == len(f)
    assert d.doping_vars == {3, 4}
    assert d.base == f
    assert rk.is_satisfiable(d.clauses)
    # every clause got exactly one private new variable
    for c, u in d.doping_map.items():
        assert u in d.doping_vars and c | {u} in d.clauses


def test_dope_inverse():
    f = rk.clause_set([[1, 2], [-1, -2], [1, -2]])
    d = rk.dope(f)
    inv = d.inverse()
    assert set(inv) == d.doping_vars
    for c, u in d.doping_map.items():
        assert inv[u] == c


def test_is_mps():
    # minimally unsatisfiable, no pure literals: conclusion bot
    assert rk.is_mps(gn(2)) is not None
    assert rk.is_mps(rk.clause_set([[1], [-1]])) is not None
    # satisfiable and no duplicate instantiation images, single clause
    assert rk.is_mps(rk.clause_set([[1, 2]])) is not None
    # not mps: the two clauses collapse to the same image under the pure part
    assert rk.is_mps(rk.clause_set([[1, 2], [1, 3]])) is None
    assert rk.is_mps(rk.TOP) is None


def test_mps_subsets_match_direct():
    rng = random.Random(31)
    for _ in range(25):
        f = random_clause_set(rng, 4, 5)
        got = {w.subset for w in rk.mps_subsets(f)}
        want = {w.subset for w in rk.mps_subsets_direct(f)}
        assert got == want


def test_mps_count_gn():
    for n in range(1, 6):
        assert len(rk.mps_subsets(gn(n))) == 2 ** n + n


def test_conclusions_are_prime_implicates():
    rng = random.Random(32)
    for _ in range(15):
        f = random_clause_set(rng, 4, 5)
        primes = rk.prime_implicates(f)
        if primes == rk.BOT_SET:
            continue
        conclusions = {w.conclusion for w in rk.mps_subsets(f)}
        for c in conclusions:
            assert rk.entails(f, c)
        # every prime implicate is the conclusion of some minimal premise set
        assert primes <= conclusions


def test_is_total_mps():
    t = rk.node(1, rk.node(2, rk.LEAF, rk.LEAF), rk.LEAF)
    assert rk.is_total_mps(rk.smuo(t))
    assert not rk.is_total_mps(gn(3))
    assert not rk.is_total_mps(rk.clause_set([[-1, 2], [-2, 3], [-3, 1]]))


def test_has_max_prime_implicates():
    t = rk.extremal_tree(2, 2)
    d = rk.doped_tree(t)
    assert rk.has_max_prime_implicates(d.clauses)
    assert len(rk.prime_implicates(d.clauses)) == \
        2 ** len(d.clauses) - 1
    assert not rk.has_max_prime_implicates(rk.dope(gn(3)).clauses)


def test_max_prime_implicates_matches_count():
    rng = random.Random(33)
    for _ in range(20):
        f = random_clause_set(rng, 3, 3)
        if not rk.is_satisfiable(f) or not f:
            continue
        flag = rk.has_max_prime_implicates(f)
        count = len(rk.prime_implicates(f))
        assert flag == (count == 2 ** len(f) - 1)


def test_prime_implicates_bounded():
    rng = random.Random(34)
    for _ in range(15):
        f = random_clause_set(rng, 4, 4)
        full = rk.prime_implicates(f)
        if full == rk.BOT_SET:
            continue
        assert rk.prime_implicates_bounded(f, len(f)) == full
        for c in rk.prime_implicates_bounded(f, 1):
            assert rk.entails(f, c)
