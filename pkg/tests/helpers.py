"""Shared test utilities: random corpora and independent oracles.

The oracles deliberately take different routes than the library:
hardness by exhaustive recursion over partial assignments, p-hardness by
its plain definition, width-bounded refutation by a subsumption-free
closure.  Library results are checked against these on small inputs.
"""

from __future__ import annotations

import itertools

from repkit import (
    BOT, Clause, ClauseSet, LEAF, Tree, apply_assignment, is_satisfiable,
    reduce_r, reduce_r_inf, refutation_level, variables,
)


def random_clause_set(rng, nv: int, nc: int, maxlen: int = 3) -> ClauseSet:
    out = set()
    for _ in range(nc):
        ln = rng.randint(1, maxlen)
        vs = rng.sample(range(1, nv + 1), min(ln, nv))
        out.add(frozenset(v if rng.random() < .5 else -v for v in vs))
    return frozenset(out)


def random_dnf(rng, nv: int, nc: int, maxlen: int = 3) -> list[Clause]:
    return sorted(random_clause_set(rng, nv, nc, maxlen),
                  key=lambda c: (len(c), sorted(map(abs, c)), sorted(c)))


def all_shapes(n_leaves: int) -> list[Tree]:
    """All full binary tree shapes with the given number of leaves."""
    if n_leaves == 1:
        return [LEAF]
    return [Tree(0, l, r)
            for i in range(1, n_leaves)
            for l in all_shapes(i)
            for r in all_shapes(n_leaves - i)]


def hd_by_assignment_enumeration(f: ClauseSet) -> int:
    """hd(F) as the maximum refutation level over all instantiation images,
    explored one variable at a time (memoized on the image)."""
    memo: dict[ClauseSet, int] = {}

    def go(g: ClauseSet) -> int:
        hit = memo.get(g)
        if hit is not None:
            return hit
        if not is_satisfiable(g):
            v = refutation_level(g)
        else:
            v = 0
            for var in variables(g):
                for val in (0, 1):
                    v = max(v, go(apply_assignment({var: val}, g)))
        memo[g] = v
        return v

    return go(f)


def all_partial_assignments(vs):
    vs = sorted(vs)
    for alloc in itertools.product((None, 0, 1), repeat=len(vs)):
        yield {v: b for v, b in zip(vs, alloc) if b is not None}


def phd_by_definition(f: ClauseSet) -> int:
    """Least k with r_k(phi * F) = r_inf(phi * F) for every phi, literally."""
    images = {frozenset(apply_assignment(phi, f))
              for phi in all_partial_assignments(variables(f))}
    targets = {g: reduce_r_inf(g) for g in images}
    for k in itertools.count():
        if all(reduce_r(g, k) == t for g, t in targets.items()):
            return k


def kres_refutes_nosubsumption(f: ClauseSet, k: int, cap: int = 10 ** 5) -> bool:
    """Subsumption-free closure under resolution steps with a parent of
    length <= k; True iff the empty clause appears."""
    db = set(f)
    while True:
        new = set()
        for c, d in itertools.combinations(db, 2):
            if len(c) > k and len(d) > k:
                continue
            clash = [x for x in c if -x in d]
            if len(clash) != 1:
                continue
            r = (c - {clash[0]}) | (d - {-clash[0]})
            if r not in db:
                new.add(r)
        if BOT in new:
            return True
        if not new:
            return BOT in db
        db |= new
        if len(db) > cap:
            raise RuntimeError("closure oracle exploded")


def whd_by_closure(f: ClauseSet) -> int:
    for k in itertools.count():
        if kres_refutes_nosubsumption(f, k):
            return k


# Reference instance-statistics table: (k, h, variant) -> (n, c, l); the
# leaf counts per (k, h) follow separately.
REFERENCE_TABLE = {
    (2, 22, 1): (507, 508, 8604), (2, 22, 2): (761, 4811, 17716), (2, 22, 3): (761, 4557, 13160),
    (2, 32, 1): (1057, 1058, 24994), (2, 32, 2): (1586, 13556, 51046), (2, 32, 3): (1586, 13027, 38020),
    (2, 42, 1): (1807, 1808, 54784), (2, 42, 2): (2711, 29201, 111376), (2, 42, 3): (2711, 28297, 83080),
    (2, 52, 1): (2757, 2758, 101974), (2, 52, 2): (4136, 53746, 206706), (2, 52, 3): (4136, 52367, 154340),
    (2, 62, 1): (3907, 3908, 170564), (2, 62, 2): (5861, 89191, 345036), (2, 62, 3): (5861, 87237, 257800),
    (2, 72, 1): (5257, 5258, 264554), (2, 72, 2): (7886, 137536, 534366), (2, 72, 3): (7886, 134907, 399460),
    (3, 23, 1): (4095, 4096, 80594), (3, 23, 2): (6143, 44394, 165284), (3, 23, 3): (6143, 42346, 122939),
    (3, 33, 1): (12035, 12036, 327384), (3, 33, 2): (18053, 175729, 666804), (3, 33, 3): (18053, 169711, 497094),
    (3, 43, 1): (26575, 26576, 922524), (3, 43, 2): (39863, 487839, 1871624), (3, 43, 3): (39863, 474551, 1397074),
    (4, 24, 1): (25901, 25902, 562542), (4, 24, 2): (38852, 307174, 1150986), (4, 24, 3): (38852, 294223, 856764),
    (4, 34, 1): (105911, 105912, 3150408), (4, 34, 2): (158867, 1681117, 6406728), (4, 34, 3): (158867, 1628161, 4778568),
    (4, 44, 1): (299971, 299972, 11326724), (4, 44, 2): (449957, 5963335, 22953420), (4, 44, 3): (449957, 5813349, 17140072),
    (5, 25, 1): (136811, 136812, 3202912), (5, 25, 2): (205217, 1738269, 6542636), (5, 25, 3): (205217, 1669863, 4872774),
    (5, 35, 1): (768335, 768336, 24413776), (5, 35, 2): (1152503, 12975225, 49595888), (5, 35, 3): (1152503, 12591057, 37004832),
}

REFERENCE_ALPHA = {
    (2, 22): 254, (2, 32): 529, (2, 42): 904, (2, 52): 1379, (2, 62): 1954,
    (2, 72): 2629, (3, 23): 2048, (3, 33): 6018, (3, 43): 13288,
    (4, 24): 12951, (4, 34): 52956, (4, 44): 149986, (5, 25): 68406, (5, 35): 384168,
}
