"""Minimal premise sets, pure clauses, and doping.

F' is a minimal premise set (mps) for a clause C if F' entails C but no
strict subset does; the unique minimal conclusion of an mps is its pure
clause (the literals without complementary occurrence).  Doping adds one
fresh positive variable to every clause; the mps's of F then reappear as
the prime implicates of the doped set, which makes them computable by one
resolution closure.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .core import (
    BOT, Clause, ClauseSet, SizeLimitExceeded, apply_assignment, apply_clauses,
    clause_set, entails, falsifying_assignment, is_satisfiable, literals,
    variables,
)
from .reductions import clause_key, prime_implicates


def pure_clause(f: ClauseSet) -> Clause:
    """puc(F): the literals of F occurring in one sign only."""
    lits = literals(f)
    return frozenset(x for x in lits if -x not in lits)


@dataclass
class DopedClauseSet:
    """A clause-set plus the bookkeeping of its doping variables.

    clauses holds base clause union doping literal; doping_map maps each base
    clause to its (positive) doping variable; ordered fixes an emission order.
    """
    clauses: ClauseSet
    doping_map: dict[Clause, int]
    ordered: tuple[Clause, ...] = field(default_factory=tuple)

    @property
    def base(self) -> ClauseSet:
        return frozenset(self.doping_map)

    @property
    def doping_vars(self) -> frozenset[int]:
        return frozenset(self.doping_map.values())

    def inverse(self) -> dict[int, Clause]:
        return {u: c for c, u in self.doping_map.items()}


def dope(f: ClauseSet) -> DopedClauseSet:
    """D(F): extend every clause by a fresh positive variable.

    Doping variables are numbered from max var(F) + 1 following the canonical
    clause order, so the construction is deterministic.
    """
    base = sorted(f, key=clause_key)
    u0 = max((abs(x) for c in f for x in c), default=0) + 1
    ordered = tuple(c | {u0 + i} for i, c in enumerate(base))
    return DopedClauseSet(frozenset(ordered), {c: u0 + i for i, c in enumerate(base)}, ordered)


@dataclass(frozen=True)
class MpsWitness:
    subset: ClauseSet       # the minimal premise set F'
    conclusion: Clause      # its unique minimal conclusion puc(F')


def is_mps(f: ClauseSet) -> MpsWitness | None:
    """Check whether F is a minimal premise set (for its pure clause).

    F is an mps iff the images of its clauses under phi_{puc(F)} are pairwise
    distinct and form a minimally unsatisfiable clause-set.
    """
    if not f:
        return None
    phi = falsifying_assignment(pure_clause(f))
    imgs = apply_clauses(phi, list(f))
    if len(set(imgs)) != len(imgs):
        return None  # contraction: two premises collapse
    g = frozenset(imgs)
    if is_satisfiable(g):
        return None
    if not all(is_satisfiable(g - {c}) for c in g):
        return None
    return MpsWitness(f, pure_clause(f))


def mps_subsets(f: ClauseSet, max_clauses: int = 10 ** 6) -> frozenset[MpsWitness]:
    """All minimal premise subsets of F, via the prime implicates of D(F).

    Each prime implicate C of the doped set selects the base clauses whose
    doping variable occurs in C; the conclusion is C minus the doping part.
    """
    d = dope(f)
    inv = d.inverse()
    out = set()
    for c in prime_implicates(d.clauses, max_clauses):
        subset = frozenset(inv[abs(x)] for x in c if abs(x) in inv)
        conclusion = frozenset(x for x in c if abs(x) not in inv)
        out.add(MpsWitness(subset, conclusion))
    return frozenset(out)


def mps_subsets_direct(f: ClauseSet, max_clauses: int = 16) -> frozenset[MpsWitness]:
    """Independent oracle: test every non-empty subset with is_mps."""
    if len(f) > max_clauses:
        raise SizeLimitExceeded(f"direct mps enumeration over {len(f)} clauses")
    cs = sorted(f, key=clause_key)
    out = set()
    for r in range(1, len(cs) + 1):
        for sub in itertools.combinations(cs, r):
            w = is_mps(frozenset(sub))
            if w is not None:
                out.add(w)
    return frozenset(out)


def is_total_mps(f: ClauseSet) -> bool:
    """Every non-empty subset of F an mps: phi_{puc(F)} must be contraction-
    free and send F into the saturated deficiency-1 class."""
    from .trees import NotSmu1Error, tsmuo  # deferred: trees imports this module
    if not f:
        return False
    phi = falsifying_assignment(pure_clause(f))
    imgs = apply_clauses(phi, list(f))
    if len(set(imgs)) != len(imgs):
        return False
    try:
        tsmuo(frozenset(imgs))
    except NotSmu1Error:
        return False
    return True


def has_max_prime_implicates(f: ClauseSet) -> bool:
    """|primec_0(F)| = 2^c(F) - 1: F is a total mps and every clause owns a
    variable occurring in no other clause."""
    if not f:
        return False
    if not is_total_mps(f):
        return False
    for c in f:
        rest = variables(f - {c})
        if not any(abs(x) not in rest for x in c):
            return False
    return True


def prime_implicates_bounded(f: ClauseSet, k: int) -> ClauseSet:
    """Implicates obtainable as pure clauses of entailing subsets of size
    <= k, minimized under subsumption.  For k = c(F) this is primec_0(F)."""
    cs = sorted(f, key=clause_key)
    collected: set[Clause] = set()
    for r in range(1, min(k, len(cs)) + 1):
        for sub in itertools.combinations(cs, r):
            g = frozenset(sub)
            c = pure_clause(g)
            if not is_satisfiable(apply_assignment(falsifying_assignment(c), g)):
                collected.add(c)
    return frozenset(c for c in collected if not any(d < c for d in collected))
