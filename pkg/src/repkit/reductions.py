"""Reduction hierarchy r_k, hardness measures, and prime implicates.

r_0 detects the empty clause, r_1 is unit-clause propagation, r_2 adds
failed-literal elimination, and generally r_k applies <x -> 1> whenever
r_{k-1} refutes <x -> 0> * F.  Refutation levels of the three hierarchies:

  hd  : minimal k with r_k(F) = {bot}           (unsatisfiable F),
        maximal refutation level over all unsatisfiable instances otherwise;
  phd : minimal k such that r_k computes the full forced-assignment fixpoint
        r_inf on every instance phi * F;
  whd : asymmetric width -- resolution where one parent has length <= k.

Literal scans run in a fixed order (ascending variable, positive literal
first), so results are reproducible; verdicts are order-independent anyway.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .core import (
    Assignment, BOT, BOT_SET, Clause, ClauseSet, SizeLimitExceeded,
    apply_assignment, complement, entails, falsifying_assignment,
    is_satisfiable, literals, single, total_assignments, variables,
)

_R_MEMO: dict[tuple[int, ClauseSet], ClauseSet] = {}
_RINF_MEMO: dict[ClauseSet, ClauseSet] = {}
_WREF_MEMO: dict[ClauseSet, int] = {}


def clear_caches() -> None:
    _R_MEMO.clear()
    _RINF_MEMO.clear()
    _WREF_MEMO.clear()


def _scan(f: ClauseSet) -> list[int]:
    """Literals of F in scan order: ascending variable, positive first."""
    return sorted(literals(f), key=lambda x: (abs(x), 0 if x > 0 else 1))


def clause_key(c: Clause) -> tuple:
    return (len(c), sorted(abs(x) for x in c), sorted(c))


def propagate_units(f: ClauseSet) -> ClauseSet:
    """r_1: iterated unit-clause propagation."""
    while True:
        if BOT in f:
            return BOT_SET
        phi: Assignment = {}
        for c in f:
            if len(c) == 1:
                x = next(iter(c))
                if phi.get(abs(x)) == (0 if x > 0 else 1):
                    return BOT_SET  # complementary units
                phi[abs(x)] = 1 if x > 0 else 0
        if not phi:
            return f
        f = apply_assignment(phi, f)


def reduce_r(f: ClauseSet, k: int) -> ClauseSet:
    """The reduction r_k(F)."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return BOT_SET if BOT in f else f
    if k == 1:
        return propagate_units(f)
    key = (k, f)
    hit = _R_MEMO.get(key)
    if hit is not None:
        return hit
    g = propagate_units(f)  # r_1 steps are in particular r_k steps
    while g is not BOT_SET:
        for x in _scan(g):
            if reduce_r(apply_assignment(single(x, 0), g), k - 1) == BOT_SET:
                g = propagate_units(apply_assignment(single(x, 1), g))
                break
        else:
            break
    _R_MEMO[key] = g
    return g


def reduce_r_inf(f: ClauseSet) -> ClauseSet:
    """r_inf(F) = r_{n(F)}(F): the fixpoint of applying all forced assignments.

    Computed directly: x is forced iff <x -> 0> * F is unsatisfiable.
    """
    hit = _RINF_MEMO.get(f)
    if hit is not None:
        return hit
    g = propagate_units(f)
    if g is not BOT_SET and not is_satisfiable(g):
        g = BOT_SET
    while g is not BOT_SET:
        for x in _scan(g):
            if not is_satisfiable(apply_assignment(single(x, 0), g)):
                g = propagate_units(apply_assignment(single(x, 1), g))
                break
        else:
            break
    _RINF_MEMO[f] = g
    return g


def refutation_level(f: ClauseSet) -> int:
    """hd(F) for unsatisfiable F: minimal k with r_k(F) = {bot}."""
    for k in range(len(variables(f)) + 1):
        if reduce_r(f, k) == BOT_SET:
            return k
    raise ValueError("refutation_level requires an unsatisfiable clause-set")


@dataclass(frozen=True)
class HardnessReport:
    kind: str                     # "hd" | "phd" | "whd"
    value: int
    witness: tuple[tuple[int, int], ...] | None  # sorted (var, value) pairs
    exact: bool = True

    def witness_assignment(self) -> Assignment | None:
        return None if self.witness is None else dict(self.witness)


def _as_witness(phi: Assignment) -> tuple[tuple[int, int], ...]:
    return tuple(sorted(phi.items()))


def hardness(f: ClauseSet, max_prime_clauses: int = 10 ** 6) -> HardnessReport:
    """hd(F): max over instantiations phi with phi * F unsatisfiable of the
    refutation level of phi * F.

    For satisfiable F the maximum is attained on the falsifying assignments
    phi_C of the prime implicates C, which is what gets enumerated; the
    witness is the phi_C of a maximizing C.
    """
    if not is_satisfiable(f):
        return HardnessReport("hd", refutation_level(f), _as_witness({}))
    prime = prime_implicates(f, max_prime_clauses)
    best, best_phi = 0, None
    for c in sorted(prime, key=clause_key):
        phi = falsifying_assignment(c)
        level = refutation_level(apply_assignment(phi, f))
        if level > best or best_phi is None:
            best, best_phi = level, phi
    if best_phi is None:
        return HardnessReport("hd", 0, None)  # tautology: no implicates
    return HardnessReport("hd", best, _as_witness(best_phi))


def w_refutation_level(f: ClauseSet, max_clauses: int = 10 ** 6) -> int:
    """whd(F) for unsatisfiable F: minimal k admitting a k-resolution
    refutation (each step uses a parent of length <= k)."""
    hit = _WREF_MEMO.get(f)
    if hit is not None:
        return hit
    for k in range(len(variables(f)) + 1):
        if _kres_refutes(f, k, max_clauses):
            _WREF_MEMO[f] = k
            return k
    raise ValueError("w_refutation_level requires an unsatisfiable clause-set")


def _resolve(c: Clause, d: Clause) -> Clause | None:
    """Resolvent of two clauses clashing in exactly one literal, else None."""
    clash = [x for x in c if -x in d]
    if len(clash) != 1:
        return None
    x = clash[0]
    return (c - {x}) | (d - {-x})


def _kres_refutes(f: ClauseSet, k: int, max_clauses: int) -> bool:
    """Saturate resolution restricted to steps with a parent of length <= k,
    with forward subsumption; True iff the empty clause is derived."""
    db: list[Clause] = []
    pending = deque(sorted(f, key=clause_key))
    queued: set[Clause] = set(pending)
    generated = 0
    while pending:
        c = pending.popleft()
        if not c:
            return True
        if any(d <= c for d in db):
            continue
        db = [d for d in db if not c <= d]
        for d in db:
            if len(c) <= k or len(d) <= k:
                r = _resolve(c, d)
                if r is not None and r not in queued:
                    queued.add(r)
                    pending.append(r)
                    generated += 1
        db.append(c)
        if generated > max_clauses:
            raise SizeLimitExceeded("k-resolution clause budget exhausted")
    return False


def w_hardness(f: ClauseSet, max_prime_clauses: int = 10 ** 6) -> HardnessReport:
    """whd(F): like hardness, with k-resolution refutation levels."""
    if not is_satisfiable(f):
        return HardnessReport("whd", w_refutation_level(f), _as_witness({}))
    prime = prime_implicates(f, max_prime_clauses)
    best, best_phi = 0, None
    for c in sorted(prime, key=clause_key):
        phi = falsifying_assignment(c)
        level = w_refutation_level(apply_assignment(phi, f))
        if level > best or best_phi is None:
            best, best_phi = level, phi
    if best_phi is None:
        return HardnessReport("whd", 0, None)
    return HardnessReport("whd", best, _as_witness(best_phi))


def p_hardness(f: ClauseSet, max_vars: int = 14) -> HardnessReport:
    """phd(F): minimal k with r_k(phi * F) = r_inf(phi * F) for all phi.

    The candidates are hd(F) and hd(F) + 1; all instantiation images are
    visited through single-variable extensions (memoized on the image).
    """
    if len(variables(f)) > max_vars:
        raise SizeLimitExceeded(f"p_hardness over {len(variables(f))} > {max_vars} variables")
    hd = hardness(f).value
    seen: set[ClauseSet] = set()
    stack = [f]
    value = hd
    witness: Assignment | None = {}
    while stack:
        g = stack.pop()
        if g in seen:
            continue
        seen.add(g)
        if reduce_r(g, hd) != reduce_r_inf(g):
            value = hd + 1
            witness = None  # a separating instance exists but is not tracked
            break
        for v in variables(g):
            for val in (0, 1):
                stack.append(apply_assignment({v: val}, g))
    return HardnessReport("phd", value, None if witness is None else _as_witness(witness))


def relative_hardness(f: ClauseSet, vs: frozenset[int] | set[int]) -> int:
    """hd^V(F): hardness quantified only over assignments with variables in V."""
    order = sorted(set(vs))
    best = [0]
    seen: set[tuple[int, ClauseSet]] = set()

    def go(g: ClauseSet, i: int) -> None:
        if (i, g) in seen:
            return
        seen.add((i, g))
        if not is_satisfiable(g):
            best[0] = max(best[0], refutation_level(g))
            return
        for j in range(i, len(order)):
            v = order[j]
            for val in (0, 1):
                go(apply_assignment({v: val}, g), j + 1)

    go(f, 0)
    return best[0]


def split_hardness_bound(f: ClauseSet, vs: frozenset[int] | set[int]) -> int:
    """Upper bound hd(F) <= |V| + max over total psi on V of hd(psi * F)."""
    vs = set(vs)
    worst = 0
    for psi in total_assignments(vs):
        worst = max(worst, hardness(apply_assignment(psi, f)).value)
    return len(vs) + worst


# ---------------------------------------------------------------------------
# prime implicates
# ---------------------------------------------------------------------------

def prime_implicates(f: ClauseSet, max_clauses: int = 10 ** 6) -> ClauseSet:
    """primec_0(F): resolution closure, keeping subsumption-minimal clauses.

    Returns {bot} for unsatisfiable F and the empty set for tautologies.
    """
    db: list[Clause] = []
    pending = deque(sorted(f, key=clause_key))
    queued: set[Clause] = set(pending)
    generated = 0
    while pending:
        c = pending.popleft()
        if not c:
            return BOT_SET
        if any(d <= c for d in db):
            continue
        db = [d for d in db if not c <= d]
        for d in db:
            r = _resolve(c, d)
            if r is not None and r not in queued:
                queued.add(r)
                pending.append(r)
                generated += 1
        db.append(c)
        if generated > max_clauses:
            raise SizeLimitExceeded("resolution clause budget exhausted")
    return frozenset(db)


def prime_implicates_bruteforce(f: ClauseSet, max_vars: int = 8) -> ClauseSet:
    """Independent oracle: all entailed clauses over var(F), minimized.

    Exponential scan of all 3^n candidate clauses; for cross-checking only.
    """
    vs = sorted(variables(f))
    if len(vs) > max_vars:
        raise SizeLimitExceeded(f"bruteforce prime implicates over {len(vs)} variables")
    implicates = []
    stack: list[tuple[int, tuple[int, ...]]] = [(0, ())]
    while stack:
        i, lits = stack.pop()
        if i == len(vs):
            c = frozenset(lits)
            if entails(f, c):
                implicates.append(c)
            continue
        v = vs[i]
        stack.append((i + 1, lits))
        stack.append((i + 1, lits + (v,)))
        stack.append((i + 1, lits + (-v,)))
    return frozenset(c for c in implicates
                     if not any(d < c for d in implicates))


def essential_prime_implicates(f: ClauseSet, max_clauses: int = 10 ** 6) -> ClauseSet:
    """Prime implicates whose removal from primec_0(F) loses equivalence.

    Every equivalent clause-set using subclauses of prime implicates needs at
    least this many clauses.
    """
    prime = prime_implicates(f, max_clauses)
    if prime == BOT_SET:
        return prime
    return frozenset(c for c in prime if not entails(prime - {c}, c))


def substitute(f: ClauseSet, x: int, y: int) -> ClauseSet:
    """F with literal x replaced by literal y (and bar x by bar y);
    clauses becoming tautological are dropped."""
    out = set()
    for c in f:
        c2 = frozenset(y if t == x else (-y if t == -x else t) for t in c)
        if any(-t in c2 for t in c2):
            continue
        out.add(c2)
    return frozenset(out)
