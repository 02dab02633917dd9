"""Translations between DNF/XOR specifications and CNF representations.

The canonical translation `cant` introduces one selector variable per DNF
clause: selector implies each literal of its clause, the clause implies its
selector, and the long clause demands some selector.  `cantm` drops the
clause-to-selector direction, trading uniqueness of extensions for hardness
always <= 1.  XOR constraints are translated along a chain of fresh parity
variables, each link represented by its prime implicates.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .core import (
    BOT, BOT_SET, Clause, ClauseSet, SizeLimitExceeded, apply_assignment,
    clause, complement, entails, is_satisfiable, total_assignments, variables,
)
from .mps import DopedClauseSet
from .reductions import clause_key, essential_prime_implicates, reduce_r

from .core import falsifying_assignment


@dataclass
class TranslationResult:
    clauses: ClauseSet
    ordered: tuple[Clause, ...]               # deterministic emission order
    new_vars: dict[int, Clause]               # fresh variable -> source clause
    kind: str


def _dnf_order(dnf) -> list[Clause]:
    if isinstance(dnf, (set, frozenset)):
        return sorted((frozenset(c) for c in dnf), key=clause_key)
    return [frozenset(c) for c in dnf]


def cant(dnf, first_new_var: int | None = None) -> TranslationResult:
    """Canonical CNF translation of a DNF (sequence input fixes the clause
    order; fresh selector variables are numbered in that order)."""
    order = _dnf_order(dnf)
    for c in order:
        clause(*c)  # validation
    if not order:                      # empty disjunction: constant false
        return TranslationResult(BOT_SET, (BOT,), {}, "cant")
    v0 = (max((abs(x) for c in order for x in c), default=0) + 1
          if first_new_var is None else first_new_var)
    new_vars = {v0 + i: c for i, c in enumerate(order)}
    out: list[Clause] = []
    for i, c in enumerate(order):
        for x in sorted(c, key=lambda l: (abs(l), l)):
            out.append(frozenset({-(v0 + i), x}))
    for i, c in enumerate(order):
        out.append(frozenset({v0 + i}) | complement(c))
    out.append(frozenset(v0 + i for i in range(len(order))))
    seen: set[Clause] = set()
    ordered = tuple(c for c in out if not (c in seen or seen.add(c)))
    return TranslationResult(frozenset(ordered), ordered, new_vars, "cant")


def cantm(dnf, first_new_var: int | None = None) -> TranslationResult:
    """Reduced canonical translation: only selector-implies-literal clauses
    plus the long clause."""
    order = _dnf_order(dnf)
    for c in order:
        clause(*c)
    if not order:
        return TranslationResult(BOT_SET, (BOT,), {}, "cantm")
    v0 = (max((abs(x) for c in order for x in c), default=0) + 1
          if first_new_var is None else first_new_var)
    new_vars = {v0 + i: c for i, c in enumerate(order)}
    out: list[Clause] = []
    for i, c in enumerate(order):
        for x in sorted(c, key=lambda l: (abs(l), l)):
            out.append(frozenset({-(v0 + i), x}))
    out.append(frozenset(v0 + i for i in range(len(order))))
    seen: set[Clause] = set()
    ordered = tuple(c for c in out if not (c in seen or seen.add(c)))
    return TranslationResult(frozenset(ordered), ordered, new_vars, "cantm")


def complement_clauses(clauses) -> list[Clause]:
    """Clause-wise complement: as a DNF this is the negation of the CNF
    (and vice versa)."""
    if isinstance(clauses, (set, frozenset)):
        clauses = sorted(clauses, key=clause_key)
    return [complement(c) for c in clauses]


def negate_doped(d: DopedClauseSet) -> list[Clause]:
    """For an unsatisfiable hitting base F, the hitting DNF equivalent to
    D(F): complement the base literals of each clause, keep the doping
    literal.  Raises if the base is not unsatisfiable hitting."""
    base = sorted(d.doping_map, key=clause_key)
    for c1, c2 in itertools.combinations(base, 2):
        if not any(-x in c2 for x in c1):
            raise ValueError("base clause-set is not hitting")
    if is_satisfiable(frozenset(base)):
        raise ValueError("base clause-set is satisfiable")
    return [complement(c) | {d.doping_map[c]} for c in base]


# ---------------------------------------------------------------------------
# XOR
# ---------------------------------------------------------------------------

def _parity_link(a: int, b: int, c: int) -> list[Clause]:
    """primec_0(a xor b = c), four ternary clauses (a, b, c literals)."""
    return [frozenset({-a, b, c}), frozenset({a, -b, c}),
            frozenset({a, b, -c}), frozenset({-a, -b, -c})]


def xor_chain(lits: list[int], first_aux: int | None = None) -> TranslationResult:
    """CNF for x_1 xor ... xor x_n = 0 along a chain of parity variables.

    Each link is given by its prime implicates; the last link is the
    two-clause equality of the final parity variable with the last literal.
    """
    n = len(lits)
    if n == 0:
        return TranslationResult(frozenset(), (), {}, "xor")
    if n == 1:
        c = frozenset({-lits[0]})
        return TranslationResult(frozenset({c}), (c,), {}, "xor")
    if n == 2:
        out = (frozenset({lits[0], -lits[1]}), frozenset({-lits[0], lits[1]}))
        return TranslationResult(frozenset(out), out, {}, "xor")
    y0 = (max(abs(x) for x in lits) + 1) if first_aux is None else first_aux
    ys = list(range(y0, y0 + n - 2))           # y_2 .. y_{n-1}
    out: list[Clause] = []
    out += _parity_link(lits[0], lits[1], ys[0])
    for i in range(2, n - 1):
        out += _parity_link(ys[i - 2], lits[i], ys[i - 1])
    out += [frozenset({ys[-1], -lits[n - 1]}), frozenset({-ys[-1], lits[n - 1]})]
    new_vars = {y: frozenset(lits[:i + 2]) for i, y in enumerate(ys)}
    return TranslationResult(frozenset(out), tuple(out), new_vars, "xor")


def two_xor_system(n: int) -> ClauseSet:
    """The union of the chain translations of x_1 xor ... xor x_n = 0 and
    x_1 xor ... xor x_n = 1 with disjoint auxiliary variables: an
    unsatisfiable clause-set with 3n - 4 variables and hardness n."""
    if n < 3:
        raise ValueError("needs n >= 3")
    a = xor_chain(list(range(1, n + 1)), first_aux=n + 1)
    b = xor_chain(list(range(1, n)) + [-n], first_aux=2 * n - 1)
    return a.clauses | b.clauses


# ---------------------------------------------------------------------------
# k-bases
# ---------------------------------------------------------------------------

def _equivalent_to(f: ClauseSet, prime: list[Clause]) -> bool:
    return all(entails(f, c) for c in prime)


def _hardness_at_most(f: ClauseSet, prime: list[Clause], k: int) -> bool:
    """F in UC_k, given that primec_0(F) = prime: r_k must refute every
    instantiation falsifying a prime implicate."""
    return all(reduce_r(apply_assignment(falsifying_assignment(c), f), k) == BOT_SET
               for c in prime)


def k_base(prime: ClauseSet, k: int) -> ClauseSet:
    """A small equivalent subset F of the prime implicates with hd(F) <= k.

    Greedy two-phase search: start from the necessary (essential) prime
    implicates and add the rest in ascending size while equivalence or the
    hardness bound still fails; then drop clauses in descending size where
    possible.  Raises ValueError if even the full set exceeds hardness k.
    """
    order = sorted(prime, key=clause_key)
    necessary = {c for c in order if not entails(prime - {c}, c)}
    f = set(necessary)

    def ok(g: set[Clause]) -> bool:
        gs = frozenset(g)
        return _equivalent_to(gs, order) and _hardness_at_most(gs, order, k)

    for c in order:
        if c in f:
            continue
        if ok(f):
            break
        f.add(c)
    if not ok(f):
        raise ValueError(f"the function has no {k}-base: hardness of the "
                         "full prime-implicate set already exceeds the bound")
    for c in sorted(f, key=clause_key, reverse=True):
        if c in necessary:
            continue
        if ok(f - {c}):
            f.discard(c)
    return frozenset(f)


# ---------------------------------------------------------------------------
# uniqueness of extensions
# ---------------------------------------------------------------------------

def extension_property(fp: ClauseSet, original_vars, dnf=None,
                       max_vars: int = 18) -> str:
    """Classify how satisfying assignments of the represented function extend
    to the translation fp: "strong_uep", "uep", or "none".

    uep: every total satisfying assignment over the original variables has
    exactly one extension to the new variables satisfying fp.  strong uep
    (only checkable when the source DNF is supplied): already every partial
    assignment making some DNF clause true extends uniquely on the new
    variables alone.
    """
    orig = sorted(set(original_vars))
    aux = sorted(variables(fp) - set(orig))
    if len(orig) + len(aux) > max_vars:
        raise SizeLimitExceeded("extension_property enumeration too large")
    uep = True
    for phi in total_assignments(orig):
        g = apply_assignment(phi, fp)
        if BOT in g:
            continue
        n_ext = sum(1 for psi in total_assignments(aux)
                    if not apply_assignment(psi, g))
        if n_ext > 1:
            uep = False
            break
    strong = uep and dnf is not None
    if strong:
        order = _dnf_order(dnf)
        for alloc in itertools.product((None, 0, 1), repeat=len(orig)):
            phi = {v: b for v, b in zip(orig, alloc) if b is not None}
            if not any(all((x > 0) == bool(phi.get(abs(x))) and abs(x) in phi
                           for x in c) for c in order):
                continue  # phi satisfies no DNF clause
            n_ext = 0
            for psi in total_assignments(aux):
                img = apply_assignment({**phi, **psi}, fp)
                if not img:          # every clause of fp satisfied outright
                    n_ext += 1
            if n_ext != 1:
                strong = False
                break
    if strong:
        return "strong_uep"
    if uep:
        return "uep"
    return "none"
