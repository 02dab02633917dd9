"""Trigger hypergraphs over prime implicates, and lower-bound certificates.

For a set P of prime implicates and a bound k, the hyperedge of C collects
the implicates compatible with C (no clash with the complement of C) that
reach C by forgetting at most k literals.  Every equivalent clause-set of
asymmetric width <= k must hit every such edge, so the transversal number
tau (and hence the matching number nu) lower-bounds its clause count.

For doped extremal trees the certificates of Sperner type are produced
directly from leaf sets; the full hypergraph is never materialized.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

from .core import Clause, ClauseSet, complement
from .reductions import clause_key
from .trees import Tree, leaf_count, inner_count, tree_clauses


@dataclass
class TriggerHypergraph:
    k: int
    vertices: tuple[Clause, ...]
    edges: dict[Clause, frozenset[Clause]]    # vertex C -> its hyperedge E^k_C


def in_hyperedge(cp: Clause, c: Clause, k: int) -> bool:
    """cp in E^k_c: compatible with c and at most k literals outside c."""
    return not (cp & complement(c)) and len(cp - c) <= k


def hyperedge(p: ClauseSet, c: Clause, k: int) -> frozenset[Clause]:
    return frozenset(cp for cp in p if in_hyperedge(cp, c, k))


def trigger_hypergraph(p: ClauseSet, k: int) -> TriggerHypergraph:
    vertices = tuple(sorted(p, key=clause_key))
    return TriggerHypergraph(k, vertices, {c: hyperedge(p, c, k) for c in vertices})


def _edge_list(h: TriggerHypergraph) -> list[frozenset[Clause]]:
    """Distinct edges, inclusion-minimized (a transversal of the minimal
    edges hits all of them; a matching prefers small edges anyway)."""
    edges = sorted(set(h.edges.values()), key=lambda e: (len(e), sorted(map(clause_key, e))))
    out: list[frozenset[Clause]] = []
    for e in edges:
        if not any(f <= e for f in out):
            out.append(e)
    return out


def transversal_number(h: TriggerHypergraph) -> tuple[int, frozenset[Clause]]:
    """Exact minimum hitting set over the hyperedges, by branch and bound."""
    edges = _edge_list(h)
    if any(not e for e in edges):
        raise ValueError("empty hyperedge cannot be hit")
    best_set = _greedy_transversal(edges)
    best = [len(best_set), best_set]

    def lower_bound(rem: list[frozenset[Clause]]) -> int:
        lb, used = 0, set()
        for e in rem:
            if not (e & used):
                lb += 1
                used |= e
        return lb

    def go(rem: list[frozenset[Clause]], chosen: set[Clause]) -> None:
        rem = [e for e in rem if not (e & chosen)]
        if not rem:
            if len(chosen) < best[0]:
                best[0], best[1] = len(chosen), frozenset(chosen)
            return
        if len(chosen) + lower_bound(rem) >= best[0]:
            return
        e = min(rem, key=lambda e: (len(e), sorted(map(clause_key, e))))
        for v in sorted(e, key=clause_key):
            go(rem, chosen | {v})

    go(edges, set())
    return best[0], best[1]


def _greedy_transversal(edges: list[frozenset[Clause]]) -> frozenset[Clause]:
    chosen: set[Clause] = set()
    rem = list(edges)
    while rem:
        counts: dict[Clause, int] = {}
        for e in rem:
            for v in e:
                counts[v] = counts.get(v, 0) + 1
        v = max(sorted(counts, key=clause_key), key=lambda v: counts[v])
        chosen.add(v)
        rem = [e for e in rem if v not in e]
    return frozenset(chosen)


def matching_number(h: TriggerHypergraph) -> tuple[int, tuple[frozenset[Clause], ...]]:
    """Exact maximum number of pairwise disjoint hyperedges."""
    edges = sorted(set(h.edges.values()), key=lambda e: (len(e), sorted(map(clause_key, e))))
    best: list = [0, ()]

    def go(i: int, used: frozenset[Clause], picked: tuple) -> None:
        if len(picked) > best[0]:
            best[0], best[1] = len(picked), picked
        if len(picked) + (len(edges) - i) <= best[0]:
            return
        for j in range(i, len(edges)):
            e = edges[j]
            if not (e & used):
                go(j + 1, used | e, picked + (e,))

    go(0, frozenset(), ())
    return best[0], best[1]


# ---------------------------------------------------------------------------
# closed-form prime implicates of doped trees, and Sperner certificates
# ---------------------------------------------------------------------------

def _node_masks(t: Tree) -> tuple[list[tuple[int, int, int]], int]:
    """Per inner node (var, left leaf mask, right leaf mask); plus leaf count.
    Leaf i (1-based, left to right) is bit i-1."""
    masks: list[tuple[int, int, int]] = []
    counter = [0]

    def walk(s: Tree) -> int:
        if s.is_leaf:
            m = 1 << counter[0]
            counter[0] += 1
            return m
        lm = walk(s.left)
        rm = walk(s.right)
        masks.append((s.var, lm, rm))
        return lm | rm

    walk(t)
    return masks, counter[0]


def doped_tree_implicates(t: Tree, first_doping_var: int | None = None):
    """Yield (leaf mask, C_V) for every non-empty leaf set V: exactly the
    prime implicates of dope(smuo(T)), 2^leaves - 1 in total."""
    masks, nl = _node_masks(t)
    u0 = (inner_count(t) + 1) if first_doping_var is None else first_doping_var
    for mv in range(1, 1 << nl):
        lits = [u0 + i for i in range(nl) if mv >> i & 1]
        for v, lm, rm in masks:
            if mv & lm and not mv & rm:
                lits.append(v)
            elif mv & rm and not mv & lm:
                lits.append(-v)
        yield mv, frozenset(lits)


@dataclass
class DisjointEdgeCertificate:
    """Pairwise disjoint trigger hyperedges of dope(smuo(T)).

    Edge i belongs to the implicate of leaf_sets[i] (clauses[i]); members are
    given as leaf masks indexing the implicate family.  Any width-k equivalent
    representation needs at least len(leaf_sets) clauses.
    """
    k: int
    leaf_sets: tuple[frozenset[int], ...]
    clauses: tuple[Clause, ...]
    members: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.leaf_sets)

    def to_json(self) -> str:
        return json.dumps({
            "k": self.k,
            "size": self.size,
            "edges": [{
                "leaf_set": sorted(v),
                "clause": sorted(c, key=lambda l: (abs(l), l)),
                "member_leaf_masks": list(ms),
            } for v, c, ms in zip(self.leaf_sets, self.clauses, self.members)],
        }, indent=2)


def _depth_k_leaf_blocks(t: Tree, k: int) -> list[list[int]]:
    """Leaf numbers of each depth-k subtree, left to right."""
    blocks: list[list[int]] = []
    counter = [0]

    def walk(s: Tree, d: int) -> None:
        if d == k:
            lo = counter[0] + 1
            counter[0] += leaf_count(s)
            blocks.append(list(range(lo, counter[0] + 1)))
            return
        if s.is_leaf:
            raise ValueError(f"tree has a leaf above depth {k}")
        walk(s.left, d + 1)
        walk(s.right, d + 1)

    walk(t, 0)
    return blocks


def depth_k_incomparable_family(t: Tree, k: int) -> DisjointEdgeCertificate:
    """A maximal family of leaf sets incomparable on every depth-k subtree,
    with the pairwise disjointness of their hyperedges checked explicitly.

    Sperner construction: take all floor(m/2)-subsets of the leaves of a
    minimal depth-k subtree (m leaves) and transport them injectively into
    every other depth-k subtree.
    """
    blocks = _depth_k_leaf_blocks(t, k)
    m = min(len(b) for b in blocks)
    r = m // 2
    base_idx = min(range(len(blocks)), key=lambda i: len(blocks[i]))
    base_subsets = list(itertools.combinations(blocks[base_idx], r))
    leaf_sets = []
    for pos, v0 in enumerate(base_subsets):
        v = set(v0)
        for i, b in enumerate(blocks):
            if i == base_idx:
                continue
            v |= set(next(itertools.islice(itertools.combinations(b, r), pos, None)))
        leaf_sets.append(frozenset(v))

    implicates = list(doped_tree_implicates(t))
    edge_clauses = []
    members = []
    for v in leaf_sets:
        mask = 0
        for i in v:
            mask |= 1 << (i - 1)
        c = implicates[mask - 1][1]
        comp_c = complement(c)
        members.append(tuple(mv for mv, cp in implicates
                             if not (cp & comp_c) and len(cp - c) <= k))
        edge_clauses.append(c)
    # explicit pairwise disjointness check
    for (i, a), (j, b) in itertools.combinations(enumerate(members), 2):
        inter = set(a) & set(b)
        if inter:
            raise AssertionError(f"hyperedges {i} and {j} share members {sorted(inter)}")
    return DisjointEdgeCertificate(k, tuple(leaf_sets), tuple(edge_clauses), tuple(members))
