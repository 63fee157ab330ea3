"""Chordality via maximum cardinality search, perfect elimination orderings
(reverse convention: earlier-ordered neighbors of each vertex form a clique),
chordless-cycle witnesses, and the upper-triangular Nahm matrix of a graph.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .graph import Graph, GraphError, induced_subgraph


@dataclass(frozen=True)
class PeoResult:
    """Either a perfect elimination ordering or a chordless-cycle witness."""

    ordering: tuple | None = None
    witness: tuple | None = None

    @property
    def is_chordal(self):
        return self.ordering is not None


def verify_peo(g, ordering):
    """True iff for every k the prior-ordered neighbors of ordering[k]
    are pairwise adjacent."""
    ordering = list(ordering)
    if sorted(ordering) != list(range(1, g.n + 1)):
        raise GraphError("ordering is not a permutation of 1..n")
    seen = set()
    for v in ordering:
        prior = [u for u in g.neighbors(v) if u in seen]
        for a, b in itertools.combinations(prior, 2):
            if not g.has_edge(a, b):
                return False
        seen.add(v)
    return True


def _mcs_order(g):
    """Maximum cardinality search; ties broken by lowest label.

    The selection order itself is returned: for a chordal graph it is a
    perfect elimination ordering in the prior-neighbors-clique convention.
    """
    weight = {v: 0 for v in range(1, g.n + 1)}
    order = []
    remaining = set(weight)
    while remaining:
        v = max(remaining, key=lambda u: (weight[u], -u))
        order.append(v)
        remaining.remove(v)
        for u in g.neighbors(v):
            if u in remaining:
                weight[u] += 1
    return order


def is_induced_cycle(g, vertices):
    """True iff `vertices` induce a chordless cycle (length >= 3)."""
    vs = list(vertices)
    if len(vs) < 3:
        return False
    sub = induced_subgraph(g, vs)
    if len(sub.edges) != sub.n:
        return False
    if any(len(sub.neighbors(v)) != 2 for v in range(1, sub.n + 1)):
        return False
    # connectivity: walk the 2-regular graph
    seen = {1}
    frontier = [1]
    while frontier:
        frontier = [
            u for v in frontier for u in sub.neighbors(v) if u not in seen
        ]
        seen.update(frontier)
    return len(seen) == sub.n


def _chordless_cycle_brute(g):
    """Brute-force search for an induced cycle of length >= 4."""
    for size in range(4, g.n + 1):
        for vs in itertools.combinations(range(1, g.n + 1), size):
            if is_induced_cycle(g, vs):
                return vs
    return None


def _extract_witness(g, ordering, bad_index):
    """Induced chordless cycle through the first vertex failing verification."""
    pos = {v: k for k, v in enumerate(ordering)}
    v = ordering[bad_index]
    prior = [u for u in g.neighbors(v) if pos[u] < bad_index]
    for a, b in itertools.combinations(sorted(prior), 2):
        if g.has_edge(a, b):
            continue
        # shortest a-b path avoiding v and the rest of N(v)
        blocked = (g.neighbors(v) | {v}) - {a, b}
        parent = {a: None}
        queue = [a]
        while queue and b not in parent:
            nxt = []
            for u in queue:
                for w in g.neighbors(u):
                    if w not in parent and w not in blocked:
                        parent[w] = u
                        nxt.append(w)
            queue = nxt
        if b not in parent:
            continue
        path = []
        u = b
        while u is not None:
            path.append(u)
            u = parent[u]
        cycle = tuple(sorted(path + [v]))
        if is_induced_cycle(g, cycle) and len(cycle) >= 4:
            return cycle
    if g.n <= 12:
        return _chordless_cycle_brute(g)
    return None


def find_peo(g):
    """Perfect elimination ordering of g, or a chordless-cycle witness."""
    ordering = _mcs_order(g)
    pos = {v: k for k, v in enumerate(ordering)}
    seen = set()
    for k, v in enumerate(ordering):
        prior = [u for u in g.neighbors(v) if u in seen]
        for a, b in itertools.combinations(prior, 2):
            if not g.has_edge(a, b):
                witness = _extract_witness(g, ordering, k)
                if witness is None:
                    raise GraphError("failed to extract a chordless-cycle witness")
                return PeoResult(witness=tuple(witness))
        seen.add(v)
    return PeoResult(ordering=tuple(ordering))


def is_chordal(g):
    return find_peo(g).is_chordal


def nahm_matrix(g):
    """Upper-triangular 0/1 matrix with unit diagonal: a_{i,j} = 1 iff i = j
    or (i < j and i ~ j).  Rows as a tuple of tuples."""
    a = [[0] * g.n for _ in range(g.n)]
    for i in range(1, g.n + 1):
        a[i - 1][i - 1] = 1
    for i, j in g.edges:
        a[i - 1][j - 1] = 1
    return tuple(tuple(row) for row in a)
