"""Simple labeled graphs: generators, induced subgraphs, independent sets,
edge-list and graph6 input/output.

Vertices are labeled 1..n on every public surface.
"""

from __future__ import annotations

import warnings


class GraphError(ValueError):
    pass


class Graph:
    """Immutable simple graph on vertices 1..n with an unordered edge set."""

    __slots__ = ("n", "edges", "_adj")

    def __init__(self, n, edges=()):
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        es = set()
        for e in edges:
            i, j = e
            if not (1 <= i <= n and 1 <= j <= n):
                raise GraphError(f"edge {e!r} out of range for n={n}")
            if i == j:
                raise GraphError(f"self-loop at vertex {i}")
            es.add((min(i, j), max(i, j)))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(es))
        adj = {v: set() for v in range(1, n + 1)}
        for i, j in es:
            adj[i].add(j)
            adj[j].add(i)
        object.__setattr__(self, "_adj", {v: frozenset(s) for v, s in adj.items()})

    def __setattr__(self, *a):
        raise AttributeError("Graph is immutable")

    def neighbors(self, v):
        return self._adj[v]

    def has_edge(self, i, j):
        return (min(i, j), max(i, j)) in self.edges

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={sorted(self.edges)})"


def make_cycle(n):
    """Cycle graph C_n, n >= 3."""
    if n < 3:
        raise GraphError("cycle graph needs n >= 3")
    return Graph(n, [(i, i % n + 1) for i in range(1, n + 1)])


def make_path(n):
    """Path graph L_n on n >= 1 vertices."""
    if n < 1:
        raise GraphError("path graph needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(1, n)])


def make_complete(n):
    """Complete graph K_n, n >= 1."""
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return Graph(n, [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)])


def make_empty(n):
    """Edgeless graph on n >= 1 vertices."""
    if n < 1:
        raise GraphError("empty graph needs n >= 1")
    return Graph(n, [])


def induced_subgraph(g, vertices):
    """Subgraph induced by `vertices`, relabeled 1..|J| in increasing
    original order."""
    vs = sorted(set(vertices))
    for v in vs:
        if not 1 <= v <= g.n:
            raise GraphError(f"vertex {v} out of range")
    index = {v: k + 1 for k, v in enumerate(vs)}
    edges = [(index[i], index[j]) for i, j in g.edges if i in index and j in index]
    return Graph(len(vs), edges)


def relabel(g, ordering):
    """Graph with vertex ordering[k-1] renamed to k.

    `ordering` is a permutation of 1..n; used to move a perfect elimination
    ordering into the standard 1..n labeling.
    """
    if sorted(ordering) != list(range(1, g.n + 1)):
        raise GraphError("ordering is not a permutation of 1..n")
    index = {v: k + 1 for k, v in enumerate(ordering)}
    return Graph(g.n, [(index[i], index[j]) for i, j in g.edges])


def enumerate_independent_sets(g):
    """All independent sets of g (including the empty set), sorted by size
    then lexicographically.

    Branch and bound over vertices: include/exclude each vertex in turn,
    pruning neighbors of included vertices.
    """
    out = []

    def rec(v, chosen, forbidden):
        if v > g.n:
            out.append(tuple(chosen))
            return
        rec(v + 1, chosen, forbidden)  # exclude v
        if v not in forbidden:
            chosen.append(v)
            rec(v + 1, chosen, forbidden | g.neighbors(v))
            chosen.pop()

    rec(1, [], frozenset())
    out.sort(key=lambda s: (len(s), s))
    return out


# --- edge-list format ------------------------------------------------------


def parse_edge_list(text):
    """Parse "n\\nu v\\nu v..." (1-based, whitespace separated) into a Graph.

    Duplicate edges are collapsed with a warning; self-loops are an error.
    """
    tokens = text.split()
    if not tokens:
        raise GraphError("empty edge-list input")
    try:
        nums = [int(t) for t in tokens]
    except ValueError as exc:
        raise GraphError(f"malformed token in edge list: {exc}") from None
    n, rest = nums[0], nums[1:]
    if len(rest) % 2 != 0:
        raise GraphError("odd number of vertex tokens after the count")
    pairs = list(zip(rest[::2], rest[1::2]))
    seen = set()
    for i, j in pairs:
        key = (min(i, j), max(i, j))
        if key in seen:
            warnings.warn(f"duplicate edge {key} collapsed", stacklevel=2)
        seen.add(key)
    return Graph(n, pairs)


def serialize_edge_list(g):
    lines = [str(g.n)]
    lines += [f"{i} {j}" for i, j in sorted(g.edges)]
    return "\n".join(lines) + "\n"


# --- graph6 format ---------------------------------------------------------


def _g6_checked(text):
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphError("empty graph6 input")
    return s


def parse_graph6(text):
    """Decode a graph in graph6 format (printable ASCII, n < 2^18)."""
    s = _g6_checked(text)
    data = [ord(c) - 63 for c in s]
    if any(b < 0 or b > 63 for b in data):
        raise GraphError("graph6 character out of range")
    if data[0] < 63:
        n, data = data[0], data[1:]
    elif len(data) >= 4 and data[1] < 63:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        data = data[4:]
    else:
        raise GraphError("graph6 sizes >= 2^18 not supported")
    bits = []
    for b in data:
        bits.extend((b >> k) & 1 for k in range(5, -1, -1))
    need = n * (n - 1) // 2
    if len(bits) < need:
        raise GraphError("graph6 string too short")
    edges = []
    k = 0
    for j in range(2, n + 1):
        for i in range(1, j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


def serialize_graph6(g):
    n = g.n
    if n >= 1 << 18:
        raise GraphError("graph6 sizes >= 2^18 not supported")
    if n < 63:
        head = chr(n + 63)
    else:
        head = "~" + "".join(chr(((n >> k) & 63) + 63) for k in (12, 6, 0))
    bits = []
    for j in range(2, n + 1):
        for i in range(1, j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    chars = []
    for k in range(0, len(bits), 6):
        b = 0
        for bit in bits[k : k + 6]:
            b = (b << 1) | bit
        chars.append(chr(b + 63))
    return head + "".join(chars)
