"""Simple undirected graphs on vertices 0..n-1, adjacency stored as one
Python-int bitmask per vertex. All operations are pure; Graph is immutable."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from itertools import combinations

from .errors import SizeGuardError
from .groups import FiniteGroup

_FULL_VALIDATION_LIMIT = 512
BRUTEFORCE_CONSTRUCTION_LIMIT = 32
CONNECTIVITY_ORACLE_LIMIT = 14
CHROMATIC_ORACLE_LIMIT = 14
ISOMORPHISM_LIMIT = 12


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise ValueError("adjacency length must equal vertex count")
        for v, mask in enumerate(self.adj):
            if mask >> self.n:
                raise ValueError(f"vertex {v} has a neighbor out of range")
            if (mask >> v) & 1:
                raise ValueError(f"self-loop at vertex {v}")
        # Symmetry is O(n^2) bit probes; skip for very large graphs, whose
        # only producers are the symmetric-by-construction builders below.
        if self.n <= _FULL_VALIDATION_LIMIT:
            for v in range(self.n):
                m = self.adj[v]
                while m:
                    b = m & -m
                    w = b.bit_length() - 1
                    if not (self.adj[w] >> v) & 1:
                        raise ValueError(f"asymmetric edge ({v}, {w})")
                    m ^= b

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edge list sorted lexicographically, u < v."""
        out = []
        for u in range(self.n):
            m = self.adj[u] >> (u + 1)
            v = u + 1
            while m:
                if m & 1:
                    out.append((u, v))
                m >>= 1
                v += 1
        return out


def _bits(mask: int):
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def graph_from_edges(n: int, edges) -> Graph:
    adj = [0] * n
    for u, v in edges:
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def star_graph(n: int) -> Graph:
    """K_{1,n}: center 0, leaves 1..n."""
    leaves = ((1 << n) - 1) << 1
    return Graph(n + 1, (leaves,) + tuple(1 for _ in range(n)))


def disjoint_union(a: Graph, b: Graph) -> Graph:
    adj = list(a.adj) + [m << a.n for m in b.adj]
    return Graph(a.n + b.n, tuple(adj))


def clique_plus_vertex_graph(m: int, k: int) -> Graph:
    """Clique on m+k vertices plus one extra vertex adjacent to the last k of
    them (so non-adjacent to the first m). Total m+k+1 vertices."""
    if m < 0 or k < 0:
        raise ValueError("clique parameters must be nonnegative")
    c = m + k
    full = (1 << c) - 1
    adj = [full ^ (1 << v) for v in range(c)]
    extra = ((1 << k) - 1) << m if k else 0
    for v in _bits(extra):
        adj[v] |= 1 << c
    adj.append(extra)
    return Graph(c + 1, tuple(adj))


def power_closure(g: FiniteGroup, x: int) -> frozenset[int]:
    """{x^m : 1 <= m <= n-1}. Equals <x> when the order of x is < n, and
    <x> minus the identity when x generates. Empty for the trivial group."""
    return frozenset(_bits(_closure_mask(g, x)))


def _closure_mask(g: FiniteGroup, x: int) -> int:
    n = g.n
    if g.kind == "cyclic":
        d = math.gcd(x, n)
        if d == 1 and n > 1:
            return ((1 << n) - 1) ^ 1
        if d == n:  # identity (or n == 1)
            return 1 if n > 1 else 0
        mask = 0
        for k in range(0, n, d):
            mask |= 1 << k
        return mask
    mask = 0
    y = x
    for _ in range(n - 1):
        mask |= 1 << y
        y = g.table[y][x]
    return mask


def strong_power_graph(g: FiniteGroup) -> Graph:
    """Distinct a, b are adjacent iff a^{m1} = b^{m2} for some
    1 <= m1, m2 < n; computed as intersection of power-closure bitsets."""
    n = g.n
    masks = [_closure_mask(g, x) for x in range(n)]
    adj = [0] * n
    for a in range(n):
        ma = masks[a]
        for b in range(a + 1, n):
            if ma & masks[b]:
                adj[a] |= 1 << b
                adj[b] |= 1 << a
    return Graph(n, tuple(adj))


def strong_power_graph_bruteforce(g: FiniteGroup) -> Graph:
    """Same graph by direct enumeration of the defining condition, one
    (m1, m2) pair at a time. Independent of the bitset route; O(n^4)."""
    n = g.n
    if n > BRUTEFORCE_CONSTRUCTION_LIMIT:
        raise SizeGuardError(
            f"strong_power_graph_bruteforce is bounded at order "
            f"{BRUTEFORCE_CONSTRUCTION_LIMIT}, got {n}"
        )
    powers = []
    for x in range(n):
        row = []
        y = x
        for _ in range(n - 1):
            row.append(y)
            y = g.op(y, x)
        powers.append(row)
    edges = []
    for a in range(n):
        for b in range(a + 1, n):
            if any(pa == pb for pa in powers[a] for pb in powers[b]):
                edges.append((a, b))
    return graph_from_edges(n, edges)


def degree_sequence(graph: Graph) -> list[int]:
    """Vertex degrees in ascending order."""
    return sorted(m.bit_count() for m in graph.adj)


def is_regular(graph: Graph) -> bool:
    return len({m.bit_count() for m in graph.adj}) <= 1


def is_complete(graph: Graph) -> bool:
    full = (1 << graph.n) - 1
    return all(m == full ^ (1 << v) for v, m in enumerate(graph.adj))


def _reach(adj, start: int, keep: int) -> int:
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= adj[v]
        nxt &= keep & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def _connected_on(adj, keep: int) -> bool:
    if keep == 0:
        return True
    start = (keep & -keep).bit_length() - 1
    return _reach(adj, start, keep) == keep


def connected_components(graph: Graph) -> list[list[int]]:
    """Vertex partition into components, each sorted, ordered by least vertex."""
    remaining = (1 << graph.n) - 1
    out = []
    while remaining:
        start = (remaining & -remaining).bit_length() - 1
        comp = _reach(graph.adj, start, remaining)
        out.append(sorted(_bits(comp)))
        remaining &= ~comp
    return out


def induced_subgraph(graph: Graph, subset) -> Graph:
    """Subgraph on the given vertices, relabeled 0..k-1 in sorted order."""
    vs = sorted(set(subset))
    for v in vs:
        if not 0 <= v < graph.n:
            raise ValueError(f"vertex {v} out of range")
    adj = []
    for u in vs:
        m = 0
        for j, v in enumerate(vs):
            if (graph.adj[u] >> v) & 1:
                m |= 1 << j
        adj.append(m)
    return Graph(len(vs), tuple(adj))


def vertex_connectivity_bruteforce(graph: Graph) -> int:
    """Smallest k such that deleting some k vertices disconnects the graph or
    leaves a single vertex; 0 for disconnected or trivial graphs. Checks all
    vertex subsets in increasing size, so bounded at 14 vertices."""
    n = graph.n
    if n > CONNECTIVITY_ORACLE_LIMIT:
        raise SizeGuardError(
            f"vertex_connectivity_bruteforce is bounded at {CONNECTIVITY_ORACLE_LIMIT} "
            f"vertices, got {n}"
        )
    full = (1 << n) - 1
    if n <= 1 or not _connected_on(graph.adj, full):
        return 0
    for k in range(1, n):
        for cut in combinations(range(n), k):
            keep = full
            for v in cut:
                keep ^= 1 << v
            if keep.bit_count() <= 1 or not _connected_on(graph.adj, keep):
                return k
    return n - 1


def _max_clique_size(adj, n: int) -> int:
    best = 0

    def extend(cand: int, size: int):
        nonlocal best
        if size + cand.bit_count() <= best:
            return
        if cand == 0:
            best = max(best, size)
            return
        v = (cand & -cand).bit_length() - 1
        extend(cand & adj[v], size + 1)          # take v
        extend(cand ^ (1 << v), size)            # skip v
    extend((1 << n) - 1, 0)
    return best


def _colorable(order, adj, k: int) -> bool:
    n = len(order)
    colors = [-1] * n

    def place(i: int, used: int) -> bool:
        if i == n:
            return True
        v = order[i]
        forbidden = 0
        for j in range(i):
            if (adj[v] >> order[j]) & 1:
                forbidden |= 1 << colors[j]
        limit = min(k, used + 1)
        for c in range(limit):
            if not (forbidden >> c) & 1:
                colors[i] = c
                if place(i + 1, max(used, c + 1)):
                    return True
        colors[i] = -1
        return False

    return place(0, 0)


def chromatic_number_exact(graph: Graph) -> int:
    """Exact chromatic number.

    Complete graphs and clique-plus-one-vertex graphs (the only shapes the
    strong power graph construction produces) get a closed-form answer at any
    size; anything else falls to branch-and-bound, bounded at 14 vertices.
    """
    n = graph.n
    if n == 0:
        return 0
    if is_complete(graph):
        return n
    for v in range(n):
        rest = [u for u in range(n) if u != v]
        if is_complete(induced_subgraph(graph, rest)):
            # v misses at least one vertex of the (n-1)-clique, so its color
            # can be reused.
            return n - 1
    if n > CHROMATIC_ORACLE_LIMIT:
        raise SizeGuardError(
            f"chromatic_number_exact is bounded at {CHROMATIC_ORACLE_LIMIT} vertices "
            f"for general graphs, got {n}"
        )
    lower = _max_clique_size(graph.adj, n)
    order = sorted(range(n), key=lambda v: -graph.adj[v].bit_count())
    for k in range(max(lower, 1), n + 1):
        if _colorable(order, graph.adj, k):
            return k
    return n


def _refine_labels(graph: Graph) -> list[int]:
    labels = [m.bit_count() for m in graph.adj]
    for _ in range(3):
        sig = [
            (labels[v], tuple(sorted(labels[w] for w in _bits(graph.adj[v]))))
            for v in range(graph.n)
        ]
        canon = {s: i for i, s in enumerate(sorted(set(sig)))}
        labels = [canon[s] for s in sig]
    return labels


def graph_isomorphic(a: Graph, b: Graph) -> bool:
    """Exact isomorphism test by label-refined backtracking; the search is
    bounded at 12 vertices per side, but structural resolutions that need no
    search (unequal sizes, identical adjacency, completeness) work at any
    size."""
    if a.n != b.n or a.edge_count() != b.edge_count():
        return False
    if a.adj == b.adj:
        return True
    ca, cb = is_complete(a), is_complete(b)
    if ca or cb:
        return ca and cb
    if a.n > ISOMORPHISM_LIMIT:
        raise SizeGuardError(
            f"graph_isomorphic search is bounded at {ISOMORPHISM_LIMIT} "
            f"vertices, got {a.n}"
        )
    la, lb = _refine_labels(a), _refine_labels(b)
    if sorted(la) != sorted(lb):
        return False
    n = a.n
    # Map a-vertices in order of rarest label first.
    rarity = {lab: la.count(lab) for lab in set(la)}
    order = sorted(range(n), key=lambda v: (rarity[la[v]], v))
    image = [-1] * n
    used = 0

    def assign(i: int) -> bool:
        nonlocal used
        if i == n:
            return True
        u = order[i]
        for v in range(n):
            if (used >> v) & 1 or lb[v] != la[u]:
                continue
            ok = True
            for j in range(i):
                w = order[j]
                if ((a.adj[u] >> w) & 1) != ((b.adj[v] >> image[w]) & 1):
                    ok = False
                    break
            if ok:
                image[u] = v
                used |= 1 << v
                if assign(i + 1):
                    return True
                used ^= 1 << v
                image[u] = -1
        return False

    return assign(0)


def graph_to_json(graph: Graph) -> str:
    return json.dumps({"n": graph.n, "edges": [[u, v] for u, v in graph.edges()]})


def graph_from_json(text: str) -> Graph:
    data = json.loads(text)
    if not isinstance(data, dict) or set(data) != {"n", "edges"}:
        raise ValueError("expected an object with keys 'n' and 'edges'")
    n = data["n"]
    if not isinstance(n, int) or n < 0:
        raise ValueError("'n' must be a nonnegative integer")
    edges = []
    for item in data["edges"]:
        u, v = item
        if not (isinstance(u, int) and isinstance(v, int) and u < v):
            raise ValueError(f"edge {item!r} must be [u, v] with u < v")
        edges.append((u, v))
    return graph_from_edges(n, edges)


def graph_to_dot(graph: Graph) -> str:
    lines = ["graph G {"]
    for v in range(graph.n):
        lines.append(f"  {v};")
    for u, v in graph.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
