"""Simple graphs, orientations, weighted orientations and skew matrices.

Vertices are the integers ``0..n-1``.  Edges are stored as sorted pairs
``(u, v)`` with ``u < v`` in lexicographic order, so equal graphs have
identical representations.  An orientation is one bit per edge in
edge-list order: bit ``e`` clear means the arc runs ``u -> v``, set means
``v -> u``.
"""
from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from numbers import Rational


class GraphError(ValueError):
    """Raised when a graph-like object violates its construction invariants."""


def _as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, Rational):
        return Fraction(int(x.numerator), int(x.denominator))
    raise TypeError(f"expected an exact rational, got {type(x).__name__}: {x!r}")


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"vertex count must be non-negative, got {self.n}")
        canon = []
        for u, v in self.edges:
            u, v = int(u), int(v)
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={self.n}")
            canon.append((min(u, v), max(u, v)))
        canon.sort()
        for a, b in zip(canon, canon[1:]):
            if a == b:
                raise GraphError(f"duplicate edge {a}")
        object.__setattr__(self, "edges", tuple(canon))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}

    def index_of(self, u: int, v: int) -> int:
        return self.edge_index[(min(u, v), max(u, v))]

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edge_index

    def adjacency_matrix(self) -> list[list[int]]:
        a = [[0] * self.n for _ in range(self.n)]
        for u, v in self.edges:
            a[u][v] = a[v][u] = 1
        return a


@dataclass(frozen=True)
class OrientedGraph:
    graph: Graph
    bits: int = 0

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.graph.m:
            raise GraphError(
                f"direction bitmask {self.bits} has bits beyond edge count {self.graph.m}"
            )

    @property
    def direction(self) -> tuple[int, ...]:
        return tuple((self.bits >> e) & 1 for e in range(self.graph.m))

    @property
    def arcs(self) -> list[tuple[int, int]]:
        out = []
        for e, (u, v) in enumerate(self.graph.edges):
            out.append((v, u) if (self.bits >> e) & 1 else (u, v))
        return out

    def reversed(self) -> OrientedGraph:
        return OrientedGraph(self.graph, self.bits ^ ((1 << self.graph.m) - 1))


@dataclass(frozen=True)
class WeightedOrientedGraph:
    oriented: OrientedGraph
    weights: tuple[Fraction, ...] = ()

    def __post_init__(self):
        w = tuple(_as_rational(x) for x in self.weights)
        if len(w) != self.oriented.graph.m:
            raise GraphError(
                f"expected {self.oriented.graph.m} weights, got {len(w)}"
            )
        for e, x in enumerate(w):
            if x == 0:
                raise GraphError(f"weight of edge {e} is zero")
        object.__setattr__(self, "weights", w)

    @property
    def graph(self) -> Graph:
        return self.oriented.graph

    @property
    def n(self) -> int:
        return self.oriented.graph.n


@dataclass(frozen=True)
class SkewMatrix:
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(_as_rational(x) for x in row) for row in self.entries)
        n = len(rows)
        for i, row in enumerate(rows):
            if len(row) != n:
                raise GraphError(f"row {i} has length {len(row)}, expected {n}")
        for i in range(n):
            if rows[i][i] != 0:
                raise GraphError(f"nonzero diagonal entry at ({i}, {i})")
            for j in range(i + 1, n):
                if rows[j][i] != -rows[i][j]:
                    raise GraphError(f"entries ({i}, {j}) and ({j}, {i}) are not negatives")
        object.__setattr__(self, "entries", rows)

    @property
    def n(self) -> int:
        return len(self.entries)

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self.entries]


@dataclass(frozen=True)
class Cycle:
    """A simple cycle, stored from its smallest vertex toward the smaller neighbour."""

    vertices: tuple[int, ...]
    length: int = field(init=False, compare=False)

    def __post_init__(self):
        vs = tuple(int(v) for v in self.vertices)
        if len(vs) < 3:
            raise GraphError(f"a cycle needs at least 3 vertices, got {len(vs)}")
        if len(set(vs)) != len(vs):
            raise GraphError(f"repeated vertex in cycle {vs}")
        i = vs.index(min(vs))
        vs = vs[i:] + vs[:i]
        if vs[-1] < vs[1]:
            vs = (vs[0],) + tuple(reversed(vs[1:]))
        object.__setattr__(self, "vertices", vs)
        object.__setattr__(self, "length", len(vs))

    def __lt__(self, other):
        return (self.length, self.vertices) < (other.length, other.vertices)

    @property
    def steps(self) -> list[tuple[int, int]]:
        """Consecutive (from, to) pairs along the canonical traversal."""
        vs = self.vertices
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    @property
    def mask(self) -> int:
        out = 0
        for v in self.vertices:
            out |= 1 << v
        return out


def orient(g: Graph, arcs: Iterable[tuple[int, int]]) -> OrientedGraph:
    bits = 0
    seen = set()
    for u, v in arcs:
        key = (min(u, v), max(u, v))
        if key not in g.edge_index:
            raise GraphError(f"arc ({u}, {v}) is not an edge of the graph")
        if key in seen:
            raise GraphError(f"edge {key} oriented more than once")
        seen.add(key)
        if u > v:
            bits |= 1 << g.edge_index[key]
    missing = [e for e in g.edges if e not in seen]
    if missing:
        raise GraphError(f"no direction given for edges {missing}")
    return OrientedGraph(g, bits)


def skew_adjacency(og: OrientedGraph) -> SkewMatrix:
    n = og.graph.n
    a = [[0] * n for _ in range(n)]
    for u, v in og.arcs:
        a[u][v] = 1
        a[v][u] = -1
    return SkewMatrix(a)


def generalized_skew_adjacency(wog: WeightedOrientedGraph) -> SkewMatrix:
    n = wog.n
    zero = Fraction(0)
    a = [[zero] * n for _ in range(n)]
    for (u, v), w in zip(wog.oriented.arcs, wog.weights):
        a[u][v] = w
        a[v][u] = -w
    return SkewMatrix(a)


def from_skew_matrix(a: SkewMatrix | Sequence[Sequence]) -> WeightedOrientedGraph:
    """Weighted orientation whose generalized skew adjacency is ``a``.

    An arc ``i -> j`` carries weight ``a[i][j]`` whenever that entry is positive.
    """
    if not isinstance(a, SkewMatrix):
        a = SkewMatrix(a)
    arcs, weights = [], []
    for i in range(a.n):
        for j in range(i + 1, a.n):
            x = a.entries[i][j]
            if x > 0:
                arcs.append((i, j))
                weights.append(x)
            elif x < 0:
                arcs.append((j, i))
                weights.append(-x)
    g = Graph(a.n, [(u, v) for u, v in arcs])
    og = orient(g, arcs)
    by_edge = {(min(u, v), max(u, v)): w for (u, v), w in zip(arcs, weights)}
    return WeightedOrientedGraph(og, tuple(by_edge[e] for e in g.edges))


def enumerate_cycles(g: Graph) -> list[Cycle]:
    """Every simple cycle of ``g`` once, sorted by (length, vertex sequence)."""
    nbrs = g.neighbors
    out: list[Cycle] = []

    def extend(root: int, path: list[int], used: int):
        last = path[-1]
        for w in nbrs[last]:
            if w == root and len(path) >= 3 and path[1] < path[-1]:
                out.append(Cycle(tuple(path)))
            elif w > root and not (used >> w) & 1:
                path.append(w)
                extend(root, path, used | (1 << w))
                path.pop()

    for root in range(g.n):
        extend(root, [root], 1 << root)
    out.sort()
    return out


def components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp, stack = [], [s]
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in g.neighbors[u]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


def is_forest(g: Graph) -> bool:
    return g.m == g.n - len(components(g))


def blocks(g: Graph) -> list[tuple[tuple[int, ...], tuple[tuple[int, int], ...]]]:
    """Biconnected components as (vertices, edges), via DFS low-link.

    Isolated vertices form no block.  Output is sorted for determinism.
    """
    disc = [-1] * g.n
    low = [0] * g.n
    timer = 0
    edge_stack: list[tuple[int, int]] = []
    found = []

    for s in range(g.n):
        if disc[s] != -1:
            continue
        disc[s] = low[s] = timer
        timer += 1
        # iterative DFS: (vertex, parent, neighbour iterator)
        stack = [(s, -1, iter(g.neighbors[s]))]
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    edge_stack.append((u, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, u, iter(g.neighbors[w])))
                    advanced = True
                    break
                if w != parent and disc[w] < disc[u]:
                    edge_stack.append((u, w))
                    low[u] = min(low[u], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent == -1:
                continue
            low[parent] = min(low[parent], low[u])
            if low[u] >= disc[parent]:
                comp = []
                while True:
                    e = edge_stack.pop()
                    comp.append(e)
                    if e == (parent, u):
                        break
                es = tuple(sorted((min(a, b), max(a, b)) for a, b in comp))
                vs = tuple(sorted({x for e in es for x in e}))
                found.append((vs, es))
    found.sort()
    return found


def has_even_cycle(g: Graph) -> bool:
    """True iff some block is neither a single edge nor an odd cycle."""
    for vs, es in blocks(g):
        if len(es) == 1:
            continue
        if len(es) == len(vs) and len(vs) % 2 == 1:
            continue
        # an even cycle, or a block with more edges than vertices (always
        # contains two cycles through a common path, one of them even)
        return True
    return False


def bipartition(g: Graph) -> tuple[frozenset[int], frozenset[int]] | None:
    colour = [-1] * g.n
    for s in range(g.n):
        if colour[s] != -1:
            continue
        colour[s] = 0
        queue = [s]
        for u in queue:
            for w in g.neighbors[u]:
                if colour[w] == -1:
                    colour[w] = 1 - colour[u]
                    queue.append(w)
                elif colour[w] == colour[u]:
                    return None
    x = frozenset(v for v in range(g.n) if colour[v] == 0)
    y = frozenset(v for v in range(g.n) if colour[v] == 1)
    return x, y


def matching_counts(g: Graph) -> list[int]:
    """``[p(G,0), p(G,1), ...]`` up to ``n // 2``, by branching on the lowest free vertex."""
    nbrs = g.neighbors
    memo: dict[int, list[int]] = {}

    def count(free: int) -> list[int]:
        if free == 0:
            return [1]
        hit = memo.get(free)
        if hit is not None:
            return hit
        v = (free & -free).bit_length() - 1
        rest = free & ~(1 << v)
        res = list(count(rest))
        for w in nbrs[v]:
            if (rest >> w) & 1:
                sub = count(rest & ~(1 << w))
                if len(sub) + 1 > len(res):
                    res.extend([0] * (len(sub) + 1 - len(res)))
                for r, c in enumerate(sub):
                    res[r + 1] += c
        memo[free] = res
        return res

    res = count((1 << g.n) - 1)
    res = res + [0] * (g.n // 2 + 1 - len(res))
    return res[: g.n // 2 + 1]


def count_matchings(g: Graph, r: int) -> int:
    if r < 0:
        raise ValueError(f"r must be non-negative, got {r}")
    counts = matching_counts(g)
    return counts[r] if r < len(counts) else 0


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    shift = g1.n
    return Graph(g1.n + g2.n, list(g1.edges) + [(u + shift, v + shift) for u, v in g2.edges])


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Image of ``g`` under the vertex map ``v -> perm[v]``."""
    return Graph(g.n, [(perm[u], perm[v]) for u, v in g.edges])
