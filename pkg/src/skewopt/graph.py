"""Undirected simple graphs stored as per-vertex neighbor bitsets.

Vertices are ``0..n-1``.  Everything that prints labels for people goes
through the I/O layer, which shifts to 1-based ``v_1..v_n``.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence


def popcount(x: int) -> int:
    return bin(x).count("1")


def iter_bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


@dataclass(frozen=True)
class UndirectedGraph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise ValueError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"vertex {v} has a neighbor out of range")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for w in iter_bits(row):
                if not self.adj[w] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at ({v}, {w})")

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """All edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return tuple((u, v) for u in range(self.n) for v in iter_bits(self.adj[u]) if u < v)

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def degrees(self) -> list[int]:
        return [popcount(row) for row in self.adj]

    @property
    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def common_neighbors(self, u: int, v: int) -> int:
        """Bitset of common neighbors of ``u`` and ``v``."""
        return self.adj[u] & self.adj[v]

    def relabel(self, perm: Sequence[int]) -> UndirectedGraph:
        """Graph in which old vertex ``v`` becomes ``perm[v]``."""
        return build_graph(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    def __repr__(self):
        return f"UndirectedGraph(n={self.n}, m={self.m})"


@dataclass(frozen=True, order=True)
class PairParityViolation:
    u: int
    v: int
    common: int


class CliqueLevel(str, enum.Enum):
    HAS_K4 = "HAS_K4"
    HAS_K3_NO_K4 = "HAS_K3_NO_K4"
    TRIANGLE_FREE = "TRIANGLE_FREE"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> UndirectedGraph:
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if adj[u] >> v & 1:
            raise ValueError(f"duplicate edge ({min(u, v)}, {max(u, v)})")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return UndirectedGraph(n, tuple(adj))


def empty_graph(n: int) -> UndirectedGraph:
    return UndirectedGraph(n, (0,) * n)


def complete_graph(n: int) -> UndirectedGraph:
    return build_graph(n, combinations(range(n), 2))


def path_graph(n: int) -> UndirectedGraph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> UndirectedGraph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def even_neighborhood_check(g: UndirectedGraph) -> list[PairParityViolation]:
    """Pairs of distinct vertices with an odd number of common neighbors."""
    out = []
    for u in range(g.n):
        for v in range(u + 1, g.n):
            c = popcount(g.adj[u] & g.adj[v])
            if c & 1:
                out.append(PairParityViolation(u, v, c))
    return out


def has_even_neighborhoods(g: UndirectedGraph) -> bool:
    adj = g.adj
    return all(
        not popcount(adj[u] & adj[v]) & 1
        for u in range(g.n)
        for v in range(u + 1, g.n)
    )


def classify_clique_level(g: UndirectedGraph) -> CliqueLevel:
    has_triangle = False
    for u, v in g.edges:
        common = g.adj[u] & g.adj[v]
        if not common:
            continue
        has_triangle = True
        for w in iter_bits(common):
            if g.adj[w] & common:
                return CliqueLevel.HAS_K4
    return CliqueLevel.HAS_K3_NO_K4 if has_triangle else CliqueLevel.TRIANGLE_FREE


def components(g: UndirectedGraph) -> list[list[int]]:
    seen = 0
    out = []
    for s in range(g.n):
        if seen >> s & 1:
            continue
        comp = []
        seen |= 1 << s
        queue = deque([s])
        while queue:
            v = queue.popleft()
            comp.append(v)
            fresh = g.adj[v] & ~seen
            seen |= fresh
            queue.extend(iter_bits(fresh))
        out.append(sorted(comp))
    return out


def is_connected(g: UndirectedGraph) -> bool:
    return g.n > 0 and len(components(g)) == 1


def is_regular(g: UndirectedGraph, k: int) -> bool:
    return all(d == k for d in g.degrees())


def bfs_tree(g: UndirectedGraph, root: int = 0) -> tuple[list[int], list[int], list[int]]:
    """BFS from ``root`` visiting neighbors in ascending order.

    Returns ``(order, parent, depth)``; ``parent[root] == -1`` and unreached
    vertices keep parent and depth ``-1``.
    """
    parent = [-1] * g.n
    depth = [-1] * g.n
    depth[root] = 0
    order = [root]
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for w in iter_bits(g.adj[v]):
            if depth[w] < 0:
                depth[w] = depth[v] + 1
                parent[w] = v
                order.append(w)
                queue.append(w)
    return order, parent, depth


def disjoint_union(g1: UndirectedGraph, g2: UndirectedGraph) -> UndirectedGraph:
    shift = g1.n
    return UndirectedGraph(g1.n + g2.n, g1.adj + tuple(row << shift for row in g2.adj))


def induced_subgraph(g: UndirectedGraph, vertices: Sequence[int]) -> UndirectedGraph:
    index = {v: i for i, v in enumerate(vertices)}
    return build_graph(
        len(vertices),
        [(index[u], index[v]) for u, v in g.edges if u in index and v in index],
    )


def cartesian_product(g1: UndirectedGraph, g2: UndirectedGraph) -> UndirectedGraph:
    """Cartesian product with vertex ``(i, j)`` stored at ``i * g2.n + j``."""
    n2 = g2.n
    edges = []
    for i in range(g1.n):
        for a, b in g2.edges:
            edges.append((i * n2 + a, i * n2 + b))
    for a, b in g1.edges:
        for j in range(n2):
            edges.append((a * n2 + j, b * n2 + j))
    return build_graph(g1.n * n2, edges)


def hypercube(d: int) -> UndirectedGraph:
    """Q_d built as P2 □ (P2 □ ... P2); Q_0 is a single vertex."""
    g = empty_graph(1)
    p2 = path_graph(2)
    for _ in range(d):
        g = cartesian_product(p2, g)
    return g


def u_graph(n: int) -> UndirectedGraph:
    """U_n: cycles ``v_0..v_{n-1}`` (vertices 0..n-1) and ``u_0..u_{n-1}``
    (vertices n..2n-1) with ``v_i`` joined to ``u_{i-1}`` and ``u_{i+1}``."""
    if n < 3:
        raise ValueError("U_n needs n >= 3")
    edges = []
    for i in range(n):
        edges.append((i, (i + 1) % n))
        edges.append((n + i, n + (i + 1) % n))
        edges.append((i, n + (i - 1) % n))
        edges.append((i, n + (i + 1) % n))
    return build_graph(2 * n, edges)
