"""Orientations, skew-adjacency matrices and the exact optimality test.

An orientation stores one sign per edge ``(u, v)`` with ``u < v``: ``+1`` is
the arc ``u -> v`` and ``-1`` the arc ``v -> u``.  The skew matrix then has
``S[u, v] = sign`` and ``S[v, u] = -sign``.

All optimality checks use exact integer arithmetic on ``S^T S``; only
:func:`skew_energy` touches floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

import numpy as np

from .graph import (
    UndirectedGraph,
    bfs_tree,
    build_graph,
    components,
    disjoint_union as _graph_union,
    induced_subgraph,
    is_connected,
    iter_bits,
)


@dataclass(frozen=True)
class Orientation:
    graph: UndirectedGraph
    signs: tuple[int, ...]

    def __post_init__(self):
        if len(self.signs) != self.graph.m:
            raise ValueError(f"{len(self.signs)} signs for {self.graph.m} edges")
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError("signs must be +1 or -1")

    @property
    def n(self) -> int:
        return self.graph.n

    @cached_property
    def _sign_of(self) -> dict[tuple[int, int], int]:
        return dict(zip(self.graph.edges, self.signs))

    def sign(self, u: int, v: int) -> int:
        """Entry ``s_uv`` of the skew matrix (0 for non-edges)."""
        if u < v:
            return self._sign_of.get((u, v), 0)
        return -self._sign_of.get((v, u), 0)

    def arcs(self) -> list[tuple[int, int]]:
        return [(u, v) if s > 0 else (v, u) for (u, v), s in zip(self.graph.edges, self.signs)]


@dataclass
class GramReport:
    gram: np.ndarray
    target_k: int
    off_diagonal_violations: list[tuple[int, int, int]] = field(default_factory=list)
    diagonal_violations: list[tuple[int, int]] = field(default_factory=list)
    is_optimum: bool = False


def orientation_from_signs(graph: UndirectedGraph, signs: Mapping[tuple[int, int], int]) -> Orientation:
    out = []
    for u, v in graph.edges:
        if (u, v) in signs:
            out.append(signs[(u, v)])
        elif (v, u) in signs:
            out.append(-signs[(v, u)])
        else:
            raise ValueError(f"no sign given for edge ({u}, {v})")
    if len(signs) != graph.m:
        raise ValueError("signs given for pairs that are not edges")
    return Orientation(graph, tuple(out))


def orientation_from_arcs(n: int, arcs: Iterable[tuple[int, int]]) -> Orientation:
    arcs = list(arcs)
    g = build_graph(n, arcs)
    return orientation_from_signs(g, {(u, v): 1 for u, v in arcs})


def from_skew_matrix(S) -> Orientation:
    S = np.asarray(S)
    n = S.shape[0]
    if S.shape != (n, n):
        raise ValueError("matrix must be square")
    if not np.array_equal(S, -S.T):
        raise ValueError("matrix is not skew-symmetric")
    if not np.isin(S, (-1, 0, 1)).all():
        raise ValueError("entries must lie in {-1, 0, 1}")
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if S[u, v]]
    g = build_graph(n, edges)
    return Orientation(g, tuple(int(S[u, v]) for u, v in g.edges))


def skew_matrix(o: Orientation) -> np.ndarray:
    S = np.zeros((o.n, o.n), dtype=np.int64)
    for (u, v), s in zip(o.graph.edges, o.signs):
        S[u, v] = s
        S[v, u] = -s
    return S


def gram(o: Orientation, k: int) -> GramReport:
    S = skew_matrix(o)
    G = S.T @ S
    off = [
        (u, v, int(G[u, v]))
        for u in range(o.n)
        for v in range(u + 1, o.n)
        if G[u, v] != 0
    ]
    diag = [(u, int(G[u, u])) for u in range(o.n) if G[u, u] != k]
    return GramReport(G, k, off, diag, not off and not diag)


def is_optimum(o: Orientation, k: int | None = None) -> bool:
    if k is None:
        k = o.graph.max_degree
    return gram(o, k).is_optimum


def skew_energy(o: Orientation) -> float:
    """Sum of singular values of ``S``.

    Taken from the SVD of ``S`` directly; square roots of the eigenvalues of
    ``S^T S`` lose about half the digits near zero singular values.
    """
    if o.n == 0:
        return 0.0
    S = skew_matrix(o).astype(float)
    return float(np.linalg.svd(S, compute_uv=False).sum())


def energy_bound(g: UndirectedGraph) -> float:
    return g.n * math.sqrt(g.max_degree)


def two_walk_balance(o: Orientation, u: int, v: int) -> int:
    """Positive minus negative walks of length two from ``u`` to ``v``."""
    if u == v:
        raise ValueError("two_walk_balance needs distinct vertices")
    return sum(o.sign(u, w) * o.sign(w, v) for w in iter_bits(o.graph.common_neighbors(u, v)))


def reverse_set(o: Orientation, vertices: Iterable[int]) -> Orientation:
    """Reverse every arc with exactly one end in ``vertices``.

    Equivalent to conjugating ``S`` by the diagonal matrix with ``-1`` at the
    given vertices; reversing at a vertex twice cancels.
    """
    flip = 0
    for v in vertices:
        if not 0 <= v < o.n:
            raise ValueError(f"vertex {v} out of range")
        flip ^= 1 << v
    signs = tuple(
        -s if ((flip >> u) ^ (flip >> v)) & 1 else s
        for (u, v), s in zip(o.graph.edges, o.signs)
    )
    return Orientation(o.graph, signs)


def reverse_at(o: Orientation, v: int) -> Orientation:
    return reverse_set(o, [v])


def normalize_switching(o: Orientation) -> Orientation:
    """Representative of the reversal class with every BFS-tree arc pointing
    from parent to child (root 0, neighbors taken in ascending order)."""
    g = o.graph
    if not is_connected(g):
        raise ValueError("normalize_switching needs a connected graph")
    order, parent, _ = bfs_tree(g)
    flipped = 0
    for c in order[1:]:
        p = parent[c]
        s = o.sign(p, c)
        if (flipped >> p ^ flipped >> c) & 1:
            s = -s
        if s < 0:
            flipped ^= 1 << c
    return reverse_set(o, iter_bits(flipped))


def switching_class_size(g: UndirectedGraph) -> int:
    """Number of distinct orientations reachable by reversals, 2^(n - c)."""
    return 2 ** (g.n - len(components(g)))


def disjoint_union(o1: Orientation, o2: Orientation) -> Orientation:
    g = _graph_union(o1.graph, o2.graph)
    shift = o1.n
    signs = dict(zip(o1.graph.edges, o1.signs))
    signs.update({(u + shift, v + shift): s for (u, v), s in zip(o2.graph.edges, o2.signs)})
    return orientation_from_signs(g, signs)


def restrict(o: Orientation, vertices: Sequence[int]) -> Orientation:
    """Orientation induced on ``vertices`` (relabeled ``0..len-1`` in order)."""
    sub = induced_subgraph(o.graph, vertices)
    return Orientation(sub, tuple(o.sign(vertices[a], vertices[b]) for a, b in sub.edges))


def relabel(o: Orientation, perm: Sequence[int]) -> Orientation:
    """Orientation in which old vertex ``v`` becomes ``perm[v]``."""
    arcs = [(perm[a], perm[b]) for a, b in o.arcs()]
    return orientation_from_arcs(o.n, arcs)
