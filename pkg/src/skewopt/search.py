"""Search engines.

``find_optimum_orientation`` decides whether a connected k-regular graph has
an orientation with ``S^T S = kI``.  Reversals let us fix every edge of a BFS
spanning tree to point away from the root, so only the ``m - n + 1``
non-tree edges are branched on.  Each vertex pair keeps the signed sum of its
decided 2-paths and the number still open; a pair that can no longer reach
zero prunes, and a pair whose open paths must all take one sign forces any
edge that is the last open edge on one of those paths.

``iter_regular_graphs`` generates k-regular graphs row by row in the
adjacency matrix, keeping only labelings that could be the lexicographically
largest one (row 0 is ``0 1..1 0..0``, columns that look identical so far
get their ones first, and every vertex has an earlier neighbor).  With the
even-neighborhood filter on, each completed row must share an even number of
neighbors with every earlier row and with every vertex already at full
degree.  Survivors are deduplicated by canonical form.
"""

from __future__ import annotations

import enum
import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numpy as np

from .canon import canonical_form
from .graph import (
    CliqueLevel,
    UndirectedGraph,
    bfs_tree,
    classify_clique_level,
    even_neighborhood_check,
    is_connected,
    is_regular,
    iter_bits,
    popcount,
)
from .oriented import Orientation, gram

log = logging.getLogger(__name__)


class Outcome(str, enum.Enum):
    FOUND = "FOUND"
    NONE = "NONE"
    LIMIT = "LIMIT"


class SearchLimitExceeded(RuntimeError):
    pass


@dataclass
class SearchCertificate:
    outcome: Outcome
    witness: Orientation | None
    nodes_explored: int
    classes_covered: int | None
    cycle_space_dim: int
    wall_time: float
    witnesses: list[Orientation] = field(default_factory=list)


class _OrientationSearch:
    def __init__(self, g: UndirectedGraph, max_nodes: int | None):
        self.g = g
        self.max_nodes = max_nodes
        self.edges = list(g.edges)
        self.eidx = {e: i for i, e in enumerate(self.edges)}
        m = len(self.edges)

        order, parent, depth = bfs_tree(g)
        self.tree = []
        for c in order[1:]:
            p = parent[c]
            e = self.eidx[(min(p, c), max(p, c))]
            self.tree.append((e, 1 if p < c else -1))
        tree_set = {e for e, _ in self.tree}
        self.vars = sorted(
            (i for i in range(m) if i not in tree_set),
            key=lambda i: (min(depth[self.edges[i][0]], depth[self.edges[i][1]]), self.edges[i]),
        )

        # 2-paths u - w - v, sign = c * x[e1] * x[e2]
        self.p_pair: list[int] = []
        self.p_e1: list[int] = []
        self.p_e2: list[int] = []
        self.p_c: list[int] = []
        self.pair_paths: list[list[int]] = []
        self.edge_paths: list[list[int]] = [[] for _ in range(m)]
        adj = g.adj
        for u in range(g.n):
            for v in range(u + 1, g.n):
                common = adj[u] & adj[v]
                if not common:
                    continue
                q = len(self.pair_paths)
                plist = []
                for w in iter_bits(common):
                    e1 = self.eidx[(min(u, w), max(u, w))]
                    e2 = self.eidx[(min(w, v), max(w, v))]
                    c = (1 if u < w else -1) * (1 if w < v else -1)
                    pid = len(self.p_pair)
                    self.p_pair.append(q)
                    self.p_e1.append(e1)
                    self.p_e2.append(e2)
                    self.p_c.append(c)
                    plist.append(pid)
                    self.edge_paths[e1].append(pid)
                    self.edge_paths[e2].append(pid)
                self.pair_paths.append(plist)

        self.x = [0] * m
        self.p_open = [2] * len(self.p_pair)
        self.pair_sum = [0] * len(self.pair_paths)
        self.pair_open = [len(pl) for pl in self.pair_paths]
        self.trail: list[int] = []
        self.nodes = 0

    def _set(self, e: int, val: int, dirty: list[int]):
        self.x[e] = val
        self.trail.append(e)
        x = self.x
        for pid in self.edge_paths[e]:
            self.p_open[pid] -= 1
            q = self.p_pair[pid]
            if self.p_open[pid] == 0:
                self.pair_sum[q] += self.p_c[pid] * x[self.p_e1[pid]] * x[self.p_e2[pid]]
                self.pair_open[q] -= 1
            dirty.append(q)

    def _undo(self, mark: int):
        x = self.x
        while len(self.trail) > mark:
            e = self.trail.pop()
            for pid in self.edge_paths[e]:
                if self.p_open[pid] == 0:
                    q = self.p_pair[pid]
                    self.pair_sum[q] -= self.p_c[pid] * x[self.p_e1[pid]] * x[self.p_e2[pid]]
                    self.pair_open[q] += 1
                self.p_open[pid] += 1
            x[e] = 0

    def _assign(self, e: int, val: int) -> bool:
        """Set ``x[e]`` and propagate to a fixpoint; False on conflict."""
        dirty: list[int] = []
        self._set(e, val, dirty)
        return self._propagate(dirty)

    def _propagate(self, dirty: list[int]) -> bool:
        x = self.x
        while dirty:
            q = dirty.pop()
            s, k = self.pair_sum[q], self.pair_open[q]
            if abs(s) > k or (s + k) & 1:
                return False
            if k == 0 or abs(s) != k:
                continue
            want = -1 if s > 0 else 1
            for pid in self.pair_paths[q]:
                if self.p_open[pid] != 1:
                    continue
                e1, e2 = self.p_e1[pid], self.p_e2[pid]
                f, d = (e1, e2) if x[e1] == 0 else (e2, e1)
                if x[f] != 0:
                    continue
                self._set(f, want * self.p_c[pid] * x[d], dirty)
        return True

    def run(self, find_all: bool) -> tuple[bool, list[list[int]]]:
        solutions: list[list[int]] = []
        dirty: list[int] = []
        for e, s in self.tree:
            self._set(e, s, dirty)
        # pairs with no 2-paths decided yet still need the parity check
        dirty.extend(range(len(self.pair_paths)))
        if not self._propagate(dirty):
            self.nodes = 1
            return False, solutions

        def dfs(pos: int) -> bool:
            self.nodes += 1
            if self.max_nodes is not None and self.nodes > self.max_nodes:
                raise SearchLimitExceeded(self.nodes)
            while pos < len(self.vars) and self.x[self.vars[pos]] != 0:
                pos += 1
            if pos == len(self.vars):
                solutions.append(list(self.x))
                return not find_all
            e = self.vars[pos]
            for val in (1, -1):
                mark = len(self.trail)
                if self._assign(e, val) and dfs(pos + 1):
                    return True
                self._undo(mark)
            return False

        dfs(0)
        return bool(solutions), solutions


def find_optimum_orientation(
    g: UndirectedGraph,
    k: int,
    *,
    find_all: bool = False,
    max_nodes: int | None = None,
) -> SearchCertificate:
    """Exhaustive search over switching classes for ``S^T S = kI``.

    Returns the first witness in variable order (``+1`` tried before ``-1``),
    or a NONE certificate covering all ``2^(m-n+1)`` classes.  With
    ``find_all`` every normalized optimum orientation is collected.
    """
    if not is_connected(g):
        raise ValueError("orientation search needs a connected graph")
    if not is_regular(g, k):
        raise ValueError(f"graph is not {k}-regular")
    t0 = time.perf_counter()
    dim = g.m - g.n + 1
    if even_neighborhood_check(g):
        return SearchCertificate(Outcome.NONE, None, 0, 2**dim, dim, time.perf_counter() - t0)

    s = _OrientationSearch(g, max_nodes)
    try:
        found, sols = s.run(find_all)
    except SearchLimitExceeded:
        return SearchCertificate(Outcome.LIMIT, None, s.nodes, None, dim, time.perf_counter() - t0)
    elapsed = time.perf_counter() - t0
    if not found:
        return SearchCertificate(Outcome.NONE, None, s.nodes, 2**dim, dim, elapsed)
    witnesses = [Orientation(g, tuple(x)) for x in sols]
    for w in witnesses:
        if not gram(w, k).is_optimum:
            raise AssertionError("search produced a non-optimum witness")
    return SearchCertificate(Outcome.FOUND, witnesses[0], s.nodes, None, dim, elapsed, witnesses if find_all else [])


@dataclass
class BruteForceResult:
    witness: Orientation | None
    optimum_count: int
    total: int
    optimum: list[Orientation] = field(default_factory=list)


def brute_force_orientations(
    g: UndirectedGraph, k: int, *, collect: bool = False, stop_at_first: bool = False, chunk: int = 1 << 14
) -> BruteForceResult:
    """Try all ``2^m`` orientations, checking ``S^T S == kI`` entrywise.

    Orientation ``i`` gives edge ``e`` the sign ``-1`` when bit ``e`` of ``i``
    is set.  No switching quotient and no pruning.
    """
    m, n = g.m, g.n
    total = 1 << m
    us = np.array([u for u, _ in g.edges], dtype=np.intp)
    vs = np.array([v for _, v in g.edges], dtype=np.intp)
    target = k * np.eye(n, dtype=np.int32)
    bits = np.arange(m, dtype=np.int64)
    witness = None
    count = 0
    found: list[Orientation] = []
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        signs = (1 - 2 * ((idx[:, None] >> bits) & 1)).astype(np.int32)
        S = np.zeros((len(idx), n, n), dtype=np.int32)
        S[:, us, vs] = signs
        S[:, vs, us] = -signs
        G = np.matmul(S.transpose(0, 2, 1), S)
        ok = np.all(G == target, axis=(1, 2))
        hits = np.flatnonzero(ok)
        count += len(hits)
        if len(hits):
            if witness is None:
                witness = Orientation(g, tuple(int(s) for s in signs[hits[0]]))
            if collect:
                found.extend(Orientation(g, tuple(int(s) for s in signs[h])) for h in hits)
            if stop_at_first:
                break
    return BruteForceResult(witness, count, total, found)


# -- enumeration --------------------------------------------------------------

# (k, n) limits measured on a laptop-class core; beyond them use force=True
EVEN_NEIGHBORHOOD_MAX_N = {1: 64, 2: 64, 3: 40, 4: 28, 5: 24, 6: 20}
GENERAL_MAX_N = 10


def within_feasibility_bound(k: int, n: int, even_neighborhood: bool = True) -> bool:
    if even_neighborhood:
        return n <= EVEN_NEIGHBORHOOD_MAX_N.get(k, 16)
    return n <= GENERAL_MAX_N


def iter_regular_graphs(
    k: int, n: int, *, even_neighborhood: bool = True, connected: bool = True
) -> Iterator[UndirectedGraph]:
    """Labeled k-regular graphs on ``n`` vertices covering every isomorphism
    class at least once (duplicates possible; see :func:`enumerate_regular`)."""
    if k < 0 or n <= 0 or k >= n or (k * n) % 2:
        if n == 1 and k == 0:
            yield UndirectedGraph(1, (0,))
        return
    adj = [0] * n
    deg = [0] * n

    def closed(v: int) -> bool:
        return deg[v] == k

    def parity_ok(fresh: list[int], upto: int) -> bool:
        # every vertex at full degree has its whole neighborhood fixed
        done = [v for v in range(n) if v <= upto or closed(v)]
        for a in fresh:
            ra = adj[a]
            for b in done:
                if b != a and popcount(ra & adj[b]) & 1:
                    return False
        return True

    def rec(i: int):
        if i == n:
            yield UndirectedGraph(n, tuple(adj))
            return
        need = k - deg[i]
        low = (1 << i) - 1
        classes: dict[int, list[int]] = {}
        for j in range(i + 1, n):
            if deg[j] < k:
                classes.setdefault(adj[j] & low, []).append(j)
        cls = list(classes.values())
        capacity = sum(len(c) for c in cls)
        if need > capacity:
            return

        def choices(ci: int, rem: int, acc: list[int]):
            if rem == 0:
                yield acc
                return
            if ci == len(cls):
                return
            c = cls[ci]
            for cnt in range(min(rem, len(c)), -1, -1):
                yield from choices(ci + 1, rem - cnt, acc + c[:cnt])

        for chosen in choices(0, need, []):
            for j in chosen:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
                deg[j] += 1
            deg[i] += len(chosen)
            ok = True
            if connected and i + 1 < n and not adj[i + 1] & ((1 << (i + 1)) - 1):
                ok = False
            if ok and even_neighborhood:
                fresh = [i] + [j for j in chosen if closed(j)]
                ok = parity_ok(fresh, i)
            if ok:
                yield from rec(i + 1)
            deg[i] -= len(chosen)
            for j in chosen:
                adj[i] &= ~(1 << j)
                adj[j] &= ~(1 << i)
                deg[j] -= 1

    yield from rec(0)


@dataclass
class CatalogEntry:
    graph: UndirectedGraph
    certificate: str
    order: int
    clique_level: CliqueLevel
    orientable: bool | None = None
    witness: Orientation | None = None
    search_nodes: int | None = None


def enumerate_regular(
    k: int,
    n: int,
    *,
    even_neighborhood: bool = True,
    connected: bool = True,
    clique_level: CliqueLevel | None = None,
    force: bool = False,
) -> list[CatalogEntry]:
    """One canonical representative per isomorphism class, sorted by
    certificate."""
    return sorted(
        iter_unique_regular(
            k, n, even_neighborhood=even_neighborhood, connected=connected,
            clique_level=clique_level, force=force,
        ),
        key=lambda e: e.certificate,
    )


def iter_unique_regular(
    k: int,
    n: int,
    *,
    even_neighborhood: bool = True,
    connected: bool = True,
    clique_level: CliqueLevel | None = None,
    force: bool = False,
) -> Iterator[CatalogEntry]:
    """Streaming form of :func:`enumerate_regular` (discovery order)."""
    if not within_feasibility_bound(k, n, even_neighborhood):
        if not force:
            raise ValueError(f"k={k}, n={n} is beyond the measured feasibility bound; pass force=True")
        log.warning("k=%d n=%d is beyond the feasibility bound; results stream as found", k, n)
    seen: set[str] = set()
    for g in iter_regular_graphs(k, n, even_neighborhood=even_neighborhood, connected=connected):
        if connected and not is_connected(g):
            continue
        if even_neighborhood and even_neighborhood_check(g):
            continue
        cf = canonical_form(g)
        if cf.certificate in seen:
            continue
        seen.add(cf.certificate)
        level = classify_clique_level(g)
        if clique_level is not None and level != clique_level:
            continue
        yield CatalogEntry(g.relabel(cf.labeling), cf.certificate, n, level)


def enumerate_even_neighborhood(k: int, n: int, **filters) -> list[CatalogEntry]:
    return enumerate_regular(k, n, even_neighborhood=True, **filters)


def _classify(args) -> tuple[bool, Orientation | None, int]:
    g, k = args
    cert = find_optimum_orientation(g, k)
    return cert.outcome is Outcome.FOUND, cert.witness, cert.nodes_explored


def default_threads() -> int:
    try:
        return max(1, int(os.environ.get("SKEWOPT_THREADS", "1")))
    except ValueError:
        return 1


def build_catalog(
    k: int, n_range: Sequence[int], *, threads: int | None = None, force: bool = False
) -> list[CatalogEntry]:
    """Enumerate every order in ``n_range`` and decide orientability of each
    graph.  Sorted by (order, certificate) whatever the thread count."""
    entries: list[CatalogEntry] = []
    for n in n_range:
        entries.extend(enumerate_even_neighborhood(k, n, force=force))
    threads = threads or default_threads()
    jobs = [(e.graph, k) for e in entries]
    if threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_classify, jobs))
    else:
        results = [_classify(j) for j in jobs]
    for e, (ok, w, nodes) in zip(entries, results):
        e.orientable, e.witness, e.search_nodes = ok, w, nodes
    entries.sort(key=lambda e: (e.order, e.certificate))
    return entries
