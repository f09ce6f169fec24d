import math
import random
from itertools import product

import numpy as np
import pytest

from skewopt.constructions import paper_matrix
from skewopt.graph import build_graph, complete_graph, cycle_graph, hypercube, path_graph, u_graph
from skewopt.oriented import (
    Orientation,
    disjoint_union,
    energy_bound,
    from_skew_matrix,
    gram,
    is_optimum,
    normalize_switching,
    orientation_from_arcs,
    relabel,
    restrict,
    reverse_at,
    reverse_set,
    skew_energy,
    skew_matrix,
    switching_class_size,
    two_walk_balance,
)

from conftest import random_graph

SEED = 424242


def random_orientation(rng, g):
    return Orientation(g, tuple(rng.choice((1, -1)) for _ in range(g.m)))


def c3_orientations():
    g = cycle_graph(3)
    return [Orientation(g, s) for s in product((1, -1), repeat=3)]


def test_k2_examples():
    o = orientation_from_arcs(2, [(0, 1)])
    assert skew_matrix(o).tolist() == [[0, 1], [-1, 0]]
    assert skew_matrix(reverse_at(o, 1)).tolist() == [[0, -1], [1, 0]]
    rep = gram(o, 1)
    assert rep.is_optimum and rep.gram.tolist() == [[1, 0], [0, 1]]
    assert skew_energy(o) == pytest.approx(2.0, rel=1e-12)
    assert two_walk_balance(o, 0, 1) == 0
    assert normalize_switching(orientation_from_arcs(2, [(1, 0)])).arcs() == [(0, 1)]


def test_g4_matrix_roundtrip_and_gram():
    o = paper_matrix("G4")
    S = skew_matrix(o)
    assert from_skew_matrix(S) == o
    rep = gram(o, 5)
    assert rep.is_optimum
    assert np.array_equal(rep.gram, 5 * np.eye(8, dtype=np.int64))
    assert skew_energy(o) == pytest.approx(8 * math.sqrt(5), rel=1e-9)
    assert all(two_walk_balance(o, u, v) == 0 for u in range(8) for v in range(8) if u != v)


def test_c3_never_optimum():
    for o in c3_orientations():
        rep = gram(o, 2)
        assert not rep.is_optimum
        assert {abs(val) for _, _, val in rep.off_diagonal_violations} == {1}
        assert len(rep.off_diagonal_violations) == 3


def test_c3_energy_against_characteristic_polynomial():
    # S is 3x3 skew with three +-1 entries: det(xI - S) = x^3 + 3x, eigenvalues 0, +-i*sqrt(3)
    for o in c3_orientations():
        S = skew_matrix(o)
        coeffs = np.poly(S.astype(float))
        assert np.allclose(coeffs, [1, 0, 3, 0])
        roots = np.roots([1, 0, 3, 0])
        assert skew_energy(o) == pytest.approx(float(np.abs(roots).sum()), rel=1e-9)
        assert skew_energy(o) == pytest.approx(2 * math.sqrt(3), rel=1e-9)


def test_c3_cyclic_two_walk():
    o = orientation_from_arcs(3, [(0, 1), (1, 2), (2, 0)])
    # one 2-path 0-2-1: s_02 * s_21 = (-1) * (-1)
    assert two_walk_balance(o, 0, 1) == o.sign(0, 2) * o.sign(2, 1) == 1
    with pytest.raises(ValueError):
        two_walk_balance(o, 1, 1)


def test_reverse_at_involution_and_g4():
    o = paper_matrix("G4")
    for v in range(8):
        assert reverse_at(reverse_at(o, v), v) == o
        assert gram(reverse_at(o, v), 5).is_optimum


def test_normalize_after_random_reversals():
    rng = random.Random(SEED)
    o = paper_matrix("G4")
    base = normalize_switching(o)
    for _ in range(50):
        p = o
        for _ in range(5):
            p = reverse_at(p, rng.randrange(8))
        assert normalize_switching(p) == base


def test_normalize_rejects_disconnected():
    o = disjoint_union(orientation_from_arcs(2, [(0, 1)]), orientation_from_arcs(2, [(0, 1)]))
    with pytest.raises(ValueError):
        normalize_switching(o)


def test_switching_class_size():
    g = cycle_graph(4)
    oracle = {tuple(reverse_set(Orientation(g, (1,) * 4), [v for v in range(4) if mask >> v & 1]).signs)
              for mask in range(16)}
    assert len(oracle) == switching_class_size(g) == 8


def test_restrict_and_relabel():
    o = paper_matrix("G4")
    sub = restrict(o, [0, 1, 2, 3])
    for a in range(4):
        for b in range(4):
            assert sub.sign(a, b) == o.sign(a, b)
    perm = list(reversed(range(8)))
    r = relabel(o, perm)
    assert all(r.sign(perm[u], perm[v]) == o.sign(u, v) for u in range(8) for v in range(8))
    assert gram(r, 5).is_optimum


# -- property suites -----------------------------------------------------

def _random_cases(count, seed):
    rng = random.Random(seed)
    fixed = [paper_matrix("G4").graph, hypercube(4), u_graph(5), complete_graph(6)]
    for i in range(count):
        if i % 4 == 0:
            g = rng.choice(fixed)
        else:
            g = random_graph(rng, rng.randint(2, 12), rng.uniform(0.2, 0.8))
        yield rng, g, random_orientation(rng, g)


def test_gram_diagonal_is_degree():
    for _, g, o in _random_cases(300, SEED):
        G = gram(o, 0).gram
        assert [int(G[v, v]) for v in range(g.n)] == g.degrees()


def test_gram_off_diagonal_is_negative_balance():
    for _, g, o in _random_cases(200, SEED + 1):
        G = gram(o, 0).gram
        for u in range(g.n):
            for v in range(g.n):
                if u != v:
                    assert G[u, v] == -two_walk_balance(o, u, v)


def test_reversal_preserves_optimality_and_energy():
    rng = random.Random(SEED + 2)
    for o in [paper_matrix("G4"), paper_matrix("G16")] + [x for _, _, x in _random_cases(100, SEED + 3)]:
        k = o.graph.max_degree
        sub = [v for v in range(o.n) if rng.random() < 0.5]
        r = reverse_set(o, sub)
        assert is_optimum(r, k) == is_optimum(o, k)
        assert skew_energy(r) == pytest.approx(skew_energy(o), rel=1e-9, abs=1e-9)


def test_energy_bound_on_1000_random_orientations():
    worst = -math.inf
    for _, g, o in _random_cases(1000, SEED + 4):
        gap = skew_energy(o) - energy_bound(g)
        worst = max(worst, gap)
        assert gap <= 1e-9
    assert worst <= 1e-9


def test_normalize_idempotent_and_orbit_constant():
    rng = random.Random(SEED + 5)
    done = 0
    for _, g, o in _random_cases(400, SEED + 6):
        from skewopt.graph import is_connected
        if not is_connected(g):
            continue
        nrm = normalize_switching(o)
        assert normalize_switching(nrm) == nrm
        sub = [v for v in range(g.n) if rng.random() < 0.5]
        assert normalize_switching(reverse_set(o, sub)) == nrm
        done += 1
    assert done > 100


def test_disjoint_union_optimal_iff_both_parts():
    rng = random.Random(SEED + 7)
    pool = [
        (orientation_from_arcs(2, [(0, 1)]), 1),
        (paper_matrix("G4"), 5),
        (paper_matrix("G17"), 5),
    ]
    # perturb to obtain non-optimal k-regular partners
    for o, k in list(pool):
        bad = Orientation(o.graph, (-o.signs[0],) + o.signs[1:])
        pool.append((bad, k))
    for _ in range(200):
        a, k = rng.choice(pool)
        b, k2 = rng.choice([p for p in pool if p[1] == k])
        u = disjoint_union(a, b)
        assert is_optimum(u, k) == (is_optimum(a, k) and is_optimum(b, k))
    # mixed degrees: union is never kI even if both parts are optimum for their own k
    mixed = disjoint_union(orientation_from_arcs(2, [(0, 1)]), paper_matrix("G4"))
    assert not is_optimum(mixed, 5) and not is_optimum(mixed, 1)


def test_odd_order_never_optimum():
    # det S = 0 for odd n, so S^T S = kI (k > 0) is impossible
    rng = random.Random(SEED + 8)
    for _ in range(200):
        g = random_graph(rng, rng.choice([3, 5, 7, 9]), 0.6)
        if g.m == 0:
            continue
        o = random_orientation(rng, g)
        assert not is_optimum(o, g.max_degree)
        assert round(np.linalg.det(skew_matrix(o).astype(float))) == 0


def test_constructor_errors():
    g = path_graph(3)
    with pytest.raises(ValueError):
        Orientation(g, (1,))
    with pytest.raises(ValueError):
        Orientation(g, (1, 0))
    with pytest.raises(ValueError):
        from_skew_matrix([[0, 1], [1, 0]])
    with pytest.raises(ValueError):
        from_skew_matrix([[0, 2], [-2, 0]])
