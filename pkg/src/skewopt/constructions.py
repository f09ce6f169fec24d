"""Explicit optimum orientations of 5-regular graphs.

Four fixed skew matrices (orders 8, 12, 12, 24), two block-tridiagonal
families valid for every order ``n = 4t`` past a threshold, and the prism
lift ``S -> [[S, I], [-I, -S]]`` that turns an optimum k-regular orientation
into an optimum (k+1)-regular one on twice as many vertices.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import complete_graph, path_graph, u_graph
from .oriented import Orientation, from_skew_matrix, gram, skew_matrix

_G4 = """
 0  1  1  1  0  0  1  1
-1  0  1 -1  0  0  1 -1
-1 -1  0  1 -1  1  0  0
-1  1 -1  0  1  1  0  0
 0  0  1 -1  0  1 -1  1
 0  0 -1 -1 -1  0  1  1
-1 -1  0  0  1 -1  0  1
-1  1  0  0 -1 -1 -1  0
"""

_G16 = """
 0  1  0  0 -1 -1  1 -1  0  0  0  0
-1  0  1  0  0 -1  0  1 -1  0  0  0
 0 -1  0  1  0 -1  0  0  1 -1  0  0
 0  0 -1  0  1 -1  0  0  0  1 -1  0
 1  0  0 -1  0 -1 -1  0  0  0  1  0
 1  1  1  1  1  0  0  0  0  0  0  0
-1  0  0  0  1  0  0 -1  0  0  1 -1
 1 -1  0  0  0  0  1  0 -1  0  0 -1
 0  1 -1  0  0  0  0  1  0 -1  0 -1
 0  0  1 -1  0  0  0  0  1  0 -1 -1
 0  0  0  1 -1  0 -1  0  0  1  0 -1
 0  0  0  0  0  0  1  1  1  1  1  0
"""

_G17 = """
 0  0  0  1 -1  0  0  0  0  1 -1  1
 0  0  0  1  0 -1  0  0  0 -1 -1 -1
 0  0  0  0  1  1  0  0  0 -1 -1  1
-1 -1  0  0  0  0  1 -1 -1  0  0  0
 1  0 -1  0  0  0 -1 -1 -1  0  0  0
 0  1 -1  0  0  0  1 -1  1  0  0  0
 0  0  0 -1  1 -1  0  0  0  1 -1  0
 0  0  0  1  1  1  0  0  0  1  0 -1
 0  0  0  1  1 -1  0  0  0  0  1  1
-1  1  1  0  0  0 -1 -1  0  0  0  0
 1  1  1  0  0  0  1  0 -1  0  0  0
-1  1 -1  0  0  0  0  1 -1  0  0  0
"""

_G31 = """
 0  1  1  1  1  1  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
-1  0  0  0  0  0 -1  1  1 -1  0  0  0  0  0  0  0  0  0  0  0  0  0  0
-1  0  0  0  0  0  1  0  0  0 -1 -1  1  0  0  0  0  0  0  0  0  0  0  0
-1  0  0  0  0  0  0 -1  0  0  1  0  0  1 -1  0  0  0  0  0  0  0  0  0
-1  0  0  0  0  0  0  0 -1  0  0  1  0 -1  0  1  0  0  0  0  0  0  0  0
-1  0  0  0  0  0  0  0  0  1  0  0 -1  0  1 -1  0  0  0  0  0  0  0  0
 0  1 -1  0  0  0  0  0  0  0  0  0  0  0  0  0  1 -1 -1  0  0  0  0  0
 0 -1  0  1  0  0  0  0  0  0  0  0  0  0  0  0  1  0  0 -1 -1  0  0  0
 0 -1  0  0  1  0  0  0  0  0  0  0  0  0  0  0  0 -1  0  1  0 -1  0  0
 0  1  0  0  0 -1  0  0  0  0  0  0  0  0  0  0  0  0  1  0 -1 -1  0  0
 0  0  1 -1  0  0  0  0  0  0  0  0  0  0  0  0  0 -1  0 -1  0  0  1  0
 0  0  1  0 -1  0  0  0  0  0  0  0  0  0  0  0  0  0 -1  1 -1  0  0  0
 0  0 -1  0  0  1  0  0  0  0  0  0  0  0  0  0 -1  0  0  0 -1  0  1  0
 0  0  0 -1  1  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0 -1  1 -1  0
 0  0  0  1  0 -1  0  0  0  0  0  0  0  0  0  0 -1 -1  0  0  0  1  0  0
 0  0  0  0 -1  1  0  0  0  0  0  0  0  0  0  0  0 -1  1  0  0  0 -1  0
 0  0  0  0  0  0 -1 -1  0  0  0  0  1  0  1  0  0  0  0  0  0  0  0 -1
 0  0  0  0  0  0  1  0  1  0  1  0  0  0  1  1  0  0  0  0  0  0  0  0
 0  0  0  0  0  0  1  0  0 -1  0  1  0  0  0 -1  0  0  0  0  0  0  0 -1
 0  0  0  0  0  0  0  1 -1  0  1 -1  0  0  0  0  0  0  0  0  0  0  0 -1
 0  0  0  0  0  0  0  1  0  1  0  1  1  1  0  0  0  0  0  0  0  0  0  0
 0  0  0  0  0  0  0  0  1  1  0  0  0 -1 -1  0  0  0  0  0  0  0  0 -1
 0  0  0  0  0  0  0  0  0  0 -1  0 -1  1  0  1  0  0  0  0  0  0  0 -1
 0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  1  0  1  1  0  1  1  0
"""

# 1-based vertex label of each displayed row; None means v_1, v_2, ... in order.
PAPER_ROW_LABELS: dict[str, tuple[int, ...] | None] = {
    "G4": None,
    "G16": (3, 2, 4, 6, 5, 1, 9, 7, 8, 10, 11, 12),
    "G17": (1, 10, 12, 3, 4, 5, 9, 8, 7, 2, 6, 11),
    "G31": None,
}

_DISPLAYS = {"G4": _G4, "G16": _G16, "G17": _G17, "G31": _G31}


def _parse(text: str) -> np.ndarray:
    return np.array([[int(x) for x in line.split()] for line in text.strip().splitlines()], dtype=np.int64)


def paper_display_matrix(name: str) -> np.ndarray:
    """The matrix exactly as displayed (rows in the displayed vertex order)."""
    try:
        return _parse(_DISPLAYS[name])
    except KeyError:
        raise ValueError(f"unknown matrix {name!r}; expected one of {sorted(_DISPLAYS)}") from None


def paper_matrix(name: str) -> Orientation:
    """Fixed optimum orientation, vertex ``v_i`` stored at index ``i - 1``."""
    S = paper_display_matrix(name)
    labels = PAPER_ROW_LABELS[name]
    if labels is not None:
        idx = [v - 1 for v in labels]
        T = np.zeros_like(S)
        T[np.ix_(idx, idx)] = S
        S = T
    return from_skew_matrix(S)


# -- block data for the two families -------------------------------------

D1 = np.array([[0, -1], [1, 0]])
D2 = np.array([[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]])
Q1 = np.array([[1, 1, -1, -1], [1, 1, 1, 1]])
Q2 = np.array([[1, -1, 0, 0], [-1, 1, 0, 0], [0, 0, 1, -1], [0, 0, -1, 1]])
Q3 = np.array([[1, 1, 0, 0], [1, 1, 0, 0], [0, 0, 1, 1], [0, 0, 1, 1]])
Q4 = np.array([[1, -1], [-1, 1], [-1, -1], [1, 1]])
Q5 = np.array([[1, -1], [1, -1], [1, 1], [1, 1]])

M = np.eye(2, dtype=int)
M1 = np.array([[-1, 0], [0, 1]])
M2 = np.array([[1, 1], [1, 1]])
M3 = np.array([[1, 1], [-1, -1]])
M4 = np.array([[-1, 1], [1, -1]])


def _check_order(n: int, minimum: int):
    if n % 4 or n < minimum:
        raise ValueError(f"order must be a multiple of 4 and at least {minimum}, got {n}")


def _assemble_tridiagonal(diag, upper) -> np.ndarray:
    sizes = [d.shape[0] for d in diag]
    off = np.concatenate([[0], np.cumsum(sizes)])
    n = int(off[-1])
    S = np.zeros((n, n), dtype=np.int64)
    for b, d in enumerate(diag):
        S[off[b]:off[b + 1], off[b]:off[b + 1]] = d
    for b, q in enumerate(upper):
        S[off[b]:off[b + 1], off[b + 1]:off[b + 2]] = q
        S[off[b + 1]:off[b + 2], off[b]:off[b + 1]] = -q.T
    return S


def g12_matrix(n: int) -> np.ndarray:
    """Block-tridiagonal matrix for the G12 family.

    Diagonal ``D1, D2, -D2, D2, ..., D1^T`` with ``Q1`` then alternating
    ``Q2``/``Q3`` above it.  With ``n/4`` odd the last 4-block is ``-D2``
    closed by ``Q5``; with ``n/4`` even it is ``+D2`` closed by ``Q4``.
    """
    _check_order(n, 12)
    t = n // 4 - 1
    diag = [D1] + [D2 if j % 2 else -D2 for j in range(1, t + 1)] + [D1.T]
    upper = [Q1] + [Q2 if j % 2 else Q3 for j in range(1, t)] + [Q4 if t % 2 else Q5]
    S = _assemble_tridiagonal(diag, upper)
    assert S.shape == (n, n), (S.shape, n)
    return S


def g12_family(n: int) -> Orientation:
    return from_skew_matrix(g12_matrix(n))


def g26_matrix(n: int) -> np.ndarray:
    """``[[A1, A2], [-A2^T, A3]]`` built from 2x2 blocks, ``p = n/4`` per side."""
    _check_order(n, 16)
    p = n // 4
    h = 2 * p
    A1 = np.zeros((h, h), dtype=np.int64)
    A2 = np.zeros((h, h), dtype=np.int64)
    A3 = np.zeros((h, h), dtype=np.int64)

    def blk(i):
        return slice(2 * i, 2 * i + 2)

    for i in range(p - 1):
        a1 = M2 if i == 0 else M3
        A1[blk(i), blk(i + 1)] = a1
        A1[blk(i + 1), blk(i)] = -a1.T
        a3 = M3.T if i == 0 else -M3.T
        A3[blk(i), blk(i + 1)] = a3
        A3[blk(i + 1), blk(i)] = -a3.T
    for i in range(p):
        A2[blk(i), blk(i)] = M if i == 0 else M1
    A2[blk(0), blk(p - 1)] = -M3
    A2[blk(p - 1), blk(0)] = M4
    S = np.block([[A1, A2], [-A2.T, A3]])
    assert S.shape == (n, n), (S.shape, n)
    return S


def g26_family(n: int) -> Orientation:
    return from_skew_matrix(g26_matrix(n))


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    expression: str
    holds: bool


def block_identities() -> list[IdentityCheck]:
    """Every block identity behind the two family proofs, checked exactly."""
    I2, I4 = np.eye(2, dtype=int), np.eye(4, dtype=int)
    Z = np.zeros
    T = np.transpose
    checks = [
        # G12 family
        ("A", "D1^2 - Q1 Q1^T = -5 I2", D1 @ D1 - Q1 @ T(Q1), -5 * I2),
        ("B", "-Q1^T Q1 + D2^2 - Q2 Q2^T = -5 I4", -T(Q1) @ Q1 + D2 @ D2 - Q2 @ T(Q2), -5 * I4),
        ("C", "-Q2^T Q2 + D2^2 - Q3 Q3^T = -5 I4", -T(Q2) @ Q2 + D2 @ D2 - Q3 @ T(Q3), -5 * I4),
        ("D", "-Q3^T Q3 + D2^2 - Q2 Q2^T = -5 I4", -T(Q3) @ Q3 + D2 @ D2 - Q2 @ T(Q2), -5 * I4),
        ("E", "-Q2^T Q2 + D2^2 - Q5 Q5^T = -5 I4", -T(Q2) @ Q2 + D2 @ D2 - Q5 @ T(Q5), -5 * I4),
        ("F", "-Q5^T Q5 + (D1^T)^2 = -5 I2", -T(Q5) @ Q5 + T(D1) @ T(D1), -5 * I2),
        ("G", "D1 Q1 + Q1 D2 = 0", D1 @ Q1 + Q1 @ D2, Z((2, 4))),
        ("H", "D2 Q2 - Q2 D2 = 0", D2 @ Q2 - Q2 @ D2, Z((4, 4))),
        ("I", "-D2 Q3 + Q3 D2 = 0", -D2 @ Q3 + Q3 @ D2, Z((4, 4))),
        ("J", "-D2 Q5 + Q5 D1^T = 0", -D2 @ Q5 + Q5 @ T(D1), Z((4, 2))),
        ("K", "Q1 Q2 = 0", Q1 @ Q2, Z((2, 4))),
        ("L", "Q2 Q3 = 0", Q2 @ Q3, Z((4, 4))),
        ("M", "Q3 Q2 = 0", Q3 @ Q2, Z((4, 4))),
        ("O", "Q2 Q5 = 0", Q2 @ Q5, Z((4, 2))),
        # G26 family
        ("M2M1+MM3T", "M2 M1 + M M3^T = 0", M2 @ M1 + M @ T(M3), Z((2, 2))),
        ("M2TM+M1M3", "M2^T M + M1 M3 = 0", T(M2) @ M + M1 @ M3, Z((2, 2))),
        ("M3M1-M1M3T", "M3 M1 - M1 M3^T = 0", M3 @ M1 - M1 @ T(M3), Z((2, 2))),
        ("-M3TM1+M1M3", "-M3^T M1 + M1 M3 = 0", -T(M3) @ M1 + M1 @ M3, Z((2, 2))),
        ("M2TM3", "M2^T M3 = 0", T(M2) @ M3, Z((2, 2))),
        ("M3^2", "-M3^2 = 0", -M3 @ M3, Z((2, 2))),
        ("M3M4", "M3 M4 = 0", M3 @ M4, Z((2, 2))),
        ("M4M3T", "M4 M3^T = 0", M4 @ T(M3), Z((2, 2))),
        ("X5", "X5 = M2 M3 = 0", M2 @ M3, Z((2, 2))),
        ("X6", "X6 = M3^2 = 0", M3 @ M3, Z((2, 2))),
        ("X2", "X2 = -M2^T M2 - M3 M3^T = -4M", -T(M2) @ M2 - M3 @ T(M3), -4 * M),
        ("X3", "X3 = -M3^T M3 - M3 M3^T = -4M", -T(M3) @ M3 - M3 @ T(M3), -4 * M),
        ("MM4T-M3M1", "M M4^T - M3 M1 = 0", M @ T(M4) - M3 @ M1, Z((2, 2))),
        ("M4M-M1M3T", "M4 M - M1 M3^T = 0", M4 @ M - M1 @ T(M3), Z((2, 2))),
        ("M1^2", "M1^2 = M", M1 @ M1, M),
        ("X1-M^2-M3M3T", "X1 - M^2 - M3 M3^T = -5M", -M2 @ T(M2) - M @ M - M3 @ T(M3), -5 * M),
        ("X4-M4M4T-M1^2", "X4 - M4 M4^T - M1^2 = -5M", -T(M3) @ M3 - M4 @ T(M4) - M1 @ M1, -5 * M),
        ("X2-M1^2", "X2 - M1^2 = -5M", -T(M2) @ M2 - M3 @ T(M3) - M1 @ M1, -5 * M),
        ("X3-M1^2", "X3 - M1^2 = -5M", -T(M3) @ M3 - M3 @ T(M3) - M1 @ M1, -5 * M),
    ]
    return [IdentityCheck(name, expr, bool(np.array_equal(lhs, rhs))) for name, expr, lhs, rhs in checks]


def p2_lift(o: Orientation) -> Orientation:
    """Prism lift: optimum k-regular orientation on n vertices to an optimum
    (k+1)-regular one on 2n vertices, skew matrix ``[[S, I], [-I, -S]]``.

    Vertex ``(a, v)`` of ``P2 □ G`` sits at ``a * n + v``, matching
    :func:`skewopt.graph.cartesian_product`.
    """
    k = o.graph.max_degree
    if not gram(o, k).is_optimum:
        raise ValueError(f"input orientation is not optimum for k={k}")
    S = skew_matrix(o)
    I = np.eye(o.n, dtype=np.int64)
    return from_skew_matrix(np.block([[S, I], [-I, -S]]))


def k2_orientation() -> Orientation:
    g = path_graph(2)
    return Orientation(g, (1,))


def hypercube_orientation(d: int) -> Orientation:
    """Optimum orientation of Q_d obtained by lifting K2 ``d - 1`` times."""
    if d < 1:
        raise ValueError("hypercube dimension must be at least 1")
    o = k2_orientation()
    for _ in range(d - 1):
        o = p2_lift(o)
    return o


def u_orientation(n: int) -> Orientation:
    """Optimum orientation of U_n, found by the orientation search."""
    from .search import Outcome, find_optimum_orientation

    cert = find_optimum_orientation(u_graph(n), 4)
    if cert.outcome is not Outcome.FOUND:
        raise ValueError(f"U_{n} has no optimum orientation")
    return cert.witness


def k4_orientation() -> Orientation:
    from .search import find_optimum_orientation

    return find_optimum_orientation(complete_graph(4), 3).witness


FAMILIES = ("g4", "g12", "g16", "g17", "g26", "g31", "un", "p2lift", "hypercube")
