"""Text formats: graph6, a 1-based edge list, and ``sgf`` signed orientations.

sgf layout::

    n m k
    u v s        (m lines, 1-based, s = +1 means arc u -> v, -1 means v -> u)

The canonical writer lists each edge once with ``u < v`` in lexicographic
order and writes signs as ``+1``/``-1``; canonical files round-trip byte for
byte.  graph6 output never carries the optional ``>>graph6<<`` header and
always ends with a single newline.
"""

from __future__ import annotations

import json
import math
from pathlib import Path
from typing import Any

from .graph import UndirectedGraph, build_graph
from .oriented import Orientation, orientation_from_signs


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)
        self.line = line
        self.column = column


# -- graph6 ---------------------------------------------------------------

GRAPH6_HEADER = ">>graph6<<"


def _encode_n(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return chr(126) + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return chr(126) * 2 + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def to_graph6(g: UndirectedGraph) -> str:
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = "".join(
        chr(63 + int("".join(map(str, bits[i:i + 6])), 2)) for i in range(0, len(bits), 6)
    )
    return _encode_n(g.n) + body


def from_graph6(text: str, line: int | None = None) -> UndirectedGraph:
    s = text.strip()
    col0 = 1
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
        col0 += len(GRAPH6_HEADER)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"invalid graph6 character {ch!r}", line, col0 + i)
    if not s:
        raise ParseError("empty graph6 string", line, col0)
    vals = [ord(c) - 63 for c in s]
    if vals[0] < 63:
        n, pos = vals[0], 1
    elif len(vals) >= 4 and vals[1] < 63:
        n, pos = (vals[1] << 12) | (vals[2] << 6) | vals[3], 4
    elif len(vals) >= 8:
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        pos = 8
    else:
        raise ParseError("truncated graph6 size header", line, col0)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(vals) - pos != need:
        raise ParseError(f"graph6 body has {len(vals) - pos} bytes, expected {need}", line, col0 + pos)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            v = vals[pos + k // 6]
            if v >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    if nbits % 6 and vals[-1] & ((1 << (6 - nbits % 6)) - 1):
        raise ParseError("non-zero graph6 padding bits", line, col0 + len(vals) - 1)
    return build_graph(n, edges)


def read_graph6_file(text: str) -> list[UndirectedGraph]:
    return [from_graph6(ln, i) for i, ln in enumerate(text.splitlines(), 1) if ln.strip()]


# -- edge list ----------------------------------------------------------

def _ints(line: str, lineno: int, count: int, what: str) -> list[int]:
    parts = line.split()
    if len(parts) != count:
        raise ParseError(f"expected {count} fields ({what}), found {len(parts)}", lineno, 1)
    out = []
    col = 1
    for p in parts:
        col = line.index(p, col - 1) + 1
        try:
            out.append(int(p))
        except ValueError:
            raise ParseError(f"not an integer: {p!r}", lineno, col) from None
        col += len(p)
    return out


def _column(line: str, field_index: int) -> int:
    idx = 0
    for i, part in enumerate(line.split()):
        idx = line.index(part, idx)
        if i == field_index:
            return idx + 1
        idx += len(part)
    return 1


def to_edge_list(g: UndirectedGraph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u + 1} {v + 1}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def _read_pairs(text: str, header_fields: int, row_fields: int, what: str):
    lines = text.splitlines()
    if not lines:
        raise ParseError("empty input", 1, 1)
    header = _ints(lines[0], 1, header_fields, what)
    n, m = header[0], header[1]
    if n < 0 or m < 0:
        raise ParseError("n and m must be non-negative", 1, 1)
    body = [(i, ln) for i, ln in enumerate(lines[1:], 2) if ln.strip()]
    if len(body) != m:
        raise ParseError(f"header declares {m} edges but {len(body)} lines follow", 1, _column(lines[0], 1))
    rows = []
    seen: set[tuple[int, int]] = set()
    for lineno, ln in body:
        vals = _ints(ln, lineno, row_fields, what)
        u, v = vals[0], vals[1]
        for fi, x in enumerate((u, v)):
            if not 1 <= x <= n:
                raise ParseError(f"vertex {x} outside 1..{n}", lineno, _column(ln, fi))
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno, _column(ln, 1))
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"edge {key[0]} {key[1]} listed twice", lineno, _column(ln, 0))
        seen.add(key)
        rows.append((lineno, ln, vals))
    return header, rows


def from_edge_list(text: str) -> UndirectedGraph:
    (n, _), rows = _read_pairs(text, 2, 2, "edge list: 'n m' then 'u v'")
    return build_graph(n, [(u - 1, v - 1) for _, _, (u, v) in rows])


# -- sgf -----------------------------------------------------------------

def to_sgf(o: Orientation, k: int | None = None) -> str:
    if k is None:
        k = o.graph.max_degree
    lines = [f"{o.n} {o.graph.m} {k}"]
    lines += [f"{u + 1} {v + 1} {'+1' if s > 0 else '-1'}" for (u, v), s in zip(o.graph.edges, o.signs)]
    return "\n".join(lines) + "\n"


def from_sgf(text: str) -> tuple[Orientation, int]:
    """Parse sgf text into ``(orientation, k)``."""
    (n, _, k), rows = _read_pairs(text, 3, 3, "sgf: 'n m k' then 'u v s'")
    signs = {}
    for lineno, ln, (u, v, s) in rows:
        if s not in (1, -1):
            raise ParseError(f"sign must be +1 or -1, got {s}", lineno, _column(ln, 2))
        signs[(u - 1, v - 1)] = s
    g = build_graph(n, list(signs))
    return orientation_from_signs(g, signs), k


# -- file helpers ---------------------------------------------------------

def detect_format(path: str | Path) -> str:
    suffix = Path(path).suffix.lower()
    if suffix in (".g6", ".graph6"):
        return "graph6"
    if suffix in (".edges", ".edgelist", ".txt"):
        return "edges"
    if suffix == ".sgf":
        return "sgf"
    raise ValueError(f"cannot infer format from {path!s}; use .g6, .edges or .sgf")


def read_graph(path: str | Path) -> UndirectedGraph:
    text = Path(path).read_text()
    fmt = detect_format(path)
    if fmt == "graph6":
        graphs = read_graph6_file(text)
        if len(graphs) != 1:
            raise ParseError(f"expected one graph, found {len(graphs)}")
        return graphs[0]
    if fmt == "edges":
        return from_edge_list(text)
    return from_sgf(text)[0].graph


def roundtrip_text(text: str, fmt: str) -> str:
    if fmt == "sgf":
        o, k = from_sgf(text)
        return to_sgf(o, k)
    if fmt == "graph6":
        return "".join(to_graph6(g) + "\n" for g in read_graph6_file(text))
    if fmt == "edges":
        return to_edge_list(from_edge_list(text))
    raise ValueError(f"unknown format {fmt!r}")


# -- JSON -----------------------------------------------------------------

def fmt_float(x: float) -> float:
    """Round to 10 significant digits for portable golden files."""
    if x == 0 or not math.isfinite(x):
        return x
    return float(f"{x:.10g}")


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)
