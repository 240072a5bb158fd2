"""graph6, DOT and plain adjacency-list serialisation."""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .graph import Graph, GraphError

HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def _encode_size(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise GraphError(f"graph6 cannot encode n={n}")


def _upper_bits(g: Graph) -> np.ndarray:
    # x(i, j) for i < j, ordered by j then i; by symmetry column j above the
    # diagonal is row j left of it
    a = g.adjacency_matrix()
    if g.n == 1:
        return np.zeros(0, dtype=bool)
    return np.concatenate([a[j, :j] for j in range(1, g.n)])


def graph6_encode(g: Graph, header: bool = False) -> str:
    if g.allow_loops and g.has_loops():
        raise GraphError("graph6 cannot represent loops")
    bitvec = _upper_bits(g).astype(np.uint8)
    pad = (-len(bitvec)) % 6
    if pad:
        bitvec = np.concatenate([bitvec, np.zeros(pad, dtype=np.uint8)])
    groups = bitvec.reshape(-1, 6) @ np.array([32, 16, 8, 4, 2, 1], dtype=np.uint8) + 63
    body = groups.astype(np.uint8).tobytes().decode("ascii")
    return (HEADER if header else "") + _encode_size(g.n) + body


def graph6_decode(text: str) -> Graph:
    s = text.strip()
    base = 0
    if s.startswith(HEADER):
        s = s[len(HEADER):]
        base = len(HEADER)
    if not s:
        raise Graph6Error("empty graph6 string", base)
    data = s.encode("ascii", errors="replace")
    for i, c in enumerate(data):
        if not 63 <= c <= 126:
            raise Graph6Error(f"invalid graph6 byte {c!r}", base + i)
    vals = np.frombuffer(data, dtype=np.uint8).astype(np.int64) - 63
    if data[0] != 126:
        n, pos = int(vals[0]), 1
    elif len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise Graph6Error("truncated 8-byte size header", base + len(data))
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | int(v)
        pos = 8
    else:
        if len(data) < 4:
            raise Graph6Error("truncated 4-byte size header", base + len(data))
        n = (int(vals[1]) << 12) | (int(vals[2]) << 6) | int(vals[3])
        pos = 4
    if n < 1:
        raise Graph6Error("graph6 encodes the empty graph; at least one vertex is required", base)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    have = len(data) - pos
    if have < need:
        raise Graph6Error(f"truncated bit vector: need {need} bytes, have {have}", base + len(data))
    if have > need:
        raise Graph6Error("trailing bytes after bit vector", base + pos + need)
    body = vals[pos:].astype(np.uint8)
    bitvec = np.unpackbits(body[:, None], axis=1)[:, 2:].reshape(-1)[:nbits].astype(bool)
    a = np.zeros((n, n), dtype=bool)
    start = 0
    for j in range(1, n):
        a[j, :j] = bitvec[start:start + j]
        start += j
    a |= a.T
    return Graph.from_adjacency(a)


def dot_export(g: Graph, labels: Sequence[str] | None = None, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        if labels is not None:
            lines.append(f'  {v} [label="{labels[v]}"];')
        else:
            lines.append(f"  {v};")
    for u, w in g.edges():
        lines.append(f"  {u} -- {w};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def adjlist_export(g: Graph) -> str:
    """``n`` on the first line, then one ``u v`` edge per line."""
    return "\n".join([str(g.n)] + [f"{u} {w}" for u, w in g.edges()]) + "\n"


def adjlist_parse(text: str) -> Graph:
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise GraphError("empty adjacency-list input")
    n = int(lines[0])
    edges = []
    for ln in lines[1:]:
        u, w = ln.split()
        edges.append((int(u), int(w)))
    loops = any(u == w for u, w in edges)
    return Graph.from_edges(n, edges, allow_loops=loops)


def read_graph(text: str) -> Graph:
    """Accept graph6 (optionally with header) or the adjacency-list format."""
    s = text.strip()
    first = s.split("\n", 1)[0].strip()
    # digits never occur in graph6 (bytes 63..126)
    if first.isdigit():
        return adjlist_parse(s)
    return graph6_decode(first)
