"""Readers and writers: native edge-list text, graph6, and sparse6.

graph6 encodes simple graphs only; sparse6 carries multigraphs and is
the interchange format for catalogs with parallel edges. Byte layouts
follow the published format specification.
"""

from __future__ import annotations

from typing import IO, Iterable, Iterator

from .multigraph import MultiGraph

EDGE_LIST = "edge_list"
GRAPH6 = "graph6"
SPARSE6 = "sparse6"


class ParseError(ValueError):
    """Malformed input; carries a human-readable position."""

    def __init__(self, message: str, position: str):
        super().__init__(f"{message} ({position})")
        self.position = position


# --------------------------------------------------------------------------
# edge_list: first line "n m", then m lines "u v", 0-based; graphs may be
# concatenated in one stream
# --------------------------------------------------------------------------


def write_edge_list(g: MultiGraph) -> str:
    lines = [f"{g.vertex_count} {len(g.edges)}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def _parse_edge_list(lines: list[str]) -> Iterator[MultiGraph]:
    idx = 0
    total = len(lines)
    while True:
        while idx < total and not lines[idx].strip():
            idx += 1
        if idx >= total:
            return
        header = lines[idx].split()
        if len(header) != 2:
            raise ParseError("expected header 'n m'", f"line {idx + 1}")
        try:
            n, m = int(header[0]), int(header[1])
        except ValueError:
            raise ParseError("non-integer header fields", f"line {idx + 1}")
        idx += 1
        pairs = []
        for k in range(m):
            while idx < total and not lines[idx].strip():
                idx += 1
            if idx >= total:
                raise ParseError(
                    f"expected {m} edges, found {k}", f"line {idx}"
                )
            fields = lines[idx].split()
            if len(fields) != 2:
                raise ParseError("expected edge line 'u v'", f"line {idx + 1}")
            try:
                u, v = int(fields[0]), int(fields[1])
            except ValueError:
                raise ParseError("non-integer edge endpoints", f"line {idx + 1}")
            try:
                pairs.append((u, v))
            finally:
                idx += 1
        try:
            yield MultiGraph(n, tuple(pairs))
        except ValueError as exc:
            raise ParseError(str(exc), f"graph ending at line {idx}")


# --------------------------------------------------------------------------
# graph6 / sparse6 byte helpers
# --------------------------------------------------------------------------


def _n_to_data(n: int) -> list[int]:
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    if n <= 62:
        return [n]
    if n <= 258047:
        return [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    if n <= 68719476735:
        return [63, 63,
                (n >> 30) & 63, (n >> 24) & 63, (n >> 18) & 63,
                (n >> 12) & 63, (n >> 6) & 63, n & 63]
    raise ValueError("vertex count too large for graph6/sparse6")


def _data_to_n(data: list[int], where: str) -> tuple[int, list[int]]:
    if not data:
        raise ParseError("missing vertex count", where)
    if data[0] <= 62:
        return data[0], data[1:]
    if len(data) >= 4 and data[1] <= 62:
        return (data[1] << 12) + (data[2] << 6) + data[3], data[4:]
    if len(data) >= 8:
        n = 0
        for d in data[2:8]:
            n = (n << 6) + d
        return n, data[8:]
    raise ParseError("truncated vertex count", where)


def _check_bytes(payload: bytes, where: str) -> list[int]:
    data = []
    for pos, byte in enumerate(payload):
        if not 63 <= byte <= 126:
            raise ParseError(f"invalid byte {byte!r}", f"{where}, byte {pos}")
        data.append(byte - 63)
    return data


# --------------------------------------------------------------------------
# graph6 (simple graphs)
# --------------------------------------------------------------------------


def write_graph6(g: MultiGraph) -> str:
    if not g.is_simple():
        raise ValueError("graph6 cannot encode parallel edges; use sparse6")
    n = g.vertex_count
    present = set(g.edges)
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if (i, j) in present else 0)
    while len(bits) % 6:
        bits.append(0)
    out = bytes(d + 63 for d in _n_to_data(n))
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        out += bytes([val + 63])
    return out.decode("ascii")


def parse_graph6(line: str | bytes, where: str = "graph6") -> MultiGraph:
    raw = line.encode("ascii") if isinstance(line, str) else line
    raw = raw.strip()
    if raw.startswith(b">>graph6<<"):
        raw = raw[10:]
    data = _check_bytes(raw, where)
    n, rest = _data_to_n(data, where)
    need = n * (n - 1) // 2
    bits = []
    for d in rest:
        for shift in range(5, -1, -1):
            bits.append((d >> shift) & 1)
    if len(bits) < need:
        raise ParseError(
            f"truncated adjacency bits: need {need}, have {len(bits)}", where
        )
    edges = []
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bits[pos]:
                edges.append((i, j))
            pos += 1
    return MultiGraph(n, tuple(edges))


# --------------------------------------------------------------------------
# sparse6 (multigraphs)
# --------------------------------------------------------------------------


def write_sparse6(g: MultiGraph) -> str:
    n = g.vertex_count
    k = 1
    while (1 << k) < n:
        k += 1

    def enc(x: int) -> list[int]:
        return [(x >> (k - 1 - i)) & 1 for i in range(k)]

    edges = sorted((max(u, v), min(u, v)) for u, v in g.edges)
    bits: list[int] = []
    curv = 0
    for v, u in edges:
        if v == curv:
            bits.append(0)
            bits.extend(enc(u))
        elif v == curv + 1:
            curv += 1
            bits.append(1)
            bits.extend(enc(u))
        else:
            curv = v
            bits.append(1)
            bits.extend(enc(v))
            bits.append(0)
            bits.extend(enc(u))
    pad = (-len(bits)) % 6
    # padding with all 1s would decode as an edge at vertex n-1 when n is a
    # power of two and enough bits remain; lead with a 0 bit in that case
    if k < 6 and n == (1 << k) and pad >= k and curv < n - 1:
        bits.append(0)
        pad = (-len(bits)) % 6
    bits.extend([1] * pad)
    out = b":" + bytes(d + 63 for d in _n_to_data(n))
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i:i + 6]:
            val = (val << 1) | b
        out += bytes([val + 63])
    return out.decode("ascii")


def parse_sparse6(line: str | bytes, where: str = "sparse6") -> MultiGraph:
    raw = line.encode("ascii") if isinstance(line, str) else line
    raw = raw.strip()
    if raw.startswith(b">>sparse6<<"):
        raw = raw[11:]
    if not raw.startswith(b":"):
        raise ParseError("sparse6 line must start with ':'", where)
    data = _check_bytes(raw[1:], where)
    n, rest = _data_to_n(data, where)
    k = 1
    while (1 << k) < n:
        k += 1
    bits: list[int] = []
    for d in rest:
        for shift in range(5, -1, -1):
            bits.append((d >> shift) & 1)
    edges = []
    v = 0
    pos = 0
    while pos + k < len(bits):
        b = bits[pos]
        x = 0
        for i in range(pos + 1, pos + 1 + k):
            x = (x << 1) | bits[i]
        pos += 1 + k
        if b:
            v += 1
        if x >= n or v >= n:
            break
        if x > v:
            v = x
        else:
            edges.append((x, v))
    return MultiGraph(n, tuple(edges))


# --------------------------------------------------------------------------
# front door
# --------------------------------------------------------------------------


def parse(source: str | IO[str], fmt: str = EDGE_LIST) -> Iterator[MultiGraph]:
    """Parses a path, text, or stream into a stream of MultiGraphs.

    A string argument naming an existing readable path is opened; any
    other string is treated as literal content.
    """
    if isinstance(source, str):
        try:
            handle: IO[str] | None = open(source, "r", encoding="ascii")
        except OSError:
            handle = None
        if handle is None:
            text = source
        else:
            with handle:
                text = handle.read()
    else:
        text = source.read()
    lines = text.splitlines()
    if fmt == EDGE_LIST:
        yield from _parse_edge_list(lines)
    elif fmt == GRAPH6:
        for i, line in enumerate(lines):
            if line.strip():
                yield parse_graph6(line, where=f"line {i + 1}")
    elif fmt == SPARSE6:
        for i, line in enumerate(lines):
            if line.strip():
                yield parse_sparse6(line, where=f"line {i + 1}")
    else:
        raise ValueError(f"unknown format {fmt!r}")


def write(graphs: Iterable[MultiGraph], fmt: str = EDGE_LIST) -> str:
    if fmt == EDGE_LIST:
        return "".join(write_edge_list(g) for g in graphs)
    if fmt == GRAPH6:
        return "".join(write_graph6(g) + "\n" for g in graphs)
    if fmt == SPARSE6:
        return "".join(write_sparse6(g) + "\n" for g in graphs)
    raise ValueError(f"unknown format {fmt!r}")
