"""graph6 and plain edge-list codecs.

graph6 layout: a size prefix (``n + 63`` for n <= 62, else ``~`` and three
6-bit groups), then the upper-triangle adjacency bits in column order
``x(0,1), x(0,2), x(1,2), x(0,3), ...`` packed six per byte, each byte
offset by 63, last byte zero-padded.
"""

from __future__ import annotations

import io
import sys
from math import isqrt
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, TextIO, Union

from .errors import (
    BadChecksumByte,
    DuplicateEdge,
    EdgeListSyntaxError,
    NonCanonicalSize,
    SelfLoop,
    TooLarge,
    TrailingGarbage,
    TruncatedBody,
    VertexOutOfRange,
)
from .graph import Graph, build_graph

GRAPH6_MAX_N = 258047
HEADER = b">>graph6<<"


@dataclass(frozen=True)
class Graph6Record:
    raw: bytes
    decoded: Graph


def _as_bytes(line: Union[bytes, str]) -> bytes:
    if isinstance(line, str):
        line = line.encode("ascii", errors="replace")
    return line.rstrip(b"\r\n")


def parse_graph6(line: Union[bytes, str]) -> Graph:
    data = _as_bytes(line)
    if data.startswith(HEADER):
        data = data[len(HEADER):]
    if not data:
        raise TruncatedBody("empty graph6 line")
    for pos, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise BadChecksumByte(f"byte {byte} at offset {pos} outside [63, 126]")

    if data[0] != 126:
        n, body = data[0] - 63, data[1:]
    else:
        if len(data) >= 2 and data[1] == 126:
            raise TooLarge("8-byte size prefix (n > 258047) is not supported")
        if len(data) < 4:
            raise TruncatedBody("size prefix cut short")
        n = (data[1] - 63) << 12 | (data[2] - 63) << 6 | (data[3] - 63)
        if n <= 62:
            raise NonCanonicalSize(f"n={n} encoded with the long size prefix")
        body = data[4:]

    nbits = n * (n - 1) // 2
    nbytes = -(-nbits // 6)
    if len(body) < nbytes:
        raise TruncatedBody(f"expected {nbytes} body bytes for n={n}, got {len(body)}")
    if len(body) > nbytes:
        raise TrailingGarbage(f"{len(body) - nbytes} extra bytes after the body")

    value = 0
    for byte in body:
        value = value << 6 | (byte - 63)
    pad = nbytes * 6 - nbits
    if value & ((1 << pad) - 1):
        raise TrailingGarbage("nonzero padding bits")
    value >>= pad
    edges = []
    while value:
        low = value & -value
        value ^= low
        k = nbits - low.bit_length()  # bit position counted from the front
        j = (1 + isqrt(1 + 8 * k)) // 2
        edges.append((k - j * (j - 1) // 2, j))
    return build_graph(n, edges)


def write_graph6(g: Graph) -> bytes:
    n = g.n
    if n > GRAPH6_MAX_N:
        raise TooLarge(f"n={n} exceeds {GRAPH6_MAX_N}")
    if n <= 62:
        out = bytearray([n + 63])
    else:
        out = bytearray([126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])
    nbits = n * (n - 1) // 2
    nbytes = -(-nbits // 6)
    value = 0
    for i, j in g.edges:
        value |= 1 << (nbits - 1 - (j * (j - 1) // 2 + i))
    value <<= nbytes * 6 - nbits
    for shift in range(6 * (nbytes - 1), -1, -6):
        out.append((value >> shift & 63) + 63)
    return bytes(out)


def iter_graph6(stream) -> Iterator[Graph6Record]:
    """Stream records from a binary or text file, skipping blank lines."""
    for raw in stream:
        if isinstance(raw, str):
            raw = raw.encode("ascii", errors="replace")
        raw = raw.rstrip(b"\r\n")
        if not raw.strip():
            continue
        yield Graph6Record(raw, parse_graph6(raw))


def _at(exc: Exception, lineno: int) -> Exception:
    exc.args = (f"line {lineno}: {exc.args[0]}",)
    exc.line = lineno
    return exc


def parse_edge_list(text: str) -> Graph:
    """Header ``n m`` then ``m`` lines ``u v`` (0-based). Blank lines and
    ``#`` comments are ignored."""
    rows = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.split("#", 1)[0].strip()
        if stripped:
            rows.append((lineno, stripped.split()))
    if not rows:
        raise EdgeListSyntaxError("missing 'n m' header", 1)

    def ints(lineno, fields):
        if len(fields) != 2:
            raise EdgeListSyntaxError(f"expected two integers, got {len(fields)} fields", lineno)
        try:
            return int(fields[0]), int(fields[1])
        except ValueError:
            raise EdgeListSyntaxError("expected two integers", lineno) from None

    header_line, header = rows[0]
    n, m = ints(header_line, header)
    if n < 0 or m < 0:
        raise EdgeListSyntaxError("n and m must be nonnegative", header_line)
    body = rows[1:]
    if len(body) != m:
        where = body[m][0] if len(body) > m else (body[-1][0] if body else header_line)
        raise EdgeListSyntaxError(f"header promises {m} edges, found {len(body)}", where)
    adjacency = [0] * n
    edges = []
    for lineno, fields in body:
        u, v = ints(lineno, fields)
        if not (0 <= u < n and 0 <= v < n):
            raise _at(VertexOutOfRange(f"edge ({u}, {v}) has an endpoint outside [0, {n})"), lineno)
        if u == v:
            raise _at(SelfLoop(f"edge ({u}, {v}) is a self-loop"), lineno)
        if adjacency[u] >> v & 1:
            raise _at(DuplicateEdge(f"edge ({u}, {v}) appears more than once"), lineno)
        adjacency[u] |= 1 << v
        adjacency[v] |= 1 << u
        edges.append((u, v))
    return build_graph(n, edges)


def write_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def sniff_format(data: bytes) -> str:
    """``edges`` if the first meaningful line is two integers, else ``graph6``."""
    for line in data.splitlines():
        text = line.split(b"#", 1)[0].strip()
        if not text:
            continue
        parts = text.split()
        if len(parts) == 2 and all(p.isdigit() for p in parts):
            return "edges"
        return "graph6"
    return "edges"


def read_graphs(path: str, fmt: str = "auto", stdin: TextIO = None) -> Iterator[tuple[str, Graph]]:
    """Yield ``(identifier, graph)`` from a file or ``-`` for stdin.

    An edge-list file holds one graph; a graph6 file holds one per line.
    """
    if path == "-":
        stream = stdin if stdin is not None else sys.stdin
        data = stream.buffer.read() if hasattr(stream, "buffer") else stream.read()
        if isinstance(data, str):
            data = data.encode()
        label = "stdin"
    else:
        data = Path(path).read_bytes()
        label = path
    if fmt == "auto":
        fmt = sniff_format(data)
    if fmt == "edges":
        yield label, parse_edge_list(data.decode())
    elif fmt == "graph6":
        for lineno, raw in enumerate(io.BytesIO(data), start=1):
            raw = raw.rstrip(b"\r\n")
            if raw.strip():
                yield f"{label}:{lineno}", parse_graph6(raw)
    else:
        raise ValueError(f"unknown format {fmt!r}")
