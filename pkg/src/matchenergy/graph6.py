"""graph6 encoding (one graph per line)."""

from __future__ import annotations

from typing import IO, Iterator

from .graph import MAX_ORDER, Graph

HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    pass


def _encode_order(n: int) -> str:
    if n <= 62:
        return chr(63 + n)
    if n <= 258047:
        return "~" + "".join(chr(63 + (n >> s & 63)) for s in (12, 6, 0))
    return "~~" + "".join(chr(63 + (n >> s & 63)) for s in (30, 24, 18, 12, 6, 0))


def encode(g: Graph) -> str:
    """graph6 text for ``g`` without the trailing newline."""
    bits = [g.adj[j] >> i & 1 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = []
    for i in range(0, len(bits), 6):
        x = 0
        for b in bits[i:i + 6]:
            x = x << 1 | b
        body.append(chr(63 + x))
    return _encode_order(g.n) + "".join(body)


def decode(text: str) -> Graph:
    line = text.strip()
    if line.startswith(HEADER):
        line = line[len(HEADER):]
    if not line:
        raise Graph6Error("empty graph6 line")
    data = []
    for pos, ch in enumerate(line):
        c = ord(ch)
        if not 63 <= c <= 126:
            raise Graph6Error(f"byte {c!r} at position {pos} outside 63..126")
        data.append(c - 63)

    if data[0] != 63:
        n, rest = data[0], data[1:]
    elif len(data) >= 2 and data[1] == 63:
        if len(data) < 8:
            raise Graph6Error("truncated 8-byte order header")
        n = 0
        for x in data[2:8]:
            n = n << 6 | x
        rest = data[8:]
    else:
        if len(data) < 4:
            raise Graph6Error("truncated 4-byte order header")
        n = data[1] << 12 | data[2] << 6 | data[3]
        rest = data[4:]
    if n > MAX_ORDER:
        raise Graph6Error(f"order {n} exceeds supported maximum {MAX_ORDER}")

    nbits = n * (n - 1) // 2
    need = -(-nbits // 6)
    if len(rest) != need:
        raise Graph6Error(f"expected {need} data bytes for n={n}, got {len(rest)}")
    pad = need * 6 - nbits
    if pad and rest[-1] & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits")

    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if rest[k // 6] >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, tuple(adj))


def read_lines(stream: IO[str]) -> Iterator[tuple[int, str]]:
    """Non-blank lines of a graph6 stream with their 1-based line numbers."""
    for lineno, line in enumerate(stream, 1):
        if line.strip():
            yield lineno, line.strip()


def read_graphs(stream: IO[str]) -> Iterator[Graph]:
    for lineno, line in read_lines(stream):
        try:
            yield decode(line)
        except Graph6Error as exc:
            raise Graph6Error(f"line {lineno}: {exc}") from None


def write_graphs(graphs, stream: IO[str]) -> None:
    for g in graphs:
        stream.write(encode(g) + "\n")
