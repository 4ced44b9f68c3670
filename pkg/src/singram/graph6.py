"""graph6 encoding and decoding.

The upper triangle is read column by column (``x(0,1), x(0,2), x(1,2), ...``)
and packed into 6-bit groups offset by 63, preceded by the order header.
"""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .graph import MAX_ORDER, Graph, GraphError


class Graph6Error(GraphError):
    pass


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    raise Graph6Error(f"order {n} too large for graph6")


def encode(g: Graph) -> str:
    n = g.n
    bits = []
    for j in range(1, n):
        row = g.adj[j]
        for i in range(j):
            bits.append(row >> i & 1)
    while len(bits) % 6:
        bits.append(0)
    chars = []
    for t in range(0, len(bits), 6):
        v = 0
        for b in bits[t : t + 6]:
            v = (v << 1) | b
        chars.append(chr(v + 63))
    return _encode_n(n) + "".join(chars)


def _decode_n(text: str) -> tuple[int, int]:
    if not text:
        raise Graph6Error("empty graph6 string")
    if text[0] != "~":
        return ord(text[0]) - 63, 1
    if len(text) >= 2 and text[1] == "~":
        raise Graph6Error("orders above 258047 are not supported")
    if len(text) < 4:
        raise Graph6Error("truncated graph6 header")
    n = 0
    for ch in text[1:4]:
        n = (n << 6) | (ord(ch) - 63)
    return n, 4


def decode(text: str) -> Graph:
    text = text.strip()
    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<") :]
    for ch in text:
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"invalid graph6 character {ch!r}")
    n, off = _decode_n(text)
    if n > MAX_ORDER:
        raise Graph6Error(f"order {n} exceeds {MAX_ORDER}")
    nbits = n * (n - 1) // 2
    body = text[off:]
    if len(body) != (nbits + 5) // 6:
        raise Graph6Error(f"expected {(nbits + 5) // 6} data bytes for n={n}, got {len(body)}")
    bits = []
    for ch in body:
        v = ord(ch) - 63
        bits.extend((v >> s) & 1 for s in range(5, -1, -1))
    if any(bits[nbits:]):
        raise Graph6Error("nonzero padding bits")
    rows = [0] * n
    t = 0
    for j in range(1, n):
        for i in range(j):
            if bits[t]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            t += 1
    return Graph(n, tuple(rows))


def read_graph6_lines(stream: TextIO) -> Iterator[Graph]:
    for line in stream:
        line = line.strip()
        if line:
            yield decode(line)


def write_graph6_lines(stream: TextIO, graphs: Iterable[Graph]) -> int:
    count = 0
    for g in graphs:
        stream.write(encode(g) + "\n")
        count += 1
    return count


g6_encode = encode
g6_decode = decode
