"""graph6 codec (https://users.cecs.anu.edu.au/~bdm/data/formats.txt)."""

from __future__ import annotations

from .graph import MAX_ORDER, Graph, GraphError

HEADER = b">>graph6<<"


class Graph6Error(GraphError):
    """Malformed graph6 input; ``position`` is the offending byte offset."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at byte {position})"
        super().__init__(message)


def _size_field(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    return bytes([126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])


def encode_graph6(g: Graph) -> bytes:
    out = bytearray(_size_field(g.n))
    word = 0
    filled = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            word = word << 1 | (row >> i & 1)
            filled += 1
            if filled == 6:
                out.append(word + 63)
                word = 0
                filled = 0
    if filled:
        out.append((word << (6 - filled)) + 63)
    return bytes(out)


def parse_graph6(text: bytes | str) -> Graph:
    """Decode one graph6 line; an optional ``>>graph6<<`` prefix is skipped.

    Padding bits of the last byte must be zero so that re-encoding is
    byte-identical to the input.
    """
    data = text.encode("ascii", errors="replace") if isinstance(text, str) else bytes(text)
    data = data.strip()
    offset = 0
    if data.startswith(HEADER):
        data = data[len(HEADER):]
        offset = len(HEADER)
    if not data:
        raise Graph6Error("empty graph6 string", offset)
    for i, ch in enumerate(data):
        if not 63 <= ch <= 126:
            raise Graph6Error(f"byte {ch!r} outside 63..126", offset + i)

    if data[0] != 126:
        n = data[0] - 63
        body = 1
    elif len(data) >= 2 and data[1] == 126:
        raise Graph6Error(f"order field of 8 bytes means n > {MAX_ORDER}", offset + 1)
    else:
        if len(data) < 4:
            raise Graph6Error("truncated order field", offset + len(data))
        n = (data[1] - 63) << 12 | (data[2] - 63) << 6 | (data[3] - 63)
        body = 4
        if n <= 62:
            raise Graph6Error(f"non-canonical long order field for n={n}", offset)
    if n == 0:
        raise Graph6Error("graphs of order 0 are not supported", offset)
    if n > MAX_ORDER:
        raise Graph6Error(f"order {n} exceeds {MAX_ORDER}", offset)

    nbits = n * (n - 1) // 2
    expected = body + (nbits + 5) // 6
    if len(data) != expected:
        raise Graph6Error(
            f"length {len(data)} does not match {expected} expected for n={n}",
            offset + min(len(data), expected),
        )

    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = data[body + k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if nbits % 6:
        pad = 6 - nbits % 6
        if (data[-1] - 63) & ((1 << pad) - 1):
            raise Graph6Error("non-zero padding bits", offset + len(data) - 1)
    return Graph(n, tuple(rows))
