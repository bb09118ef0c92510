#!/usr/bin/env python3
"""
graph6 text encoding: size header, then the upper triangle in column order (0,1),(0,2),(1,2),(0,3),...
packed big-endian into 6-bit groups offset by 63 and zero-padded.
"""

import logging

from bk_lab.graphs.graph import MAX_VERTICES, Graph, GraphError

logger = logging.getLogger(__name__)

GRAPH6_HEADER = ">>graph6<<"
_SMALL_N_LIMIT = 62


class Graph6Error(GraphError):
    def __init__(self, message: str, line_no: int = None):
        super().__init__(message if line_no is None else "line {}: {}".format(line_no, message))
        self.line_no = line_no


def _encode_size(n: int) -> str:
    if n <= _SMALL_N_LIMIT:
        return chr(n + 63)
    return "~" + "".join(chr(((n >> shift) & 63) + 63) for shift in (12, 6, 0))


def _decode_size(data: bytes):
    """
    :return: (n, payload offset)
    """
    if not data:
        raise Graph6Error("empty graph6 string")
    if data[0] != 126:
        if data[0] < 63 or data[0] > 126:
            raise Graph6Error("malformed header byte {!r}".format(chr(data[0])))
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        raise Graph6Error("graphs with more than 258047 vertices are not supported")
    if len(data) < 4:
        raise Graph6Error("truncated size header")
    n = 0
    for byte in data[1:4]:
        if not 63 <= byte <= 126:
            raise Graph6Error("malformed header byte {!r}".format(chr(byte)))
        n = (n << 6) | (byte - 63)
    return n, 4


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER) :]
    try:
        data = s.encode("ascii")
    except UnicodeEncodeError:
        raise Graph6Error("non-ascii characters in graph6 string")

    n, offset = _decode_size(data)
    if n > MAX_VERTICES:
        raise Graph6Error("graph has {} vertices, more than the supported {}".format(n, MAX_VERTICES))

    total_bits = n * (n - 1) // 2
    expected = (total_bits + 5) // 6
    payload = data[offset:]
    if len(payload) < expected:
        raise Graph6Error("truncated payload: expected {} bytes, got {}".format(expected, len(payload)))
    if len(payload) > expected:
        raise Graph6Error("trailing garbage after {} payload bytes".format(expected))

    value = 0
    for byte in payload:
        if not 63 <= byte <= 126:
            raise Graph6Error("payload byte {!r} out of range".format(chr(byte)))
        value = (value << 6) | (byte - 63)
    padding = expected * 6 - total_bits

    rows = [0] * n
    k = total_bits - 1 + padding
    for j in range(1, n):
        for i in range(j):
            if value >> k & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k -= 1
    return Graph._trusted(n, rows)


def to_graph6(g: Graph) -> str:
    bits = []
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            bits.append(row >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    chars = [_encode_size(g.n)]
    for start in range(0, len(bits), 6):
        group = 0
        for bit in bits[start : start + 6]:
            group = (group << 1) | bit
        chars.append(chr(group + 63))
    return "".join(chars)
