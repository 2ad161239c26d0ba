"""graph6 codec, exhaustive labeled enumeration and seeded G(n, p) sampling."""

from __future__ import annotations

import random
from typing import Iterable, Iterator, TextIO

from .errors import Graph6ParseError, TooLargeError
from .graph import Graph

GRAPH6_HEADER = ">>graph6<<"
MAX_GRAPH6_N = 62
MAX_ENUMERATE_N = 7


def _npairs(n: int) -> int:
    return n * (n - 1) // 2


def parse_graph6(line: str) -> Graph:
    s = line.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    if not s:
        raise Graph6ParseError("empty graph6 string", 0)
    for offset, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6ParseError(f"byte {ch!r} outside 63..126", offset)
    n = ord(s[0]) - 63
    if n > MAX_GRAPH6_N:
        raise Graph6ParseError("multi-byte size header (n > 62) is not supported", 0)
    m = _npairs(n)
    expected = 1 + -(-m // 6)
    if len(s) != expected:
        offset = min(len(s), expected)
        raise Graph6ParseError(f"expected {expected} bytes for n={n}, got {len(s)}", offset)
    bits = 0
    for ch in s[1:]:
        bits = bits << 6 | (ord(ch) - 63)
    pad = 6 * (expected - 1) - m
    if bits & ((1 << pad) - 1):
        raise Graph6ParseError("non-zero padding bits", len(s) - 1)
    bits >>= pad
    # first pair in the stream is the most significant bit
    key = 0
    for k in range(m):
        if bits >> (m - 1 - k) & 1:
            key |= 1 << k
    return Graph.from_key(n, key)


def emit_graph6(g: Graph) -> str:
    if g.n > MAX_GRAPH6_N:
        raise TooLargeError(f"n={g.n} needs a multi-byte graph6 header (max {MAX_GRAPH6_N})")
    m = _npairs(g.n)
    key = g.key()
    nbytes = -(-m // 6)
    out = [chr(63 + g.n)]
    for b in range(nbytes):
        chunk = 0
        for k in range(6 * b, 6 * b + 6):
            chunk = chunk << 1 | (key >> k & 1 if k < m else 0)
        out.append(chr(63 + chunk))
    return "".join(out)


def read_graph6(lines: Iterable[str]) -> Iterator[tuple[int, Graph | Graph6ParseError]]:
    """Yield ``(line_number, graph_or_error)``; blank lines and a bare header are skipped."""
    for lineno, raw in enumerate(lines, 1):
        s = raw.strip()
        if lineno == 1 and s.startswith(GRAPH6_HEADER):
            s = s[len(GRAPH6_HEADER):]
        if not s:
            continue
        try:
            yield lineno, parse_graph6(s)
        except Graph6ParseError as exc:
            yield lineno, exc


def write_graph6(graphs: Iterable[Graph], out: TextIO) -> int:
    count = 0
    for g in graphs:
        out.write(emit_graph6(g) + "\n")
        count += 1
    return count


def enumerate_labeled(n: int) -> Iterator[Graph]:
    """All labeled graphs on ``n`` vertices, ascending by upper-triangle key."""
    if n > MAX_ENUMERATE_N:
        raise TooLargeError(
            f"{2 ** _npairs(n)} labeled graphs on {n} vertices; use gnp sampling for n > {MAX_ENUMERATE_N}"
        )
    if n < 0:
        raise ValueError("n must be non-negative")
    for key in range(1 << _npairs(n)):
        yield Graph.from_key(n, key)


def gnp(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p); pairs visited in lexicographic order, one draw each."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p={p} outside [0, 1]")
    rng = random.Random(seed)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)
