"""Wire formats: bit-exact graph6 for 2-uniform hypergraphs, and the
toolkit's own plain-text hypergraph format ("hg").

graph6 packs the upper-triangle adjacency bits x(0,1), x(0,2), x(1,2),
x(0,3), ... in column order, six bits per printable byte (value =
byte - 63, most significant bit first), after the N(n) length prefix.

The hg format is one header line "n m", then m edge lines of strictly
increasing 0-based vertex ids; '#' starts a comment line.  Writing is
canonical (edges sorted lexicographically, LF line endings) so that
parse(write(h)) round-trips byte-identically.
"""

from __future__ import annotations

import itertools

from .hypergraph import Hypergraph, uniformity, validate


class FormatError(ValueError):
    pass


def _decode_n(data: bytes) -> tuple[int, int]:
    """Decode the graph6 length prefix; returns (n, bytes consumed)."""
    if not data:
        raise FormatError("empty graph6 record")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise FormatError("truncated 36-bit length prefix")
        vals = [b - 63 for b in data[2:8]]
        n = 0
        for v in vals:
            n = (n << 6) | v
        return n, 8
    if len(data) < 4:
        raise FormatError("truncated 18-bit length prefix")
    vals = [b - 63 for b in data[1:4]]
    return (vals[0] << 12) | (vals[1] << 6) | vals[2], 4


def parse_graph6(text: str) -> Hypergraph:
    """Decode one graph6 record (whitespace anywhere is ignored)."""
    raw = "".join(text.split())
    data = raw.encode("ascii")
    for b in data:
        if not 63 <= b <= 126:
            raise FormatError(f"byte {b!r} outside graph6 range 63..126")
    n, off = _decode_n(data)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - off < nbytes:
        raise FormatError(
            f"truncated bit vector: need {nbytes} bytes, have {len(data) - off}"
        )
    if len(data) - off > nbytes:
        raise FormatError("trailing garbage after adjacency bits")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = data[off + k // 6] - 63
            if (byte >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    # padding bits must be zero for a canonical record
    while k < 6 * nbytes:
        byte = data[off + k // 6] - 63
        if (byte >> (5 - k % 6)) & 1:
            raise FormatError("nonzero padding bits")
        k += 1
    return Hypergraph(n, tuple(sorted(edges)))


def _encode_n(n: int) -> bytes:
    if n < 0:
        raise FormatError("negative vertex count")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, (n >> 12) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63])
    parts = [(n >> (6 * i)) & 63 for i in range(5, -1, -1)]
    return bytes([126, 126] + [p + 63 for p in parts])


def write_graph6(h: Hypergraph) -> str:
    if h.edges and uniformity(h) != 2:
        raise FormatError("graph6 requires a 2-uniform hypergraph")
    adj = set(h.edges)
    bits = []
    for j in range(1, h.n):
        for i in range(j):
            bits.append(1 if (i, j) in adj else 0)
    while len(bits) % 6:
        bits.append(0)
    body = bytes(
        63 + (bits[k] << 5 | bits[k + 1] << 4 | bits[k + 2] << 3
              | bits[k + 3] << 2 | bits[k + 4] << 1 | bits[k + 5])
        for k in range(0, len(bits), 6)
    )
    return (_encode_n(h.n) + body).decode("ascii")


def parse_hg(text: str) -> Hypergraph:
    lines = text.splitlines()
    header = None
    edges = []
    expect = None
    for lineno, line in enumerate(lines, start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        fields = stripped.split()
        try:
            ids = [int(f) for f in fields]
        except ValueError:
            raise FormatError(f"line {lineno}: non-integer field")
        if header is None:
            if len(ids) != 2:
                raise FormatError(f"line {lineno}: header must be 'n m'")
            header = (ids[0], ids[1])
            expect = ids[1]
            continue
        if any(ids[i] >= ids[i + 1] for i in range(len(ids) - 1)):
            raise FormatError(f"line {lineno}: ids not strictly increasing")
        edges.append(tuple(ids))
    if header is None:
        raise FormatError("missing header line")
    n, m = header
    if len(edges) != m:
        raise FormatError(f"header claims {m} edges, found {len(edges)}")
    h = Hypergraph(n, tuple(edges))
    problems = validate(h)
    if problems:
        raise FormatError("; ".join(problems))
    return h


def write_hg(h: Hypergraph) -> str:
    problems = validate(h)
    if problems:
        raise FormatError("; ".join(problems))
    lines = [f"{h.n} {h.m}"]
    lines.extend(" ".join(map(str, e)) for e in sorted(h.edges))
    return "\n".join(lines) + "\n"


def read_hg(path) -> Hypergraph:
    with open(path, "r", encoding="ascii") as fh:
        return parse_hg(fh.read())


def write_hg_file(h: Hypergraph, path) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(write_hg(h))


def complete_pairs(n: int) -> list[tuple[int, int]]:
    return list(itertools.combinations(range(n), 2))
