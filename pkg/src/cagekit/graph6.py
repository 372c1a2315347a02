"""graph6 codec.

Bit-exact implementation of the standard ASCII format for simple undirected
graphs: a size header followed by the upper triangle of the adjacency matrix,
column by column, packed into 6-bit groups offset by 63.  One graph per line,
LF terminated.
"""

from __future__ import annotations

from ._core.pure import encode_body, g6_header

MAX_ORDER = 8192


class Graph6Error(ValueError):
    """Malformed graph6 input; `offset` is the byte position of the fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def encode(graph) -> str:
    """graph6 line (without newline) for a Graph."""
    n = graph.order
    if n > MAX_ORDER:
        raise ValueError(f"graph too large to encode: {n} > {MAX_ORDER} vertices")
    return (g6_header(n) + encode_body(n, list(graph.adjacency_masks))).decode("ascii")


def decode(line):
    """Parse one graph6 line into a Graph.

    Accepts an optional '>>graph6<<' prefix and a trailing newline.  Raises
    Graph6Error with the offending byte offset on malformed input.
    """
    from .graph import Graph

    if isinstance(line, bytes):
        data = line
    else:
        try:
            data = line.encode("latin-1")
        except UnicodeEncodeError as exc:
            raise Graph6Error("character outside graph6 alphabet", exc.start) from None
    if data.endswith(b"\n"):
        data = data[:-1]
    if data.endswith(b"\r"):
        data = data[:-1]
    if data.startswith(b">>graph6<<"):
        data = data[len(b">>graph6<<"):]
    if not data:
        raise Graph6Error("empty graph6 line", 0)
    for off, byte in enumerate(data):
        if byte < 63 or byte > 126:
            raise Graph6Error(f"character {byte!r} outside graph6 alphabet", off)
    pos = 0
    if data[0] == 126:
        if len(data) >= 2 and data[1] == 126:
            raise Graph6Error("graph6 orders above 258047 are not supported", 1)
        if len(data) < 4:
            raise Graph6Error("truncated size header", len(data))
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        pos = 4
    else:
        n = data[0] - 63
        pos = 1
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - pos < nbytes:
        raise Graph6Error("truncated adjacency bits", len(data))
    if len(data) - pos > nbytes:
        raise Graph6Error("trailing bytes after adjacency bits", pos + nbytes)
    masks = [0] * n
    bit = 0
    i, j = 0, 1  # bits run x(0,1), x(0,2), x(1,2), x(0,3), ... column by column
    for idx in range(nbytes):
        group = data[pos + idx] - 63
        for shift in (5, 4, 3, 2, 1, 0):
            if bit >= nbits:
                if (group >> shift) & 1:
                    raise Graph6Error("nonzero padding bits", pos + idx)
                continue
            if (group >> shift) & 1:
                masks[i] |= 1 << j
                masks[j] |= 1 << i
            bit += 1
            i += 1
            if i == j:
                i = 0
                j += 1
    return Graph._from_masks(n, masks)


def iter_decode(lines, on_error=None):
    """Decode an iterable of graph6 lines, skipping blanks.

    Malformed lines raise unless on_error is given, in which case it is called
    with (line_number, exception) and the line is skipped.
    """
    for lineno, line in enumerate(lines, start=1):
        stripped = line.strip()
        if not stripped:
            continue
        try:
            yield decode(stripped)
        except Graph6Error as exc:
            if on_error is None:
                raise
            on_error(lineno, exc)


def write_lines(graphs, fh) -> int:
    count = 0
    for graph in graphs:
        fh.write(encode(graph) + "\n")
        count += 1
    return count
