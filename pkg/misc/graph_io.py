"""graph6, DOT and plain edge-list I/O.

graph6 follows the format description shipped with nauty: N(n) then the upper
triangle read column by column (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed
six bits per byte, each byte offset by 63.
"""
from data.config import construction_cap
from misc.errors import Graph6ParseError, GraphInputError
from misc.graph import Graph, make_graph

HEADER = ">>graph6<<"
SMALL_N = 62
MEDIUM_N = 258047
LARGE_N = 68719476735


def _encode_size(n: int) -> bytes:
    if n < 0 or n > LARGE_N:
        raise GraphInputError(f"graph6 cannot encode {n} vertices")
    if n <= SMALL_N:
        return bytes([n + 63])
    if n <= MEDIUM_N:
        return bytes([126] + [((n >> shift) & 63) + 63 for shift in (12, 6, 0)])
    return bytes([126, 126] + [((n >> shift) & 63) + 63 for shift in (30, 24, 18, 12, 6, 0)])


def graph6_encode(g: Graph) -> str:
    out = bytearray(_encode_size(g.n))
    value, filled = 0, 0
    for j in range(1, g.n):
        column = g.rows[j]
        for i in range(j):
            value = (value << 1) | ((column >> i) & 1)
            filled += 1
            if filled == 6:
                out.append(value + 63)
                value, filled = 0, 0
    if filled:
        out.append((value << (6 - filled)) + 63)
    return out.decode("ascii")


def _decode_size(data: bytes) -> tuple[int, int]:
    if not data:
        raise Graph6ParseError("empty graph6 string", 0)
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise Graph6ParseError("truncated 8-byte vertex count", len(data))
        n = 0
        for byte in data[2:8]:
            n = (n << 6) | (byte - 63)
        return n, 8
    if len(data) < 4:
        raise Graph6ParseError("truncated 4-byte vertex count", len(data))
    n = 0
    for byte in data[1:4]:
        n = (n << 6) | (byte - 63)
    return n, 4


def graph6_decode(text: str | bytes, cap: int | None = None) -> Graph:
    """Parse one graph6 line (optional header and trailing newline allowed)."""
    if isinstance(text, str):
        try:
            data = text.encode("ascii")
        except UnicodeEncodeError as e:
            raise Graph6ParseError("non-ASCII character", e.start)
    else:
        data = bytes(text)
    start = len(HEADER) if data.startswith(HEADER.encode()) else 0
    data = data[start:].rstrip(b"\r\n")
    for offset, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise Graph6ParseError(f"byte {byte!r} outside the graph6 range 63..126", start + offset)
    n, pos = _decode_size(data)
    cap = construction_cap if cap is None else cap
    if n > cap:
        raise Graph6ParseError(f"{n} vertices exceeds the cap of {cap}", start)
    nbits = n * (n - 1) // 2
    expected = pos + (nbits + 5) // 6
    if len(data) != expected:
        raise Graph6ParseError(f"expected {expected} bytes for {n} vertices, found {len(data)}",
                               start + min(len(data), expected))
    rows = [0] * n
    bit = 0
    for j in range(1, n):
        for i in range(j):
            byte = data[pos + bit // 6] - 63
            if (byte >> (5 - bit % 6)) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            bit += 1
    if nbits % 6:
        padding = (data[-1] - 63) & ((1 << (6 - nbits % 6)) - 1)
        if padding:
            raise Graph6ParseError("non-zero padding bits", start + len(data) - 1)
    return Graph(n, tuple(rows))


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines.extend(f"  {v};" for v in range(g.n) if not g.rows[v])
    lines.extend(f"  {u} -- {v};" for u, v in g.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str, cap: int | None = None) -> Graph:
    """One ``u v`` pair per line, 0-indexed; a lone integer line fixes the vertex count.

    Blank lines and ``#`` comments are skipped.
    """
    n, edges = None, []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        try:
            values = [int(field) for field in fields]
        except ValueError:
            raise GraphInputError(f"line {number}: expected integers, got {raw!r}")
        if len(values) == 1 and n is None and not edges:
            n = values[0]
        elif len(values) == 2:
            edges.append((values[0], values[1]))
        else:
            raise GraphInputError(f"line {number}: expected 'u v', got {raw!r}")
    if n is None:
        n = 1 + max((max(pair) for pair in edges), default=-1)
    return make_graph(n, edges, cap=construction_cap if cap is None else cap)


def format_edge_list(g: Graph) -> str:
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"

