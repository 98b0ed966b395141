"""Bit-exact graph interchange (graph6, DIMACS) and certificate JSON v1."""

from __future__ import annotations

import json

from .coloring import Certificate
from .errors import MalformedDimacs, MalformedGraph6, SchemaViolation
from .graph import Graph, build_graph

_MAX_SHORT_N = 62
_MAX_LONG_N = 258047  # 18-bit length form: '~' + 3 data bytes


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line: header byte(s) then column-major upper-triangle
    bits, 6 per character, zero-padded."""
    s = text.strip()
    if not s:
        raise MalformedGraph6(0, "empty input")
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    for pos, ch in enumerate(s):
        if not (63 <= ord(ch) <= 126):
            raise MalformedGraph6(pos, f"byte {ord(ch)} outside graph6 range")
    if s[0] == "~":
        if len(s) < 4:
            raise MalformedGraph6(len(s), "truncated extended header")
        if s[1] == "~":
            raise MalformedGraph6(1, "8-byte length form unsupported")
        n = 0
        for ch in s[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        body = s[4:]
    else:
        n = ord(s[0]) - 63
        body = s[1:]
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) != need:
        raise MalformedGraph6(len(s), f"expected {need} body chars, got {len(body)}")
    bits = []
    for ch in body:
        val = ord(ch) - 63
        bits.extend((val >> shift) & 1 for shift in range(5, -1, -1))
    if any(bits[nbits:]):
        raise MalformedGraph6(len(s) - 1, "nonzero padding bits")
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    return build_graph(n, edges)


def write_graph6(g: Graph) -> str:
    if g.n > _MAX_LONG_N:
        raise ValueError(f"graph6 writer supports n <= {_MAX_LONG_N}")
    if g.n <= _MAX_SHORT_N:
        head = chr(g.n + 63)
    else:
        head = "~" + "".join(
            chr(((g.n >> shift) & 0x3F) + 63) for shift in (12, 6, 0)
        )
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    body = "".join(
        chr(sum(bit << (5 - k) for k, bit in enumerate(bits[i : i + 6])) + 63)
        for i in range(0, len(bits), 6)
    )
    return head + body


def parse_dimacs(text: str) -> Graph:
    """DIMACS edge format: 'p edge n m' then 1-based 'e u v' lines."""
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise MalformedDimacs(lineno, "duplicate p-line")
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise MalformedDimacs(lineno, "bad p-line")
            try:
                n = int(parts[2])
                int(parts[3])
            except ValueError:
                raise MalformedDimacs(lineno, "non-integer p-line fields")
            if n < 0:
                raise MalformedDimacs(lineno, "negative vertex count")
        elif parts[0] == "e":
            if n is None:
                raise MalformedDimacs(lineno, "e-line before p-line")
            if len(parts) != 3:
                raise MalformedDimacs(lineno, "bad e-line")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise MalformedDimacs(lineno, "non-integer endpoints")
            if not (1 <= u <= n and 1 <= v <= n):
                raise MalformedDimacs(lineno, "endpoint out of range")
            edges.append((u - 1, v - 1))
        else:
            raise MalformedDimacs(lineno, f"unknown record {parts[0]!r}")
    if n is None:
        raise MalformedDimacs(1, "missing p-line")
    return build_graph(n, edges)


def write_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.m}"]
    lines += [f"e {u + 1} {v + 1}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


CERT_VERSION = 1

_CERT_FIELDS = {
    "version",
    "n",
    "m",
    "d",
    "girth",
    "k",
    "strategy",
    "center",
    "neighbor_order",
    "row_order",
    "colors",
    "b_vertices",
    "provenance",
}


def write_certificate(cert: Certificate) -> str:
    doc = {
        "version": CERT_VERSION,
        "n": cert.n,
        "m": cert.m,
        "d": cert.d,
        "girth": cert.girth,
        "k": cert.k,
        "strategy": cert.strategy,
        "center": cert.center,
        "neighbor_order": list(cert.neighbor_order),
        "row_order": cert.row_order,
        "colors": list(cert.colors),
        "b_vertices": {str(cls): v for cls, v in sorted(cert.b_vertices.items())},
        "provenance": cert.provenance,
    }
    return json.dumps(doc, indent=2) + "\n"


def _require(cond: bool, path: str, msg: str) -> None:
    if not cond:
        raise SchemaViolation(path, msg)


def read_certificate(text: str) -> Certificate:
    """Parse and validate a certificate document; unknown fields rejected."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemaViolation("$", f"not valid JSON: {e}") from e
    _require(isinstance(doc, dict), "$", "document must be an object")
    unknown = set(doc) - _CERT_FIELDS
    _require(not unknown, "$", f"unknown fields {sorted(unknown)}")
    missing = _CERT_FIELDS - set(doc)
    _require(not missing, "$", f"missing fields {sorted(missing)}")
    _require(doc["version"] == CERT_VERSION, "$.version", "unsupported version")
    for key in ("n", "m", "d", "girth", "k", "center"):
        _require(isinstance(doc[key], int) and not isinstance(doc[key], bool),
                 f"$.{key}", "must be an integer")
    _require(isinstance(doc["strategy"], str), "$.strategy", "must be a string")
    n, k = doc["n"], doc["k"]
    _require(n >= 0, "$.n", "negative")
    _require(k >= 1, "$.k", "k must be >= 1")
    colors = doc["colors"]
    _require(isinstance(colors, list), "$.colors", "must be an array")
    _require(len(colors) == n, "$.colors", f"length {len(colors)} != n = {n}")
    for i, col in enumerate(colors):
        _require(isinstance(col, int) and not isinstance(col, bool),
                 f"$.colors[{i}]", "must be an integer")
        _require(1 <= col <= k, f"$.colors[{i}]", f"color {col} outside [1, {k}]")
    order = doc["neighbor_order"]
    _require(isinstance(order, list) and all(isinstance(v, int) for v in order),
             "$.neighbor_order", "must be an integer array")
    row_order = doc["row_order"]
    if row_order is not None:
        _require(
            isinstance(row_order, list)
            and all(isinstance(r, list) and all(isinstance(v, int) for v in r) for r in row_order),
            "$.row_order", "must be null or an array of integer arrays",
        )
    bv_raw = doc["b_vertices"]
    _require(isinstance(bv_raw, dict), "$.b_vertices", "must be an object")
    b_vertices = {}
    for key, v in bv_raw.items():
        _require(key.isdigit(), f"$.b_vertices.{key}", "class keys are decimal strings")
        _require(isinstance(v, int) and not isinstance(v, bool),
                 f"$.b_vertices.{key}", "vertex must be an integer")
        b_vertices[int(key)] = v
    prov = doc["provenance"]
    _require(prov is None or isinstance(prov, str), "$.provenance", "must be null or string")
    return Certificate(
        strategy=doc["strategy"],
        center=doc["center"],
        neighbor_order=list(order),
        colors=list(colors),
        b_vertices=b_vertices,
        n=n,
        m=doc["m"],
        d=doc["d"],
        girth=doc["girth"],
        k=k,
        row_order=row_order,
        provenance=prov,
    )
