"""Partial colorings, b-vertex checks, greedy completion, certificates.

Colors are 1..k; an unassigned vertex holds None.  Color d+1 plays the role
of the center's color in every construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import CompletionFailedError, NotTotalError
from .graph import Graph, girth


class PartialColoring:
    """k-bounded partial color assignment with incremental properness."""

    __slots__ = ("k", "_colors")

    def __init__(self, n: int, k: int, colors: list[int | None] | None = None):
        if k < 1:
            raise ValueError("k must be positive")
        self.k = k
        self._colors: list[int | None] = list(colors) if colors is not None else [None] * n

    @property
    def n(self) -> int:
        return len(self._colors)

    def color(self, v: int) -> int | None:
        return self._colors[v]

    def colors(self) -> list[int | None]:
        return list(self._colors)

    def assign(self, v: int, color: int, g: Graph) -> None:
        """Assign a color, enforcing range and local properness."""
        if not (1 <= color <= self.k):
            raise ValueError(f"color {color} outside [1, {self.k}]")
        for w in g.adj[v]:
            if self._colors[w] == color:
                raise AssertionError(
                    f"assigning {color} to {v} clashes with neighbor {w}"
                )
        self._colors[v] = color

    def unassign(self, v: int) -> None:
        self._colors[v] = None

    def swap(self, u: int, v: int) -> None:
        self._colors[u], self._colors[v] = self._colors[v], self._colors[u]

    def is_total(self) -> bool:
        return all(c is not None for c in self._colors)

    def copy(self) -> "PartialColoring":
        return PartialColoring(self.n, self.k, self._colors)


def available_colors(c: PartialColoring, g: Graph, v: int) -> set[int]:
    """Colors of [k] absent from the closed neighborhood of v."""
    g.check_vertex(v)
    used = {c.color(w) for w in g.adj[v]}
    used.add(c.color(v))
    return {col for col in range(1, c.k + 1) if col not in used}


def is_proper(c: PartialColoring, g: Graph) -> bool:
    return all(
        c.color(u) is None or c.color(u) != c.color(v) for u, v in g.edges() if c.color(v) is not None
    )


def b_vertices(c: PartialColoring, g: Graph) -> set[int]:
    """Colored vertices whose closed neighborhood carries all k colors."""
    return {
        v
        for v in range(g.n)
        if c.color(v) is not None and not available_colors(c, g, v)
    }


def is_b_coloring(c: PartialColoring, g: Graph, k: int) -> bool:
    """Proper total coloring using exactly [k], every class owning a b-vertex."""
    if not c.is_total():
        raise NotTotalError("b-coloring check needs a total coloring")
    if c.k != k:
        return False
    if not is_proper(c, g):
        return False
    classes = {c.color(v) for v in range(g.n)}
    if classes != set(range(1, k + 1)):
        return False
    b_by_class = {c.color(v) for v in b_vertices(c, g)}
    return b_by_class == set(range(1, k + 1))


def greedy_complete(
    c: PartialColoring, g: Graph, order: list[int] | None = None
) -> PartialColoring:
    """First-fit over the uncolored vertices in the given scan order.

    Never recolors; raises CompletionFailedError(v) when a vertex has no
    available color (impossible for k >= max degree + 1).
    """
    scan = order if order is not None else range(g.n)
    for v in scan:
        if c.color(v) is not None:
            continue
        used = {c.color(w) for w in g.adj[v]}
        for col in range(1, c.k + 1):
            if col not in used:
                c.assign(v, col, g)
                break
        else:
            raise CompletionFailedError(v)
    return c


@dataclass
class Certificate:
    """Replayable record of a constructed b-coloring.

    b_vertices maps each color class (1..k) to its claimed b-vertex.
    row_order lists, for matrix-based strategies, the S2 vertices of each
    row; None for strategies without a row structure.
    """

    strategy: str
    center: int
    neighbor_order: list[int]
    colors: list[int]
    b_vertices: dict[int, int]
    n: int
    m: int
    d: int
    girth: int
    k: int
    row_order: list[list[int]] | None = None
    provenance: str | None = None


@dataclass(frozen=True)
class VerifyResult:
    ok: bool
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def verify_certificate(cert: Certificate, g: Graph) -> VerifyResult:
    """Accept iff fingerprint, totality, properness, class count and every
    claimed b-vertex check out; Reject carries the first failing predicate."""
    d = g.regular_degree()
    if cert.n != g.n or cert.m != g.m or d is None or cert.d != d:
        return VerifyResult(False, "FingerprintMismatch")
    if cert.girth != girth(g):
        return VerifyResult(False, "FingerprintMismatch")
    if not (0 <= cert.center < g.n):
        return VerifyResult(False, "BadCenter")
    if sorted(cert.neighbor_order) != sorted(g.adj[cert.center]):
        return VerifyResult(False, "BadNeighborOrder")
    if len(cert.colors) != g.n:
        return VerifyResult(False, "NotTotal")
    if any(col is None for col in cert.colors):
        return VerifyResult(False, "NotTotal")
    if any(not (1 <= col <= cert.k) for col in cert.colors):
        return VerifyResult(False, "ColorOutOfRange")
    c = PartialColoring(g.n, cert.k, list(cert.colors))
    if not is_proper(c, g):
        return VerifyResult(False, "ImproperEdge")
    if {cert.colors[v] for v in range(g.n)} != set(range(1, cert.k + 1)):
        return VerifyResult(False, "WrongColorCount")
    if sorted(cert.b_vertices) != list(range(1, cert.k + 1)):
        return VerifyResult(False, "MissingClass")
    for cls, v in cert.b_vertices.items():
        if not (0 <= v < g.n) or cert.colors[v] != cls:
            return VerifyResult(False, "BadBVertexClass")
        if available_colors(c, g, v):
            return VerifyResult(False, "NotABVertex")
    return VerifyResult(True)
