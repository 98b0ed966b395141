"""Simple undirected graphs and the structural queries the constructions need.

Vertices are dense integers 0..n-1.  A Graph is immutable after
construction; every query takes it by read access only.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .errors import (
    GirthTooSmallError,
    NotInAnyBunchError,
    NotInS2Error,
    SelfLoopError,
    VertexOutOfRangeError,
)

INF = math.inf


class Graph:
    """Undirected simple graph on vertices 0..n-1, adjacency stored as sets."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: list[set[int]]):
        self.n = n
        self.adj = adj

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def regular_degree(self) -> int | None:
        """Common degree if the graph is regular, else None."""
        if self.n == 0:
            return None
        degs = {len(a) for a in self.adj}
        return degs.pop() if len(degs) == 1 else None

    def check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise VertexOutOfRangeError(f"vertex {v} not in 0..{self.n - 1}")

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a simple graph; duplicate edges collapse, self-loops are errors."""
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        if not (0 <= u < n) or not (0 <= v < n):
            raise VertexOutOfRangeError(f"edge ({u},{v}) outside 0..{n - 1}")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, adj)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Image of g under the vertex permutation v -> perm[v]."""
    if sorted(perm) != list(range(g.n)):
        raise VertexOutOfRangeError("perm is not a permutation of the vertex set")
    return build_graph(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


def distances(g: Graph, v: int) -> list[float]:
    """BFS distances from v; unreachable vertices map to inf."""
    g.check_vertex(v)
    dist: list[float] = [INF] * g.n
    dist[v] = 0
    q = deque([v])
    while q:
        u = q.popleft()
        for w in g.adj[u]:
            if dist[w] == INF:
                dist[w] = dist[u] + 1
                q.append(w)
    return dist


def sphere(g: Graph, v: int, k: int) -> set[int]:
    """Vertices at distance exactly k from v."""
    if k < 0:
        raise ValueError("radius must be nonnegative")
    dist = distances(g, v)
    return {u for u in range(g.n) if dist[u] == k}


def girth(g: Graph) -> float:
    """Length of a shortest cycle, or inf for acyclic graphs.

    BFS from every vertex; the first non-tree edge seen from each root gives
    a closed walk through the root, and the minimum over all roots is exact.
    """
    best = INF
    for root in range(g.n):
        dist: list[float] = [INF] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        q = deque([root])
        while q:
            u = q.popleft()
            if 2 * dist[u] >= best:
                break
            for w in g.adj[u]:
                if dist[w] == INF:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    q.append(w)
                elif parent[u] != w:
                    cand = dist[u] + dist[w] + 1
                    if cand < best:
                        best = cand
    return best


@dataclass
class BunchStructure:
    """Ordered bunches around a center vertex.

    ``bunches[i]`` lists the neighbors of ``neighbor_order[i]`` other than
    the center.  ``position`` maps each bunch vertex to its 0-based
    (bunch index, position within bunch).
    """

    center: int
    neighbor_order: tuple[int, ...]
    bunches: list[list[int]]
    position: dict[int, tuple[int, int]] = field(default_factory=dict)

    def __post_init__(self):
        if not self.position:
            for i, bunch in enumerate(self.bunches):
                for j, v in enumerate(bunch):
                    self.position[v] = (i, j)

    @property
    def d(self) -> int:
        return len(self.neighbor_order)

    def bunch_of(self, v: int) -> int:
        """0-based bunch index of v."""
        if v not in self.position:
            raise NotInAnyBunchError(f"vertex {v} is in no bunch of center {self.center}")
        return self.position[v][0]


def bunches(g: Graph, x: int, neighbor_order: Sequence[int] | None = None) -> BunchStructure:
    """Bunch structure at x: bunch i is N(x_i) \\ {x} for the i-th neighbor.

    Raises GirthTooSmallError when a vertex would fall in two bunches (or in
    a bunch and in N[x]), which only happens below girth 5.
    """
    g.check_vertex(x)
    if neighbor_order is None:
        order = tuple(sorted(g.adj[x]))
    else:
        order = tuple(neighbor_order)
        if sorted(order) != sorted(g.adj[x]):
            raise ValueError("neighbor_order is not a permutation of N(x)")
    closed = set(g.adj[x]) | {x}
    seen: set[int] = set()
    bunch_lists: list[list[int]] = []
    for xi in order:
        bunch = sorted(g.adj[xi] - {x})
        for v in bunch:
            if v in seen or v in closed:
                raise GirthTooSmallError(
                    f"vertex {v} falls in two bunches of {x}; girth < 5"
                )
        seen.update(bunch)
        bunch_lists.append(bunch)
    return BunchStructure(center=x, neighbor_order=order, bunches=bunch_lists)


def backward_degree(bs: BunchStructure, g: Graph, v: int) -> int:
    """Neighbors of v lying in bunches with smaller index than v's bunch."""
    i = bs.bunch_of(v)
    return sum(1 for w in g.adj[v] if w in bs.position and bs.position[w][0] < i)


def s2_degree(g: Graph, x: int, v: int) -> int:
    """Degree of v inside the subgraph induced by S2(x)."""
    s2 = sphere(g, x, 2)
    if v not in s2:
        raise NotInS2Error(f"vertex {v} is not at distance 2 from {x}")
    return sum(1 for w in g.adj[v] if w in s2)


def count_c6_in_n2(g: Graph, x: int) -> int:
    """Number of 6-cycles through x inside G[N2[x]], by the closed formula.

    Under girth >= 5 each such cycle is counted exactly once at its vertex
    antipodal to x, contributing C(p, 2) for an S2 vertex of induced
    S2-degree p.
    """
    if girth(g) < 5:
        raise GirthTooSmallError("C6-in-N2 formula needs girth >= 5")
    s2 = sphere(g, x, 2)
    total = 0
    for v in s2:
        p = sum(1 for w in g.adj[v] if w in s2)
        total += p * (p - 1) // 2
    return total


def count_c6_through_vertex(g: Graph, x: int) -> int:
    """Number of distinct 6-cycles of g containing x.

    Depth-first path enumeration from x; the two traversal directions of a
    cycle are collapsed by requiring first step < last step.
    """
    g.check_vertex(x)
    count = 0
    path = [x]
    on_path = {x}

    def extend(v: int, depth: int):
        nonlocal count
        if depth == 5:
            if x in g.adj[v] and path[1] < v:
                count += 1
            return
        for w in g.adj[v]:
            if w not in on_path:
                path.append(w)
                on_path.add(w)
                extend(w, depth + 1)
                on_path.discard(w)
                path.pop()

    for first in g.adj[x]:
        path.append(first)
        on_path.add(first)
        extend(first, 1)
        on_path.discard(first)
        path.pop()
    return count


def closed_bunches(g: Graph, x: int) -> list[int]:
    """0-based indices of bunches whose vertices keep all neighbors in N2(x)."""
    if girth(g) < 5:
        raise GirthTooSmallError("closed bunches need girth >= 5")
    bs = bunches(g, x)
    n2 = set(g.adj[x]) | sphere(g, x, 2)
    out = []
    for i, bunch in enumerate(bs.bunches):
        if all(g.adj[v] - {x} <= n2 for v in bunch):
            out.append(i)
    return out


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by s, plus the old->new identifier map."""
    verts = sorted(set(s))
    for v in verts:
        g.check_vertex(v)
    idx = {v: i for i, v in enumerate(verts)}
    edges = [
        (idx[u], idx[v]) for u, v in combinations(verts, 2) if g.has_edge(u, v)
    ]
    return build_graph(len(verts), edges), idx
