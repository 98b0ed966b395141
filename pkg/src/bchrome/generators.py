"""Named graph constructions and a seeded random regular generator."""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass

from .errors import GenerationFailed
from .graph import Graph, build_graph


@dataclass
class GenSpec:
    """Parameters for random_regular_girth; deterministic per seed."""

    n: int
    d: int
    girth_min: int = 5
    seed: int = 0
    max_attempts: int = 200
    swap_budget: int = 20_000


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def petersen() -> Graph:
    """Outer 5-cycle 0-4, spokes i <-> i+5, inner pentagram 5-7-9-6-8-5."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, edges)


def hoffman_singleton() -> Graph:
    """The 7-regular girth-5 Moore graph on 50 vertices.

    Five pentagons P_0..P_4 (vertices 5h+j, edges j ~ j+-1 mod 5), five
    pentagrams Q_0..Q_4 (vertices 25+5i+j, edges j ~ j+-2 mod 5), and
    P_h vertex j adjacent to Q_i vertex (h*i + j) mod 5.
    """
    edges = []
    for h in range(5):
        for j in range(5):
            edges.append((5 * h + j, 5 * h + (j + 1) % 5))
    for i in range(5):
        for j in range(5):
            edges.append((25 + 5 * i + j, 25 + 5 * i + (j + 2) % 5))
    for h in range(5):
        for i in range(5):
            for j in range(5):
                edges.append((5 * h + j, 25 + 5 * i + (h * i + j) % 5))
    return build_graph(50, edges)


# The unique 4-regular girth-5 graph on 19 vertices (the (4,5)-cage).
# Frozen from a seeded run of random_regular_girth; uniqueness of the cage
# makes any such output this graph up to isomorphism.
_ROBERTSON_EDGES = None  # filled in below


def robertson() -> Graph:
    global _ROBERTSON_EDGES
    if _ROBERTSON_EDGES is None:
        g = random_regular_girth(GenSpec(n=19, d=4, girth_min=5, seed=7, max_attempts=500))
        _ROBERTSON_EDGES = g.edges()
    return build_graph(19, _ROBERTSON_EDGES)


def _pairing(n: int, d: int, rng: random.Random) -> Graph | None:
    """One configuration-model draw, pairing stubs while dodging loops and
    multi-edges; None when the leftover stubs admit no simple pairing."""
    stubs = [v for v in range(n) for _ in range(d)]
    rng.shuffle(stubs)
    adj: list[set[int]] = [set() for _ in range(n)]
    while stubs:
        u = stubs.pop()
        choices = [i for i, v in enumerate(stubs) if v != u and v not in adj[u]]
        if not choices:
            return None
        i = choices[rng.randrange(len(choices))]
        v = stubs.pop(i)
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, adj)


def _short_cycle(g: Graph, below: int) -> list[tuple[int, int]] | None:
    """Edge list of some cycle shorter than `below`, or None.

    BFS from every vertex; the first closing edge found at a root whose
    closed walk is short enough is reconstructed into a cycle.
    """
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        q = deque([root])
        while q:
            u = q.popleft()
            if 2 * dist[u] + 1 >= below:
                break
            for w in g.adj[u]:
                if dist[w] == -1:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    q.append(w)
                elif parent[u] != w and dist[u] + dist[w] + 1 < below:
                    path_u = []
                    a = u
                    while a != -1:
                        path_u.append(a)
                        a = parent[a]
                    path_w = []
                    a = w
                    while a != -1:
                        path_w.append(a)
                        a = parent[a]
                    common = set(path_u) & set(path_w)
                    # Trim to the walk u..meet..w; it is a cycle when the
                    # two paths only share the meeting point.
                    meet = next(a for a in path_u if a in common)
                    iu = path_u.index(meet)
                    iw = path_w.index(meet)
                    verts = path_u[:iu] + [meet] + list(reversed(path_w[:iw]))
                    if len(set(verts)) == len(verts):
                        cyc = [
                            (verts[i], verts[(i + 1) % len(verts)])
                            for i in range(len(verts))
                        ]
                        if len(cyc) < below:
                            return cyc
    return None


def _short_cycle_score(g: Graph, girth_min: int) -> int:
    """Weighted count of cycles shorter than girth_min (lengths 3 and 4)."""
    score = 0
    if girth_min > 3:
        tri = sum(len(g.adj[u] & g.adj[v]) for u, v in g.edges()) // 3
        score += 3 * tri
    if girth_min > 4:
        quad = 0
        for u in range(g.n):
            for v in range(u + 1, g.n):
                co = len(g.adj[u] & g.adj[v])
                quad += co * (co - 1) // 2
        score += quad // 2
    return score


def _apply_swap(g: Graph, u: int, v: int, a: int, b: int) -> None:
    g.adj[u].discard(v)
    g.adj[v].discard(u)
    g.adj[a].discard(b)
    g.adj[b].discard(a)
    g.adj[u].add(a)
    g.adj[a].add(u)
    g.adj[v].add(b)
    g.adj[b].add(v)


def _try_swap_repair(g: Graph, girth_min: int, rng: random.Random, budget: int) -> bool:
    """Remove short cycles by degree-preserving 2-swaps.

    Hill-climbs on the short-cycle count, accepting plateau moves; one edge
    of a shortest short cycle is always an endpoint of the swap so plateau
    moves still shuffle the offending structure.
    """
    if girth_min <= 3:
        return True
    score = _short_cycle_score(g, girth_min)
    for _ in range(budget):
        if score == 0:
            return True
        cyc = _short_cycle(g, girth_min)
        if cyc is None:
            return True
        u, v = cyc[rng.randrange(len(cyc))]
        edges = g.edges()
        for _ in range(60):
            a, b = edges[rng.randrange(len(edges))]
            if rng.random() < 0.5:
                a, b = b, a
            if len({u, v, a, b}) < 4:
                continue
            # (u,v),(a,b) -> (u,a),(v,b); keep the graph simple
            if a in g.adj[u] or b in g.adj[v]:
                continue
            if v not in g.adj[u] or b not in g.adj[a]:
                continue
            _apply_swap(g, u, v, a, b)
            new_score = _short_cycle_score(g, girth_min)
            if new_score <= score:
                score = new_score
                break
            _apply_swap(g, u, a, v, b)  # revert
        # A round with no accepted partner just retries with a fresh cycle
        # edge; the budget bounds the whole loop.
    return score == 0 and _short_cycle(g, girth_min) is None


def random_regular_girth(spec: GenSpec) -> Graph:
    """Configuration-model pairing plus local edge-swap repair of short cycles.

    Deterministic per seed.  Raises GenerationFailed after max_attempts
    exhausted pairings.
    """
    if spec.n * spec.d % 2 != 0:
        raise ValueError("n*d must be even")
    if spec.d >= spec.n:
        raise ValueError("degree must be below n")
    rng = random.Random(spec.seed)
    for _ in range(spec.max_attempts):
        g = _pairing(spec.n, spec.d, rng)
        if g is None:
            continue
        if _try_swap_repair(g, spec.girth_min, rng, spec.swap_budget):
            return g
    raise GenerationFailed(spec.max_attempts)
