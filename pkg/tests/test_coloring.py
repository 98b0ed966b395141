"""Partial colorings, b-vertex predicates, greedy completion, verifier."""

import pytest

from bchrome.coloring import (
    Certificate,
    PartialColoring,
    available_colors,
    b_vertices,
    greedy_complete,
    is_b_coloring,
    is_proper,
    verify_certificate,
)
from bchrome.errors import CompletionFailedError, NotTotalError
from bchrome.generators import cycle, hoffman_singleton, petersen
from bchrome.graph import build_graph


def test_assign_rejects_out_of_range(pet):
    c = PartialColoring(10, 3)
    with pytest.raises(ValueError):
        c.assign(0, 4, pet)


def test_assign_rejects_clash(pet):
    c = PartialColoring(10, 3)
    c.assign(0, 1, pet)
    with pytest.raises(AssertionError):
        c.assign(1, 1, pet)


def test_available_colors(pet):
    c = PartialColoring(10, 4)
    assert available_colors(c, pet, 0) == {1, 2, 3, 4}
    c.assign(0, 4, pet)
    c.assign(1, 1, pet)
    c.assign(4, 2, pet)
    assert available_colors(c, pet, 0) == {3}
    c.assign(5, 3, pet)
    assert available_colors(c, pet, 0) == set()
    assert 0 in b_vertices(c, pet)


def test_is_proper(pet):
    c = PartialColoring(10, 3)
    assert is_proper(c, pet)
    c.assign(0, 1, pet)
    assert is_proper(c, pet)
    c._colors[1] = 1  # bypass the guarded assign
    assert not is_proper(c, pet)


def test_is_b_coloring_requires_total(c5):
    c = PartialColoring(5, 3)
    with pytest.raises(NotTotalError):
        is_b_coloring(c, c5, 3)


def test_is_b_coloring_c5():
    g = cycle(5)
    # 1-2-3-1-2 around the cycle leaves every class with a b-vertex
    c = PartialColoring(5, 3, [1, 2, 3, 1, 2])
    assert is_b_coloring(c, g, 3)
    # a proper 3-coloring where color 3 appears once at a vertex whose
    # neighborhood misses color 3 entirely for the other classes
    c2 = PartialColoring(5, 3, [1, 2, 1, 2, 3])
    # vertex colors: 0:1 1:2 2:1 3:2 4:3; class-1 b-vertex needs nbrs {2,3}
    # vertex 0 has nbrs 1 (2) and 4 (3): b-vertex. class 2: vertex 3 has
    # nbrs 2 (1) and 4 (3): b-vertex. class 3: vertex 4 has nbrs 3 (2) and
    # 0 (1): b-vertex. So this is also a b-coloring.
    assert is_b_coloring(c2, g, 3)


def test_is_b_coloring_rejects_class_without_b_vertex():
    g = cycle(6)
    c = PartialColoring(6, 3, [1, 2, 1, 2, 1, 3])
    # class 2 vertices (1 and 3) both have two distinctly colored nbrs?
    # vertex 1: nbrs 0 (1), 2 (1) -> sees only color 1, not a b-vertex
    # vertex 3: nbrs 2 (1), 4 (1) -> same. So not a b-coloring.
    assert not is_b_coloring(c, g, 3)


def test_greedy_complete_fills_everything(pet):
    c = PartialColoring(10, 4)
    greedy_complete(c, pet)
    assert c.is_total()
    assert is_proper(c, pet)


def test_greedy_complete_failure():
    g = build_graph(3, [(0, 1), (0, 2), (1, 2)])
    c = PartialColoring(3, 2)
    with pytest.raises(CompletionFailedError) as exc:
        greedy_complete(c, g)
    assert exc.value.vertex == 2


def make_cert(g, strategy="two-bunch", **overrides):
    from bchrome.construct import color_two_bunch

    cert = color_two_bunch(g, 0)
    for key, val in overrides.items():
        setattr(cert, key, val)
    return cert


def test_verify_accepts_constructed(hs):
    cert = make_cert(hs)
    assert verify_certificate(cert, hs).ok


@pytest.mark.parametrize(
    "field,value,reason",
    [
        ("n", 49, "FingerprintMismatch"),
        ("m", 170, "FingerprintMismatch"),
        ("d", 6, "FingerprintMismatch"),
        ("girth", 6, "FingerprintMismatch"),
        ("center", 99, "BadCenter"),
        ("neighbor_order", list(range(7)), "BadNeighborOrder"),
    ],
)
def test_verify_rejects_bad_fields(hs, field, value, reason):
    cert = make_cert(hs, **{field: value})
    res = verify_certificate(cert, hs)
    assert not res.ok
    assert res.reason == reason


def test_verify_rejects_improper(hs):
    cert = make_cert(hs)
    u, v = hs.edges()[0]
    cert.colors[u] = cert.colors[v]
    res = verify_certificate(cert, hs)
    assert res.reason in ("ImproperEdge", "WrongColorCount")


def test_verify_rejects_wrong_b_vertex(hs):
    cert = make_cert(hs)
    # point class d+1 at a vertex of another color
    other = next(v for v in range(hs.n) if cert.colors[v] != cert.k)
    cert.b_vertices[cert.k] = other
    assert verify_certificate(cert, hs).reason == "BadBVertexClass"


def test_verify_rejects_non_b_vertex(hs):
    cert = make_cert(hs)
    claimed = cert.b_vertices[1]
    others = [
        v
        for v in range(hs.n)
        if cert.colors[v] == 1 and v != claimed
    ]
    from bchrome.coloring import PartialColoring as PC

    c = PC(hs.n, cert.k, list(cert.colors))
    non_b = [v for v in others if available_colors(c, hs, v)]
    if not non_b:
        pytest.skip("every class-1 vertex happens to be a b-vertex")
    cert.b_vertices[1] = non_b[0]
    assert verify_certificate(cert, hs).reason == "NotABVertex"


def test_verify_rejects_missing_class(hs):
    cert = make_cert(hs)
    del cert.b_vertices[3]
    assert verify_certificate(cert, hs).reason == "MissingClass"
