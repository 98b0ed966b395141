"""The three constructive coloring strategies and their shared machinery.

Each strategy takes a d-regular girth-5 graph with d >= 7 and a center
vertex whose local structure satisfies the strategy's hypothesis, and emits
a replayable certificate for a b-coloring with d+1 colors.  Every "choose
any" point resolves to lowest-identifier-first so runs are reproducible.
A step where a required vertex does not exist raises ConstructionFailed:
such inputs are counterexample candidates and are never patched silently.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .coloring import (
    Certificate,
    PartialColoring,
    available_colors,
    greedy_complete,
    verify_certificate,
)
from .errors import (
    ConstructionFailed,
    GirthTooSmallError,
    InternalInvariantViolation,
    NoStrategyApplies,
    PreconditionViolated,
    RepairStuck,
)
from .graph import (
    Graph,
    BunchStructure,
    bunches,
    closed_bunches,
    count_c6_in_n2,
    count_c6_through_vertex,
    girth,
    s2_degree,
    sphere,
)
from .transversal import color_bunch


def _require_regular_girth5(g: Graph, min_girth_exact: bool = True) -> int:
    d = g.regular_degree()
    if d is None:
        raise PreconditionViolated("graph is not regular")
    if d < 7:
        raise PreconditionViolated(f"d = {d} < 7")
    gth = girth(g)
    if min_girth_exact:
        if gth != 5:
            raise PreconditionViolated(f"girth = {gth} != 5")
    elif gth < 5:
        raise PreconditionViolated(f"girth = {gth} < 5")
    return d


def _fingerprint(g: Graph) -> tuple[int, int, int, int]:
    return g.n, g.m, g.regular_degree(), int(girth(g))


def _seed_center(c: PartialColoring, g: Graph, bs: BunchStructure) -> None:
    """Color the center d+1 and each ordered neighbor x_i with color i."""
    c.assign(bs.center, bs.d + 1, g)
    for i, xi in enumerate(bs.neighbor_order, start=1):
        c.assign(xi, i, g)


def _color_first_bunch(c: PartialColoring, g: Graph, bs: BunchStructure) -> None:
    """Bijection X_1 -> {2..d}: ascending colors to ascending positions."""
    for pos, v in enumerate(bs.bunches[0]):
        c.assign(v, pos + 2, g)


def lemma_extension(
    g: Graph, x: int, order: list[int] | None = None
) -> PartialColoring:
    """Proper partial (d+1)-coloring making x and x_1..x_4 b-vertices.

    Works for every center of a d-regular girth->=5 graph with d >= 7:
    after seeding N[x] and the first bunch, bunches 2..4 extend by Hall's
    theorem regardless of the graph's structure.
    """
    d = _require_regular_girth5(g, min_girth_exact=False)
    bs = bunches(g, x, order)
    c = PartialColoring(g.n, d + 1)
    _seed_center(c, g, bs)
    _color_first_bunch(c, g, bs)
    for t in range(2, 5):
        try:
            color_bunch(c, g, bs, t)
        except Exception as e:
            raise InternalInvariantViolation(
                f"Hall extension failed on bunch {t}: {e}"
            ) from e
    for i in range(4):
        if available_colors(c, g, bs.neighbor_order[i]):
            raise InternalInvariantViolation(
                f"x_{i + 1} is not a b-vertex after the extension"
            )
    return c


def swap_repair(
    c: PartialColoring,
    g: Graph,
    bs: BunchStructure,
    t: int,
    trace: list[int] | None = None,
) -> PartialColoring:
    """Remove monochromatic edges between X_t and earlier bunches by swaps.

    X_t must already carry a bijection onto [d] \\ {t} and every S2 vertex
    must have at most one neighbor inside S2 (the no-C6 structural
    condition).  The swap partner is found by the case ladder
      (a) a position with no backward neighbor,
      (b) a position with a neighbor in the offending bunch X_i,
      (c) two positions sharing an earlier bunch; take one whose
          neighbor's color differs from the clash color,
      (d) t = d: the position whose neighbor lies in X_k for clash color k.
    The monochromatic count strictly decreases every iteration.
    """
    d = bs.d
    bunch = bs.bunches[t - 1]
    earlier = [v for i in range(t - 1) for v in bs.bunches[i]]
    earlier_set = set(earlier)

    def mono_edges() -> list[tuple[int, int]]:
        out = []
        for s, v in enumerate(bunch):
            for w in g.adj[v]:
                if w in earlier_set and c.color(w) == c.color(v):
                    out.append((w, v))
        return out

    def back_nbrs(v: int) -> list[int]:
        return [w for w in g.adj[v] if w in earlier_set]

    current = mono_edges()
    if trace is not None:
        trace.append(len(current))
    while current:
        before = len(current)
        w0, v0 = min(
            current, key=lambda e: (bs.position[e[0]], bs.position[e[1]])
        )
        k = c.color(v0)
        i = bs.position[w0][0]  # 0-based offending bunch
        s = bunch.index(v0)
        partner = None
        # case (a)
        for p, vp in enumerate(bunch):
            if p != s and not back_nbrs(vp):
                partner = p
                break
        # case (b)
        if partner is None:
            for p, vp in enumerate(bunch):
                if p != s and any(bs.position[w][0] == i for w in back_nbrs(vp)):
                    partner = p
                    break
        # case (c); when every position has a distinct earlier bunch this
        # finds nothing and case (d) takes over (only possible at t = d)
        if partner is None:
            by_bunch: dict[int, list[int]] = {}
            for p, vp in enumerate(bunch):
                if p == s:
                    continue
                for w in back_nbrs(vp):
                    by_bunch.setdefault(bs.position[w][0], []).append(p)
            for ell, ps in sorted(by_bunch.items()):
                if ell == i or len(ps) < 2:
                    continue
                for p in ps:
                    wp = back_nbrs(bunch[p])[0]
                    if c.color(wp) != k:
                        partner = p
                        break
                if partner is not None:
                    break
        # case (d)
        if partner is None and t == d:
            for p, vp in enumerate(bunch):
                if p == s:
                    continue
                if any(bs.position[w][0] == k - 1 for w in back_nbrs(vp)):
                    partner = p
                    break
        if partner is None:
            raise RepairStuck(
                f"no swap case applies at bunch {t}, clash color {k}"
            )
        c.swap(bunch[partner], v0)
        current = mono_edges()
        if trace is not None:
            trace.append(len(current))
        if len(current) >= before:
            raise InternalInvariantViolation(
                "swap did not decrease the monochromatic count"
            )
    return c


def _bijective_bunch_fill(
    c: PartialColoring, bs: BunchStructure, t: int
) -> None:
    """Assign [d] \\ {t} to bunch t ascending, ignoring properness (the
    repair loop removes any clashes)."""
    cols = [col for col in range(1, bs.d + 1) if col != t]
    for v, col in zip(bs.bunches[t - 1], cols):
        c._colors[v] = col  # deliberate raw write; may clash until repaired


def color_no_c6(g: Graph, x: int) -> Certificate:
    """b-coloring with d+1 colors around a center on no 6-cycle."""
    d = _require_regular_girth5(g)
    if count_c6_through_vertex(g, x) != 0:
        raise PreconditionViolated(f"vertex {x} lies on a 6-cycle")
    s2 = sphere(g, x, 2)
    if any(s2_degree(g, x, v) > 1 for v in s2):
        raise PreconditionViolated(
            "some S2 vertex has two neighbors inside S2"
        )
    bs = bunches(g, x)
    c = PartialColoring(g.n, d + 1)
    _seed_center(c, g, bs)
    _color_first_bunch(c, g, bs)
    for t in range(2, d + 1):
        _bijective_bunch_fill(c, bs, t)
        swap_repair(c, g, bs, t)
    greedy_complete(c, g)
    cert = _make_certificate(g, "no-c6", bs, c, dict_extra_b={})
    return _checked(cert, g)


def order_by_degree_sequences(g: Graph, x: int) -> list[int]:
    """Neighbor order for the bounded-C6 strategy.

    Each neighbor gets the non-ascending S2-degree sequence of its bunch;
    neighbors are sorted with larger sequences first (reverse
    lexicographic), ties broken by ascending identifier.
    """
    if girth(g) < 5:
        raise GirthTooSmallError("degree-sequence ordering needs girth >= 5")
    s2 = sphere(g, x, 2)
    def seq(xi: int) -> tuple[int, ...]:
        return tuple(
            sorted(
                (sum(1 for w in g.adj[v] if w in s2) for v in g.adj[xi] if v != x),
                reverse=True,
            )
        )
    return sorted(g.adj[x], key=lambda xi: (tuple(-e for e in seq(xi)), xi))


def color_bounded_c6(g: Graph, x: int) -> Certificate:
    """b-coloring with d+1 colors when x lies on at most five 6-cycles
    inside G[N2[x]]."""
    d = _require_regular_girth5(g)
    cnt = count_c6_in_n2(g, x)
    if cnt > 5:
        raise PreconditionViolated(f"{cnt} > 5 six-cycles through {x} in N2[x]")
    s2 = sphere(g, x, 2)
    degs = sorted((s2_degree(g, x, v) for v in s2), reverse=True)
    high = [p for p in degs if p > 1]
    # Degree split implied by sum C(p,2) <= 5: either all high degrees are 2
    # (at most five of them), or one 3 and at most two 2s.
    case_one = all(p == 2 for p in high) and len(high) <= 5
    case_two = (
        high.count(3) <= 1 and high.count(2) <= 2 and all(p <= 3 for p in high)
    )
    if not (case_one or case_two):
        raise InternalInvariantViolation(
            f"S2 degree multiset {high} inconsistent with the C6 bound"
        )
    order = order_by_degree_sequences(g, x)
    bs = bunches(g, x, order)
    c = lemma_extension(g, x, order)
    for t in range(5, d + 1):
        try:
            color_bunch(c, g, bs, t)
        except Exception as e:
            raise InternalInvariantViolation(
                f"Hall extension failed on bunch {t}: {e}"
            ) from e
    greedy_complete(c, g)
    cert = _make_certificate(g, "bounded-c6", bs, c, dict_extra_b={})
    return _checked(cert, g)


def _make_certificate(
    g: Graph,
    strategy: str,
    bs: BunchStructure,
    c: PartialColoring,
    dict_extra_b: dict[int, int],
    row_order: list[list[int]] | None = None,
) -> Certificate:
    """Certificate claiming x for class d+1 and x_i for class i; strategies
    that replace some neighbor claims pass them in dict_extra_b."""
    d = bs.d
    b_vertices = {d + 1: bs.center}
    for i, xi in enumerate(bs.neighbor_order, start=1):
        b_vertices[i] = xi
    b_vertices.update(dict_extra_b)
    n, m, deg, gth = _fingerprint(g)
    return Certificate(
        strategy=strategy,
        center=bs.center,
        neighbor_order=list(bs.neighbor_order),
        colors=[c.color(v) for v in range(g.n)],
        b_vertices=b_vertices,
        n=n,
        m=m,
        d=deg,
        girth=gth,
        k=d + 1,
        row_order=row_order,
    )


def _checked(cert: Certificate, g: Graph) -> Certificate:
    res = verify_certificate(cert, g)
    if not res:
        raise InternalInvariantViolation(
            f"constructed certificate rejected: {res.reason}"
        )
    return cert


SUBCASE_ONE = "one"
SUBCASE_TWO = "two"
SUBCASE_TWO_NO_ROW2 = "two-no-row2-neighbor"


@dataclass
class BunchMatrix:
    """(d-1) x d layout of S2(x) satisfying the four ordering requirements.

    ``cells[r][c]`` is the vertex in paper row r+1, column c+1.  Column 1
    and column d are the two closed bunches; ``col_attach[c]`` is the
    neighbor of x owning column c+1.
    """

    center: int
    col_attach: list[int]
    cells: list[list[int]]
    independent_set: list[int]
    subcase: str

    @property
    def d(self) -> int:
        return len(self.col_attach)

    def row_order(self) -> list[list[int]]:
        return [list(row) for row in self.cells]


def _unique_nb(g: Graph, v: int, pool: set[int], step: str, log: list[str]) -> int:
    found = sorted(g.adj[v] & pool)
    if len(found) != 1:
        raise ConstructionFailed(f"{step}: expected one neighbor, got {found}", log)
    return found[0]


def order_two_bunch(
    g: Graph, x: int, a: int | None = None, b: int | None = None
) -> BunchMatrix:
    """Order S2(x) into the row/column matrix of the two-bunch theorem.

    ``a`` and ``b`` are the neighbors of x owning the two closed bunches
    used as columns 1 and d; by default the two lowest such neighbors.
    """
    d = _require_regular_girth5(g)
    closed = closed_bunches(g, x)
    default_bs = bunches(g, x)
    closed_attach = [default_bs.neighbor_order[i] for i in closed]
    if a is None or b is None:
        if len(closed_attach) < 2:
            raise PreconditionViolated(
                f"vertex {x} has {len(closed_attach)} closed bunches, need 2"
            )
        a, b = closed_attach[0], closed_attach[1]
    if a not in closed_attach or b not in closed_attach or a == b:
        raise PreconditionViolated("chosen bunches are not two distinct closed bunches")

    log: list[str] = []
    s2 = sphere(g, x, 2)
    bunch_sets = {xi: g.adj[xi] - {x} for xi in g.adj[x]}
    col_of = {v: xi for xi in g.adj[x] for v in bunch_sets[xi]}
    A, B = bunch_sets[a], bunch_sets[b]

    col_attach: list[int | None] = [None] * d
    col_attach[0], col_attach[d - 1] = a, b
    row_x1: list[int | None] = [None] * (d - 1)  # x_1^j per paper row j
    xd_row: list[int | None] = [None] * (d - 1)  # x_d^j per paper row j
    i1: list[int] = []

    def unordered() -> list[int]:
        return sorted(set(g.adj[x]) - {c for c in col_attach if c is not None})

    def set_row(j: int, x1v: int, step: str) -> None:
        if x1v in row_x1:
            raise ConstructionFailed(f"{step}: row for {x1v} already fixed", log)
        row_x1[j - 1] = x1v
        log.append(f"{step}: row {j} anchored at X_1 vertex {x1v}")

    def row_members(j: int) -> set[int]:
        x1v = row_x1[j - 1]
        return ({x1v} | g.adj[x1v]) & s2

    # Step 1: x_d^1 = lowest vertex of X_d; row 1 via its X_1 neighbor.
    xd_row[0] = min(B)
    set_row(1, _unique_nb(g, xd_row[0], A, "row1-anchor", log), "step1")

    # Step 2: X_2 = lowest unordered bunch; x_2^2 = neighbor of x_d^1 there.
    col_attach[1] = unordered()[0]
    x22 = _unique_nb(g, xd_row[0], bunch_sets[col_attach[1]], "x22", log)
    set_row(2, _unique_nb(g, x22, A, "row2-anchor", log), "step2")
    i1.append(x22)
    xd_row[1] = _unique_nb(g, row_x1[1], B, "xd2", log)

    # Step 3: pick X_3 with x_d^2 ~ x_3^3 and x_d^3 not~ x_2^1.
    x21 = _unique_nb(g, row_x1[0], bunch_sets[col_attach[1]], "x21", log)
    for cand in unordered():
        v = _unique_nb(g, xd_row[1], bunch_sets[cand], "x33-cand", log)
        x1v = _unique_nb(g, v, A, "row3-anchor-cand", log)
        if x1v in (row_x1[0], row_x1[1]):
            continue
        xd3 = _unique_nb(g, x1v, B, "xd3-cand", log)
        if g.has_edge(xd3, x21):
            continue
        col_attach[2] = cand
        set_row(3, x1v, "step3")
        xd_row[2] = xd3
        i1.append(v)
        break
    else:
        raise ConstructionFailed("choose-X3: no admissible bunch", log)

    # Step 4: choose X_4 and X_{d-1} by the subcase of where the row-2
    # neighbor of x_d^3 lives.
    w = _unique_nb(g, xd_row[2], row_members(2), "xd3-row2-neighbor", log)
    ordered_now = {c for c in col_attach if c is not None}
    used_b = lambda: {v for v in xd_row if v is not None}

    if col_of[w] not in ordered_now:
        subcase = SUBCASE_ONE
        col_attach[3] = col_of[w]
        i1.append(w)  # x_4^2
        x32 = _unique_nb(g, row_x1[1], bunch_sets[col_attach[2]], "x32", log)
        xdd1 = _unique_nb(g, x32, B, "xd-last", log)
        if xdd1 in used_b():
            raise ConstructionFailed("subcase1: x_d^{d-1} already placed", log)
        xd_row[d - 2] = xdd1
        set_row(d - 1, _unique_nb(g, xdd1, A, "row-last-anchor", log), "subcase1")
        xdd2 = min(B - used_b())
        xd_row[d - 3] = xdd2
        set_row(d - 2, _unique_nb(g, xdd2, A, "row-d-2-anchor", log), "subcase1")
        w2 = _unique_nb(g, xdd2, row_members(2), "xd-d-2-row2-neighbor", log)
        if col_of[w2] in {c for c in col_attach if c is not None}:
            raise ConstructionFailed("subcase1: X_{d-1} bunch already ordered", log)
        col_attach[d - 2] = col_of[w2]
    else:
        # Subcase 2: the proof pins w down to x_3^2.
        if col_of[w] != col_attach[2]:
            raise ConstructionFailed(
                f"subcase2: row-2 neighbor of x_d^3 in unexpected bunch {col_of[w]}",
                log,
            )
        w1 = _unique_nb(g, xd_row[2], row_members(1), "xd3-row1-neighbor", log)
        if col_of[w1] in ordered_now:
            raise ConstructionFailed("subcase2: X_4 bunch already ordered", log)
        col_attach[3] = col_of[w1]
        i1.append(w1)  # x_4^1
        x42 = _unique_nb(g, row_x1[1], bunch_sets[col_attach[3]], "x42", log)
        xdd1 = _unique_nb(g, x42, B, "xd-last", log)
        if xdd1 in used_b():
            raise ConstructionFailed("subcase2: x_d^{d-1} already placed", log)
        xd_row[d - 2] = xdd1
        set_row(d - 1, _unique_nb(g, xdd1, A, "row-last-anchor", log), "subcase2")
        zs = sorted(g.adj[w1] & row_members(2))
        if not zs:
            subcase = SUBCASE_TWO_NO_ROW2
            xdd2 = min(B - used_b())
            xd_row[d - 3] = xdd2
            set_row(d - 2, _unique_nb(g, xdd2, A, "row-d-2-anchor", log), "subcase2")
            w2 = _unique_nb(g, xdd2, row_members(2), "xd-d-2-row2-neighbor", log)
            if col_of[w2] in {c for c in col_attach if c is not None}:
                raise ConstructionFailed("subcase2: X_{d-1} bunch already ordered", log)
            col_attach[d - 2] = col_of[w2]
        else:
            subcase = SUBCASE_TWO
            if len(zs) > 1:
                raise ConstructionFailed("subcase2: x_4^1 has two row-2 neighbors", log)
            z = zs[0]
            if col_of[z] in {c for c in col_attach if c is not None}:
                raise ConstructionFailed("subcase2: z lies in an ordered bunch", log)
            col_attach[d - 2] = col_of[z]
            xdd2 = _unique_nb(g, z, B, "xd-d-2", log)
            if xdd2 in used_b():
                raise ConstructionFailed("subcase2: x_d^{d-2} already placed", log)
            xd_row[d - 3] = xdd2
            set_row(d - 2, _unique_nb(g, xdd2, A, "row-d-2-anchor", log), "subcase2")

    # Step 5: remaining X_d vertices fill rows 4..d-3 ascending; the bunch
    # holding each one's row-2 neighbor becomes the next column.
    remaining = sorted(B - used_b())
    for offset, xdj in enumerate(remaining):
        j = 4 + offset  # paper row index
        xd_row[j - 1] = xdj
        set_row(j, _unique_nb(g, xdj, A, f"row{j}-anchor", log), "step5")
    for j in range(4, d - 2):
        w2 = _unique_nb(g, xd_row[j - 1], row_members(2), f"row2-nb-of-xd{j}", log)
        if col_of[w2] in {c for c in col_attach if c is not None}:
            raise ConstructionFailed(
                f"step5: column for x_d^{j} row-2 neighbor already ordered", log
            )
        col_attach[j] = col_of[w2]  # paper column j+1
        i1.append(w2)  # x_{j+1}^2

    if any(c is None for c in col_attach) or any(v is None for v in row_x1):
        raise ConstructionFailed("ordering incomplete", log)

    cells = []
    for r in range(d - 1):
        row = [row_x1[r]]
        for cidx in range(1, d - 1):
            row.append(
                _unique_nb(g, row_x1[r], bunch_sets[col_attach[cidx]], f"cell r{r + 1}", log)
            )
        row.append(xd_row[r])
        cells.append(row)
    bm = BunchMatrix(
        center=x,
        col_attach=[int(c) for c in col_attach],
        cells=cells,
        independent_set=i1,
        subcase=subcase,
    )
    ok, reason = check_bunch_matrix(g, x, bm)
    if not ok:
        raise ConstructionFailed(f"requirements-check: {reason}", log)
    return bm


def check_bunch_matrix(g: Graph, x: int, bm: BunchMatrix) -> tuple[bool, str | None]:
    """Independent validator for the matrix requirements.

    Checks cell bijectivity onto S2(x), column membership, the closedness
    of columns 1 and d, the row structure, the placement and independence
    of the marked set, and the row-2 anchoring of column d-1.
    """
    d = bm.d
    if sorted(bm.col_attach) != sorted(g.adj[x]):
        return False, "columns are not the bunches of x"
    if len(bm.cells) != d - 1 or any(len(r) != d for r in bm.cells):
        return False, "matrix shape is not (d-1) x d"
    flat = [v for row in bm.cells for v in row]
    s2 = sphere(g, x, 2)
    if len(set(flat)) != len(flat) or set(flat) != s2:
        return False, "cells do not biject onto S2(x)"
    for cidx, xi in enumerate(bm.col_attach):
        for r in range(d - 1):
            if not g.has_edge(bm.cells[r][cidx], xi):
                return False, f"cell ({r + 1},{cidx + 1}) not in bunch of {xi}"
    n2 = (set(g.adj[x]) | s2) | {x}
    for cidx in (0, d - 1):
        for r in range(d - 1):
            if not (g.adj[bm.cells[r][cidx]] <= n2):
                return False, f"requirement 1 fails at column {cidx + 1}"
    for r in range(d - 1):
        anchor = bm.cells[r][0]
        expected = set(g.adj[anchor]) - {bm.col_attach[0]}
        if set(bm.cells[r][1:]) != expected:
            return False, f"requirement 2 fails at row {r + 1}"
    marked = []
    for j in range(1, d - 2):  # paper j in [d-3]
        hits = sorted(v for v in g.adj[bm.cells[j - 1][d - 1]]
                      if v in {bm.cells[r][j] for r in range(d - 1)})
        if len(hits) != 1:
            return False, f"requirement 3 fails: x_d^{j} column-{j + 1} neighbor"
        v = hits[0]
        row = next(r for r in range(d - 1) if bm.cells[r][j] == v)
        if row > 2:
            return False, f"requirement 3 fails: marked vertex of column {j + 1} in row {row + 1}"
        marked.append(v)
    if sorted(marked) != sorted(bm.independent_set):
        return False, "marked set differs from the stored independent set"
    for i, u in enumerate(marked):
        for v in marked[i + 1:]:
            if g.has_edge(u, v):
                return False, "marked set is not independent"
    hits = sorted(v for v in g.adj[bm.cells[d - 3][d - 1]]
                  if v in {bm.cells[r][d - 2] for r in range(d - 1)})
    if hits != [bm.cells[1][d - 2]]:
        return False, "requirement 4 fails"
    return True, None


def color_two_bunch(g: Graph, x: int) -> Certificate:
    """b-coloring with d+1 colors around a center with two closed bunches."""
    d = _require_regular_girth5(g)
    bm = order_two_bunch(g, x)
    k = d + 1
    c = PartialColoring(g.n, k)
    try:
        c.assign(x, k, g)
        for i, xi in enumerate(bm.col_attach, start=1):
            c.assign(xi, i, g)
        for j in range(1, d):  # step 3: c(x_1^j) = j+1
            c.assign(bm.cells[j - 1][0], j + 1, g)
        for v in bm.independent_set:  # step 4
            c.assign(v, 1, g)
        for j in range(4, d):  # step 5: c(x_d^j) = d+1
            c.assign(bm.cells[j - 1][d - 1], k, g)
        # step 6: color by the row of the unique X_d neighbor
        xd_set = {bm.cells[r][d - 1]: r + 1 for r in range(d - 1)}
        for cidx in range(d - 1):
            assigned: set[int] = set()
            rows = range(d - 1) if cidx < d - 2 else range(3, d - 1)
            for r in rows:
                wv = bm.cells[r][cidx]
                if c.color(wv) is not None:
                    continue
                nbrs = [u for u in g.adj[wv] if u in xd_set]
                if len(nbrs) != 1:
                    raise InternalInvariantViolation(
                        f"vertex {wv} has {len(nbrs)} neighbors in X_d"
                    )
                col = xd_set[nbrs[0]] + 1
                if col in assigned:
                    raise InternalInvariantViolation(
                        f"duplicate color {col} within column {cidx + 1}"
                    )
                assigned.add(col)
                c.assign(wv, col, g)
        # step 7: the six top-right cells, first fit
        for cidx in (d - 2, d - 1):
            for r in range(3):
                wv = bm.cells[r][cidx]
                if c.color(wv) is None:
                    used = {c.color(u) for u in g.adj[wv]}
                    col = next(col for col in range(1, k + 1) if col not in used)
                    c.assign(wv, col, g)
        greedy_complete(c, g)
    except AssertionError as e:
        raise InternalInvariantViolation(str(e)) from e
    extra = {
        d - 1: bm.cells[d - 3][0],  # x_1^{d-2}
        d: bm.cells[d - 2][0],  # x_1^{d-1}
    }
    bs = BunchStructure(
        center=x,
        neighbor_order=tuple(bm.col_attach),
        bunches=[[bm.cells[r][cidx] for r in range(d - 1)] for cidx in range(d)],
    )
    cert = _make_certificate(
        g, "two-bunch", bs, c, dict_extra_b=extra, row_order=bm.row_order()
    )
    return _checked(cert, g)


STRATEGIES = ("no-c6", "bounded-c6", "two-bunch")

_STRATEGY_FN = {
    "no-c6": color_no_c6,
    "bounded-c6": color_bounded_c6,
    "two-bunch": color_two_bunch,
}


def run_strategy(g: Graph, x: int, strategy: str) -> Certificate:
    if strategy not in _STRATEGY_FN:
        raise ValueError(f"unknown strategy {strategy!r}")
    return _STRATEGY_FN[strategy](g, x)


@dataclass
class VertexReport:
    vertex: int
    c6_through: int
    c6_in_n2: int | None
    closed_bunch_count: int | None
    strategies: list[str] = field(default_factory=list)


@dataclass
class HypothesisReport:
    n: int
    m: int
    d: int | None  # None when not regular
    girth: float
    has_c6: bool
    flags: dict[str, bool]
    per_vertex: list[VertexReport]

    def applicable_pairs(self) -> list[tuple[int, str]]:
        return [(vr.vertex, s) for vr in self.per_vertex for s in vr.strategies]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "d": self.d,
            "girth": None if self.girth == float("inf") else int(self.girth),
            "has_c6": self.has_c6,
            "flags": dict(self.flags),
            "per_vertex": [
                {
                    "vertex": vr.vertex,
                    "c6_through": vr.c6_through,
                    "c6_in_n2": vr.c6_in_n2,
                    "closed_bunches": vr.closed_bunch_count,
                    "strategies": list(vr.strategies),
                }
                for vr in self.per_vertex
            ],
        }


def hypothesis_report(g: Graph, threads: int = 1) -> HypothesisReport:
    """Per-vertex census of the hypotheses the strategies need, plus the
    scope flags of the d >= 7 regime (including the n <= 2d^3-2d^2+2d-1
    bound below which the conjecture is still open)."""
    d = g.regular_degree()
    gth = girth(g)
    girth_ok = gth >= 5

    def census(x: int) -> VertexReport:
        c6t = count_c6_through_vertex(g, x)
        c6n2 = count_c6_in_n2(g, x) if girth_ok else None
        cb = len(closed_bunches(g, x)) if girth_ok else None
        vr = VertexReport(x, c6t, c6n2, cb)
        if d is not None and d >= 7 and gth == 5:
            if c6t == 0:
                vr.strategies.append("no-c6")
            if c6n2 is not None and c6n2 <= 5:
                vr.strategies.append("bounded-c6")
            if cb is not None and cb >= 2:
                vr.strategies.append("two-bunch")
        return vr

    if threads > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=threads) as ex:
            per_vertex = list(ex.map(census, range(g.n)))
    else:
        per_vertex = [census(x) for x in range(g.n)]
    has_c6 = any(vr.c6_through > 0 for vr in per_vertex)
    flags = {
        "regular": d is not None,
        "d_ge_7": d is not None and d >= 7,
        "girth_5": gth == 5,
        "contains_c6": has_c6,
        "n_within_bound": d is not None and g.n <= 2 * d**3 - 2 * d**2 + 2 * d - 1,
    }
    return HypothesisReport(
        n=g.n, m=g.m, d=d, girth=gth, has_c6=has_c6, flags=flags, per_vertex=per_vertex
    )


def auto_color(g: Graph, threads: int = 1) -> Certificate:
    """First accepted certificate, scanning vertices ascending and
    strategies in the order no-c6, bounded-c6, two-bunch.

    ConstructionFailed propagates: an applicable vertex where a proof step
    fails is exactly what this tool exists to surface.
    """
    report = hypothesis_report(g, threads=threads)
    reasons: dict[int, str] = {}
    for vr in report.per_vertex:
        if not vr.strategies:
            reasons[vr.vertex] = _why_not(report, vr)
            continue
        for strategy in STRATEGIES:
            if strategy in vr.strategies:
                return run_strategy(g, vr.vertex, strategy)
    raise NoStrategyApplies(reasons)


def _why_not(report: HypothesisReport, vr: VertexReport) -> str:
    if report.d is None:
        return "graph is not regular"
    if report.d < 7:
        return f"d = {report.d} < 7"
    if report.girth != 5:
        return f"girth = {report.girth} != 5"
    return (
        f"c6_through = {vr.c6_through}, c6_in_n2 = {vr.c6_in_n2}, "
        f"closed_bunches = {vr.closed_bunch_count}"
    )
