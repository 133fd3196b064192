"""Planarity of unsigned Gauss words via the interlacement graph.

Two labels interlace when their occurrences alternate around the cyclic
word, i.e. each occurs exactly once between the two occurrences of the
other.  The interlacement graph carries a Z2 value per edge derived
from how the strand spans of the two labels overlap; planarity is
decided by three successive checks:

1. every vertex has even degree,
2. every non-adjacent pair has even span overlap,
3. the edge values form a closed Z2 cochain (every cycle sums to 0).

The first failing stage yields a concrete witness.  Span overlaps are
computed for the all-positive signing; the closure property does not
depend on that choice.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .words import GaussWord, InvalidWordError, Strand, Symbol, require_valid


class OverlapCount(NamedTuple):
    """Raw span-overlap count together with its Z2 class."""

    count: int
    mod2: int


@dataclass(frozen=True)
class InterlacementGraph:
    """Labels as vertices, interlaced pairs as edges, Z2 value per edge.

    ``edges`` are (i, j) pairs with i < j, sorted; ``edge_values`` is
    total on edges.
    """

    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    edge_values: dict[tuple[int, int], int]

    def neighbors(self, v: int) -> tuple[int, ...]:
        out = [j if i == v else i for i, j in self.edges if v in (i, j)]
        return tuple(sorted(out))

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edge_values

    def value(self, i: int, j: int) -> int:
        return self.edge_values[(min(i, j), max(i, j))]


@dataclass(frozen=True)
class PlanarityVerdict:
    """Outcome of the three-stage test with the first witness found.

    ``witness`` is a label (stage 1), a non-adjacent label pair
    (stage 2), or a closed path as a label tuple whose consecutive
    pairs, wrapping around, are all edges (stage 3).
    """

    planar: bool
    failed_stage: int | None = None
    witness: int | tuple[int, int] | tuple[int, ...] | None = None


def _span_positions(w: GaussWord, i: int) -> tuple[int, int]:
    """(position of U_i, position of O_i); word must be valid, i present."""
    require_valid(w)
    positions = w.positions_of(i)
    if not positions:
        raise InvalidWordError(f"label {i} does not occur")
    a, b = positions
    return (a, b) if w[a].strand is Strand.UNDER else (b, a)


def _between(w: GaussWord, start: int, stop: int) -> Iterator[Symbol]:
    """Symbols strictly between two positions, walking forward cyclically."""
    p = (start + 1) % len(w)
    while p != stop:
        yield w[p]
        p = (p + 1) % len(w)


def span_parity(w: GaussWord, i: int) -> int:
    """Number of symbols between U_i and O_i, mod 2.

    Because the word has even length, walking from U_i to O_i or from
    O_i to U_i gives the same parity.
    """
    u, o = _span_positions(w, i)
    return sum(1 for _ in _between(w, u, o)) % 2


def span_symbols(w: GaussWord, i: int) -> frozenset[Symbol]:
    """Symbols strictly between U_i and O_i, walking forward from U_i.

    This is the positive-crossing span; the all-positive signing makes
    it the span used for every label.
    """
    u, o = _span_positions(w, i)
    return frozenset(_between(w, u, o))


def _flip_all(symbols: frozenset[Symbol]) -> frozenset[Symbol]:
    return frozenset(s.flipped for s in symbols)


def span_overlap(w: GaussWord, i: int, j: int) -> OverlapCount:
    """Overlap of label i's closed span with label j's strand-flipped span.

    Counts members of ({U_i, O_i} union span(i)) that also lie in
    span(j) with U and O exchanged.  The raw count depends on the
    (i, j) order but its parity does not.
    """
    if i == j:
        raise InvalidWordError("span_overlap needs two distinct labels")
    closed_i = span_symbols(w, i) | {
        Symbol(Strand.UNDER, i),
        Symbol(Strand.OVER, i),
    }
    count = len(closed_i & _flip_all(span_symbols(w, j)))
    return OverlapCount(count, count % 2)


def interlaced(w: GaussWord, i: int, j: int) -> bool:
    """True iff the occurrences of i and j alternate around the word."""
    u, o = _span_positions(w, i)
    return sum(1 for s in _between(w, u, o) if s.label == j) == 1


def interlacement_graph(w: GaussWord) -> InterlacementGraph:
    """Interlacement graph of a valid unsigned word with Z2 edge values."""
    if w.is_signed:
        raise InvalidWordError("interlacement graph expects an unsigned word")
    require_valid(w)
    vertices = w.labels
    edges = []
    values = {}
    for a, i in enumerate(vertices):
        for j in vertices[a + 1:]:
            if interlaced(w, i, j):
                edges.append((i, j))
                values[(i, j)] = span_overlap(w, i, j).mod2
    return InterlacementGraph(vertices, tuple(edges), values)


def stage1_odd_vertex(g: InterlacementGraph) -> int | None:
    """Least vertex of odd degree, if any."""
    for v in g.vertices:
        if g.degree(v) % 2 == 1:
            return v
    return None


def stage2_odd_nonadjacent(w: GaussWord, g: InterlacementGraph) -> tuple[int, int] | None:
    """Least non-adjacent pair whose span overlap is odd in either order."""
    for a, i in enumerate(g.vertices):
        for j in g.vertices[a + 1:]:
            if g.has_edge(i, j):
                continue
            if span_overlap(w, i, j).mod2 or span_overlap(w, j, i).mod2:
                return (i, j)
    return None


def stage3_open_cycle(g: InterlacementGraph) -> tuple[int, ...] | None:
    """A cycle with odd edge-value sum, or None when the cochain is closed.

    A spanning forest assigns each vertex the Z2 potential accumulated
    along its tree path; the cochain is closed iff every non-tree edge
    is consistent with the potentials.  The first inconsistent edge
    yields its fundamental cycle as the witness.
    """
    parent: dict[int, int | None] = {}
    potential: dict[int, int] = {}
    for root in g.vertices:
        if root in parent:
            continue
        parent[root] = None
        potential[root] = 0
        queue = [root]
        while queue:
            u = queue.pop(0)
            for v in g.neighbors(u):
                if v in parent:
                    continue
                parent[v] = u
                potential[v] = (potential[u] + g.value(u, v)) % 2
                queue.append(v)

    def path_to_root(v: int) -> list[int]:
        path = [v]
        while parent[path[-1]] is not None:
            path.append(parent[path[-1]])  # type: ignore[arg-type]
        return path

    for i, j in g.edges:
        if parent.get(i) == j or parent.get(j) == i:
            continue  # tree edge
        if (potential[i] + potential[j] + g.value(i, j)) % 2 == 0:
            continue
        up_i, up_j = path_to_root(i), path_to_root(j)
        common = set(up_i) & set(up_j)
        meet = next(v for v in up_i if v in common)
        left = up_i[: up_i.index(meet) + 1]
        right = up_j[: up_j.index(meet)]
        return tuple(left + right[::-1])
    return None


def is_planar_unsigned(w: GaussWord) -> PlanarityVerdict:
    """Run the three stages in order; first failure carries the witness."""
    if w.is_signed:
        raise InvalidWordError("unsigned planarity test expects an unsigned word")
    require_valid(w)
    if len(w) == 0:
        return PlanarityVerdict(True)
    g = interlacement_graph(w)
    odd_vertex = stage1_odd_vertex(g)
    if odd_vertex is not None:
        return PlanarityVerdict(False, 1, odd_vertex)
    bad_pair = stage2_odd_nonadjacent(w, g)
    if bad_pair is not None:
        return PlanarityVerdict(False, 2, bad_pair)
    open_cycle = stage3_open_cycle(g)
    if open_cycle is not None:
        return PlanarityVerdict(False, 3, open_cycle)
    return PlanarityVerdict(True)
