"""Planarity of signed Gauss words via the combinatorial Carter surface.

The diagram encoded by a signed Gauss word is a 4-valent graph: one
vertex per crossing, one edge per arc between consecutive symbols.
Attaching a disc to every cycle traced by "always turn left" yields a
closed orientable surface; the word is planar exactly when that surface
is a sphere, i.e. when its Euler characteristic V - E + F equals 2.

A traversal state is a word position together with the direction the
symbol was reached from (RIGHT = with the orientation).  The left-turn
step is a bijection on the 4n states, so the faces are simply its
orbits.
"""

from __future__ import annotations

from dataclasses import dataclass

from .words import (
    Direction,
    GaussWord,
    InvalidWordError,
    Sign,
    Strand,
    counterpart_table,
    cyclic_neighbor,
    require_valid,
)


@dataclass(frozen=True)
class TraversalState:
    """Head position plus the direction flag of the step that chose it."""

    position: int
    incoming: Direction


@dataclass(frozen=True)
class FaceDecomposition:
    """Orbits of the left-turn step, partitioning all 4n states."""

    word: GaussWord
    faces: tuple[tuple[TraversalState, ...], ...]


@dataclass(frozen=True)
class EulerReport:
    vertices: int
    edges: int
    faces: int
    chi: int


def exit_direction(incoming: Direction, strand: Strand, sign: Sign) -> Direction:
    """Direction of the next step after turning left at the counterpart.

    The eight crossing cases collapse to: keep the incoming direction on
    a positive overpass or a negative underpass, reverse it otherwise.
    """
    keep = (strand is Strand.OVER) == (sign is Sign.PLUS)
    return incoming if keep else incoming.opposite


def left_turn_step(w: GaussWord, s: TraversalState) -> TraversalState:
    """One left turn: jump to the counterpart, step off in the exit direction."""
    _require_signed(w)
    sym = w[s.position]
    assert sym.sign is not None
    d = exit_direction(s.incoming, sym.strand, sym.sign)
    table = counterpart_table(w)
    return TraversalState(cyclic_neighbor(w, table[s.position], d), d)


def all_states(w: GaussWord) -> list[TraversalState]:
    """All 4n traversal states in canonical (position, direction) order."""
    return [
        TraversalState(p, d)
        for p in range(len(w))
        for d in (Direction.LEFT, Direction.RIGHT)
    ]


def enumerate_faces(w: GaussWord) -> FaceDecomposition:
    """Faces of the Carter surface as orbits of the left-turn step.

    Each face cycle starts at its least state in (position, direction)
    order with LEFT < RIGHT, and faces are listed by that key, so the
    output is byte-stable for a fixed word.
    """
    _require_signed(w)
    if len(w) == 0:
        raise InvalidWordError("face enumeration needs a nonempty word")
    table = counterpart_table(w)

    def step(s: TraversalState) -> TraversalState:
        sym = w[s.position]
        d = exit_direction(s.incoming, sym.strand, sym.sign)
        return TraversalState(cyclic_neighbor(w, table[s.position], d), d)

    faces = []
    seen: set[TraversalState] = set()
    for start in all_states(w):
        if start in seen:
            continue
        cycle = [start]
        seen.add(start)
        current = step(start)
        while current != start:
            cycle.append(current)
            seen.add(current)
            current = step(current)
        faces.append(tuple(cycle))
    return FaceDecomposition(w, tuple(faces))


def euler_characteristic(w: GaussWord) -> EulerReport:
    """V - E + F of the Carter surface of a valid nonempty signed word."""
    decomposition = enumerate_faces(w)
    vertices = len(w.labels)
    edges = len(w)
    faces = len(decomposition.faces)
    return EulerReport(vertices, edges, faces, vertices - edges + faces)


def is_planar_signed(w: GaussWord) -> bool:
    """True iff the Carter surface is a sphere (empty word by convention)."""
    _require_signed(w)
    if len(w) == 0:
        return True
    return euler_characteristic(w).chi == 2


def _require_signed(w: GaussWord) -> None:
    if not w.is_signed:
        raise InvalidWordError("signed word required")
    require_valid(w)
