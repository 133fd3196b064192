"""Brute-force references and word generators for desk-scale checking.

The unsigned planarity oracle rests on one stated assumption: an
unsigned word is planar iff at least one of its 2**n signings yields a
Carter surface with Euler characteristic 2 (the signing supplies the
local geometry the unsigned word forgets).  Any disagreement between
this oracle and the staged interlacement test is a finding to escalate,
not to auto-resolve.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator

import networkx as nx

from .interlacement import InterlacementGraph
from .surface import is_planar_signed
from .words import (
    EMPTY_UNSIGNED,
    GaussWord,
    Signedness,
    Strand,
    Symbol,
    enumerate_signings,
    require_valid,
)

DEFAULT_CROSSING_BOUND = 12


class BoundExceeded(RuntimeError):
    """Input is larger than the oracle's configured brute-force bound."""


def brute_force_unsigned_planarity(
    w: GaussWord, max_crossings: int = DEFAULT_CROSSING_BOUND
) -> bool:
    """True iff some signing of ``w`` has a spherical Carter surface."""
    require_valid(w)
    n = len(w.labels)
    if n > max_crossings:
        raise BoundExceeded(f"{n} crossings exceeds the bound {max_crossings}")
    if n == 0:
        return True
    return any(is_planar_signed(signed) for signed in enumerate_signings(w))


def brute_force_cycle_parity(g: InterlacementGraph, max_vertices: int = 12) -> bool:
    """True iff every simple cycle of ``g`` has even edge-value sum.

    Closed walks decompose mod 2 into simple cycles, so this is the
    full cochain-closure property, checked by exhaustive enumeration.
    """
    if len(g.vertices) > max_vertices:
        raise BoundExceeded(
            f"{len(g.vertices)} vertices exceeds the bound {max_vertices}"
        )
    graph = nx.Graph()
    graph.add_nodes_from(g.vertices)
    graph.add_edges_from(g.edges)
    for cycle in nx.simple_cycles(graph):
        total = sum(
            g.value(cycle[k], cycle[(k + 1) % len(cycle)]) for k in range(len(cycle))
        )
        if total % 2 == 1:
            return False
    return True


@dataclass(frozen=True)
class ExhaustivePolicy:
    """Every canonical valid unsigned word with up to ``max_crossings`` labels."""

    max_crossings: int

    def header(self) -> str:
        return f"# policy=exhaustive max_crossings={self.max_crossings}"


@dataclass(frozen=True)
class RandomPolicy:
    """Seeded uniform-ish words with crossing counts in a closed range."""

    count: int
    min_crossings: int
    max_crossings: int
    seed: int

    def header(self) -> str:
        return (
            f"# policy=random count={self.count} min_crossings={self.min_crossings}"
            f" max_crossings={self.max_crossings} seed={self.seed}"
        )


@dataclass(frozen=True)
class WordCorpus:
    policy: ExhaustivePolicy | RandomPolicy
    words: tuple[GaussWord, ...]


def exhaustive_words(n: int) -> Iterator[GaussWord]:
    """All canonical valid unsigned words with exactly ``n`` crossings.

    Canonical form: position 0 is the U occurrence of label 1 and labels
    are numbered by first occurrence.  There are (2n-1)!! * 2**(n-1)
    such words; rotating a canonical word can produce a different
    canonical word, so rotation classes are not deduplicated.
    """
    if n == 0:
        yield EMPTY_UNSIGNED
        return
    length = 2 * n
    strands: list[Strand | None] = [None] * length
    partner = [-1] * length

    def fill(free: list[int]) -> Iterator[GaussWord]:
        if not free:
            labels = [0] * length
            next_label = 1
            for p in range(length):
                if labels[p] == 0:
                    labels[p] = labels[partner[p]] = next_label
                    next_label += 1
            yield GaussWord(
                tuple(
                    Symbol(strands[p], labels[p])  # type: ignore[arg-type]
                    for p in range(length)
                ),
                Signedness.UNSIGNED,
            )
            return
        a = free[0]
        for k in range(1, len(free)):
            b = free[k]
            partner[a], partner[b] = b, a
            rest = free[1:k] + free[k + 1:]
            orientations = (
                [(Strand.UNDER, Strand.OVER)]
                if a == 0
                else [(Strand.UNDER, Strand.OVER), (Strand.OVER, Strand.UNDER)]
            )
            for strand_a, strand_b in orientations:
                strands[a], strands[b] = strand_a, strand_b
                yield from fill(rest)

    yield from fill(list(range(length)))


def random_unsigned_word(n: int, rng: random.Random) -> GaussWord:
    """A valid unsigned word with ``n`` crossings from a seeded RNG."""
    if n == 0:
        return EMPTY_UNSIGNED
    sequence = [label for label in range(1, n + 1) for _ in range(2)]
    rng.shuffle(sequence)
    first_under = {label: rng.random() < 0.5 for label in range(1, n + 1)}
    seen: set[int] = set()
    symbols = []
    for label in sequence:
        first = label not in seen
        seen.add(label)
        under = first_under[label] if first else not first_under[label]
        symbols.append(Symbol(Strand.UNDER if under else Strand.OVER, label))
    return GaussWord(tuple(symbols), Signedness.UNSIGNED)


def generate(policy: ExhaustivePolicy | RandomPolicy) -> WordCorpus:
    """Materialise the corpus for a policy (exhaustive mode needs n <= 6)."""
    if isinstance(policy, ExhaustivePolicy):
        if policy.max_crossings > 6:
            raise BoundExceeded("exhaustive generation is limited to 6 crossings")
        words = tuple(
            w
            for n in range(1, policy.max_crossings + 1)
            for w in exhaustive_words(n)
        )
    else:
        rng = random.Random(policy.seed)
        words = tuple(
            random_unsigned_word(
                rng.randint(policy.min_crossings, policy.max_crossings), rng
            )
            for _ in range(policy.count)
        )
    return WordCorpus(policy, words)
