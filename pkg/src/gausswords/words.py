"""Gauss words: cyclic sequences of labelled over/under symbols.

A Gauss word records the crossings met while travelling once around a
knot diagram: each crossing label appears once as an overpass (``O``)
and once as an underpass (``U``).  Signed words additionally carry the
crossing sign (``+``/``-``) at both occurrences.  All structures here
are immutable; every operation is a pure function.

Text grammar (whitespace-separated tokens, ASCII only, case-sensitive)::

    token := ("O" | "U") digits [sign]
    sign  := "+" | "-"
    digits := [0-9]+ with value >= 1
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterator, Mapping


class Strand(enum.Enum):
    """Which branch of the knot passes through a crossing."""

    OVER = "O"
    UNDER = "U"

    @property
    def opposite(self) -> "Strand":
        return Strand.UNDER if self is Strand.OVER else Strand.OVER


class Sign(enum.Enum):
    PLUS = "+"
    MINUS = "-"

    @property
    def opposite(self) -> "Sign":
        return Sign.MINUS if self is Sign.PLUS else Sign.PLUS


class Direction(enum.Enum):
    """Movement along the cyclic word: RIGHT follows the orientation."""

    LEFT = "L"
    RIGHT = "R"

    @property
    def opposite(self) -> "Direction":
        return Direction.RIGHT if self is Direction.LEFT else Direction.LEFT


class Signedness(enum.Enum):
    SIGNED = "signed"
    UNSIGNED = "unsigned"


class ParseError(ValueError):
    """Raised for text that does not match the token grammar.

    ``position`` is the 1-based index of the offending token.
    """

    def __init__(self, message: str, position: int, token: str):
        super().__init__(f"token {position} {token!r}: {message}")
        self.position = position
        self.token = token


class InvalidWordError(ValueError):
    """Raised when an operation requires a valid Gauss word."""


class SigningError(ValueError):
    """Raised when a signing map does not cover every label."""


@dataclass(frozen=True)
class Symbol:
    """One occurrence of a crossing: strand kind, label, optional sign."""

    strand: Strand
    label: int
    sign: Sign | None = None

    def __post_init__(self):
        if self.label < 1:
            raise ValueError(f"label must be >= 1, got {self.label}")

    @property
    def flipped(self) -> "Symbol":
        """Same symbol with the strand reversed (U <-> O)."""
        return Symbol(self.strand.opposite, self.label, self.sign)

    def __str__(self) -> str:
        sign = self.sign.value if self.sign is not None else ""
        return f"{self.strand.value}{self.label}{sign}"


@dataclass(frozen=True)
class GaussWord:
    """Finite cyclic sequence of symbols, either all signed or all unsigned.

    Signedness is a type-level property: constructing a word whose
    symbols disagree with the declared signedness raises ``ValueError``.
    Validity (the pairing conditions on labels) is checked separately by
    :func:`validate`.
    """

    symbols: tuple[Symbol, ...]
    signedness: Signedness

    def __post_init__(self):
        object.__setattr__(self, "symbols", tuple(self.symbols))
        want_sign = self.signedness is Signedness.SIGNED
        for i, sym in enumerate(self.symbols):
            if (sym.sign is not None) != want_sign:
                raise ValueError(
                    f"symbol {i} ({sym}) does not match {self.signedness.value} word"
                )

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[Symbol]:
        return iter(self.symbols)

    def __getitem__(self, i: int) -> Symbol:
        return self.symbols[i]

    @property
    def is_signed(self) -> bool:
        return self.signedness is Signedness.SIGNED

    @property
    def labels(self) -> tuple[int, ...]:
        """Distinct labels in increasing order."""
        return tuple(sorted({s.label for s in self.symbols}))

    def positions_of(self, label: int) -> tuple[int, ...]:
        return tuple(i for i, s in enumerate(self.symbols) if s.label == label)

    def __str__(self) -> str:
        return render(self)


EMPTY_UNSIGNED = GaussWord((), Signedness.UNSIGNED)
EMPTY_SIGNED = GaussWord((), Signedness.SIGNED)

_TOKEN = re.compile(r"([UO])([0-9]+)([+-]?)\Z")


def parse(text: str) -> GaussWord:
    """Parse whitespace-separated tokens into a Gauss word.

    Signedness is inferred: every token signed gives a signed word,
    every token bare gives an unsigned word, a mixture is a
    :class:`ParseError`.  Pairing conditions are *not* checked here.
    """
    symbols = []
    saw_signed = saw_unsigned = False
    for position, token in enumerate(text.split(), start=1):
        m = _TOKEN.match(token)
        if m is None:
            raise ParseError("expected U<digits> or O<digits> with optional +/-",
                             position, token)
        strand, digits, sign = m.groups()
        label = int(digits)
        if label < 1:
            raise ParseError("label must be >= 1", position, token)
        if sign:
            saw_signed = True
        else:
            saw_unsigned = True
        if saw_signed and saw_unsigned:
            raise ParseError("mixed signed and unsigned tokens", position, token)
        symbols.append(Symbol(Strand(strand), label, Sign(sign) if sign else None))
    signedness = Signedness.SIGNED if saw_signed else Signedness.UNSIGNED
    return GaussWord(tuple(symbols), signedness)


def render(w: GaussWord) -> str:
    """Canonical text form; ``parse(render(w)) == w``."""
    return " ".join(str(s) for s in w.symbols)


@dataclass(frozen=True)
class Violation:
    label: int
    message: str

    def __str__(self) -> str:
        return f"label {self.label}: {self.message}"


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[Violation, ...]


def validate(w: GaussWord) -> ValidationReport:
    """Check the pairing conditions for ``w``'s signedness.

    Unsigned: every label occurs exactly once as U and once as O.
    Signed: every label occurs exactly twice, once as U and once as O,
    both occurrences carrying the same sign.
    """
    violations = []
    by_label: dict[int, list[Symbol]] = {}
    for sym in w.symbols:
        by_label.setdefault(sym.label, []).append(sym)
    for label in sorted(by_label):
        occurrences = by_label[label]
        if w.is_signed:
            signs = {s.sign for s in occurrences}
            if len(signs) > 1:
                violations.append(Violation(label, "occurrences carry different signs"))
                continue
        n_under = sum(1 for s in occurrences if s.strand is Strand.UNDER)
        n_over = len(occurrences) - n_under
        if n_under != 1 or n_over != 1:
            violations.append(Violation(
                label,
                f"|w|_(U,{label})={n_under}, |w|_(O,{label})={n_over}, expected 1 and 1",
            ))
    return ValidationReport(not violations, tuple(violations))


def require_valid(w: GaussWord) -> None:
    report = validate(w)
    if not report.ok:
        detail = "; ".join(str(v) for v in report.violations)
        raise InvalidWordError(f"invalid Gauss word: {detail}")


def counterpart(w: GaussWord, p: int) -> int:
    """Position of the other occurrence of the label at position ``p``."""
    require_valid(w)
    a, b = w.positions_of(w[p].label)
    return b if p == a else a


def counterpart_table(w: GaussWord) -> tuple[int, ...]:
    """Counterpart positions for every position at once (word must be valid)."""
    require_valid(w)
    table = [0] * len(w)
    for label in w.labels:
        a, b = w.positions_of(label)
        table[a], table[b] = b, a
    return tuple(table)


def cyclic_neighbor(w: GaussWord, p: int, d: Direction) -> int:
    """Next position (RIGHT) or previous position (LEFT), cyclically."""
    if len(w) == 0:
        raise InvalidWordError("empty word has no neighbours")
    step = 1 if d is Direction.RIGHT else -1
    return (p + step) % len(w)


def rotate(w: GaussWord, k: int) -> GaussWord:
    """Word read from a base point shifted by ``k`` positions."""
    if len(w) == 0:
        return w
    k %= len(w)
    return GaussWord(w.symbols[k:] + w.symbols[:k], w.signedness)


def relabel(w: GaussWord, mapping: Mapping[int, int]) -> GaussWord:
    """Apply a label permutation (total on the labels of ``w``)."""
    return GaussWord(
        tuple(Symbol(s.strand, mapping[s.label], s.sign) for s in w.symbols),
        w.signedness,
    )


def strip_signs(w: GaussWord) -> GaussWord:
    """Forget the signs of a valid signed word."""
    if not w.is_signed:
        raise InvalidWordError("strip_signs expects a signed word")
    require_valid(w)
    return GaussWord(
        tuple(Symbol(s.strand, s.label) for s in w.symbols), Signedness.UNSIGNED
    )


def apply_signing(w: GaussWord, signing: Mapping[int, Sign]) -> GaussWord:
    """Attach a sign to every label of a valid unsigned word."""
    if w.is_signed:
        raise InvalidWordError("apply_signing expects an unsigned word")
    require_valid(w)
    missing = [label for label in w.labels if label not in signing]
    if missing:
        raise SigningError(f"signing does not cover labels {missing}")
    return GaussWord(
        tuple(Symbol(s.strand, s.label, signing[s.label]) for s in w.symbols),
        Signedness.SIGNED,
    )


def enumerate_signings(w: GaussWord) -> Iterator[GaussWord]:
    """All 2**n signings of a valid unsigned word with n labels.

    Deterministic order: labels ascending, signs counted in binary with
    PLUS = 0, so the all-plus signing comes first.
    """
    if w.is_signed:
        raise InvalidWordError("enumerate_signings expects an unsigned word")
    require_valid(w)
    labels = w.labels
    for bits in range(2 ** len(labels)):
        signing = {
            label: Sign.MINUS if (bits >> i) & 1 else Sign.PLUS
            for i, label in enumerate(labels)
        }
        yield apply_signing(w, signing)
