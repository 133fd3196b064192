"""Two-way register automata over data words.

A data word is a sequence of (tag, datum) letters with tags from a
finite alphabet and data from an unbounded domain; the tape is
delimited by begin/end markers at virtual positions 0 and n+1.  The
automaton owns k registers holding data values or markers and can only
compare the observed value with register contents for equality.

Four rule kinds:

* MATCH_MOVE    -- observed equals register i: change state and move.
* STORE_FRESH   -- observed differs from every register: store it into
                   register i, change state and move.
* MATCH_STORE   -- observed equals register i: also copy it into
                   register j (allows duplicated register contents).
* SKIP_FRESH    -- observed differs from every register: change state
                   and move without storing.

The first two kinds form the basic model; :func:`compile_to_basic`
removes the other two without changing the recognised language.
Acceptance is reachability of a final state at any time.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .words import GaussWord


class Marker(enum.Enum):
    BEGIN = "BEGIN"
    END = "END"


RegisterValue = int | Marker


class Letter(NamedTuple):
    tag: str
    datum: int


@dataclass(frozen=True)
class DataWord:
    letters: tuple[Letter, ...]

    def __len__(self) -> int:
        return len(self.letters)

    def observed(self, position: int) -> "int | Marker":
        """Value on the tape: a datum, or a marker at positions 0 and n+1."""
        if position == 0:
            return Marker.BEGIN
        if position == len(self.letters) + 1:
            return Marker.END
        return self.letters[position - 1].datum

    def tag_at(self, position: int) -> str | None:
        """Tag at a letter position; markers carry no tag."""
        if 1 <= position <= len(self.letters):
            return self.letters[position - 1].tag
        return None

    @property
    def tags(self) -> frozenset[str]:
        return frozenset(letter.tag for letter in self.letters)


def data_word(pairs: Iterable[tuple[str, int]]) -> DataWord:
    return DataWord(tuple(Letter(tag, datum) for tag, datum in pairs))


def data_word_from_gauss(w: GaussWord) -> DataWord:
    """Tag/datum splitting: tag = strand plus sign, datum = label."""
    return data_word(
        (
            s.strand.value + (s.sign.value if s.sign is not None else ""),
            s.label,
        )
        for s in w.symbols
    )


class Move(enum.Enum):
    STAY = "stay"
    LEFT = "left"
    RIGHT = "right"


class RuleKind(enum.Enum):
    MATCH_MOVE = 1
    STORE_FRESH = 2
    MATCH_STORE = 3
    SKIP_FRESH = 4


@dataclass(frozen=True)
class Rule:
    kind: RuleKind
    state_from: str
    state_to: str
    move: Move
    register: int | None = None
    target_register: int | None = None
    guard_tag: str | None = None

    def __str__(self) -> str:
        guard = f"{self.guard_tag}," if self.guard_tag else ""
        if self.kind is RuleKind.MATCH_MOVE:
            return (f"({guard}{self.register},{self.state_from}) -> "
                    f"({self.state_to},{self.move.value})")
        if self.kind is RuleKind.STORE_FRESH:
            return (f"({guard}{self.state_from}) -> "
                    f"({self.state_to},{self.register},{self.move.value})")
        if self.kind is RuleKind.MATCH_STORE:
            return (f"({guard}{self.register},{self.state_from}) -> "
                    f"({self.state_to},{self.target_register},{self.move.value})")
        return f"({guard}{self.state_from}) -> ({self.state_to},{self.move.value})"


class AutomatonError(Exception):
    """Base for runtime automaton failures."""


class TapeBoundaryError(AutomatonError):
    """A move would take the head past a marker."""


class DeterminismViolation(AutomatonError):
    """More than one rule applies although the run is meant to be deterministic."""


class UndeclaredTagError(AutomatonError):
    """The input word uses tags outside the spec's declared alphabet."""


@dataclass(frozen=True)
class AutomatonSpec:
    states: tuple[str, ...]
    initial: str
    finals: frozenset[str]
    registers: int
    initial_assignment: tuple["int | Marker", ...]
    rules: tuple[Rule, ...]
    tags: frozenset[str] | None = None
    deterministic: bool = False
    name: str = ""

    def __post_init__(self):
        known = set(self.states)
        if self.initial not in known:
            raise ValueError(f"initial state {self.initial!r} not in states")
        if not self.finals <= known:
            raise ValueError("final states must be a subset of states")
        if len(self.initial_assignment) != self.registers:
            raise ValueError("initial assignment must cover every register")
        for rule in self.rules:
            if rule.state_from not in known or rule.state_to not in known:
                raise ValueError(f"rule {rule} mentions unknown states")
            needs_register = rule.kind in (
                RuleKind.MATCH_MOVE, RuleKind.STORE_FRESH, RuleKind.MATCH_STORE
            )
            if needs_register != (rule.register is not None):
                raise ValueError(f"rule {rule}: register index mismatch for its kind")
            if (rule.kind is RuleKind.MATCH_STORE) != (rule.target_register is not None):
                raise ValueError(f"rule {rule}: target register mismatch for its kind")
            for index in (rule.register, rule.target_register):
                if index is not None and not 1 <= index <= self.registers:
                    raise ValueError(f"rule {rule}: register {index} out of range")


@dataclass(frozen=True)
class Configuration:
    state: str
    head: int
    registers: tuple["int | Marker", ...]

    def __str__(self) -> str:
        regs = ",".join(
            v.value if isinstance(v, Marker) else str(v) for v in self.registers
        )
        return f"({self.state} @{self.head} [{regs}])"


def initial_configuration(spec: AutomatonSpec, word: DataWord) -> Configuration:
    """Start state at the first letter (the end marker for the empty word)."""
    return Configuration(spec.initial, 1, spec.initial_assignment)


def applicable_rules(
    spec: AutomatonSpec, word: DataWord, config: Configuration
) -> list[Rule]:
    """Rules whose guard, state and register test match the configuration."""
    observed = word.observed(config.head)
    tag = word.tag_at(config.head)
    fresh = observed not in config.registers
    out = []
    for rule in spec.rules:
        if rule.state_from != config.state:
            continue
        if rule.guard_tag is not None and rule.guard_tag != tag:
            continue
        if rule.kind in (RuleKind.MATCH_MOVE, RuleKind.MATCH_STORE):
            if config.registers[rule.register - 1] == observed:
                out.append(rule)
        else:
            if fresh:
                out.append(rule)
    return out


def step(
    spec: AutomatonSpec, word: DataWord, config: Configuration, rule: Rule
) -> Configuration:
    """Apply one rule: optional store, then the head move."""
    observed = word.observed(config.head)
    registers = config.registers
    store_into = None
    if rule.kind is RuleKind.STORE_FRESH:
        store_into = rule.register
    elif rule.kind is RuleKind.MATCH_STORE:
        store_into = rule.target_register
    if store_into is not None:
        regs = list(registers)
        regs[store_into - 1] = observed
        registers = tuple(regs)
    head = config.head
    if rule.move is Move.LEFT:
        head -= 1
    elif rule.move is Move.RIGHT:
        head += 1
    if not 0 <= head <= len(word) + 1:
        raise TapeBoundaryError(
            f"move {rule.move.value} from position {config.head} leaves the tape"
        )
    return Configuration(rule.state_to, head, registers)


def configuration_ceiling(spec: AutomatonSpec, word: DataWord) -> int:
    """Upper bound on distinct reachable configurations.

    Registers only ever hold initial-assignment values or input data, so
    |Q| * (n+2) * values**k bounds the configuration space.
    """
    values = {letter.datum for letter in word.letters}
    values.update(spec.initial_assignment)
    values.update((Marker.BEGIN, Marker.END))
    return len(spec.states) * (len(word) + 2) * len(values) ** spec.registers


@dataclass(frozen=True)
class RunResult:
    accepted: bool
    reason: str
    explored: int
    ceiling: int
    trace: tuple[Configuration, ...] | None = None


def run(
    spec: AutomatonSpec,
    word: DataWord,
    mode: str | None = None,
    max_configurations: int | None = None,
) -> RunResult:
    """Decide acceptance exactly.

    Deterministic mode follows the unique applicable rule, rejecting on
    a stuck configuration, a repeated configuration, or a move off the
    tape; two applicable rules raise :class:`DeterminismViolation`.
    Nondeterministic mode explores the configuration graph breadth
    first and accepts iff a final state is reachable.  Both modes
    terminate because the configuration space is finite; the explored
    count is checked against the computed ceiling (or an explicit
    ``max_configurations`` cap, whose violation raises
    :class:`AutomatonError`).
    """
    if spec.tags is not None and not word.tags <= spec.tags:
        extra = sorted(word.tags - spec.tags)
        raise UndeclaredTagError(f"word uses undeclared tags {extra}")
    if mode is None:
        mode = "det" if spec.deterministic else "nondet"
    if mode not in ("det", "nondet"):
        raise ValueError(f"mode must be 'det' or 'nondet', got {mode!r}")
    ceiling = configuration_ceiling(spec, word)
    limit = ceiling if max_configurations is None else max_configurations

    def check_limit(explored: int) -> None:
        if explored > limit:
            raise AutomatonError(
                f"explored {explored} configurations, exceeding the limit {limit}"
            )

    start = initial_configuration(spec, word)
    if mode == "det":
        config = start
        trace = [config]
        visited: set[Configuration] = set()
        while True:
            if config.state in spec.finals:
                return RunResult(True, "accepted", len(visited) + 1, ceiling, tuple(trace))
            if config in visited:
                return RunResult(False, "loop", len(visited), ceiling, tuple(trace))
            visited.add(config)
            check_limit(len(visited))
            rules = applicable_rules(spec, word, config)
            if len(rules) > 1:
                raise DeterminismViolation(
                    f"{len(rules)} rules apply in {config}: "
                    + "; ".join(str(r) for r in rules)
                )
            if not rules:
                return RunResult(False, "no-rule", len(visited), ceiling, tuple(trace))
            try:
                config = step(spec, word, config, rules[0])
            except TapeBoundaryError:
                return RunResult(False, "boundary", len(visited), ceiling, tuple(trace))
            trace.append(config)

    # Breadth-first reachability with parent links for the accepting path.
    parents: dict[Configuration, Configuration | None] = {start: None}
    queue: deque[Configuration] = deque([start])

    def path_to(config: Configuration) -> tuple[Configuration, ...]:
        path = [config]
        while parents[path[-1]] is not None:
            path.append(parents[path[-1]])  # type: ignore[arg-type]
        return tuple(reversed(path))

    if start.state in spec.finals:
        return RunResult(True, "accepted", 1, ceiling, (start,))
    while queue:
        config = queue.popleft()
        for rule in applicable_rules(spec, word, config):
            try:
                successor = step(spec, word, config, rule)
            except TapeBoundaryError:
                continue
            if successor in parents:
                continue
            parents[successor] = config
            check_limit(len(parents))
            if successor.state in spec.finals:
                return RunResult(True, "accepted", len(parents), ceiling,
                                 path_to(successor))
            queue.append(successor)
    return RunResult(False, "exhausted", len(parents), ceiling, None)


# ---------------------------------------------------------------------------
# Compilation of the extended rule kinds down to the basic two.
# ---------------------------------------------------------------------------

def compile_to_basic(spec: AutomatonSpec) -> AutomatonSpec:
    """Rewrite a spec so it only uses MATCH_MOVE and STORE_FRESH rules.

    One extra physical register is added and register aliasing is moved
    into the finite control: a compiled state pairs a source state with
    a map sending each source register to the physical register holding
    its value.  Physical registers are initialised pairwise distinct
    (markers first, then fresh numbers) and only ever overwritten with
    values fresh to all of them, so they stay pairwise distinct; a
    physical register outside the map's image may still hold the
    observed value, in which case an equality rule re-adopts it instead
    of storing.  This keeps STORE_FRESH/SKIP_FRESH applicability aligned
    with the source machine and preserves determinism.
    """
    k = spec.registers
    physical_count = k + 1

    distinct: list[int | Marker] = []
    for value in spec.initial_assignment:
        if value not in distinct:
            distinct.append(value)
    sentinels: list[int | Marker] = []
    for marker in (Marker.BEGIN, Marker.END):
        if marker not in distinct:
            sentinels.append(marker)
    next_fresh = max(
        (v for v in distinct if isinstance(v, int)), default=0
    ) + 1
    while len(distinct) + len(sentinels) < physical_count:
        sentinels.append(next_fresh)
        next_fresh += 1
    physical_initial = tuple(distinct + sentinels)[:physical_count]

    phi0 = tuple(distinct.index(v) + 1 for v in spec.initial_assignment)

    def state_name(q: str, phi: tuple[int, ...]) -> str:
        return f"{q}~{'.'.join(map(str, phi))}" if phi else f"{q}~"

    by_state: dict[str, list[Rule]] = {}
    for rule in spec.rules:
        by_state.setdefault(rule.state_from, []).append(rule)

    compiled_rules: list[Rule] = []
    seen: set[tuple[str, tuple[int, ...]]] = set()
    frontier: deque[tuple[str, tuple[int, ...]]] = deque([(spec.initial, phi0)])
    seen.add((spec.initial, phi0))

    def emit(successors: list[tuple[str, tuple[int, ...]]], rule: Rule) -> None:
        compiled_rules.append(rule)
        for q_phi in successors:
            if q_phi not in seen:
                seen.add(q_phi)
                frontier.append(q_phi)

    while frontier:
        q, phi = frontier.popleft()
        source = state_name(q, phi)
        free = [p for p in range(1, physical_count + 1) if p not in set(phi)]
        for rule in by_state.get(q, ()):
            if rule.kind is RuleKind.MATCH_MOVE:
                target = (rule.state_to, phi)
                emit([target], Rule(
                    RuleKind.MATCH_MOVE, source, state_name(*target), rule.move,
                    register=phi[rule.register - 1], guard_tag=rule.guard_tag,
                ))
            elif rule.kind is RuleKind.MATCH_STORE:
                phi_next = list(phi)
                phi_next[rule.target_register - 1] = phi[rule.register - 1]
                target = (rule.state_to, tuple(phi_next))
                emit([target], Rule(
                    RuleKind.MATCH_MOVE, source, state_name(*target), rule.move,
                    register=phi[rule.register - 1], guard_tag=rule.guard_tag,
                ))
            elif rule.kind is RuleKind.STORE_FRESH:
                phi_store = list(phi)
                phi_store[rule.register - 1] = free[0]
                target = (rule.state_to, tuple(phi_store))
                emit([target], Rule(
                    RuleKind.STORE_FRESH, source, state_name(*target), rule.move,
                    register=free[0], guard_tag=rule.guard_tag,
                ))
                for p in free:
                    phi_adopt = list(phi)
                    phi_adopt[rule.register - 1] = p
                    target = (rule.state_to, tuple(phi_adopt))
                    emit([target], Rule(
                        RuleKind.MATCH_MOVE, source, state_name(*target), rule.move,
                        register=p, guard_tag=rule.guard_tag,
                    ))
            else:  # SKIP_FRESH: scratch-store into a free register
                target = (rule.state_to, phi)
                emit([target], Rule(
                    RuleKind.STORE_FRESH, source, state_name(*target), rule.move,
                    register=free[0], guard_tag=rule.guard_tag,
                ))
                for p in free:
                    emit([target], Rule(
                        RuleKind.MATCH_MOVE, source, state_name(*target), rule.move,
                        register=p, guard_tag=rule.guard_tag,
                    ))

    states = tuple(sorted(state_name(q, phi) for q, phi in seen))
    finals = frozenset(
        state_name(q, phi) for q, phi in seen if q in spec.finals
    )
    return AutomatonSpec(
        states=states,
        initial=state_name(spec.initial, phi0),
        finals=finals,
        registers=physical_count,
        initial_assignment=physical_initial,
        rules=tuple(compiled_rules),
        tags=spec.tags,
        deterministic=spec.deterministic,
        name=f"{spec.name}-basic" if spec.name else "basic",
    )


# ---------------------------------------------------------------------------
# Register values as bounded counters.
# ---------------------------------------------------------------------------

class CounterRangeError(ValueError):
    """Counter navigation past 0 or past the distinct-symbol count."""


class RegisterCounter:
    """Reads a register value as a counter bounded by the input's variety.

    A register holding datum v encodes the number of distinct data
    values occurring strictly before the first occurrence of v.  The
    counter therefore ranges over 0 .. t-1 where t is the number of
    distinct values, stepping through data values in first-appearance
    order.
    """

    def __init__(self, word: DataWord):
        if len(word) == 0:
            raise ValueError("counter encoding needs a nonempty word")
        order: list[int] = []
        for letter in word.letters:
            if letter.datum not in order:
                order.append(letter.datum)
        self._order = order

    @property
    def limit(self) -> int:
        """Number of distinct data values (exclusive counter bound)."""
        return len(self._order)

    def value(self, register_value: int) -> int:
        try:
            return self._order.index(register_value)
        except ValueError:
            raise ValueError(f"{register_value} does not occur in the word") from None

    def is_zero(self, register_value: int) -> bool:
        return self.value(register_value) == 0

    def increment(self, register_value: int) -> int:
        """Datum encoding the next counter value."""
        current = self.value(register_value)
        if current + 1 >= self.limit:
            raise CounterRangeError(
                f"counter already at its maximum {self.limit - 1}"
            )
        return self._order[current + 1]

    def decrement(self, register_value: int) -> int:
        current = self.value(register_value)
        if current == 0:
            raise CounterRangeError("counter already at zero")
        return self._order[current - 1]


# ---------------------------------------------------------------------------
# Built-in recognisers for the languages of (signed) Gauss words.
# ---------------------------------------------------------------------------

_WORK, _AT_BEGIN, _AT_END = 1, 2, 3


def _recognizer(tag_pairs: dict[str, str], summaries_done: set[str],
                tags: tuple[str, ...], name: str) -> AutomatonSpec:
    """Two-way deterministic recogniser for pairing languages.

    For each position the machine stores the datum, determines whether
    it sits at the first or second occurrence (walking left), scans the
    whole word tallying the tags of matching occurrences, then walks
    back to the position and advances.  ``tag_pairs`` maps a summary
    state after one matching occurrence to the tag completing it;
    ``summaries_done`` are the complete tallies.
    """
    rules: list[Rule] = []
    states: list[str] = ["check", "accept", "A0", "A1"]

    def add(kind, state_from, state_to, move, register=None,
            target_register=None, guard_tag=None):
        rules.append(Rule(kind, state_from, state_to, move, register,
                          target_register, guard_tag))

    # Position check: store the datum (fresh or already held) and walk left.
    add(RuleKind.MATCH_STORE, "check", "A0", Move.LEFT, _WORK, _WORK)
    add(RuleKind.STORE_FRESH, "check", "A0", Move.LEFT, _WORK)
    add(RuleKind.MATCH_MOVE, "check", "accept", Move.STAY, _AT_END)

    # Occurrence counting left of the position: 0 or 1 matches allowed.
    add(RuleKind.SKIP_FRESH, "A0", "A0", Move.LEFT)
    add(RuleKind.SKIP_FRESH, "A1", "A1", Move.LEFT)
    add(RuleKind.MATCH_MOVE, "A0", "A1", Move.LEFT, _WORK)
    add(RuleKind.MATCH_MOVE, "A0", _b(1, "none"), Move.RIGHT, _AT_BEGIN)
    add(RuleKind.MATCH_MOVE, "A1", _b(2, "none"), Move.RIGHT, _AT_BEGIN)

    # Full scan tallying the tags of occurrences of the stored datum.
    summaries = {"none"} | set(tag_pairs) | summaries_done
    for occ in (1, 2):
        for summary in sorted(summaries):
            state = _b(occ, summary)
            states.append(state)
            add(RuleKind.SKIP_FRESH, state, state, Move.RIGHT)
            if summary == "none":
                for tag in tags:
                    add(RuleKind.MATCH_MOVE, state, _b(occ, _summary_for(tag)),
                        Move.RIGHT, _WORK, guard_tag=tag)
            elif summary in tag_pairs:
                add(RuleKind.MATCH_MOVE, state, _b(occ, "done-" + summary[0]),
                    Move.RIGHT, _WORK, guard_tag=tag_pairs[summary])
            # complete summaries accept no further matches: a third
            # occurrence leaves the machine stuck, rejecting.

    for occ in (1, 2):
        for summary in sorted(summaries_done):
            add(RuleKind.MATCH_MOVE, _b(occ, summary),
                "C2" if occ == 2 else "C1_0", Move.LEFT, _AT_END)

    # Walk back to the checked position and advance to its right neighbour.
    states += ["C1_0", "C1_1", "C2"]
    add(RuleKind.SKIP_FRESH, "C1_0", "C1_0", Move.LEFT)
    add(RuleKind.SKIP_FRESH, "C1_1", "C1_1", Move.LEFT)
    add(RuleKind.SKIP_FRESH, "C2", "C2", Move.LEFT)
    add(RuleKind.MATCH_MOVE, "C1_0", "C1_1", Move.LEFT, _WORK)
    add(RuleKind.MATCH_MOVE, "C1_1", "check", Move.RIGHT, _WORK)
    add(RuleKind.MATCH_MOVE, "C2", "check", Move.RIGHT, _WORK)

    return AutomatonSpec(
        states=tuple(states),
        initial="check",
        finals=frozenset({"accept"}),
        registers=3,
        initial_assignment=(Marker.BEGIN, Marker.BEGIN, Marker.END),
        rules=tuple(rules),
        tags=frozenset(tags),
        deterministic=True,
        name=name,
    )


def _b(occ: int, summary: str) -> str:
    return f"B{occ}_{summary}"


def _summary_for(tag: str) -> str:
    return {"U": "u", "O": "o", "U+": "u+", "O+": "o+",
            "U-": "u-", "O-": "o-"}[tag]


def gauss_word_recognizer() -> AutomatonSpec:
    """Deterministic two-way recogniser for valid unsigned Gauss words."""
    return _recognizer(
        tag_pairs={"u": "O", "o": "U"},
        summaries_done={"done-u", "done-o"},
        tags=("U", "O"),
        name="gw",
    )


def signed_gauss_word_recognizer() -> AutomatonSpec:
    """Deterministic two-way recogniser for valid signed Gauss words."""
    return _recognizer(
        tag_pairs={"u+": "O+", "o+": "U+", "u-": "O-", "o-": "U-"},
        summaries_done={"done-u", "done-o"},
        tags=("U+", "O+", "U-", "O-"),
        name="sgw",
    )


def builtin_specs() -> dict[str, AutomatonSpec]:
    return {"gw": gauss_word_recognizer(), "sgw": signed_gauss_word_recognizer()}


# ---------------------------------------------------------------------------
# JSON wire format.
# ---------------------------------------------------------------------------

def _value_to_json(value: "int | Marker"):
    return value.value if isinstance(value, Marker) else value


def _value_from_json(value):
    if value in ("BEGIN", "END"):
        return Marker(value)
    if isinstance(value, int):
        return value
    raise ValueError(f"register value must be an integer, 'BEGIN' or 'END': {value!r}")


def spec_to_json(spec: AutomatonSpec) -> dict:
    out: dict = {
        "states": list(spec.states),
        "initial": spec.initial,
        "finals": sorted(spec.finals),
        "k": spec.registers,
        "initial_assignment": [_value_to_json(v) for v in spec.initial_assignment],
        "rules": [],
        "deterministic": spec.deterministic,
    }
    if spec.tags is not None:
        out["tags"] = sorted(spec.tags)
    if spec.name:
        out["name"] = spec.name
    for rule in spec.rules:
        entry: dict = {
            "form": rule.kind.value,
            "from": rule.state_from,
            "to": rule.state_to,
            "move": rule.move.value,
        }
        if rule.register is not None:
            entry["register"] = rule.register
        if rule.target_register is not None:
            entry["target_register"] = rule.target_register
        if rule.guard_tag is not None:
            entry["guard_tag"] = rule.guard_tag
        out["rules"].append(entry)
    return out


def spec_from_json(payload: dict) -> AutomatonSpec:
    try:
        rules = tuple(
            Rule(
                kind=RuleKind(entry["form"]),
                state_from=entry["from"],
                state_to=entry["to"],
                move=Move(entry["move"]),
                register=entry.get("register"),
                target_register=entry.get("target_register"),
                guard_tag=entry.get("guard_tag"),
            )
            for entry in payload["rules"]
        )
        return AutomatonSpec(
            states=tuple(payload["states"]),
            initial=payload["initial"],
            finals=frozenset(payload["finals"]),
            registers=payload["k"],
            initial_assignment=tuple(
                _value_from_json(v) for v in payload["initial_assignment"]
            ),
            rules=rules,
            tags=frozenset(payload["tags"]) if "tags" in payload else None,
            deterministic=bool(payload.get("deterministic", False)),
            name=payload.get("name", ""),
        )
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed automaton spec: {exc}") from exc


def word_to_json(word: DataWord) -> list[dict]:
    return [{"tag": letter.tag, "datum": letter.datum} for letter in word.letters]


def word_from_json(payload: Sequence[dict]) -> DataWord:
    try:
        return data_word((entry["tag"], int(entry["datum"])) for entry in payload)
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed data word: {exc}") from exc
