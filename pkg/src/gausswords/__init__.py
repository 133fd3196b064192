"""Gauss word validation and planarity decisions.

Signed words are decided through the Euler characteristic of the
combinatorial Carter surface; unsigned words through the three-stage
interlacement-graph test.  A general two-way register-automaton
interpreter runs the shipped recognisers for the word languages, and a
brute-force oracle validates everything at desk scale.
"""

from .words import (
    EMPTY_SIGNED,
    EMPTY_UNSIGNED,
    Direction,
    GaussWord,
    InvalidWordError,
    ParseError,
    Sign,
    Signedness,
    SigningError,
    Strand,
    Symbol,
    ValidationReport,
    Violation,
    apply_signing,
    counterpart,
    cyclic_neighbor,
    enumerate_signings,
    parse,
    relabel,
    render,
    rotate,
    strip_signs,
    validate,
)
from .surface import (
    EulerReport,
    FaceDecomposition,
    TraversalState,
    enumerate_faces,
    euler_characteristic,
    is_planar_signed,
    left_turn_step,
)
from .interlacement import (
    InterlacementGraph,
    OverlapCount,
    PlanarityVerdict,
    interlacement_graph,
    is_planar_unsigned,
    span_overlap,
    span_parity,
    span_symbols,
)
from .automata import (
    AutomatonSpec,
    Configuration,
    DataWord,
    Marker,
    Move,
    RegisterCounter,
    Rule,
    RuleKind,
    RunResult,
    builtin_specs,
    compile_to_basic,
    data_word,
    data_word_from_gauss,
    run,
)
from .oracle import (
    BoundExceeded,
    ExhaustivePolicy,
    RandomPolicy,
    WordCorpus,
    brute_force_cycle_parity,
    brute_force_unsigned_planarity,
    exhaustive_words,
    generate,
    random_unsigned_word,
)

__version__ = "0.1.0"

__all__ = [
    "AutomatonSpec",
    "BoundExceeded",
    "Configuration",
    "DataWord",
    "Direction",
    "EMPTY_SIGNED",
    "EMPTY_UNSIGNED",
    "EulerReport",
    "ExhaustivePolicy",
    "FaceDecomposition",
    "GaussWord",
    "InterlacementGraph",
    "InvalidWordError",
    "Marker",
    "Move",
    "OverlapCount",
    "ParseError",
    "PlanarityVerdict",
    "RandomPolicy",
    "RegisterCounter",
    "Rule",
    "RuleKind",
    "RunResult",
    "Sign",
    "Signedness",
    "SigningError",
    "Strand",
    "Symbol",
    "TraversalState",
    "ValidationReport",
    "Violation",
    "WordCorpus",
    "apply_signing",
    "brute_force_cycle_parity",
    "brute_force_unsigned_planarity",
    "builtin_specs",
    "compile_to_basic",
    "counterpart",
    "cyclic_neighbor",
    "data_word",
    "data_word_from_gauss",
    "enumerate_faces",
    "enumerate_signings",
    "euler_characteristic",
    "exhaustive_words",
    "generate",
    "interlacement_graph",
    "is_planar_signed",
    "is_planar_unsigned",
    "left_turn_step",
    "parse",
    "random_unsigned_word",
    "relabel",
    "render",
    "rotate",
    "run",
    "span_overlap",
    "span_parity",
    "span_symbols",
    "strip_signs",
    "validate",
]
