"""Command-line front end.

Subcommands: validate, planar, faces, euler, interlace, oracle,
automaton, generate.  Exit codes: 0 the property holds / accept, 1 it
fails / reject, 2 invalid input, 3 an internal limit was exceeded.
Outputs are byte-stable for identical inputs and flags; JSON payloads
carry a versioned "schema" field.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Iterable

from . import automata, interlacement, oracle, surface, words

EXIT_HOLDS = 0
EXIT_FAILS = 1
EXIT_INVALID = 2
EXIT_LIMIT = 3


class _Output:
    def __init__(self, as_json: bool, quiet: bool):
        self.as_json = as_json
        self.quiet = quiet

    def emit(self, payload: dict, text: str) -> None:
        if self.quiet:
            return
        if self.as_json:
            print(json.dumps(payload, sort_keys=True))
        else:
            print(text)

    def raw(self, text: str) -> None:
        if not self.quiet:
            print(text)


def _word_lines(args) -> list[str]:
    """Word inputs: the positional argument, --file, or stdin lines."""
    if getattr(args, "word", None) is not None:
        return [args.word]
    if getattr(args, "file", None):
        text = Path(args.file).read_text(encoding="utf-8")
    else:
        text = sys.stdin.read()
    return [
        line.strip()
        for line in text.splitlines()
        if line.strip() and not line.lstrip().startswith("#")
    ]


def _worst(codes: Iterable[int]) -> int:
    codes = list(codes)
    for severity in (EXIT_INVALID, EXIT_LIMIT, EXIT_FAILS):
        if severity in codes:
            return severity
    return EXIT_HOLDS


def _per_word(args, out: _Output, handler) -> int:
    """Run a per-word handler over all inputs, combining exit codes."""
    try:
        lines = _word_lines(args)
    except OSError as exc:
        out.raw(f"error: {exc}")
        return EXIT_INVALID
    codes = []
    for line in lines:
        try:
            word = words.parse(line)
        except words.ParseError as exc:
            out.emit(
                {"schema": "gausswords/error/v1", "input": line, "error": str(exc)},
                f"{line!r}: parse error: {exc}",
            )
            codes.append(EXIT_INVALID)
            continue
        codes.append(handler(word, out))
    return _worst(codes)


# ---------------------------------------------------------------------------
# validate
# ---------------------------------------------------------------------------

def _cmd_validate(args, out: _Output) -> int:
    def handle(word: words.GaussWord, out: _Output) -> int:
        report = words.validate(word)
        if args.via_automaton:
            spec = automata.builtin_specs()["sgw" if word.is_signed else "gw"]
            accepted = automata.run(spec, automata.data_word_from_gauss(word)).accepted
            if accepted != report.ok:
                raise AssertionError(
                    f"automaton and direct validation disagree on {word}"
                )
        payload = {
            "schema": "gausswords/validate/v1",
            "word": words.render(word),
            "ok": report.ok,
            "violations": [
                {"label": v.label, "message": v.message} for v in report.violations
            ],
        }
        if report.ok:
            out.emit(payload, f"{words.render(word) or '(empty)'}: valid")
            return EXIT_HOLDS
        detail = "; ".join(str(v) for v in report.violations)
        out.emit(payload, f"{words.render(word)}: invalid ({detail})")
        return EXIT_FAILS

    return _per_word(args, out, handle)


# ---------------------------------------------------------------------------
# planar
# ---------------------------------------------------------------------------

def _witness_json(verdict: interlacement.PlanarityVerdict):
    if verdict.witness is None:
        return None
    if isinstance(verdict.witness, int):
        return verdict.witness
    return list(verdict.witness)


def _cmd_planar(args, out: _Output) -> int:
    def handle(word: words.GaussWord, out: _Output) -> int:
        report = words.validate(word)
        if not report.ok:
            detail = "; ".join(str(v) for v in report.violations)
            out.emit(
                {
                    "schema": "gausswords/error/v1",
                    "input": words.render(word),
                    "error": f"invalid word: {detail}",
                },
                f"{words.render(word)}: invalid word ({detail})",
            )
            return EXIT_INVALID
        rendered = words.render(word) or "(empty)"
        if word.is_signed:
            payload: dict = {
                "schema": "gausswords/planar/v1",
                "word": words.render(word),
                "signedness": "signed",
            }
            if len(word) == 0:
                payload.update({"planar": True, "euler": None})
                out.emit(payload, f"{rendered}: planar (empty word)")
                return EXIT_HOLDS
            euler = surface.euler_characteristic(word)
            planar = euler.chi == 2
            payload.update({
                "planar": planar,
                "euler": {
                    "vertices": euler.vertices,
                    "edges": euler.edges,
                    "faces": euler.faces,
                    "chi": euler.chi,
                },
            })
            out.emit(
                payload,
                f"{rendered}: {'planar' if planar else 'non-planar'}"
                f" (V={euler.vertices} E={euler.edges} F={euler.faces}"
                f" chi={euler.chi})",
            )
            return EXIT_HOLDS if planar else EXIT_FAILS
        verdict = interlacement.is_planar_unsigned(word)
        payload = {
            "schema": "gausswords/planar/v1",
            "word": words.render(word),
            "signedness": "unsigned",
            "planar": verdict.planar,
            "failed_stage": verdict.failed_stage,
            "witness": _witness_json(verdict),
        }
        if verdict.planar:
            out.emit(payload, f"{rendered}: planar")
            return EXIT_HOLDS
        out.emit(
            payload,
            f"{rendered}: non-planar (stage {verdict.failed_stage},"
            f" witness {_witness_json(verdict)})",
        )
        return EXIT_FAILS

    return _per_word(args, out, handle)


# ---------------------------------------------------------------------------
# faces / euler / interlace
# ---------------------------------------------------------------------------

def _direction_letter(d: words.Direction) -> str:
    return "L" if d is words.Direction.LEFT else "R"


def _faces_dot(decomposition: surface.FaceDecomposition) -> str:
    lines = ["digraph faces {"]
    w = decomposition.word
    for face in decomposition.faces:
        for state in face:
            name = f"{state.position}/{_direction_letter(state.incoming)}"
            lines.append(f'  "{name}" [label="{name} {w[state.position]}"];')
    for face in decomposition.faces:
        for i, state in enumerate(face):
            succ = face[(i + 1) % len(face)]
            a = f"{state.position}/{_direction_letter(state.incoming)}"
            b = f"{succ.position}/{_direction_letter(succ.incoming)}"
            lines.append(f'  "{a}" -> "{b}";')
    lines.append("}")
    return "\n".join(lines)


def _faces_json(decomposition: surface.FaceDecomposition) -> dict:
    return {
        "schema": "gausswords/faces/v1",
        "word": words.render(decomposition.word),
        "faces": [
            [
                {
                    "position": s.position,
                    "direction": s.incoming.name.lower(),
                }
                for s in face
            ]
            for face in decomposition.faces
        ],
    }


def _signed_diagnostic(args, out: _Output, render_text, render_dot, render_json) -> int:
    def handle(word: words.GaussWord, out: _Output) -> int:
        report = words.validate(word)
        if not report.ok or not word.is_signed or len(word) == 0:
            reason = (
                "invalid word" if not report.ok
                else "signed nonempty word required"
            )
            out.emit(
                {
                    "schema": "gausswords/error/v1",
                    "input": words.render(word),
                    "error": reason,
                },
                f"{words.render(word) or '(empty)'}: {reason}",
            )
            return EXIT_INVALID
        decomposition = surface.enumerate_faces(word)
        if args.dot:
            out.raw(render_dot(decomposition))
        elif out.as_json:
            out.emit(render_json(decomposition), "")
        else:
            out.raw(render_text(decomposition))
        return EXIT_HOLDS

    return _per_word(args, out, handle)


def _cmd_faces(args, out: _Output) -> int:
    def text(decomposition: surface.FaceDecomposition) -> str:
        lines = [f"faces: {len(decomposition.faces)}"]
        for face in decomposition.faces:
            cycle = " ".join(
                f"{s.position}/{_direction_letter(s.incoming)}" for s in face
            )
            lines.append(f"  {cycle}")
        return "\n".join(lines)

    return _signed_diagnostic(args, out, text, _faces_dot, _faces_json)


def _cmd_euler(args, out: _Output) -> int:
    def handle(word: words.GaussWord, out: _Output) -> int:
        report = words.validate(word)
        if not report.ok or not word.is_signed or len(word) == 0:
            reason = (
                "invalid word" if not report.ok
                else "signed nonempty word required"
            )
            out.emit(
                {"schema": "gausswords/error/v1", "input": words.render(word),
                 "error": reason},
                f"{words.render(word) or '(empty)'}: {reason}",
            )
            return EXIT_INVALID
        euler = surface.euler_characteristic(word)
        payload = {
            "schema": "gausswords/euler/v1",
            "word": words.render(word),
            "vertices": euler.vertices,
            "edges": euler.edges,
            "faces": euler.faces,
            "chi": euler.chi,
        }
        out.emit(
            payload,
            f"V={euler.vertices} E={euler.edges} F={euler.faces} chi={euler.chi}",
        )
        return EXIT_HOLDS

    return _per_word(args, out, handle)


def _interlace_dot(g: interlacement.InterlacementGraph) -> str:
    lines = ["graph interlacement {"]
    for v in g.vertices:
        lines.append(f"  {v};")
    for i, j in g.edges:
        lines.append(f'  {i} -- {j} [label="{g.edge_values[(i, j)]}"];')
    lines.append("}")
    return "\n".join(lines)


def _cmd_interlace(args, out: _Output) -> int:
    def handle(word: words.GaussWord, out: _Output) -> int:
        report = words.validate(word)
        if not report.ok or word.is_signed:
            reason = "invalid word" if not report.ok else "unsigned word required"
            out.emit(
                {"schema": "gausswords/error/v1", "input": words.render(word),
                 "error": reason},
                f"{words.render(word) or '(empty)'}: {reason}",
            )
            return EXIT_INVALID
        g = interlacement.interlacement_graph(word)
        if args.dot:
            out.raw(_interlace_dot(g))
            return EXIT_HOLDS
        payload = {
            "schema": "gausswords/interlace/v1",
            "word": words.render(word),
            "vertices": list(g.vertices),
            "edges": [
                {"a": i, "b": j, "beta": g.edge_values[(i, j)]}
                for i, j in g.edges
            ],
        }
        text_lines = [f"vertices: {' '.join(map(str, g.vertices))}"]
        for i, j in g.edges:
            text_lines.append(f"  {i} -- {j} beta={g.edge_values[(i, j)]}")
        out.emit(payload, "\n".join(text_lines))
        return EXIT_HOLDS

    return _per_word(args, out, handle)


# ---------------------------------------------------------------------------
# oracle
# ---------------------------------------------------------------------------

def _cmd_oracle(args, out: _Output) -> int:
    if args.corpus:
        return _oracle_corpus(args, out)

    def handle(word: words.GaussWord, out: _Output) -> int:
        report = words.validate(word)
        if not report.ok or word.is_signed:
            reason = "invalid word" if not report.ok else "unsigned word required"
            out.emit(
                {"schema": "gausswords/error/v1", "input": words.render(word),
                 "error": reason},
                f"{words.render(word) or '(empty)'}: {reason}",
            )
            return EXIT_INVALID
        try:
            brute = oracle.brute_force_unsigned_planarity(
                word, max_crossings=args.max_crossings
            )
        except oracle.BoundExceeded as exc:
            out.emit(
                {"schema": "gausswords/error/v1", "input": words.render(word),
                 "error": str(exc)},
                f"{words.render(word)}: {exc}",
            )
            return EXIT_LIMIT
        staged = interlacement.is_planar_unsigned(word).planar
        payload = {
            "schema": "gausswords/oracle/v1",
            "word": words.render(word),
            "oracle_planar": brute,
            "staged_planar": staged,
            "agree": brute == staged,
        }
        out.emit(
            payload,
            f"{words.render(word) or '(empty)'}: oracle says"
            f" {'planar' if brute else 'non-planar'},"
            f" {'agrees' if brute == staged else 'DISAGREES'} with staged test",
        )
        return EXIT_HOLDS if brute == staged else EXIT_FAILS

    return _per_word(args, out, handle)


def _oracle_corpus(args, out: _Output) -> int:
    if args.corpus == "exhaustive":
        policy: oracle.ExhaustivePolicy | oracle.RandomPolicy = (
            oracle.ExhaustivePolicy(args.max_crossings)
        )
    else:
        policy = oracle.RandomPolicy(
            args.count, args.min_crossings, args.max_crossings, args.seed
        )
    try:
        corpus = oracle.generate(policy)
        checked = 0
        for word in corpus.words:
            brute = oracle.brute_force_unsigned_planarity(word)
            staged = interlacement.is_planar_unsigned(word).planar
            checked += 1
            if brute != staged:
                out.emit(
                    {
                        "schema": "gausswords/oracle-sweep/v1",
                        "policy": corpus.policy.header().lstrip("# "),
                        "checked": checked,
                        "counterexample": words.render(word),
                    },
                    f"counterexample after {checked} words: {words.render(word)}",
                )
                return EXIT_FAILS
    except oracle.BoundExceeded as exc:
        out.emit(
            {"schema": "gausswords/error/v1", "error": str(exc)}, f"error: {exc}"
        )
        return EXIT_LIMIT
    out.emit(
        {
            "schema": "gausswords/oracle-sweep/v1",
            "policy": corpus.policy.header().lstrip("# "),
            "checked": checked,
            "counterexample": None,
        },
        f"all {checked} words agree",
    )
    return EXIT_HOLDS


# ---------------------------------------------------------------------------
# automaton
# ---------------------------------------------------------------------------

def _load_spec(ref: str) -> automata.AutomatonSpec:
    if ref.startswith("builtin:"):
        name = ref.split(":", 1)[1]
        specs = automata.builtin_specs()
        if name not in specs:
            raise ValueError(
                f"unknown builtin {name!r}; available: {sorted(specs)}"
            )
        return specs[name]
    return automata.spec_from_json(json.loads(Path(ref).read_text(encoding="utf-8")))


def _parse_data_word(text: str) -> automata.DataWord:
    stripped = text.strip()
    if stripped.startswith("["):
        return automata.word_from_json(json.loads(stripped))
    return automata.data_word_from_gauss(words.parse(text))


def _cmd_automaton(args, out: _Output) -> int:
    try:
        spec = _load_spec(args.spec)
    except (OSError, ValueError, json.JSONDecodeError) as exc:
        out.raw(f"error: {exc}")
        return EXIT_INVALID
    original_size = {"states": len(spec.states), "rules": len(spec.rules)}
    compiled_size = None
    if args.compile:
        spec = automata.compile_to_basic(spec)
        compiled_size = {"states": len(spec.states), "rules": len(spec.rules)}
    try:
        lines = _word_lines(args)
    except OSError as exc:
        out.raw(f"error: {exc}")
        return EXIT_INVALID
    codes = []
    for line in lines:
        try:
            word = _parse_data_word(line)
        except (ValueError, json.JSONDecodeError) as exc:
            out.raw(f"{line!r}: {exc}")
            codes.append(EXIT_INVALID)
            continue
        try:
            result = automata.run(
                spec, word, mode=args.mode,
                max_configurations=args.max_configurations,
            )
        except automata.UndeclaredTagError as exc:
            out.raw(f"{line!r}: {exc}")
            codes.append(EXIT_INVALID)
            continue
        except automata.AutomatonError as exc:
            out.raw(f"{line!r}: {exc}")
            codes.append(EXIT_LIMIT)
            continue
        payload: dict = {
            "schema": "gausswords/automaton/v1",
            "word": line,
            "accepted": result.accepted,
            "reason": result.reason,
            "explored": result.explored,
            "original": original_size,
        }
        if compiled_size is not None:
            payload["compiled"] = compiled_size
        if args.trace and result.trace is not None:
            payload["trace"] = [str(c) for c in result.trace]
        text = (
            f"{line}: {'accept' if result.accepted else 'reject'}"
            f" ({result.reason}, {result.explored} configurations)"
        )
        if compiled_size is not None:
            text += (
                f" [compiled {original_size['states']}->"
                f"{compiled_size['states']} states,"
                f" {original_size['rules']}->{compiled_size['rules']} rules]"
            )
        out.emit(payload, text)
        if args.trace and not out.as_json and result.trace is not None:
            for config in result.trace:
                out.raw(f"  {config}")
        codes.append(EXIT_HOLDS if result.accepted else EXIT_FAILS)
    return _worst(codes)


# ---------------------------------------------------------------------------
# generate
# ---------------------------------------------------------------------------

def _cmd_generate(args, out: _Output) -> int:
    if args.policy == "exhaustive":
        policy: oracle.ExhaustivePolicy | oracle.RandomPolicy = (
            oracle.ExhaustivePolicy(args.max_crossings)
        )
    else:
        policy = oracle.RandomPolicy(
            args.count, args.min_crossings, args.max_crossings, args.seed
        )
    try:
        corpus = oracle.generate(policy)
    except oracle.BoundExceeded as exc:
        out.raw(f"error: {exc}")
        return EXIT_LIMIT
    if out.as_json:
        out.emit(
            {
                "schema": "gausswords/corpus/v1",
                "policy": corpus.policy.header().lstrip("# "),
                "words": [words.render(w) for w in corpus.words],
            },
            "",
        )
    else:
        out.raw(corpus.policy.header())
        for word in corpus.words:
            out.raw(words.render(word))
    return EXIT_HOLDS


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _add_word_source(sub) -> None:
    sub.add_argument("word", nargs="?", help="word text (default: --file or stdin)")
    sub.add_argument("--file", help="read words from a file, one per line")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gausswords",
        description="Validate Gauss words and decide their planarity.",
    )
    parser.add_argument("--json", action="store_true", help="emit JSON payloads")
    parser.add_argument("--quiet", action="store_true", help="exit code only")
    parser.add_argument("--seed", type=int, default=0, help="seed for random modes")
    commands = parser.add_subparsers(dest="command", required=True)

    sub = commands.add_parser("validate", help="check the pairing conditions")
    _add_word_source(sub)
    sub.add_argument("--via-automaton", action="store_true",
                     help="route through the builtin recogniser instead")
    sub.set_defaults(func=_cmd_validate)

    sub = commands.add_parser("planar", help="decide planarity")
    _add_word_source(sub)
    sub.set_defaults(func=_cmd_planar)

    sub = commands.add_parser("faces", help="faces of the Carter surface")
    _add_word_source(sub)
    sub.add_argument("--dot", action="store_true", help="emit Graphviz DOT")
    sub.set_defaults(func=_cmd_faces)

    sub = commands.add_parser("euler", help="Euler characteristic report")
    _add_word_source(sub)
    sub.add_argument("--dot", action="store_true", help=argparse.SUPPRESS)
    sub.set_defaults(func=_cmd_euler)

    sub = commands.add_parser("interlace", help="interlacement graph")
    _add_word_source(sub)
    sub.add_argument("--dot", action="store_true", help="emit Graphviz DOT")
    sub.set_defaults(func=_cmd_interlace)

    sub = commands.add_parser("oracle", help="brute-force cross-check")
    _add_word_source(sub)
    sub.add_argument("--corpus", choices=["exhaustive", "random"],
                     help="sweep a generated corpus instead of single words")
    sub.add_argument("--max-crossings", type=int, default=12)
    sub.add_argument("--min-crossings", type=int, default=1)
    sub.add_argument("--count", type=int, default=100)
    sub.set_defaults(func=_cmd_oracle)

    sub = commands.add_parser("automaton", help="run a register automaton")
    sub.add_argument("--spec", required=True,
                     help="spec JSON file, or builtin:gw / builtin:sgw")
    _add_word_source(sub)
    sub.add_argument("--mode", choices=["det", "nondet"], default=None)
    sub.add_argument("--compile", action="store_true",
                     help="compile away the extended rule kinds first")
    sub.add_argument("--trace", action="store_true",
                     help="show the configuration path")
    sub.add_argument("--max-configurations", type=int, default=None)
    sub.set_defaults(func=_cmd_automaton)

    sub = commands.add_parser("generate", help="emit a word corpus")
    sub.add_argument("--policy", choices=["exhaustive", "random"],
                     default="exhaustive")
    sub.add_argument("--max-crossings", type=int, default=3)
    sub.add_argument("--min-crossings", type=int, default=1)
    sub.add_argument("--count", type=int, default=10)
    sub.set_defaults(func=_cmd_generate)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    out = _Output(args.json, args.quiet)
    return args.func(args, out)


if __name__ == "__main__":
    sys.exit(main())
