"""Command-line interface.

Exit codes: 0 success, 1 domain error (bad input data, failed check),
2 usage error.  All JSON output is deterministic for identical invocations.
"""

from __future__ import annotations

import argparse
import json
import sys

from .codec import HatTemplate, code_word
from .engine import (
    Derivable,
    GeneratorCapError,
    check_trace,
    derives,
    load_calculus,
    trace_from_json,
    trace_to_json,
)
from .formulas import parse_formula, render_formula
from .lemmas import ChainProof, LemmaReport, run_lemma
from .reduction import build_reduction, bundle_to_json
from .tags import Halted, parse_tag_system, tag_reaches, tag_run

DEFAULT_DEPTH = 3
DEFAULT_MAX_STEPS = 100


def _load_system(path: str):
    with open(path, encoding="utf-8") as fh:
        return parse_tag_system(fh.read())


def _emit(obj: dict, fmt: str, out=None) -> None:
    out = out or sys.stdout
    if fmt == "json":
        print(json.dumps(obj, indent=2, sort_keys=False), file=out)
    else:
        for key, value in obj.items():
            print(f"{key}: {value}", file=out)


def _build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentDefaultsHelpFormatter
    parser = argparse.ArgumentParser(
        prog="tagforge",
        description="Implicational calculi, tag systems, and the halting reduction.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    enc = sub.add_parser(
        "encode", help="encode a word as its bracketing set", formatter_class=fmt
    )
    enc.add_argument("--word", required=True)
    enc.add_argument("--hat", default="x", help="one-variable template")
    enc.add_argument("--format", choices=("text", "json"), default="json")

    tag = sub.add_parser("tag", help="tag system operations")
    tag_sub = tag.add_subparsers(dest="tag_command", required=True)
    run = tag_sub.add_parser(
        "run", help="run a tag system on a word", formatter_class=fmt
    )
    run.add_argument("--system", required=True, help="path to a tag file")
    run.add_argument("--input", required=True)
    run.add_argument("--max-steps", type=int, default=DEFAULT_MAX_STEPS)
    run.add_argument("--format", choices=("text", "json"), default="json")
    reach = tag_sub.add_parser(
        "reach", help="does the run pass through a word?", formatter_class=fmt
    )
    reach.add_argument("--system", required=True)
    reach.add_argument("--from", dest="source", required=True)
    reach.add_argument("--to", dest="target", required=True)
    reach.add_argument("--max-steps", type=int, default=DEFAULT_MAX_STEPS)
    reach.add_argument("--format", choices=("text", "json"), default="json")

    red = sub.add_parser(
        "reduce", help="build the reduction bundle", formatter_class=fmt
    )
    red.add_argument("--system", required=True)
    red.add_argument("--input", required=True)
    red.add_argument("--p0", help="path to a calculus JSON (default: weakening axiom)")
    red.add_argument("--format", choices=("text", "json"), default="json")

    der = sub.add_parser(
        "derive", help="bounded derivability query", formatter_class=fmt
    )
    der.add_argument("--calculus", required=True, help="path to a calculus JSON")
    der.add_argument("--goal", required=True, help="formula text")
    der.add_argument("--depth", type=int, default=DEFAULT_DEPTH)
    der.add_argument("--trace-out", help="write the trace JSON here when derivable")
    der.add_argument("--format", choices=("text", "json"), default="json")

    chk = sub.add_parser(
        "check-trace", help="validate a trace file", formatter_class=fmt
    )
    chk.add_argument("--calculus", required=True)
    chk.add_argument("--trace", required=True)
    chk.add_argument("--claimed", required=True, help="formula text")
    chk.add_argument("--format", choices=("text", "json"), default="json")

    ver = sub.add_parser("verify", help="run the lemma suite", formatter_class=fmt)
    ver.add_argument("lemma", help="lemma id (lemma1, lemma3, lemma6, lemma7, lemma9, lemma11, lemma12) or 'all'")
    ver.add_argument("--hat", default="x")
    ver.add_argument("--alphabet", type=int, help="alphabet size for sweeps")
    ver.add_argument("--max-len", type=int, help="max word length for sweeps")
    ver.add_argument("--system", help="path to a tag file (default: built-in examples)")
    ver.add_argument("--input", help="input word")
    ver.add_argument("--p0", help="path to a calculus JSON")
    ver.add_argument("--budget", type=int, help="step/level budget")
    ver.add_argument("--depth", type=int, help="closure depth for structure checks")
    ver.add_argument("--output", help="directory for witness files")
    return parser


def _cmd_encode(args) -> int:
    hat = HatTemplate.from_text(args.hat)
    code = code_word(hat, args.word)
    _emit(
        {
            "word": code.word,
            "hat": hat.text,
            "members": [render_formula(f) for f in code.formulas],
        },
        args.format,
    )
    return 0


def _cmd_tag_run(args) -> int:
    system = _load_system(args.system)
    outcome = tag_run(system, args.input, args.max_steps)
    if isinstance(outcome, Halted):
        obj = {
            "outcome": "halted",
            "word": outcome.word,
            "steps": outcome.steps,
            "max_steps": args.max_steps,
        }
    else:
        obj = {
            "outcome": "budget-exhausted",
            "word": outcome.word,
            "max_steps": args.max_steps,
        }
    _emit(obj, args.format)
    return 0


def _cmd_tag_reach(args) -> int:
    system = _load_system(args.system)
    reached = tag_reaches(system, args.source, args.target, args.max_steps)
    _emit(
        {
            "from": args.source,
            "to": args.target,
            "max_steps": args.max_steps,
            "reached": reached,
        },
        args.format,
    )
    return 0


def _default_p0():
    from .lemmas import WEAKENING_AXIOM
    from .engine import Calculus

    return Calculus("weakening", (WEAKENING_AXIOM,))


def _cmd_reduce(args) -> int:
    system = _load_system(args.system)
    p0 = load_calculus(args.p0) if args.p0 else _default_p0()
    bundle = build_reduction(system, p0, args.input)
    _emit(bundle_to_json(bundle), args.format)
    return 0


def _cmd_derive(args) -> int:
    calc = load_calculus(args.calculus)
    goal = parse_formula(args.goal)
    verdict = derives(calc, goal, args.depth)
    if isinstance(verdict, Derivable):
        trace_json = trace_to_json(verdict.trace)
        obj = {
            "verdict": "derivable",
            "goal": render_formula(goal),
            "depth": args.depth,
            "level": verdict.level,
            "generator": render_formula(verdict.generator),
            "trace": trace_json,
        }
        if args.trace_out:
            with open(args.trace_out, "w", encoding="utf-8") as fh:
                json.dump(trace_json, fh, indent=2)
                fh.write("\n")
    else:
        obj = {
            "verdict": "not-found-within-budget",
            "goal": render_formula(goal),
            "depth": args.depth,
        }
    _emit(obj, args.format)
    return 0


def _cmd_check_trace(args) -> int:
    calc = load_calculus(args.calculus)
    with open(args.trace, encoding="utf-8") as fh:
        trace = trace_from_json(json.load(fh))
    claimed = parse_formula(args.claimed)
    valid = check_trace(calc, trace, claimed)
    _emit({"claimed": render_formula(claimed), "valid": valid}, args.format)
    return 0 if valid else 1


def _report_to_json(report: LemmaReport) -> dict:
    return {
        "lemma": report.lemma,
        "instance": report.instance,
        "verdict": report.verdict,
        "witness": report.witness,
        "resources": report.resources,
    }


def _dump_artifacts(report: LemmaReport, directory: str, index: int) -> list[str]:
    import os

    from .engine import DerivationTrace

    written = []
    os.makedirs(directory, exist_ok=True)
    for k, (name, obj) in enumerate(report.artifacts):
        path = os.path.join(directory, f"{report.lemma}-{index}-{k}.json")
        if isinstance(obj, DerivationTrace):
            payload = {"name": name, "trace": trace_to_json(obj)}
        elif isinstance(obj, ChainProof):
            payload = {
                "name": name,
                "waypoints": [render_formula(w) for w in obj.waypoints],
                "links": [trace_to_json(t) for t in obj.links],
            }
        else:
            payload = {"name": name, "value": str(obj)}
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=2)
            fh.write("\n")
        written.append(path)
    return written


def _cmd_verify(args) -> int:
    options: dict = {"hat": HatTemplate.from_text(args.hat)}
    if args.alphabet is not None:
        options["alphabet_size"] = args.alphabet
    if args.max_len is not None:
        options["max_len"] = args.max_len
    if args.system:
        options["system"] = _load_system(args.system)
    if args.input:
        options["input_word"] = args.input
    if args.p0:
        options["p0"] = load_calculus(args.p0)
    if args.budget is not None:
        options["budget"] = args.budget
    if args.depth is not None:
        options["depth"] = args.depth
    reports = run_lemma(args.lemma, options)
    failed = False
    for i, report in enumerate(reports):
        obj = _report_to_json(report)
        if args.output and report.artifacts:
            obj["witness_files"] = _dump_artifacts(report, args.output, i)
        print(json.dumps(obj, sort_keys=False))
        if report.verdict == "fail":
            failed = True
    return 1 if failed else 0


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        if args.command == "encode":
            return _cmd_encode(args)
        if args.command == "tag":
            if args.tag_command == "run":
                return _cmd_tag_run(args)
            return _cmd_tag_reach(args)
        if args.command == "reduce":
            return _cmd_reduce(args)
        if args.command == "derive":
            return _cmd_derive(args)
        if args.command == "check-trace":
            return _cmd_check_trace(args)
        if args.command == "verify":
            return _cmd_verify(args)
        parser.error(f"unknown command {args.command!r}")
    except (ValueError, OSError, KeyError, TypeError, GeneratorCapError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
