"""Command line interface.

    python -m braidloop trace       --word "2 -1" --n 3 --l 2
    python -m braidloop invariants  --word "1 -2 -3"
    python -m braidloop characters  --word "2 -1" --n 3 --l 2
    python -m braidloop distinguish --word "..." --word2 "..." --l-max 3
    python -m braidloop invert      --word "-1 2 -1 -1 -1 2 2 2" --n 3 --l-max 3
    python -m braidloop cable       --word "1" --n 2 --k 2 --twists 1
    python -m braidloop evaluate    --word "1 -2 -3" --cochain file.txt

Exit status: 0 on success, 1 when a verdict is Distinguished, 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Sequence

from .braid import BraidError, cable, parse_word
from .cochain import CochainError, evaluate_cochain, parse_cochain
from .conjugacy import distinguish, invertibility_test
from .invariants import analyze, character_table_deg1, gamma_table

VERSION = "0.1.0"
COMMANDS = ("trace", "invariants", "characters", "distinguish", "invert", "cable", "evaluate")


def _circles(analysis) -> list[dict]:
    return [{"name": c.name, "marking": c.marking, "phi_degree": c.phi_degree,
             "t_degree": c.t_degree, "periods": c.periods, "members": len(c.members)}
            for c in analysis.trace.circles]


def _events(analysis) -> list[dict]:
    return [{"time": e.time, "sign": e.sign, "type": e.type, "a": e.a, "b": e.b,
             "distinguished": e.distinguished, "names": list(e.role_names)}
            for e in analysis.events]


def _gamma(analysis) -> list[dict]:
    return [{"type": k, "a": a, "b": b, "value": v}
            for (k, a, b), v in sorted(gamma_table(analysis).items())]


def _characters(analysis) -> list[dict]:
    table = character_table_deg1(analysis)
    return [{"type": k[0], "a": k[1], "b": k[2], "names": list(k[3:]), "value": v}
            for k, v in table.nonzero().items()]


def build_report(args: argparse.Namespace) -> dict:
    word = parse_word(args.word, args.n)
    report = {"input": {"command": args.command, "word": str(word), "n": word.n},
              "circles": [], "events": [], "gamma": [], "characters": [],
              "verdict": None, "meta": {"version": VERSION}}
    cmd = args.command
    if cmd in ("trace", "invariants", "characters", "evaluate"):
        report["input"]["l"] = args.l
        analysis = analyze(word, args.l)
        report["circles"] = _circles(analysis)
        if cmd == "invariants":
            report["events"] = _events(analysis)
            report["gamma"] = _gamma(analysis)
        elif cmd == "characters":
            report["characters"] = _characters(analysis)
        elif cmd == "evaluate":
            if not args.cochain:
                raise BraidError("evaluate needs --cochain")
            with open(args.cochain) as fh:
                cochain = parse_cochain(fh.read())
            if cochain.n != word.n:
                raise BraidError(f"cochain is for n={cochain.n}, word has n={word.n}")
            report["meta"]["result"] = evaluate_cochain(analysis.events, cochain,
                                                        analysis.trace.circle_of)
    elif cmd in ("distinguish", "invert"):
        report["input"]["l_max"] = args.l_max
        if cmd == "distinguish":
            if not args.word2:
                raise BraidError("distinguish needs --word2")
            other = parse_word(args.word2, args.n if args.n else word.n)
            report["input"]["word2"] = str(other)
            verdict = distinguish(word, other, args.l_max)
        else:
            verdict = invertibility_test(word, args.l_max)
        report["verdict"] = {"outcome": verdict.outcome, "l": verdict.l,
                             "witness": verdict.witness, "details": verdict.details}
    elif cmd == "cable":
        report["input"].update(k=args.k, twists=args.twists)
        report["meta"]["result"] = str(cable(word, args.k, args.twists))
    return report


def emit_report(report: dict, fmt: str = "json") -> str:
    if fmt == "json":
        return json.dumps(report, indent=2, sort_keys=False) + "\n"
    lines = []
    inp = report["input"]
    lines.append(" ".join(f"{k}={v}" for k, v in inp.items()))
    if report["circles"]:
        lines.append("circles:")
        lines.append("  name  marking  phi  t  periods  members")
        for c in report["circles"]:
            lines.append(f"  {c['name']:<5} {c['marking']:>7} {c['phi_degree']:>4} "
                         f"{c['t_degree']:>2} {c['periods']:>8} {c['members']:>8}")
    if report["gamma"]:
        lines.append("degree-one cocycles:")
        for g in report["gamma"]:
            lines.append(f"  ({g['a']},{g['b']}){g['type']}  {g['value']:+d}")
    if report["characters"] or inp["command"] == "characters":
        lines.append(f"nonzero characters: {len(report['characters'])}")
        for c in report["characters"]:
            lines.append(f"  ({c['a']},{c['b']}){c['type']} {' '.join(c['names'])}  {c['value']:+d}")
    if report["verdict"]:
        v = report["verdict"]
        lines.append(f"verdict: {v['outcome']}({v['l']})")
        if v["witness"]:
            lines.append(f"  {v['witness']}")
    if "result" in report["meta"]:
        lines.append(f"result: {report['meta']['result']}")
    return "\n".join(lines) + "\n"


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="braidloop", description=__doc__.split("\n\n")[0])
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--word", required=True, help='braid word, e.g. "1 -2 -3"')
    p.add_argument("--word2", help="second word for distinguish")
    p.add_argument("--n", type=int, help="strand count (default: max |k| + 1)")
    p.add_argument("--l", type=int, default=1, help="number of rotations")
    p.add_argument("--l-max", type=int, default=3, help="largest rotation count to try")
    p.add_argument("--k", type=int, default=2, help="cable multiplicity")
    p.add_argument("--twists", type=int, default=0, help="half twists added to the cable")
    p.add_argument("--cochain", help="cochain file for evaluate")
    p.add_argument("--json", action="store_true", help="emit JSON instead of text")
    p.add_argument("--out", help="write the report to this file")
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = make_parser().parse_args(argv)
    if args.l < 1 or args.l_max < 1:
        print("error: rotation counts must be at least 1", file=sys.stderr)
        return 2
    start = time.perf_counter()
    try:
        report = build_report(args)
    except (BraidError, CochainError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    report["meta"]["timing"] = round(time.perf_counter() - start, 6)
    text = emit_report(report, "json" if args.json else "text")
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    verdict = report["verdict"]
    return 1 if verdict and verdict["outcome"] == "Distinguished" else 0
