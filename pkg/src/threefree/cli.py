"""``artin``: command-line front end.

Exit codes: 0 success, 1 a negative answer (not geodesic, not equal,
invalid presentation, oracle disagreement), 2 usage or I/O errors.
Words come from argv; with none given, one word per stdin line.
"""

from __future__ import annotations

import argparse
import json
import sys

from .oracle import BallSearchConfig, bfs_min_length
from .presentation import PresentationError, load_presentation
from .reducer import DEFAULT_CAP, ContractViolation, geodesic_closure, is_geodesic, reduce
from .rrs import RRSInvariantError, NonUniqueOptimalRRS
from .words import WordError, format_word, invert, parse_word

OK, NO, ERROR = 0, 1, 2


class UsageError(Exception):
    pass


def _words(args, stdin):
    texts = args.words if args.words else [line.rstrip("\n") for line in stdin if line.strip()]
    return texts


def _parse(p, text):
    try:
        return parse_word(p, text)
    except WordError as exc:
        raise UsageError(f"bad word {text!r}: {exc}") from None


def _emit(args, out, records, lines):
    if args.json:
        json.dump(records, out)
        out.write("\n")
    else:
        for line in lines:
            out.write(line + "\n")


def _spot_check(p, w, result):
    # a cheap bounded search must not beat the reducer
    ball = bfs_min_length(p, w, BallSearchConfig(slack=0, node_cap=20_000), target=len(result) - 1)
    if ball.min_len < len(result):
        raise ContractViolation(f"oracle found {format_word(p, ball.witness)} shorter than {format_word(p, result)}")


def cmd_validate(args, p, out):
    # reaching here means the file parsed; rejection is handled in run()
    pairs = len(p.finite_pairs())
    if args.json:
        json.dump({"valid": True, "generators": list(p.generators), "pairs": pairs}, out)
        out.write("\n")
    else:
        out.write(f"valid: {p.rank} generators, {pairs} finite exponents\n")
    return OK


def cmd_reduce(args, p, out, stdin, with_trace=False):
    records, lines = [], []
    for text in _words(args, stdin):
        w = _parse(p, text)
        result, trace = reduce(p, w, verify=args.verify)
        if args.verify:
            _spot_check(p, w, result)
        rec = {"input": text, "result": format_word(p, result), "length": len(result), "input_length": len(w)}
        if args.json or with_trace:
            rec["trace"] = trace.to_dict(p)
        records.append(rec)
        lines.append(rec["result"])
    if with_trace:
        lines = _trace_lines(records)
    _emit(args, out, records, lines)
    return OK


def _trace_lines(records):
    lines = []
    for rec in records:
        lines.append(f"input:  {rec['input']}")
        for ev in rec["trace"]["events"]:
            if ev["kind"] == "tau":
                lines.append(f"  tau    @{ev['at']}: {ev['before']} -> {ev['after']}")
            else:
                lines.append(f"  {ev['kind']:<6} @{ev['at']}")
        lines.append(f"result: {rec['result']}")
    return lines


def cmd_geodesic(args, p, out, stdin):
    records, lines = [], []
    status = OK
    for text in _words(args, stdin):
        verdict = is_geodesic(p, _parse(p, text))
        if not verdict:
            status = NO
        records.append({"input": text, "geodesic": verdict})
        lines.append("geodesic" if verdict else "not geodesic")
    _emit(args, out, records, lines)
    return status


def _pairs(args, stdin):
    if args.words:
        if len(args.words) != 2:
            raise UsageError("equal takes exactly two words (or stdin lines of the form 'u = v')")
        return [tuple(args.words)]
    pairs = []
    for line in stdin:
        if not line.strip():
            continue
        if line.count("=") != 1:
            raise UsageError(f"batch line {line.strip()!r} is not of the form 'u = v'")
        u, v = line.split("=")
        pairs.append((u.strip(), v.strip()))
    return pairs


def cmd_equal(args, p, out, stdin):
    records, lines = [], []
    status = OK
    for left, right in _pairs(args, stdin):
        u, v = _parse(p, left), _parse(p, right)
        result, trace = reduce(p, u + invert(v), verify=args.verify)
        verdict = result == ()
        if not verdict:
            status = NO
        rec = {"left": left, "right": right, "equal": verdict}
        if args.json:
            rec["trace"] = trace.to_dict(p)
            rec["quotient"] = format_word(p, result)
        records.append(rec)
        lines.append("equal" if verdict else "not equal")
    _emit(args, out, records, lines)
    return status


def cmd_closure(args, p, out, stdin):
    records, lines = [], []
    status = OK
    for text in _words(args, stdin):
        w = _parse(p, text)
        if not is_geodesic(p, w):
            status = NO
            records.append({"input": text, "geodesic": False})
            lines.append(f"not geodesic: {text}")
            continue
        cls = geodesic_closure(p, w, cap=args.cap)
        members = sorted(format_word(p, m) for m in cls.members)
        records.append({"input": text, "geodesic": True, "size": len(members), "overflow": cls.overflow, "members": members})
        lines.extend(members)
        if cls.overflow:
            print(f"closure of {text!r} stopped at the cap of {args.cap} words", file=sys.stderr)
    _emit(args, out, records, lines)
    return status


def cmd_oracle_check(args, p, out, stdin):
    cfg = BallSearchConfig(slack=args.slack, node_cap=args.nodes)
    records, lines = [], []
    status = OK
    for text in _words(args, stdin):
        w = _parse(p, text)
        result, _ = reduce(p, w, verify=args.verify)
        ball = bfs_min_length(p, w, cfg)
        ok = len(result) <= ball.min_len and (not ball.exhausted or len(result) == ball.min_len)
        if not ok:
            status = NO
        records.append({
            "input": text,
            "reduced": format_word(p, result),
            "reduced_length": len(result),
            "ball_min_length": ball.min_len,
            "ball_witness": format_word(p, ball.witness),
            "exhausted": ball.exhausted,
            "nodes": ball.nodes,
            "consistent": ok,
        })
        tag = "exhausted" if ball.exhausted else "capped"
        lines.append(f"{'ok' if ok else 'MISMATCH'}: reduce {len(result)}, ball {ball.min_len} ({tag}, {ball.nodes} nodes)")
    _emit(args, out, records, lines)
    return status


def build_parser():
    parser = argparse.ArgumentParser(prog="artin", description="Word problem and geodesics in 3-free Artin groups.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, words=True):
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("presentation", help="presentation file")
        if words:
            cmd.add_argument("words", nargs="*", help="words such as 'a b^2 c^-1'; stdin when omitted")
        cmd.add_argument("--json", action="store_true", help="machine-readable output")
        cmd.add_argument("--verify", action="store_true", help="re-check reduction invariants while running")
        return cmd

    add("validate", "check a presentation file", words=False)
    add("reduce", "print a geodesic equivalent to each word")
    add("geodesic", "decide whether each word is geodesic")
    add("equal", "decide whether two words are equal in the group")
    add("closure", "list every geodesic spelling of a geodesic word").add_argument(
        "--cap", type=int, default=DEFAULT_CAP, help="stop after this many words")
    add("trace", "reduce and show the moves used")
    check = add("oracle-check", "compare reduce against a bounded brute-force search")
    check.add_argument("--slack", type=int, default=2, help="extra letters the search may use")
    check.add_argument("--nodes", type=int, default=200_000, help="search node cap")
    return parser


def run(argv=None, stdin=None, stdout=None):
    stdin = sys.stdin if stdin is None else stdin
    out = sys.stdout if stdout is None else stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return ERROR if exc.code else OK
    try:
        p = load_presentation(args.presentation)
    except OSError as exc:
        print(f"artin: cannot read {args.presentation}: {exc.strerror or exc}", file=sys.stderr)
        return ERROR
    except PresentationError as exc:
        if args.command == "validate":
            if args.json:
                json.dump({"valid": False, "error": str(exc)}, out)
                out.write("\n")
            print(f"invalid presentation: {exc}", file=sys.stderr)
            return NO
        print(f"artin: {args.presentation}: {exc}", file=sys.stderr)
        return ERROR
    try:
        if args.command == "validate":
            return cmd_validate(args, p, out)
        if args.command == "reduce":
            return cmd_reduce(args, p, out, stdin)
        if args.command == "trace":
            return cmd_reduce(args, p, out, stdin, with_trace=True)
        if args.command == "geodesic":
            return cmd_geodesic(args, p, out, stdin)
        if args.command == "equal":
            return cmd_equal(args, p, out, stdin)
        if args.command == "closure":
            return cmd_closure(args, p, out, stdin)
        return cmd_oracle_check(args, p, out, stdin)
    except UsageError as exc:
        print(f"artin: {exc}", file=sys.stderr)
        return ERROR
    except (ContractViolation, RRSInvariantError, NonUniqueOptimalRRS) as exc:
        print(f"artin: verification failed: {exc}", file=sys.stderr)
        return ERROR


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
