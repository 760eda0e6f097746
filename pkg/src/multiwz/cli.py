"""Command-line front end.

    multiwz eval   --k 3 --m 1 --n 0 --method oracle
    multiwz check  --k 2..4 --m 0..3 --n 0..2
    multiwz verify --kind both --k 2..5 [--show-residual]
    multiwz bench  --k 4..6 --m 4..6 [--methods recurrence,corollary]

Exit status: 0 on success, 1 on a value mismatch, invalid certificate or
failed benchmark ordering, 2 on usage, domain or budget errors.
"""

import argparse
import csv
import io
import json
import sys
import time

from .closedform import rhs_corollary, rhs_theorem
from .oracle import DEFAULT_MAX_TERMS, BudgetExceeded, OracleBudget, lhs_exact
from .result import DomainError
from .wz import KINDS, certificate, verify

METHODS = ("oracle", "recurrence", "corollary")
EVAL_FIELDS = ["k", "m", "n", "method", "value", "terms", "micros"]

# documented caps on range flags
K_CAP = (1, 12)
M_CAP = (0, 500)
N_CAP = (0, 500)
VERIFY_K_CAP = (2, 8)


class UsageError(Exception):
    pass


def parse_range(text, cap, name):
    lo_s, sep, hi_s = text.partition("..")
    try:
        lo = int(lo_s)
        hi = int(hi_s) if sep else lo
    except ValueError:
        raise argparse.ArgumentTypeError(f"--{name} expects A or A..B, got {text!r}") from None
    if lo > hi:
        raise argparse.ArgumentTypeError(f"--{name} range {text!r} is empty")
    if lo < cap[0] or hi > cap[1]:
        raise argparse.ArgumentTypeError(f"--{name} must lie within {cap[0]}..{cap[1]}, got {text!r}")
    return range(lo, hi + 1)


def _range_type(cap, name):
    return lambda text: parse_range(text, cap, name)


def _single(cap, name):
    def parse(text):
        r = parse_range(text, cap, name)
        if len(r) != 1:
            raise argparse.ArgumentTypeError(f"--{name} takes a single value here")
        return r[0]
    return parse


def _methods(text):
    picked = [t.strip() for t in text.split(",") if t.strip()]
    bad = [t for t in picked if t not in METHODS]
    if bad or not picked:
        raise argparse.ArgumentTypeError(f"--methods must be a subset of {','.join(METHODS)}")
    return [m for m in METHODS if m in picked]


def _positive(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return v


def build_parser():
    parser = argparse.ArgumentParser(
        prog="multiwz",
        description="Evaluate, cross-check and certify the e2^m e1^n exp(-e1) integral identity.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--output", choices=("plain", "json", "csv"), default="plain")
        p.add_argument("--max-terms", type=_positive, default=DEFAULT_MAX_TERMS,
                       help="term budget for the brute-force oracle")

    p = sub.add_parser("eval", help="evaluate one (k, m, n) cell")
    p.add_argument("--k", type=_single(K_CAP, "k"), required=True)
    p.add_argument("--m", type=_single(M_CAP, "m"), required=True)
    p.add_argument("--n", type=_single(N_CAP, "n"), required=True)
    p.add_argument("--method", choices=METHODS, default="recurrence")
    common(p)

    p = sub.add_parser("check", help="cross-validate all methods over a grid")
    p.add_argument("--k", type=_range_type(K_CAP, "k"), required=True)
    p.add_argument("--m", type=_range_type(M_CAP, "m"), required=True)
    p.add_argument("--n", type=_range_type(N_CAP, "n"), required=True)
    common(p)

    p = sub.add_parser("verify", help="verify WZ certificates with symbolic m, n")
    p.add_argument("--kind", choices=KINDS + ("both",), default="both")
    p.add_argument("--k", type=_range_type(VERIFY_K_CAP, "k"), default=range(2, 6))
    p.add_argument("--show-residual", action="store_true")
    common(p)

    p = sub.add_parser("bench", help="time the evaluators against each other")
    p.add_argument("--k", type=_range_type(K_CAP, "k"), default=range(4, 7))
    p.add_argument("--m", type=_range_type(M_CAP, "m"), default=range(4, 7))
    p.add_argument("--n", type=_range_type(N_CAP, "n"), default=range(0, 1))
    p.add_argument("--methods", type=_methods, default=list(METHODS))
    p.add_argument("--repeat", type=_positive, default=3,
                   help="timing repetitions per cell; the fastest is reported")
    common(p)
    return parser


def evaluate(method, k, m, n, budget):
    if method == "oracle":
        if (k, m) == (1, 0):
            raise DomainError("(k, m) = (1, 0) is excluded: the identity does not hold there as stated")
        return lhs_exact(k, m, n, budget)
    if method == "recurrence":
        return rhs_theorem(k, m, n)
    return rhs_corollary(k, m, n)


def _emit(rows, fields, fmt, out, plain_lines):
    if fmt == "json":
        out.write(json.dumps(rows, indent=2) + "\n")
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n", extrasaction="ignore")
        writer.writeheader()
        writer.writerows(rows)
        out.write(buf.getvalue())
    else:
        for line in plain_lines:
            out.write(line + "\n")


def _table(header, body):
    widths = [max(len(str(r[i])) for r in [header] + body) for i in range(len(header))]
    return ["  ".join(str(c).rjust(w) for c, w in zip(row, widths)) for row in [header] + body]


def cmd_eval(args, out, hooks):
    result = evaluate(args.method, args.k, args.m, args.n, OracleBudget(args.max_terms))
    result = hooks.get("result", lambda r: r)(result)
    row = result.to_row()
    _emit([row], EVAL_FIELDS, args.output, out, [row["value"]])
    return 0


def cmd_check(args, out, hooks):
    budget = OracleBudget(args.max_terms)
    hook = hooks.get("result", lambda r: r)
    cells = [(k, m, n) for k in args.k for m in args.m for n in args.n]
    if any((k, m) == (1, 0) for k, m, _ in cells):
        raise DomainError("(k, m) = (1, 0) is excluded: the identity does not hold there as stated")
    rows, body = [], []
    all_ok = True
    for k, m, n in cells:
        methods = METHODS if k >= 2 else ("oracle", "recurrence")
        results = [hook(evaluate(meth, k, m, n, budget)) for meth in methods]
        ok = len({r.value for r in results}) == 1
        all_ok &= ok
        rows.extend(r.to_row() for r in results)
        shown = {r.method: r.to_row()["value"] for r in results}
        body.append([k, m, n] + [shown.get(meth, "-") for meth in METHODS] + ["ok" if ok else "MISMATCH"])
    rows.sort(key=lambda r: (r["k"], r["m"], r["n"], r["method"]))
    lines = _table(["k", "m", "n"] + list(METHODS) + ["status"], body)
    lines.append(f"{len(cells)} cells, " + ("all methods agree" if all_ok else "MISMATCH found"))
    _emit(rows, EVAL_FIELDS, args.output, out, lines)
    return 0 if all_ok else 1


def cmd_verify(args, out, hooks):
    hook = hooks.get("certificate", lambda c: c)
    kinds = KINDS if args.kind == "both" else (args.kind,)
    reports = [verify(hook(certificate(kind, k))) for kind in kinds for k in args.k]
    rows = [r.to_row(args.show_residual) for r in reports]
    lines = []
    for r in reports:
        lines.append(f"{r.kind} k={r.k} {'valid' if r.is_valid else 'INVALID'}")
        if args.show_residual:
            lines.append(f"  residual numerator: {r.residual_rendering}")
    fields = ["kind", "k", "valid", "num_terms", "den_terms", "micros"]
    if args.show_residual:
        fields.append("residual")
    _emit(rows, fields, args.output, out, lines)
    return 0 if all(r.is_valid for r in reports) else 1


def _timed_best(fn, repeat):
    best = None
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        elapsed = time.perf_counter() - start
        best = elapsed if best is None else min(best, elapsed)
    return result, best


def run_bench(ks, ms, ns, methods, repeat=3, budget=OracleBudget()):
    """Time each method on each cell.

    Returns ``(rows, problems)``: one row per (cell, method) and a list of
    human-readable failures (value disagreement or broken cost ordering
    recurrence < corollary < oracle on cells where all three ran).
    """
    rows, problems = [], []
    for k in ks:
        for m in ms:
            for n in ns:
                times, values = {}, {}
                for meth in methods:
                    try:
                        res, best = _timed_best(lambda: evaluate(meth, k, m, n, budget), repeat)
                    except (DomainError, BudgetExceeded) as exc:
                        rows.append({"k": k, "m": m, "n": n, "method": meth, "value": "skipped",
                                     "terms": 0, "micros": 0, "note": str(exc)})
                        continue
                    row = res.to_row()
                    row["micros"] = round(best * 1e6)
                    rows.append(row)
                    times[meth], values[meth] = best, res.value
                if len(set(values.values())) > 1:
                    problems.append(f"(k={k}, m={m}, n={n}) methods disagree")
                if len(times) == 3 and not times["recurrence"] < times["corollary"] < times["oracle"]:
                    problems.append(
                        f"(k={k}, m={m}, n={n}) ordering violated: recurrence {times['recurrence']:.2e}s, "
                        f"corollary {times['corollary']:.2e}s, oracle {times['oracle']:.2e}s"
                    )
    rows.sort(key=lambda r: (r["k"], r["m"], r["n"], r["method"]))
    return rows, problems


def cmd_bench(args, out, hooks):
    rows, problems = run_bench(args.k, args.m, args.n, args.methods, args.repeat,
                               OracleBudget(args.max_terms))
    body = [[r["k"], r["m"], r["n"], r["method"], r["terms"], r["micros"],
             r["value"] if len(r["value"]) <= 24 else r["value"][:21] + "..."] for r in rows]
    lines = _table(["k", "m", "n", "method", "terms", "micros", "value"], body)
    lines.extend(problems or ["summary: values agree; recurrence < corollary < oracle wherever all three ran"])
    _emit(rows, EVAL_FIELDS + ["note"], args.output, out, lines)
    if args.output != "plain":
        for p in problems:
            print(p, file=sys.stderr)
    return 1 if problems else 0


COMMANDS = {"eval": cmd_eval, "check": cmd_check, "verify": cmd_verify, "bench": cmd_bench}


def run(argv=None, out=None, *, _result_hook=None, _certificate_hook=None):
    """Entry point returning the exit code.

    The underscore hooks are for tests: they rewrite every evaluation result
    or certificate before it is compared, so failure paths can be driven.
    """
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    hooks = {}
    if _result_hook is not None:
        hooks["result"] = _result_hook
    if _certificate_hook is not None:
        hooks["certificate"] = _certificate_hook
    try:
        return COMMANDS[args.command](args, out, hooks)
    except (DomainError, BudgetExceeded) as exc:
        print(f"multiwz {args.command}: error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())
