"""Command-line front end.

Exit status: 0 on success, 1 on a usage error, 2 when the builder and the
oracle disagree or a proven sign result is contradicted.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from itertools import combinations_with_replacement

from . import builder, classifier, oracle
from .classifier import SignClass
from .periods import normalize

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VIOLATION = 2

SCAN_CAP = {3: 40, 4: 24}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def dump_json(obj) -> str:
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=True)


def _csv_text(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _profile_rows(values, width):
    return [(i, i * width, (i + 1) * width, v) for i, v in enumerate(values)]


def _check_arity(periods, lo, hi, command):
    if not lo <= len(periods) <= hi:
        want = str(lo) if lo == hi else f"{lo} to {hi}"
        raise UsageError(f"{command} takes {want} periods, got {len(periods)}")
    for t in periods:
        if t < 1:
            raise UsageError(f"periods must be positive integers, got {t}")


def profile_record(profile) -> dict:
    pset = profile.periods
    return {
        "periods": list(pset.periods),
        "scale": pset.scale,
        "length": pset.critical_length_original,
        "values": list(profile.values),
        "sign_class": classifier.classify(profile).value,
        "palindromic": classifier.is_palindrome(profile),
    }


def _emit_profile(rec, profile, fmt, out):
    if fmt == "json":
        print(dump_json(rec), file=out)
    elif fmt == "csv":
        print(_csv_text(("index", "start", "end", "value"),
                        _profile_rows(profile.values, profile.step_width)), file=out)
    else:
        print(" ".join(map(str, rec["values"])), file=out)
        for key in ("scale", "length", "sign_class", "palindromic"):
            val = rec[key]
            print(f"{key}: {str(val).lower() if isinstance(val, bool) else val}", file=out)


# -- commands ---------------------------------------------------------------


def cmd_compute(args, out) -> int:
    _check_arity(args.periods, 1, 4, "compute")
    profile = builder.build(args.periods)
    _emit_profile(profile_record(profile), profile, args.format, out)
    return EXIT_OK


def cmd_predict(args, out) -> int:
    _check_arity(args.periods, 3, 3, "predict")
    pred = classifier.predict_h3(*args.periods)
    pairs = [
        {"pair": list(pc.periods), "gcd": pc.gcd, "clause": pc.clause} for pc in pred.pairs
    ]
    if args.format == "json":
        print(dump_json({"periods": list(args.periods),
                         "normalized": list(normalize(args.periods).normalized),
                         "sign_class": pred.sign_class.value,
                         "pairs": pairs}), file=out)
    elif args.format == "csv":
        rows = [(p["pair"][0], p["pair"][1], p["gcd"], p["clause"]) for p in pairs]
        print(_csv_text(("Ti", "Tj", "gcd", "clause"), rows), file=out)
    else:
        print(pred.sign_class.value, file=out)
        for p in pairs:
            a, b = p["pair"]
            print(f"({a},{b}) gcd={p['gcd']} {p['clause']}", file=out)
        w = pred.witness
        if w is not None:
            print(f"witness: ({w.periods[0]},{w.periods[1]}) gcd={w.gcd} {w.clause}", file=out)
    return EXIT_OK


def _diff_lines(built, found):
    a = oracle.canonical_integer_vector(built)
    b = oracle.canonical_integer_vector(found) if found else ()
    lines = [f"builder: {' '.join(map(str, a))}", f"oracle:  {' '.join(map(str, b))}"]
    bad = [i for i in range(max(len(a), len(b)))
           if (a[i] if i < len(a) else None) != (b[i] if i < len(b) else None)]
    lines.append(f"differing indices: {bad}")
    return lines


def cmd_verify(args, out) -> int:
    _check_arity(args.periods, 2, 4, "verify")
    profile = builder.build(args.periods)
    l_max = args.lmax if args.lmax is not None else len(profile)
    try:
        res = oracle.cross_check(profile, l_max)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    rec = profile_record(profile)
    rec["period_checks"] = [
        {"period": pc.period, "sums": list(pc.sums), "passed": pc.passed}
        for pc in res.orthogonality.period_checks
    ]
    rec["oracle"] = {
        "minimal_length": res.oracle.minimal_length,
        "dimension": res.oracle.nullspace_dimension,
        "agree": res.agree,
    }
    if args.format == "json":
        print(dump_json(rec), file=out)
    elif args.format == "csv":
        rows = [(pc.period, " ".join(map(str, pc.sums)), pc.passed)
                for pc in res.orthogonality.period_checks]
        print(_csv_text(("period", "sums", "passed"), rows), file=out)
    else:
        print("agree" if res.agree else "disagree", file=out)
        print(f"minimal_length: {res.oracle.minimal_length}", file=out)
        print(f"dimension: {res.oracle.nullspace_dimension}", file=out)
        print(f"sign_class: {rec['sign_class']}", file=out)
        print(f"profile: {' '.join(map(str, profile.values))}", file=out)
        for pc in res.orthogonality.period_checks:
            status = "ok" if pc.passed else "FAIL"
            print(f"mod {pc.period}: {' '.join(map(str, pc.sums))} {status}", file=out)
    if not res.agree:
        for line in _diff_lines(profile.values, res.oracle.oracle_profile):
            print(line, file=sys.stderr)
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_oracle(args, out) -> int:
    _check_arity(args.periods, 1, 4, "oracle")
    pset = normalize(args.periods)
    l_max = args.lmax if args.lmax is not None else pset.critical_length
    try:
        rep = oracle.minimal_orthogonal(pset, l_max)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    values = list(rep.oracle_profile) if rep.found else None
    if args.format == "json":
        print(dump_json({"periods": list(pset.periods), "scale": pset.scale, "lmax": l_max,
                         "found": rep.found, "minimal_length": rep.minimal_length,
                         "dimension": rep.nullspace_dimension, "values": values}), file=out)
    elif args.format == "csv" and rep.found:
        print(_csv_text(("index", "start", "end", "value"),
                        _profile_rows(values, pset.scale)), file=out)
    elif not rep.found:
        print(f"not found below L_max={l_max}", file=out)
    else:
        print(" ".join(map(str, values)), file=out)
        print(f"minimal_length: {rep.minimal_length}", file=out)
        print(f"dimension: {rep.nullspace_dimension}", file=out)
    return EXIT_OK


def scan_tuples(n: int, bound: int):
    """Nondecreasing n-tuples in [2, bound], one per class up to scaling."""
    seen = set()
    for t in combinations_with_replacement(range(2, bound + 1), n):
        key = tuple(sorted(normalize(t).normalized))
        if key in seen:
            continue
        seen.add(key)
        yield t


def _is_family_member(t) -> bool:
    pset = normalize(t)
    norm = sorted(pset.normalized)
    # (abc, abd, acd, bcd): the product of all four is (abcd)**3
    total = norm[0] * norm[1] * norm[2] * norm[3]
    abcd = round(total ** (1 / 3))
    for cand in (abcd - 1, abcd, abcd + 1):
        if cand > 0 and cand ** 3 == total:
            factors = sorted(cand // v for v in norm if cand % v == 0)
            if len(factors) != 4:
                return False
            try:
                return tuple(sorted(classifier.prop72_family(*factors))) == tuple(norm)
            except ValueError:
                return False
    return False


def scan_record(t) -> dict:
    computed = classifier.classify(builder.build(t))
    if len(t) == 3:
        predicted = classifier.predict_h3_sign(*t).value
        agree = computed.value == predicted
    else:
        if classifier.prop71_hypothesis(*t) is not None:
            predicted = "not_mixed"
            agree = computed is not SignClass.MIXED_SIGN
        elif _is_family_member(t):
            predicted = SignClass.MIXED_SIGN.value
            agree = computed is SignClass.MIXED_SIGN
        else:
            predicted = None
            agree = True
    return {"tuple": list(t), "predicted": predicted, "computed": computed.value, "agree": agree}


def cmd_scan(args, out) -> int:
    cap = SCAN_CAP[args.n]
    if args.bound < 2:
        raise UsageError(f"--bound must be at least 2, got {args.bound}")
    if args.bound > cap:
        raise UsageError(f"--bound {args.bound} exceeds the cap {cap} for n={args.n}")
    records = [scan_record(t) for t in scan_tuples(args.n, args.bound)]
    disagreements = sum(1 for r in records if not r["agree"])
    counts = {c.value: sum(1 for r in records if r["computed"] == c.value) for c in SignClass}
    summary = {"tuples": len(records), "disagreements": disagreements, "counts": counts}
    if args.format == "json":
        for r in records:
            print(dump_json(r), file=out)
        print(dump_json({"summary": summary}), file=out)
    elif args.format == "csv":
        rows = [(" ".join(map(str, r["tuple"])), r["predicted"] or "", r["computed"], r["agree"])
                for r in records]
        print(_csv_text(("tuple", "predicted", "computed", "agree"), rows), file=out)
    else:
        for r in records:
            print(f"{' '.join(map(str, r['tuple']))}\t{r['predicted']}\t{r['computed']}\t"
                  f"{'agree' if r['agree'] else 'DISAGREE'}", file=out)
        tally = ", ".join(f"{k}={v}" for k, v in counts.items())
        print(f"summary: {len(records)} tuples, {disagreements} disagreements ({tally})", file=out)
    return EXIT_VIOLATION if disagreements else EXIT_OK


def cmd_family(args, out) -> int:
    try:
        t = classifier.prop72_family(args.a, args.b, args.c, args.d)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    profile = builder.build(t)
    cls = classifier.classify(profile)
    if args.format == "json":
        print(dump_json({"params": [args.a, args.b, args.c, args.d], "periods": list(t),
                         "length": profile.periods.critical_length_original,
                         "sign_class": cls.value}), file=out)
    elif args.format == "csv":
        print(_csv_text(("T1", "T2", "T3", "T4", "sign_class"), [(*t, cls.value)]), file=out)
    else:
        print(f"({','.join(map(str, t))}) {cls.value}", file=out)
    return EXIT_OK if cls is SignClass.MIXED_SIGN else EXIT_VIOLATION


# -- parser -----------------------------------------------------------------


def make_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="posortho", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_, periods=True):
        p = sub.add_parser(name, help=help_)
        if periods:
            p.add_argument("periods", nargs="+", type=int)
        p.add_argument("--format", choices=("json", "csv", "text"), default="text")
        p.set_defaults(func=func)
        return p

    add("compute", cmd_compute, "build h_n for 1-4 periods")
    add("predict", cmd_predict, "predict the sign class of h3 from the gcds")
    add("verify", cmd_verify, "cross-check the builder against the oracle").add_argument(
        "--lmax", type=int)
    add("oracle", cmd_oracle, "minimal orthogonal profile by exact elimination").add_argument(
        "--lmax", type=int)
    p = add("scan", cmd_scan, "exhaustive classification of small tuples", periods=False)
    p.add_argument("--n", type=int, choices=(3, 4), default=3)
    p.add_argument("--bound", type=int, default=12)
    p = add("family", cmd_family, "h4 for the (abc, abd, acd, bcd) family", periods=False)
    for name in "abcd":
        p.add_argument(name, type=int)
    return parser


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"posortho {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
