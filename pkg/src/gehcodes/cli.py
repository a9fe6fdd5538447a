"""Command line front end.

Exit codes: 0 success, 1 usage or input error, 2 a verification or
``--expect`` check failed.  JSON output (``--output json``) is the stable
interface and is byte-identical for identical invocations.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .code import build_code, format_word, parse_word
from .constructions import construct, family_level
from .ring import make_ring
from .search import DEFAULT_BUDGET, DEFAULT_WITNESS_CAP, BudgetExceeded, SearchSpec, min_weight
from .verify import SUITES, verify_theorems

EXIT_OK, EXIT_INPUT, EXIT_FAILED = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _coeff_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _params(text: str) -> dict[str, str]:
    out = {}
    for item in filter(None, (p.strip() for p in text.split(","))):
        key, sep, value = item.partition("=")
        if not sep:
            raise argparse.ArgumentTypeError(f"expected key=value, got {item!r}")
        out[key.strip()] = value.strip()
    return out


def _emit(args, payload: dict, text: str) -> None:
    if args.output == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _ring(args, n: int | None = None):
    n = args.n if n is None else n
    if n is None:
        raise UsageError("--n is required")
    if args.m is None:
        raise UsageError("--m is required")
    return make_ring(n, args.m, args.h2)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_lift(args) -> int:
    ring = _ring(args)
    hq = ring.hq
    payload = {
        "m": ring.m,
        "n": ring.n,
        "h2": list(ring.h2.coeffs),
        "hq": list(hq.coeffs),
        "hq_signed": list(hq.signed()),
    }
    _emit(args, payload, format_word(hq.coeffs))
    return EXIT_OK


def cmd_ring(args) -> int:
    ring = _ring(args)
    powers = [list(x.coeffs) for x in ring.teichmuller_set()[1:]]
    payload = {
        "n": ring.n,
        "m": ring.m,
        "q": ring.q,
        "N": ring.N,
        "k": ring.k,
        "h2": list(ring.h2.coeffs),
        "hq": list(ring.hq.coeffs),
        "xi_powers": powers,
    }
    lines = [
        f"GR({ring.q},{ring.m}): N={ring.N} k={ring.k}",
        f"h2 = {ring.h2}",
        f"hq = {ring.hq}  ({ring.hq.signed_str()})",
    ]
    lines += [f"xi^{j} = {ring.xi_pow(j)}" for j in range(ring.N)]
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def _report_text(rep: dict) -> str:
    return (
        f"word={format_word(rep['word'])} member={str(rep['member']).lower()} "
        f"hamming={rep['hamming']} lee={rep['lee']} profile={format_word(rep['profile'])}"
    )


def cmd_check(args) -> int:
    code = build_code(_ring(args))
    try:
        word = parse_word(args.word)
        rep = code.report(word)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit(args, rep, _report_text(rep))
    return EXIT_OK


def cmd_encode(args) -> int:
    code = build_code(_ring(args))
    try:
        word = code.encode(parse_word(args.info))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    rep = code.report(word)
    _emit(args, rep, format_word(word.entries))
    return EXIT_OK


def cmd_search(args) -> int:
    code = build_code(_ring(args))
    try:
        spec = SearchSpec(code, args.metric, args.mode, args.bound, budget=args.budget,
                          worker_count=args.jobs, witness_cap=args.witness_cap)
        res = min_weight(spec)
    except (ValueError, BudgetExceeded) as exc:
        raise UsageError(str(exc)) from None
    payload = res.to_json(timings=args.timings)
    status = EXIT_OK
    if args.expect is not None:
        payload["expect"] = args.expect
        payload["expect_ok"] = res.min_weight == args.expect
        if not payload["expect_ok"]:
            status = EXIT_FAILED
    text = (
        f"P_{code.q} m={code.m} {res.metric} {res.mode}: min_weight={res.min_weight} "
        f"witnesses={len(res.witnesses)}{'+' if res.witness_overflow else ''} "
        f"examined={res.candidates_examined}"
    )
    if args.expect is not None:
        text += f" expect={args.expect} {'ok' if status == EXIT_OK else 'VIOLATED'}"
    _emit(args, payload, text)
    return status


def cmd_construct(args) -> int:
    level = family_level(args.family)
    if args.n is not None and args.n != level:
        raise UsageError(f"family {args.family} lives at n={level}, got --n {args.n}")
    ring = _ring(args, n=level)
    try:
        built = construct(args.family, ring, args.params)
    except (ValueError, KeyError) as exc:
        raise UsageError(f"construction failed: {exc}") from None
    word = built.word
    payload = build_code(ring).report(word)
    payload.update({"family": args.family, "case": built.case, "support": built.support})
    _emit(args, payload, format_word(word.entries))
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.min_m < 2 or args.min_n < 1:
        raise UsageError("ranges need m >= 2 and n >= 1")
    try:
        report = verify_theorems(
            range(args.min_m, args.max_m + 1),
            range(args.min_n, args.max_n + 1),
            budget=args.budget,
            suites=args.suite,
            jobs=args.jobs,
            seed=args.seed,
            timings=args.timings,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    lines = []
    for e in report["entries"]:
        mark = "PASS" if e["pass"] else "FAIL"
        lines.append(
            f"{mark} {e['theorem']} n={e['n']} m={e['m']} expected={e['expected']} "
            f"measured={e['measured']} ({e['method']})"
        )
    lines.append(f"{len(report['entries'])} entries, {'all pass' if report['pass'] else 'FAILURES'}")
    _emit(args, report, "\n".join(lines))
    return EXIT_OK if report["pass"] else EXIT_FAILED


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--m", type=int, help="extension degree m")
    common.add_argument("--n", type=int, help="characteristic exponent, q = 2^n")
    common.add_argument("--h2", type=_coeff_list, default=None,
                        help="primitive binary polynomial c0,c1,...,cm (default: built-in table)")
    common.add_argument("--output", choices=("text", "json"), default="text")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for searches")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="candidate cap")
    common.add_argument("--seed", type=int, default=0, help="seed for sampled checks")

    parser = _Parser(prog="gehcodes", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("lift", parents=[common], help="lift h2 to the primitive basic irreducible h_q")
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("ring", parents=[common], help="show ring parameters and powers of xi")
    p.set_defaults(func=cmd_ring)

    p = sub.add_parser("check", parents=[common], help="membership and weights of a word")
    p.add_argument("--word", required=True, help="comma-separated residues, inf first")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("encode", parents=[common], help="systematic encoding of k information symbols")
    p.add_argument("--info", required=True, help="comma-separated k residues")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("search", parents=[common], help="minimum Hamming/Lee weight search")
    p.add_argument("--metric", choices=("hamming", "lee"), default="lee")
    p.add_argument("--mode", choices=("exhaustive", "bounded"), default="exhaustive")
    p.add_argument("--bound", type=int, default=None)
    p.add_argument("--expect", type=int, default=None, help="exit 2 unless the minimum equals this")
    p.add_argument("--witness-cap", type=int, default=DEFAULT_WITNESS_CAP)
    p.add_argument("--timings", action="store_true", help="include wall time (breaks byte-stability)")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("construct", parents=[common], help="build a minimum-weight codeword")
    p.add_argument("--family", required=True, choices=("p4-case", "p8-odd", "p8-even", "h4", "h6"))
    p.add_argument("--params", type=_params, default={}, help="e.g. case=1,a=1,b=5 or t=5")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", parents=[common], help="run the theorem verification suites")
    p.add_argument("--suite", nargs="*", default=["all"], choices=("all",) + SUITES)
    p.add_argument("--min-m", type=int, default=3)
    p.add_argument("--max-m", type=int, default=4)
    p.add_argument("--min-n", type=int, default=1)
    p.add_argument("--max-n", type=int, default=3)
    p.add_argument("--timings", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.jobs < 1:
        parser.error("--jobs must be >= 1")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"gehcodes: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (ValueError, KeyError) as exc:
        print(f"gehcodes: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
