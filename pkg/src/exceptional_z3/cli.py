"""verify: command-line front end for the case and lemma runners.

Exit codes: 0 when every requested check passes, 1 on any failed check,
2 on a usage error.
"""
from __future__ import annotations

import argparse
import os
import sys

from . import verify
from .verify import CASES, LEMMAS, Report

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

_AUTO_SYMBOL = {
    "gamma3": "γ3", "sigma3": "σ3", "w3": "w3", "nu3": "ν3", "mu3": "μ3", "sigma": "σ",
    "sigma3p": "σ'3", "mu3p": "μ'3", "w3p": "w'3",
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_options(p, top: bool):
    """Options are accepted before or after the subcommand; only the top level sets defaults."""
    def d(value):
        return value if top else argparse.SUPPRESS

    p.add_argument("--format", choices=("json", "markdown"), default=d("json"))
    p.add_argument("--samples", type=int, default=d(8), help="sampled parameters per well-definedness check")
    p.add_argument("--seed", type=int, default=d(0))
    p.add_argument("--conductor", type=int, choices=(36, 180), default=d(36), help="cyclotomic field Q(zeta_N)")
    p.add_argument("-o", "--output", default=d(None), help="write the report here instead of stdout")
    p.add_argument("-j", "--jobs", type=int, default=d(None),
                   help="worker processes for 'all' (VERIFY_THREADS overrides)")
    p.add_argument("--stable", action="store_true", default=d(False),
                   help="write elapsed_ms as 0 so repeated runs are byte-identical")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="verify", description="Exact checks of order-3 automorphism pairs of G2, F4 and E6.")
    _add_options(p, True)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    c = sub.add_parser("case", help="run one case, 1..14")
    c.add_argument("n", type=int)
    lm = sub.add_parser("lemma", help="run one lemma suite")
    lm.add_argument("id")
    sub.add_parser("all", help="every case and lemma suite")
    sub.add_parser("dims", help="single and joint fixed dimensions against expectations")
    sub.add_parser("selftest", help="fast structural checks")
    sub.add_parser("list", help="list case numbers and lemma ids")
    for sp in sub.choices.values():
        _add_options(sp, False)
    return p


def _parallelism(jobs):
    env = os.environ.get("VERIFY_THREADS")
    if env:
        return max(1, int(env))
    return jobs if jobs is not None else verify.default_parallelism()


# markdown ----------------------------------------------------------------------------


def _sym(name: str) -> str:
    return _AUTO_SYMBOL.get(name, name)


def _checks_md(r: Report) -> list:
    lines = [f"### {r.case}: {'PASS' if r.passed else 'FAIL'}", "", "| check | result | detail |", "|---|---|---|"]
    for c in r.checks:
        lines.append(f"| {c.name} | {'pass' if c.passed else 'FAIL'} | {c.detail} |")
    lines.append("")
    return lines


def _case_row(r: Report) -> str:
    cid = int(r.case.split("-")[1])
    spec = CASES[cid]
    dim = "-" if r.computed_dim is None else str(r.computed_dim)
    return (f"| {cid} | {spec.group} | {_sym(spec.sigma)}, {_sym(spec.tau)} | {spec.expected_group} "
            f"| {spec.expected_dim} | {dim} | {'pass' if r.passed else 'FAIL'} |")


_CASE_HEADER = ["| Case | G | automorphisms | expected K | expected dim | computed dim | verdict |",
                "|---|---|---|---|---|---|---|"]


def to_markdown(result) -> str:
    if isinstance(result, dict):
        s = result["summary"]
        reports = result["reports"]
        cases = [r for r in reports if r.case.startswith("case-")]
        others = [r for r in reports if not r.case.startswith("case-")]
        lines = ["# Verification report", "",
                 f"cases passed {s['cases_passed']}/{s['cases_total']}, "
                 f"suites passed {s['lemmas_passed']}/{s['lemmas_total']}, "
                 f"failed checks {s['checks_failed']} "
                 f"(samples {s['samples']}, seed {s['seed']}, conductor {s['conductor']})", "",
                 "## Cases", ""] + _CASE_HEADER + [_case_row(r) for r in cases]
        lines += ["", "## Suites", "", "| suite | checks | verdict |", "|---|---|---|"]
        for r in others:
            lines.append(f"| {r.case} | {sum(c.passed for c in r.checks)}/{len(r.checks)} | "
                         f"{'pass' if r.passed else 'FAIL'} |")
        failed = [r for r in reports if not r.passed]
        if failed:
            lines += ["", "## Failed checks", ""]
            for r in failed:
                for c in r.checks:
                    if not c.passed:
                        lines.append(f"- {r.case}: {c.name} ({c.detail})")
        return "\n".join(lines) + "\n"
    r = result
    lines = []
    if r.case.startswith("case-"):
        lines += _CASE_HEADER + [_case_row(r), ""]
    lines += _checks_md(r)
    return "\n".join(lines)


# entry point ------------------------------------------------------------------------------


def parse_and_run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if isinstance(exc.code, int) else EXIT_USAGE
    if args.samples < 0:
        parser.print_usage(sys.stderr)
        print("verify: error: --samples must be >= 0", file=sys.stderr)
        return EXIT_USAGE
    if args.jobs is not None and args.jobs < 1:
        parser.print_usage(sys.stderr)
        print("verify: error: --jobs must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    cmd = args.command
    if cmd == "list":
        text = "cases: " + " ".join(str(c) for c in sorted(CASES)) + "\nlemmas: " + " ".join(LEMMAS) + "\n"
        return _emit(text, args.output, EXIT_OK)
    if cmd == "case" and args.n not in CASES:
        parser.print_usage(sys.stderr)
        print(f"verify: error: case must be in 1..14, got {args.n}", file=sys.stderr)
        return EXIT_USAGE
    if cmd == "lemma" and args.id not in LEMMAS:
        parser.print_usage(sys.stderr)
        print(f"verify: error: unknown lemma id {args.id!r}; try 'verify list'", file=sys.stderr)
        return EXIT_USAGE

    if cmd == "case":
        result = verify.run_case(args.n, args.samples, args.seed, args.conductor)
    elif cmd == "lemma":
        result = verify.run_lemma(args.id, args.samples, args.seed, args.conductor)
    elif cmd == "dims":
        result = verify.run_dims(args.conductor)
    elif cmd == "selftest":
        result = verify.run_selftest(args.conductor)
    else:
        result = verify.run_all(args.samples, args.seed, _parallelism(args.jobs), args.conductor)

    if isinstance(result, dict):
        ok = all(r.passed for r in result["reports"])
    else:
        ok = result.passed
    text = verify.to_json(result, stable=args.stable) if args.format == "json" else to_markdown(result)
    return _emit(text, args.output, EXIT_OK if ok else EXIT_FAIL)


def _emit(text: str, path, code: int) -> int:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
        sys.stdout.flush()
    return code


def main() -> None:
    sys.exit(parse_and_run())


if __name__ == "__main__":
    main()
