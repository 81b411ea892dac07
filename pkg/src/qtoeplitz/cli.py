"""Command-line front end.

Exit codes: 0 success, 1 a check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from . import checks as C
from . import gpq as G
from .bench import BENCH_SIZES, format_bench, run_bench
from .quat import format_quat, parse_quat
from .subalg import commutant_basis, commutant_of_set, generated_subalgebra, parse_algebra
from .toeplitz import format_toeplitz, parse_toeplitz

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _report(command: str, seed, **sections) -> dict:
    return {"tool": "qtoeplitz", "version": __version__, "command": command, "seed": seed, **sections}


def _emit(args, report: dict, text: str) -> None:
    if args.json:
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        print(text)


def _checks_text(results) -> str:
    width = max((len(r.id) for r in results), default=0)
    lines = []
    for r in results:
        mark = "" if r.as_expected else "   <-- expected " + r.expected
        lines.append(f"{r.status:<21} {r.id:<{width}}  trials={r.trials:<6} {r.wall_time:7.2f}s{mark}")
    summary = C.summarize(results)
    counts = ", ".join(f"{k}={v}" for k, v in summary["counts"].items())
    lines.append(f"-- {counts}; {'all as expected' if summary['ok'] else str(len(summary['unexpected'])) + ' unexpected'}")
    return "\n".join(lines)


def _run_checks(args, command: str, results, params: dict) -> int:
    summary = C.summarize(results)
    report = _report(command, args.seed, params=params,
                     checks=[r.to_json() for r in results], summary=summary)
    _emit(args, report, _checks_text(results))
    return EXIT_OK if summary["ok"] else EXIT_FAIL


def _positive(name: str, value: int, least: int = 1) -> int:
    if value < least:
        raise UsageError(f"{name} must be at least {least}")
    return value


# -- subcommands -------------------------------------------------------------------


def cmd_verify_all(args) -> int:
    n_max = _positive("--n", args.n, 2)
    trials = _positive("--trials", args.trials)
    return _run_checks(args, "verify-all", C.run_all(n_max, trials, args.seed),
                       {"n_max": n_max, "trials": trials})


def cmd_check_prop31(args) -> int:
    n_max = _positive("--n", args.n, 2)
    trials = _positive("--trials", args.trials)
    results = [C.check_displacement_forward(n_max, trials, args.seed),
               C.check_displacement_converse(n_max, trials, args.seed)]
    return _run_checks(args, "check-prop31", results, {"n_max": n_max, "trials": trials})


def cmd_check_prop33(args) -> int:
    n_max = _positive("--n", args.n, 2)
    trials = _positive("--trials", args.trials)
    results = [C.check_product_criterion(n_max, trials, args.seed), C.check_band_counterexample(3)]
    return _run_checks(args, "check-prop33", results, {"n_max": n_max, "trials": trials})


def cmd_check_prop34(args) -> int:
    n_max = _positive("--n", args.n, 2)
    trials = _positive("--trials", args.trials)
    results = [C.check_commuting_corrected(n_max, trials, args.seed),
               C.check_commuting_literal(max(n_max, 2)),
               C.check_corner_counterexample(max(n_max, 3))]
    return _run_checks(args, "check-prop34", results, {"n_max": n_max, "trials": trials})


def _parse_gens(text: str) -> list:
    parts = [p for p in text.split(";") if p.strip()]
    try:
        return [parse_quat(p) for p in parts]
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def cmd_commutant(args) -> int:
    gens = _parse_gens(args.gens)
    comm = commutant_of_set(gens)
    result = {
        "generators": [format_quat(g) for g in gens],
        "commutant": str(comm),
        "commutant_basis": [format_quat(b) for b in commutant_basis(gens)],
        "generated_subalgebra": str(generated_subalgebra(gens)),
    }
    _emit(args, _report("commutant", args.seed, result=result),
          f"commutant: {comm}\ngenerated subalgebra: {result['generated_subalgebra']}")
    return EXIT_OK


def _spec(args, p, q) -> G.GpqSpec:
    try:
        return G.GpqSpec(args.n, parse_algebra(args.algebra), parse_quat(p), parse_quat(q))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def cmd_gpq(args) -> int:
    spec = _spec(args, args.p, args.q)
    result: dict = {"spec": spec.to_json()}
    lines = [spec.label()]
    code = EXIT_OK
    gb = G.basis(spec)
    result["dim"] = len(gb)
    result["basis"] = [[format_quat(a) for a in T.params] for T in gb]
    lines.append(f"dimension over R: {len(gb)}")
    if args.member:
        try:
            T = parse_toeplitz(Path(args.member).read_text())
        except (OSError, ValueError) as exc:
            raise UsageError(f"cannot read Toeplitz matrix from {args.member}: {exc}") from exc
        if T.n != spec.n:
            raise UsageError(f"matrix has n={T.n}, spec has n={spec.n}")
        member = G.is_member(T, spec)
        result["member"] = {"matrix": format_toeplitz(T).splitlines(), "is_member": member}
        lines.append(f"member: {member}")
    if args.closure:
        rep = G.closure_check(spec, _positive("--trials", args.trials), args.seed)
        result["closure"] = rep.to_json()
        lines.append(f"closure: {rep.passed}/{rep.trials} trials passed")
        if not rep.ok:
            code = EXIT_FAIL
            lines.append(f"  failure: {rep.failure}")
    if args.equal:
        if args.p2 is None or args.q2 is None:
            raise UsageError("--equal needs --p2 and --q2")
        other = _spec(args, args.p2, args.q2)
        crit, truth = G.equality_criterion(spec, other), G.sets_equal(spec, other)
        result["equal"] = {"other": other.to_json(), "criterion": crit, "sets_equal": truth}
        lines.append(f"equality criterion: {crit}; sets equal: {truth}")
    if args.maximal:
        trials = min(_positive("--trials", args.trials), C.MAX_FALSIFY_TRIALS)
        if spec.n > G.MAX_FALSIFY_N:
            raise UsageError(f"--maximal supports n <= {G.MAX_FALSIFY_N}")
        crit = G.maximality_criterion(spec)
        ce = G.maximality_falsify(spec, args.ambient, trials, args.seed)
        result["maximal"] = {"criterion": crit, "ambient": args.ambient, "trials": trials,
                             "counterexample": ce.to_json() if ce else None}
        lines.append(f"maximality criterion: {crit}; extension found in T_n[{args.ambient}]: {ce is not None}")
        if ce:
            lines.append(f"  X = {[format_quat(a) for a in ce.X.params]} (closure dim {ce.closure_dim} > {ce.g_dim})")
        if crit and ce is not None:
            code = EXIT_FAIL
    _emit(args, _report("gpq", args.seed, result=result), "\n".join(lines))
    return code


def cmd_bench(args) -> int:
    sizes = (args.n,) if args.n else BENCH_SIZES
    for n in sizes:
        _positive("--n", n)
    report = run_bench(sizes, _positive("--reps", args.reps), args.seed)
    _emit(args, _report("bench", args.seed, bench=report), format_bench(report))
    return EXIT_OK if report["ok"] else EXIT_FAIL


# -- parser ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--seed", type=int, default=42)

    parser = _Parser(prog="qtoeplitz", description="Exact checks for quaternion Toeplitz matrices.")
    parser.add_argument("--version", action="version", version=f"qtoeplitz {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, help_, n=None, trials=None):
        sp = sub.add_parser(name, parents=[common], help=help_)
        if n is not None:
            sp.add_argument("--n", type=int, default=n)
        if trials is not None:
            sp.add_argument("--trials", type=int, default=trials)
        sp.set_defaults(func=fn)
        return sp

    add("verify-all", cmd_verify_all, "run every check", n=3, trials=500)
    add("check-prop31", cmd_check_prop31, "displacement characterisation", n=6, trials=1000)
    add("check-prop33", cmd_check_prop33, "product-is-Toeplitz criterion", n=5, trials=1000)
    add("check-prop34", cmd_check_prop34, "commuting products", n=4, trials=1000)
    sp = add("commutant", cmd_commutant, "commutant of a set of quaternions")
    sp.add_argument("--gens", required=True, help='semicolon-separated, e.g. "i;1+j"')
    sp = add("gpq", cmd_gpq, "the family G_{p,q}[A]", n=2, trials=200)
    sp.add_argument("--algebra", default="H", help="R, H or plane:<v>")
    sp.add_argument("--p", required=True)
    sp.add_argument("--q", required=True)
    sp.add_argument("--member", metavar="FILE", help="Toeplitz matrix file to test for membership")
    sp.add_argument("--closure", action="store_true")
    sp.add_argument("--equal", action="store_true")
    sp.add_argument("--p2")
    sp.add_argument("--q2")
    sp.add_argument("--maximal", action="store_true")
    sp.add_argument("--ambient", choices=("A", "H"), default="A")
    sp = add("bench", cmd_bench, "structured vs dense matvec timing")
    sp.add_argument("--n", type=int, default=None, help="single size (default 64, 256, 1024)")
    sp.add_argument("--reps", type=int, default=5)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"qtoeplitz: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
