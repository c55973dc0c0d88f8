import argparse
import sys
import time
from contextlib import redirect_stderr, redirect_stdout
from typing import Callable, Dict, List, Optional, TextIO, Tuple

import pandas as pd

from liecx import __version__, config
from liecx.complexity.complexity_report import complexity_lie
from liecx.config import Limits
from liecx.errors import CapacityError, InvalidInputError, LiecxError
from liecx.freelie.lie_module import action_matrix, format_permutation, lie_module_rep, parse_permutation
from liecx.freelie.lyndon_basis import format_tree, lyndon_basis, normal_form, parse_tree
from liecx.growth.growth_estimator import gamma_estimate, shift_series
from liecx.growth.lower_bound_family import FamilySpec, family_report, lower_bound_family
from liecx.oracle.decomposition import decomposition_fit
from liecx.oracle.group_module import sign_module, trivial_module
from liecx.oracle.homology import bar_tor_dims, cohomology_dims, tor_dims
from liecx.oracle.resolution_builder import resolution
from liecx.transformers.series_format_transformer import (
    frame_to_csv,
    records_to_csv,
    series_to_csv,
    to_json,
    words_to_frame,
    words_to_json,
)
from liecx.validators.acceptance_validator import CHECKS, AcceptanceMatrix
from liecx.words.dim_series import DimSeries
from liecx.words.word_basis import dimension_series, enumerate_words

Result = Tuple[str, int]


def composition_arg(text: str) -> Tuple[int, ...]:
    """Parse a comma-separated composition such as "2,2" """
    try:
        parts = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"composition must be comma-separated integers, got {text!r}")
    if not parts or any(part < 1 for part in parts):
        raise argparse.ArgumentTypeError(f"composition parts must be positive, got {text!r}")
    return parts


def nonnegative_arg(text: str) -> int:
    """argparse type for integers >= 0"""
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {value}")
    return value


def positive_arg(text: str) -> int:
    """argparse type for integers >= 1"""
    value = nonnegative_arg(text)
    if value == 0:
        raise argparse.ArgumentTypeError("expected a positive integer, got 0")
    return value


def build_parser() -> argparse.ArgumentParser:
    """The liecx parser with one subcommand per verb"""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json", help="output format")
    common.add_argument("--capacity-group-order", type=positive_arg, default=config.MAX_GROUP_ORDER,
                        help="largest Young subgroup the oracle will build")
    common.add_argument("--capacity-width", type=positive_arg, default=config.MAX_RESOLUTION_WIDTH,
                        help="largest free module width (rank x |G|) in a resolution")

    parser = argparse.ArgumentParser(prog="liecx", description="Homology and complexity of Lie modules")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    verbs = parser.add_subparsers(dest="verb", required=True)

    dims = verbs.add_parser("dims", parents=[common], help="dimension series from the word basis")
    dims.add_argument("-p", type=positive_arg, required=True)
    dims.add_argument("-r", type=nonnegative_arg, required=True)
    dims.add_argument("--max", type=nonnegative_arg, required=True, help="largest degree m")

    words = verbs.add_parser("words", parents=[common], help="admissible words in one degree")
    words.add_argument("-p", type=positive_arg, required=True)
    words.add_argument("-r", type=nonnegative_arg, required=True)
    words.add_argument("-m", "--degree", type=nonnegative_arg, required=True, help="homology degree")

    gamma = verbs.add_parser("gamma", parents=[common], help="growth rate of a word series")
    gamma.add_argument("-p", type=positive_arg, required=True)
    gamma.add_argument("-r", type=nonnegative_arg, required=True)
    gamma.add_argument("--max", type=nonnegative_arg, help="series length (default depends on p)")
    gamma.add_argument("--shift", type=nonnegative_arg, default=0, help="suspend the series first")

    family = verbs.add_parser("family", parents=[common], help="lower-bound word family")
    family.add_argument("-p", type=positive_arg, required=True)
    family.add_argument("-r", type=positive_arg, required=True)
    family.add_argument("-x", type=positive_arg, required=True)

    lie = verbs.add_parser("lie", parents=[common], help="the Lie module Lie(n)")
    lie.add_argument("-n", type=positive_arg, required=True)
    lie.add_argument("-p", type=positive_arg, default=2)
    target = lie.add_mutually_exclusive_group()
    target.add_argument("--tree", help='normal form of a bracketing, e.g. "[[1,2],3]"')
    target.add_argument("--sigma", help='action matrix of a permutation, e.g. "(1 2)(3 4)"')
    target.add_argument("--lambda", dest="composition", type=composition_arg,
                        help="generator matrices over a Young subgroup")

    oracle = verbs.add_parser("oracle", parents=[common], help="brute-force group homology")
    oracle.add_argument("-p", type=positive_arg, required=True)
    oracle.add_argument("--lambda", dest="composition", type=composition_arg, required=True)
    oracle.add_argument("--max", type=nonnegative_arg, default=4, help="largest degree m")
    oracle.add_argument("--module", choices=("lie", "trivial", "sign"), default="lie")
    mode = oracle.add_mutually_exclusive_group()
    mode.add_argument("--cohomology", action="store_true", help="H^m instead of H_m")
    mode.add_argument("--bar", action="store_true", help="use the bar complex")
    mode.add_argument("--resolution", action="store_true", help="print the free resolution itself")

    complexity = verbs.add_parser("complexity", parents=[common], help="complexity of Lie(n)")
    complexity.add_argument("-n", type=positive_arg, required=True)
    complexity.add_argument("-p", type=positive_arg, required=True)
    complexity.add_argument("--audited", action="store_true", help="measure gamma for each r")
    complexity.add_argument("--m-max", type=positive_arg, help="series length for audited estimates")

    check = verbs.add_parser("check", parents=[common], help="acceptance checks")
    check.add_argument("name", choices=["all"] + CHECKS)
    check.add_argument("--small", action="store_true", help="only the required sample sizes")
    check.add_argument("--save-report", metavar="DIR", help="also write a timestamped JSON report")
    check.add_argument("-n", type=positive_arg, help="arity for a single decomposition fit")
    check.add_argument("-p", type=positive_arg, default=2)
    check.add_argument("--lambda", dest="composition", type=composition_arg,
                       help="Young subgroup for a single decomposition fit")
    check.add_argument("--max", type=nonnegative_arg, default=6)
    return parser


def _series_output(args, series: DimSeries) -> str:
    """A series as JSON or CSV"""
    return series_to_csv(series) if args.format == "csv" else to_json(series)


def _records_output(args, payload: dict, records: List[dict]) -> str:
    """The payload as JSON, or its records as CSV"""
    return records_to_csv(records) if args.format == "csv" else to_json(payload)


def run_dims(args, limits: Limits, say: Callable) -> Result:
    """dims: dimension series from the word basis"""
    return _series_output(args, dimension_series(args.p, args.r, args.max)), 0


def run_words(args, limits: Limits, say: Callable) -> Result:
    """words: admissible words in one degree"""
    words = enumerate_words(args.p, args.r, args.degree)
    say(f"📊 {len(words)} admissible words of length {args.r} in degree {args.degree}")
    if args.format == "csv":
        return frame_to_csv(words_to_frame(words, args.p)), 0
    return words_to_json(words, args.p), 0


def run_gamma(args, limits: Limits, say: Callable) -> Result:
    """gamma: growth rate of a word series, optionally suspended"""
    m_max = args.max if args.max is not None else config.audit_m_max(args.p)
    series = shift_series(dimension_series(args.p, args.r, m_max), args.shift)
    estimate = gamma_estimate(series)
    payload = {"p": args.p, "r": args.r, "m_max": m_max, "shift": args.shift, **estimate.to_dict()}
    record = {**payload, "window": f"{estimate.window[0]}-{estimate.window[1]}"}
    return _records_output(args, payload, [record]), 0


def run_family(args, limits: Limits, say: Callable) -> Result:
    """family: lower-bound word family with its audit"""
    spec = FamilySpec(args.p, args.r, args.x)
    report = family_report(spec)
    words = lower_bound_family(spec)
    if report["deviation"]:
        say(f"⚠️ measured total {report['measured_total']} differs from the closed form "
            f"{report['stated_total']} by {report['deviation']}")
    if args.format == "csv":
        return frame_to_csv(words_to_frame(words, args.p)), 0
    return to_json({**report, "words": [word.to_dict() for word in words]}), 0


def run_lie(args, limits: Limits, say: Callable) -> Result:
    """lie: basis, normal form, action matrix or generator matrices"""
    n, p = args.n, args.p
    if args.tree is not None:
        element = normal_form(parse_tree(args.tree), n, p)
        return _records_output(args, element.to_dict(), element.to_dict()["terms"]), 0
    if args.sigma is not None:
        sigma = parse_permutation(args.sigma, n)
        matrix = action_matrix(n, p, sigma)
        payload = {"n": n, "p": p, "sigma": format_permutation(sigma), "matrix": matrix.tolist()}
        if args.format == "csv":
            return frame_to_csv(pd.DataFrame(matrix)), 0
        return to_json(payload), 0
    if args.composition is not None:
        return to_json(lie_module_rep(n, p, args.composition)), 0
    basis = [format_tree(tree) for tree in lyndon_basis(n)]
    records = [{"index": i, "tree": tree} for i, tree in enumerate(basis)]
    return _records_output(args, {"n": n, "dimension": len(basis), "basis": basis}, records), 0


def _module(args):
    """Coefficient module named by --module"""
    composition, p = args.composition, args.p
    if args.module == "trivial":
        return trivial_module(composition, p)
    if args.module == "sign":
        return sign_module(composition, p)
    return lie_module_rep(sum(composition), p, composition)


def run_oracle(args, limits: Limits, say: Callable) -> Result:
    """oracle: brute-force homology, cohomology or the resolution itself"""
    composition, p = args.composition, args.p
    if args.resolution:
        return to_json(resolution(composition, p, args.max, limits=limits)), 0
    module = _module(args)
    say(f"🔄 {args.module} module of dimension {module.dim} over Sigma_{composition}")
    if args.cohomology:
        series = cohomology_dims(composition, p, module, args.max, limits=limits)
    elif args.bar:
        series = bar_tor_dims(composition, p, module, args.max, limits=limits)
    else:
        series = tor_dims(composition, p, module, args.max, limits=limits)
    return _series_output(args, series), 0


def run_complexity(args, limits: Limits, say: Callable) -> Result:
    """complexity: c(Lie(n)) with the per-r breakdown"""
    report = complexity_lie(args.n, args.p, audited=args.audited, m_max=args.m_max)
    for r in report.mismatches:
        say(f"❌ measured gamma for r={r} disagrees with gamma = r")
    records = [
        {"r": r, "gamma": estimate.gamma if estimate else 0, "slope": estimate.slope if estimate else 0.0}
        for r, estimate in report.per_r
    ] or [{"n": report.n, "p": report.p, "conclusion": report.conclusion}]
    return _records_output(args, report.to_dict(), records), 0 if report.consistent else 1


def run_check(args, limits: Limits, say: Callable) -> Result:
    """check: one decomposition fit or acceptance checks"""
    if args.name == "decomposition" and args.composition is not None:
        n = args.n if args.n is not None else sum(args.composition)
        fit = decomposition_fit(n, args.p, args.composition, args.max, limits=limits)
        say(f"{'✅' if fit.exact else '❌'} residual {fit.residual}, C = {list(fit.coefficients)}")
        return to_json(fit), 0 if fit.exact else 1
    names = CHECKS if args.name == "all" else [args.name]
    matrix = AcceptanceMatrix(small=args.small, limits=limits)
    passed = matrix.execute(names)
    if args.save_report:
        matrix.save_report(args.save_report)
    return to_json(matrix), 0 if passed else 1


HANDLERS: Dict[str, Callable[..., Result]] = {
    "dims": run_dims,
    "words": run_words,
    "gamma": run_gamma,
    "family": run_family,
    "lie": run_lie,
    "oracle": run_oracle,
    "complexity": run_complexity,
    "check": run_check,
}


def run(argv: Optional[List[str]] = None, stdout: TextIO = None, stderr: TextIO = None) -> int:
    """Parse argv, dispatch one verb, write the payload to stdout and return the exit code"""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr

    def say(text: str) -> None:
        """Status line on stderr"""
        print(text, file=stderr)

    parser = build_parser()
    try:
        with redirect_stdout(stdout), redirect_stderr(stderr):
            args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    limits = Limits(group_order=args.capacity_group_order, width=args.capacity_width)
    start_time = time.time()
    try:
        output, code = HANDLERS[args.verb](args, limits, say)
    except CapacityError as e:
        say(f"❌ Capacity exceeded: {e}")
        if e.partial is not None:
            say("⚠️ Writing the partial result")
            print(to_json({"error": str(e), "partial": e.partial.to_dict()}), file=stdout)
        return e.exit_code
    except InvalidInputError as e:
        say(f"❌ Invalid input: {e}")
        return e.exit_code
    except LiecxError as e:
        say(f"💥 {type(e).__name__}: {e}")
        return e.exit_code

    print(output, file=stdout, end="" if output.endswith("\n") else "\n")
    say(f"⏱️ {args.verb} finished in {time.time() - start_time:.2f}s")
    return code


def main():
    """Console entry point"""
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
