"""
Command Line

Batch subcommands for every enumeration and verification. Reports go to
standard output as JSON or a table; diagnostics go to standard error.

Exit codes: 0 when every check passes, 1 when a check fails, 2 on usage or
configuration errors.
"""

import argparse
import random
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from ..combinatorics import Partition
from ..engine.performance import ParallelProcessor, PerformanceProfiler
from ..geometry import ext_table, grassmann_cohomology, kapranov_collection
from ..representations import DominantWeight, lr_coefficients
from ..sod import ds_staircase, generation_witness
from ..utils.config import RunConfig
from ..utils.constants import EXIT_CHECK_FAILED, EXIT_OK, SUPPORTED_OUTPUT_FORMATS
from ..utils.json_utils import dumps_deterministic
from ..workflow import SUITE_NAMES, VerificationReport, run_suite
from .cli_utils import ErrorHandler, StatusUpdater, print_info, print_warning

PROG = "grassflop"

# Fields of RunConfig that may come from the command line
CONFIG_FLAGS = ("d", "m", "mprime", "cutoff", "format", "seed", "parallelism", "trials")

Outcome = Tuple[Any, str, int]


def parse_int_list(text: str) -> List[int]:
    """Comma-separated integers; brackets and blanks are ignored."""
    cleaned = text.strip().strip("[]").strip()
    if not cleaned:
        return []
    try:
        return [int(part) for part in cleaned.split(",")]
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got '{text}'") from e


def parse_partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from e


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--d", type=int, help="rank of V")
    common.add_argument("--m", type=int, help="rank of W")
    common.add_argument("--mprime", type=int, help="rank of W'")
    common.add_argument("--cutoff", type=int, help="degree cutoff (default from GRASSFLOP_CUTOFF, else 6)")
    common.add_argument("--format", choices=SUPPORTED_OUTPUT_FORMATS, help="report format (default json)")
    common.add_argument("--config", help="YAML or JSON file with default parameters")
    common.add_argument("--seed", type=int, help="seed for random specializations")
    common.add_argument("--parallelism", type=int, help="worker count, 0 for one per CPU")
    common.add_argument("--trials", type=int, help="number of random specializations")
    common.add_argument("--output-dir", help="also save the report in this directory")
    common.add_argument("--profile", metavar="DIR", help="write a cProfile report to DIR")
    return common


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with one subparser per command."""
    common = _common_parser()
    parser = argparse.ArgumentParser(
        prog=PROG,
        description="Character-level verification of Grassmann flop kernels."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("kapranov", parents=[common], help="list the Kapranov collection for (d, m)")
    sub.add_parser("ext-table", parents=[common], help="Ext groups between all window members")

    bwb = sub.add_parser(
        "bwb", parents=[common], help="cohomology of L_a(S) tensor L_b(Q) on Gr(d, n)",
        description="Borel-Weil-Bott on Gr(d, n). The JSON report carries degree, weight and dimension; "
                    "--format table prints the single line 'ZERO' or 'H^k : [weight]'."
    )
    bwb.add_argument("--n", type=int, required=True, help="dimension of the ambient space")
    bwb.add_argument("--ws", type=parse_int_list, default=None, help="weight on S, e.g. --ws=0,-1")
    bwb.add_argument("--wq", type=parse_int_list, default=None, help="weight on Q")

    lr = sub.add_parser("lr", parents=[common], help="Littlewood-Richardson coefficients")
    lr.add_argument("--lam", type=parse_partition, required=True)
    lr.add_argument("--mu", type=parse_partition, required=True)

    ds = sub.add_parser("ds-complex", parents=[common], help="staircase complex of a label")
    ds.add_argument("--delta", type=parse_partition, required=True)

    generate = sub.add_parser("generate", parents=[common], help="generation witness for a Kapranov member")
    generate.add_argument("--lambda", dest="lam", type=parse_partition, required=True)

    verify = sub.add_parser("verify", parents=[common], help="run a verification suite")
    verify.add_argument("suite", choices=SUITE_NAMES)
    return parser


def _kapranov(args: argparse.Namespace, cfg: RunConfig, processor: ParallelProcessor) -> Outcome:
    members = kapranov_collection(cfg.d, cfg.m).members
    table = "\n".join(str(lam) for lam in members) + "\n"
    return [lam.to_list() for lam in members], table, EXIT_OK


def _ext_table(args: argparse.Namespace, cfg: RunConfig, processor: ParallelProcessor) -> Outcome:
    table = ext_table(kapranov_collection(cfg.d, cfg.m), processor)
    members = table.spec.members
    lines = ["Hom dimensions (rows alpha, columns beta): " + " ".join(str(lam) for lam in members)]
    for alpha, row in zip(members, table.hom_matrix()):
        lines.append(f"{str(alpha):>12}  " + " ".join(f"{value:>4}" for value in row))
    lines.append(f"positive-degree entries: {len(table.positive_degree_entries())}")
    lines.append(f"witnessed order: {table.witnessed_order()}")
    return table.to_dict(), "\n".join(lines) + "\n", EXIT_OK


def _bwb(args: argparse.Namespace, cfg: RunConfig, processor: ParallelProcessor) -> Outcome:
    ws = args.ws if args.ws is not None else [0] * cfg.d
    wq = args.wq if args.wq is not None else [0] * (args.n - cfg.d)
    outcome = grassmann_cohomology(cfg.d, args.n, DominantWeight(tuple(ws)), DominantWeight(tuple(wq)))
    data = dict(outcome.to_dict(), d=cfg.d, n=args.n, ws=ws, wq=wq, dimension=outcome.dimension())
    return data, outcome.describe() + "\n", EXIT_OK


def _lr(args: argparse.Namespace, cfg: RunConfig, processor: ParallelProcessor) -> Outcome:
    coefficients = sorted(lr_coefficients(args.lam, args.mu).items(), key=lambda item: item[0].sort_key())
    data = {
        "lam": args.lam.to_list(),
        "mu": args.mu.to_list(),
        "coefficients": [{"nu": nu.to_list(), "c": c} for nu, c in coefficients]
    }
    table = "".join(f"{nu}  {c}\n" for nu, c in coefficients)
    return data, table, EXIT_OK


def _ds_complex(args: argparse.Namespace, cfg: RunConfig, processor: ParallelProcessor) -> Outcome:
    spec = ds_staircase(args.delta, cfg.d, cfg.mprime)
    lines = [f"k={k}  delta={diagram}  s={s}" for k, (diagram, s) in enumerate(spec.terms)]
    lines.append(f"K={spec.K}")
    return spec.to_dict(), "\n".join(lines) + "\n", EXIT_OK


def _generate(args: argparse.Namespace, cfg: RunConfig, processor: ParallelProcessor) -> Outcome:
    expression = generation_witness(args.lam, cfg.d, cfg.m, cfg.mprime, cfg.cutoff)
    lines = [f"target {expression.target}"]
    for generator, coefficient, shift in expression.combination:
        lines.append(f"{coefficient:+d} * t^{shift} * {generator}")
    return expression.to_dict(), "\n".join(lines) + "\n", EXIT_OK


def _verify(args: argparse.Namespace, cfg: RunConfig, processor: ParallelProcessor) -> Outcome:
    status = StatusUpdater()
    params = f"d={cfg.d}, m={cfg.m}, mprime={cfg.mprime}, cutoff={cfg.cutoff}"
    rng = random.Random(cfg.seed)
    checks = run_suite(
        args.suite, cfg, processor, rng,
        on_skip=lambda suite, error: print_warning(f"Skipping suite '{suite}': {error}"),
        on_start=lambda suite: status.update(f"Running suite '{suite}' with {params}")
    )
    report = VerificationReport(checks)
    if args.output_dir:
        path = report.save(args.output_dir, args.suite)
        print_info(f"Report saved to {path}")
    if report.passed:
        status.update(f"{len(checks)}/{len(checks)} checks passed", "success")
        return report.to_dict(), report.render_table(), EXIT_OK
    status.update(f"{report.failed_count} of {len(checks)} checks failed", "error")
    return report.to_dict(), report.render_table(), EXIT_CHECK_FAILED


HANDLERS: Dict[str, Callable[[argparse.Namespace, RunConfig, ParallelProcessor], Outcome]] = {
    "kapranov": _kapranov,
    "ext-table": _ext_table,
    "bwb": _bwb,
    "lr": _lr,
    "ds-complex": _ds_complex,
    "generate": _generate,
    "verify": _verify
}


def _execute(args: argparse.Namespace) -> int:
    overrides = {flag: getattr(args, flag, None) for flag in CONFIG_FLAGS}
    cfg = RunConfig.from_sources(overrides, args.config)
    processor = ParallelProcessor(max_workers=cfg.parallelism)
    handler = HANDLERS[args.command]

    if args.profile:
        profiler = PerformanceProfiler(output_dir=args.profile)
        (data, table, code), metrics = profiler.profile_function(handler, args, cfg, processor)
        path = profiler.save_profile_report(args.command, metrics, cfg.to_dict())
        print_info(f"Profile saved to {path}")
    else:
        data, table, code = handler(args, cfg, processor)

    print(table if cfg.format == "table" else dumps_deterministic(data), end="")
    return code


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run one command.

    Args:
        argv: Arguments without the program name

    Returns:
        Exit code
    """
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_CHECK_FAILED
    try:
        return _execute(args)
    except Exception as e:
        return ErrorHandler.handle_error(e, f"in '{args.command}'")
