"""`converge`: convergence equivalence and the implication suite for one declared sequence."""
import argparse
import logging

from app.config import config
from app.endpoints.common import add_spec_argument, csv_path, emit, float_list, load, new_report, verdict_of
from app.models.alpha_family import AlphaNormFamily
from app.schemas.report import CheckRecord
from app.services.sequences import equivalence_check, implication_suite, membership_trace
from app.utils.export import write_csv

logger = logging.getLogger(__name__)


def register(subparsers) -> None:
    parser = subparsers.add_parser("converge", help="diagnose convergence of a declared sequence")
    add_spec_argument(parser)
    parser.add_argument("--sequence", required=True, help="sequence id in the spec file")
    parser.add_argument("--alpha", type=float_list, default=config.DEFAULT_ALPHAS)
    parser.add_argument("--t-grid", type=float_list, default=config.DEFAULT_T_GRID)
    parser.add_argument("--tail", type=int, default=config.DEFAULT_TAIL)
    parser.add_argument("--p-max", type=int, default=config.DEFAULT_P_MAX)
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> int:
    spec, digest = load(args)
    antinorm = spec.antinorm()
    sequence = spec.sequence(args.sequence)
    family = AlphaNormFamily.from_antinorm(antinorm)
    parameters = {"sequence": args.sequence, "alpha": sorted(args.alpha), "t_grid": args.t_grid,
                  "tail": args.tail, "p_max": args.p_max}
    report = new_report("converge", digest, parameters)

    equivalence = equivalence_check(antinorm, family, sequence, args.alpha, args.t_grid, args.tail)
    for row in equivalence.rows:
        report.checks.append(CheckRecord(
            check_id=f"sequences.equivalence[alpha={row.alpha}]",
            parameters={"alpha": row.alpha},
            verdict=verdict_of(row.agree),
            witnesses={"fuzzy": row.fuzzy.model_dump(mode="json"), "alpha_norm": row.alpha_norm.model_dump(mode="json")},
        ))

    for alpha in sorted(args.alpha):
        suite = implication_suite(antinorm, sequence, alpha, args.t_grid, args.tail, args.p_max)
        for check in suite.checks:
            report.checks.append(CheckRecord(
                check_id=f"sequences.{check.name}[alpha={alpha}]",
                parameters={"alpha": alpha},
                verdict=verdict_of(check.holds),
                witnesses=check.detail,
            ))

    target = csv_path(args, f"trace_{args.sequence}.csv")
    if target:
        write_csv(target, ["n", "t", "nu"], membership_trace(antinorm, sequence, args.t_grid, args.tail))
    return emit(args, report)
