"""`roundtrip`: ν′ = ν on a seeded grid."""
import argparse
import logging

from app.config import config
from app.core.tolerances import ROUND_TRIP_ATOL
from app.endpoints.common import add_spec_argument, csv_path, emit, load, new_report, verdict_of
from app.schemas.report import CheckRecord
from app.services.alphacut import round_trip_error
from app.utils.export import write_csv

logger = logging.getLogger(__name__)


def register(subparsers) -> None:
    parser = subparsers.add_parser("roundtrip", help="reconstruct ν from its α-norms and compare")
    add_spec_argument(parser)
    parser.add_argument("--x-samples", type=int, default=config.DEFAULT_GRID_SIZE)
    parser.add_argument("--t-samples", type=int, default=config.DEFAULT_GRID_SIZE)
    parser.add_argument("--seed", type=int, default=config.DEFAULT_SEED)
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> int:
    spec, digest = load(args)
    antinorm = spec.antinorm()
    result = round_trip_error(antinorm, args.x_samples, args.t_samples, args.seed)

    target = csv_path(args, "roundtrip.csv")
    if target:
        write_csv(
            target,
            ["x_id", "t", "nu", "nu_prime", "error"],
            ((p.x_id, p.t, p.nu, p.nu_prime, p.error) for p in result.points),
        )

    parameters = {"x_samples": args.x_samples, "t_samples": args.t_samples, "seed": args.seed,
                  "tolerance": ROUND_TRIP_ATOL}
    report = new_report("roundtrip", digest, parameters)
    worst = max(result.points, key=lambda p: p.error, default=None)
    report.checks.append(CheckRecord(
        check_id="alphacut.round_trip",
        parameters=parameters,
        verdict=verdict_of(result.sup_error <= ROUND_TRIP_ATOL, required=result.caveat is None),
        worst_violation=result.sup_error,
        witnesses={} if worst is None else {"x": worst.x, "t": worst.t, "nu": worst.nu, "nu_prime": worst.nu_prime,
                                              "caveat": result.caveat},
    ))
    return emit(args, report)
