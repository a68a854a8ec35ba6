"""`alpha-table`: ‖x‖*_α for a list of α, as CSV."""
import argparse
import logging
import sys

from app.config import config
from app.endpoints.common import add_spec_argument, csv_path, emit, finite_or_none, float_list, load, new_report, verdict_of
from app.models.alpha_family import check_alpha
from app.schemas.report import CheckRecord
from app.services.alphacut import alpha_norm
from app.utils.export import format_float, write_csv

logger = logging.getLogger(__name__)


def register(subparsers) -> None:
    parser = subparsers.add_parser("alpha-table", help="tabulate the α-norms of one vector")
    add_spec_argument(parser)
    parser.add_argument("--x", type=float_list, required=True, help="the vector, e.g. 1,0")
    parser.add_argument("--alpha", type=float_list, default=config.DEFAULT_ALPHAS)
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> int:
    spec, digest = load(args)
    antinorm = spec.antinorm()
    x = antinorm.space.coerce(args.x)
    alphas = sorted(check_alpha(a) for a in args.alpha)
    rows = [(a, alpha_norm(antinorm, x, a)) for a in alphas]

    ascending = all(later >= earlier for (_, earlier), (_, later) in zip(rows, rows[1:]))
    target = csv_path(args, "alpha_table.csv")
    if target:
        write_csv(target, ["alpha", "alpha_norm"], rows)
    else:
        sys.stdout.write("alpha,alpha_norm\n")
        for a, value in rows:
            sys.stdout.write(f"{format_float(a)},{format_float(value)}\n")

    if not ascending:
        logger.warning("α-norms are not ascending: %s", rows)
    if not args.out:
        return 0 if ascending else 1
    parameters = {"x": x.tolist(), "alpha": alphas}
    report = new_report("alpha-table", digest, parameters)
    report.checks.append(CheckRecord(
        check_id="alphacut.ascending_family",
        parameters=parameters,
        verdict=verdict_of(ascending),
        witnesses={"alpha_norms": [finite_or_none(v) for _, v in rows]},
    ))
    return emit(args, report)
