"""`check-axioms`: t-conorm axioms plus the anti-norm axioms and conditions."""
import argparse
import logging

from app.endpoints.common import add_sampling_arguments, add_spec_argument, axiom_records, emit, load, new_report
from app.validators.antinorm_validators import verify_antinorm_axioms
from app.validators.tconorm_validators import verify_tconorm_axioms

logger = logging.getLogger(__name__)


def register(subparsers) -> None:
    parser = subparsers.add_parser("check-axioms", help="verify the t-conorm and anti-norm axioms on samples")
    add_spec_argument(parser)
    add_sampling_arguments(parser)
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> int:
    spec, digest = load(args)
    antinorm = spec.antinorm()
    parameters = {"samples": args.samples, "seed": args.seed}
    report = new_report("check-axioms", digest, parameters)

    tconorm_report = verify_tconorm_axioms(antinorm.conorm, args.samples, args.seed)
    antinorm_report = verify_antinorm_axioms(antinorm, args.samples, args.seed)
    report.checks.extend(axiom_records("tconorm", tconorm_report, parameters))
    report.checks.extend(axiom_records("antinorm", antinorm_report, parameters))
    return emit(args, report)
