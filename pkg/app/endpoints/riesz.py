"""`riesz`: build a Riesz witness for a declared subspace and verify it independently."""
import argparse
import logging

from app.config import config
from app.endpoints.common import add_sampling_arguments, add_spec_argument, emit, float_list, load, new_report, verdict_of
from app.schemas.report import CheckRecord
from app.services.riesz import riesz_witness
from app.validators.riesz_validators import verify_witness

logger = logging.getLogger(__name__)


def register(subparsers) -> None:
    parser = subparsers.add_parser("riesz", help="construct and verify a Riesz-lemma witness")
    add_spec_argument(parser)
    add_sampling_arguments(parser)
    parser.add_argument("--subspace", required=True, help="subspace id in the spec file")
    parser.add_argument("--alpha", type=float_list, default=[0.5])
    parser.add_argument("--eps", type=float, default=config.DEFAULT_EPSILON)
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> int:
    spec, digest = load(args)
    antinorm = spec.antinorm()
    subspace = spec.subspace(args.subspace)
    parameters = {"subspace": args.subspace, "alpha": sorted(args.alpha), "eps": args.eps,
                  "samples": args.samples, "seed": args.seed}
    report = new_report("riesz", digest, parameters)

    for alpha in sorted(args.alpha):
        witness = riesz_witness(antinorm, alpha, subspace, args.eps)
        checked = verify_witness(antinorm, alpha, args.eps, witness.y, subspace, args.samples, args.seed)
        witness = witness.model_copy(update={"verification_samples": args.samples})
        for check in checked.checks:
            report.checks.append(CheckRecord(
                check_id=f"riesz.{check.axiom}[alpha={alpha}]",
                parameters={"alpha": alpha, "eps": args.eps},
                verdict=verdict_of(check.passed),
                worst_violation=check.worst_violation,
                witnesses={"witness": witness.model_dump(mode="json"), **check.witness},
            ))
    return emit(args, report)
