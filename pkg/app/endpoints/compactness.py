"""`compactness`: the unit anti-ball identity and the bounded/closed probe."""
import argparse
import logging
from typing import Optional

from app.config import config
from app.endpoints.common import add_sampling_arguments, add_spec_argument, emit, finite_or_none, float_list, load, new_report, verdict_of
from app.schemas.report import CheckRecord
from app.services.alphacut import unit_anti_ball_identity
from app.services.riesz import compactness_probe

logger = logging.getLogger(__name__)


def register(subparsers) -> None:
    parser = subparsers.add_parser("compactness", help="probe the unit anti-ball {x : ν(x, 1) <= 1 - α}")
    add_spec_argument(parser)
    add_sampling_arguments(parser)
    parser.add_argument("--alpha", type=float_list, default=config.DEFAULT_ALPHAS)
    parser.set_defaults(handler=handle)


def _flag_non_strict(verdict: str, strictness_witness: Optional[float]) -> str:
    # a pass on a non-strict profile is reported, not trusted
    return "flagged" if verdict == "pass" and strictness_witness is not None else verdict


def handle(args: argparse.Namespace) -> int:
    spec, digest = load(args)
    antinorm = spec.antinorm()
    parameters = {"alpha": sorted(args.alpha), "samples": args.samples, "seed": args.seed}
    report = new_report("compactness", digest, parameters)

    for alpha in sorted(args.alpha):
        identity = unit_anti_ball_identity(antinorm, alpha, args.samples, args.seed)
        report.checks.append(CheckRecord(
            check_id=f"alphacut.unit_anti_ball[alpha={alpha}]",
            parameters={"alpha": alpha},
            verdict=_flag_non_strict(verdict_of(identity.passed), identity.strictness_witness),
            worst_violation=abs(identity.bounding_radius - identity.expected_radius),
            witnesses=identity.model_dump(mode="json"),
        ))
        probe = compactness_probe(antinorm, alpha, args.samples, args.seed)
        # closedness depends on the profile (the step ball is open), so it is flagged, not failed
        verdict = verdict_of(probe.closed, required=False) if probe.bounded else "fail"
        verdict = _flag_non_strict(verdict, probe.strictness_witness)
        report.checks.append(CheckRecord(
            check_id=f"riesz.compactness[alpha={alpha}]",
            parameters={"alpha": alpha},
            verdict=verdict,
            worst_violation=finite_or_none(probe.max_inside_radius - probe.expected_radius),
            witnesses=probe.model_dump(mode="json"),
        ))
    return emit(args, report)
