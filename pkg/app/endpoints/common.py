"""Helpers shared by the CLI commands: argument types, report assembly, output."""
import argparse
import logging
import math
import sys
from pathlib import Path
from typing import Any, Optional

from app import __version__
from app.config import config
from app.schemas.report import AxiomReport, CheckRecord, RunReport
from app.schemas.spec_file import SpaceSpecFile, load_spec_file
from app.utils.export import write_text

logger = logging.getLogger(__name__)


def float_list(text: str) -> list[float]:
    """argparse type for "0.1,0.5,0.9"."""
    try:
        values = [float(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from exc
    if not values:
        raise argparse.ArgumentTypeError("expected at least one number")
    return values


def add_spec_argument(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("spec", help="path to the JSON spec file")
    parser.add_argument("--out", help="write the run report here instead of stdout")
    parser.add_argument("--csv", help="directory for CSV side outputs")


def add_sampling_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--samples", type=int, default=config.DEFAULT_SAMPLES)
    parser.add_argument("--seed", type=int, default=config.DEFAULT_SEED)


def load(args: argparse.Namespace) -> tuple[SpaceSpecFile, str]:
    return load_spec_file(args.spec)


def verdict_of(passed: bool, required: bool = True) -> str:
    if passed:
        return "pass"
    return "fail" if required else "flagged"


def finite_or_none(value: float) -> Optional[float]:
    return value if math.isfinite(value) else None


def axiom_records(prefix: str, report: AxiomReport, parameters: dict[str, Any]) -> list[CheckRecord]:
    return [
        CheckRecord(
            check_id=f"{prefix}.{check.axiom}",
            parameters=parameters,
            verdict=verdict_of(check.passed, check.required),
            worst_violation=check.worst_violation,
            witnesses=check.witness,
        )
        for check in report.checks
    ]


def new_report(command: str, digest: str, parameters: dict[str, Any]) -> RunReport:
    return RunReport(tool_version=__version__, command=command, input_digest=digest, parameters=parameters)


def emit(args: argparse.Namespace, report: RunReport) -> int:
    """Write the report and map it to an exit code: 0 all pass, 1 a check failed."""
    text = report.model_dump_json(indent=2) + "\n"
    if args.out:
        write_text(args.out, text)
        logger.info("report written to %s", args.out)
    else:
        sys.stdout.write(text)
    failed = [c.check_id for c in report.checks if c.verdict == "fail"]
    if failed:
        logger.warning("%s: %d failed checks: %s", report.command, len(failed), failed)
        return 1
    return 0


def csv_path(args: argparse.Namespace, name: str) -> Optional[Path]:
    return Path(args.csv) / name if args.csv else None
