import argparse
import logging
import sys
from typing import Optional, Sequence

from app import __version__
from app.config import config
from app.endpoints import COMMANDS

logger = logging.getLogger(__name__)


def configure_logging(level: str = config.LOG_LEVEL) -> None:
    # stderr only: reports and CSV may go to stdout
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter('%(asctime)s - %(name)s - %(levelname)s - %(message)s'))
    root = logging.getLogger()
    root.handlers[:] = [handler]
    root.setLevel(level)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fuzzy-antinorm",
        description="Evaluate fuzzy anti-norms, their α-norm families and the theorems that connect them.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in COMMANDS:
        command.register(subparsers)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Exit codes: 0 every check passed, 1 a mathematical check failed, 2 input or usage error."""
    configure_logging()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    logger.debug("running %s with %s", args.command, vars(args))
    try:
        return args.handler(args)
    except ValueError as exc:
        # domain input errors and pydantic validation errors
        logger.error("%s: %s", args.command, exc)
        return 2
    except Exception:
        logger.exception("unexpected failure in %s", args.command)
        return 2


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
