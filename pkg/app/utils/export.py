"""Machine-readable outputs: CSV tables and the digest used in run reports."""
import csv
import hashlib
import logging
from pathlib import Path
from typing import Iterable, Sequence

logger = logging.getLogger(__name__)


def sha256_digest(data: bytes) -> str:
    return "sha256:" + hashlib.sha256(data).hexdigest()


def format_float(value: float) -> str:
    # repr is the shortest round-tripping form, stable across runs
    return repr(float(value))


def write_csv(path: str | Path, header: Sequence[str], rows: Iterable[Sequence]) -> Path:
    """Write one CSV table. Floats are written with `format_float`."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    count = 0
    with path.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([format_float(v) if isinstance(v, float) else v for v in row])
            count += 1
    logger.info("wrote %d rows to %s", count, path)
    return path


def write_text(path: str | Path, text: str) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
    return path
