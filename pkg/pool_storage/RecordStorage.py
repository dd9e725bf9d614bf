import csv
import json
import logging
from pathlib import Path
from typing import Iterable, List

from exception.exceptions import SearchOutputError
from models.search.SearchModels import SearchRecord

logger = logging.getLogger(__name__)

CSV_COLUMNS = list(SearchRecord.model_fields)


def _write_jsonl(records: List[SearchRecord], path: Path):
    with path.open("w", encoding="utf-8", newline="\n") as handle:
        for record in records:
            handle.write(record.model_dump_json() + "\n")


def _write_csv(records: List[SearchRecord], path: Path):
    with path.open("w", encoding="utf-8", newline="") as handle:
        writer = csv.DictWriter(handle, fieldnames=CSV_COLUMNS, lineterminator="\n")
        writer.writeheader()
        for record in records:
            row = record.model_dump(mode="json")
            writer.writerow({key: "" if value is None else value for key, value in row.items()})


def write_records(records: Iterable[SearchRecord], path, csv_mirror: bool = False) -> Path:
    """Write one record per line; the format follows the extension (.csv, otherwise JSON lines)."""
    path = Path(path)
    records = list(records)
    try:
        if path.suffix.lower() == ".csv":
            _write_csv(records, path)
        else:
            _write_jsonl(records, path)
    except OSError as e:
        raise SearchOutputError(f"cannot write search records to '{path}': {e}") from e
    logger.info(f"Wrote {len(records)} records to {path}")

    # The mirror is a convenience copy; losing it only warrants a warning.
    if csv_mirror and path.suffix.lower() != ".csv":
        mirror = path.with_suffix(".csv")
        try:
            _write_csv(records, mirror)
        except OSError as e:
            logger.warning(f"Non-critical error: CSV mirror {mirror} not written. Reason: {e}")
    return path


def read_records(path) -> List[SearchRecord]:
    path = Path(path)
    try:
        with path.open("r", encoding="utf-8", newline="") as handle:
            if path.suffix.lower() == ".csv":
                rows = list(csv.DictReader(handle))
                return [
                    SearchRecord.model_validate({k: v for k, v in row.items() if v != ""})
                    for row in rows
                ]
            return [SearchRecord.model_validate(json.loads(line)) for line in handle if line.strip()]
    except OSError as e:
        raise SearchOutputError(f"cannot read search records from '{path}': {e}") from e
