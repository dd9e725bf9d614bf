import csv
import io
import logging
import re
from pathlib import Path
from typing import Dict, Iterable, List

from pydantic import ValidationError

from exception.exceptions import PoolLoadError
from models.catalog.CatalogEntry import CatalogEntry
from models.machine.MachineModels import DEFAULT_STATES, Machine
from pool_storage.BuiltinCatalog import builtin_catalog, golden_recombinations
from pool_storage.Utility import machine_registry, parse_count

logger = logging.getLogger(__name__)

# id, (name tuple)[, attribution[, ones[, steps]]]
_POOL_LINE = re.compile(
    r"^\s*(?P<id>[^,\s]+)\s*,\s*(?P<name>[({\[][^)}\]]*[)}\]]+)\s*(?:,(?P<rest>.*))?$"
)


def parse_pool(text: str, n: int = DEFAULT_STATES) -> List[CatalogEntry]:
    """Parse pool-file text; blank lines and '#' comments are skipped."""
    entries = []
    seen = set()
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        match = _POOL_LINE.match(line)
        if not match:
            raise PoolLoadError(f"expected 'id, (name)[, attribution[, ones[, steps]]]', got {line!r}", line_number)

        fields = []
        if match.group("rest"):
            fields = next(csv.reader([match.group("rest")], skipinitialspace=True))
        if len(fields) > 3:
            raise PoolLoadError(f"too many fields after the machine name: {fields}", line_number)
        fields += [""] * (3 - len(fields))
        attribution, ones, steps = fields

        try:
            entry = CatalogEntry(
                id=match.group("id"),
                name=match.group("name"),
                attribution=attribution.strip() or None,
                expected_ones=parse_count(ones),
                expected_steps=parse_count(steps),
                n=n,
            )
        except (ValidationError, ValueError) as e:
            raise PoolLoadError(f"invalid entry '{match.group('id')}': {e}", line_number) from e

        if entry.id in seen:
            raise PoolLoadError(f"duplicate id '{entry.id}'", line_number)
        seen.add(entry.id)
        entries.append(entry)
    return entries


def load_pool(path, n: int = DEFAULT_STATES) -> List[CatalogEntry]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise PoolLoadError(f"cannot read pool file '{path}': {e}") from e
    entries = parse_pool(text, n)
    logger.info(f"Loaded {len(entries)} machines from {path}")
    return entries


def format_pool(entries: Iterable[CatalogEntry]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    buffer.write("# id, name, attribution, ones, steps\n")
    for entry in entries:
        buffer.write(f"{entry.id}, {entry.name}, ")
        writer.writerow([
            entry.attribution or "",
            "" if entry.expected_ones is None else entry.expected_ones,
            "" if entry.expected_steps is None else entry.expected_steps,
        ])
    return buffer.getvalue()


def export_pool(entries: Iterable[CatalogEntry], path) -> Path:
    path = Path(path)
    try:
        path.write_text(format_pool(entries), encoding="utf-8")
    except OSError as e:
        raise PoolLoadError(f"cannot write pool file '{path}': {e}") from e
    logger.info(f"Pool exported to {path}")
    return path


def registry_for(pool_path=None, n: int = DEFAULT_STATES) -> Dict[str, Machine]:
    """Builtin seeds and recombinations, plus the machines of an optional pool file."""
    entries = builtin_catalog() + golden_recombinations() if n == DEFAULT_STATES else []
    if pool_path:
        entries += load_pool(pool_path, n)
    return machine_registry(entries)
