import re
from typing import Dict, Iterable, Mapping, Optional

from exception.exceptions import UnknownMachineError
from models.catalog.CatalogEntry import CatalogEntry
from models.machine.MachineModels import DEFAULT_STATES, Machine
from services.tm_core.MachineCodec import decode_name

_COUNT = re.compile(r"^\d{1,3}([._,]\d{3})+$|^\d+$")


def parse_count(text: str) -> Optional[int]:
    """Parse '70.740.809', '70,740,809', '70_740_809' or '70740809'; empty means absent."""
    text = text.strip()
    if not text or text == "-":
        return None
    if not _COUNT.match(text):
        raise ValueError(f"malformed count {text!r}")
    return int(re.sub(r"[._,]", "", text))


def machine_registry(entries: Iterable[CatalogEntry]) -> Dict[str, Machine]:
    """Map entry ids to decoded machines."""
    return {entry.id: entry.machine for entry in entries}


def resolve_machine(token: str, registry: Mapping[str, Machine], n: int = DEFAULT_STATES) -> Machine:
    """A registry id, or failing that a literal machine name."""
    token = token.strip()
    if token in registry:
        return registry[token]
    if token and (token[0] in "({[" or token[0].isdigit()):
        return decode_name(token, n)
    raise UnknownMachineError(f"'{token}' is neither a known machine id nor a machine name")

