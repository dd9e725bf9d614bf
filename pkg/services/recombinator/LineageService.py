import re
from typing import List, Mapping, Sequence, Tuple

from pydantic import ValidationError

from exception.exceptions import LineageError, RecombinationError
from models.machine.MachineModels import Machine
from models.machine.RecombinationModels import Lineage, LineageLeaf, LineageNode
from services.recombinator.Recombinator import make_spec, recombine

# lineage := leaf | node
# leaf    := "[" ID "]"
# node    := "[recomb cuts=(" [INT ("," INT)*] ")" lineage+ "]"
ID_PATTERN = r"[A-Za-z0-9_:.\-]+"

_NODE_OPEN = re.compile(r"\s*\[recomb\s+cuts=\(([^)]*)\)")
_LEAF = re.compile(r"\s*\[(" + ID_PATTERN + r")\]")
_CLOSE = re.compile(r"\s*\]")


def format_lineage(lineage: Lineage) -> str:
    if isinstance(lineage, LineageLeaf):
        return f"[{lineage.id}]"
    cuts = ",".join(str(cut) for cut in lineage.cuts)
    children = " ".join(format_lineage(child) for child in lineage.children)
    return f"[recomb cuts=({cuts}) {children}]"


def parse_lineage(text: str) -> Lineage:
    lineage, position = _parse(text, 0)
    if text[position:].strip():
        raise LineageError(f"unexpected text after lineage at offset {position}: {text[position:].strip()!r}")
    return lineage


def _parse(text: str, position: int) -> Tuple[Lineage, int]:
    leaf = _LEAF.match(text, position)
    if leaf:
        return LineageLeaf(id=leaf.group(1)), leaf.end()

    node = _NODE_OPEN.match(text, position)
    if not node:
        raise LineageError(f"expected '[recomb cuts=(...)' or '[id]' at offset {position}")
    cuts = _parse_cuts(node.group(1), position)
    position = node.end()

    children: List[Lineage] = []
    while True:
        close = _CLOSE.match(text, position)
        if close:
            position = close.end()
            break
        if position >= len(text.rstrip()):
            raise LineageError("unterminated recombination node")
        child, position = _parse(text, position)
        children.append(child)

    try:
        return LineageNode(cuts=cuts, children=tuple(children)), position
    except ValidationError as e:
        details = "; ".join(error["msg"] for error in e.errors())
        raise LineageError(f"malformed recombination node: {details}") from e


def _parse_cuts(body: str, position: int) -> Tuple[int, ...]:
    tokens = [token.strip() for token in body.split(",") if token.strip()]
    try:
        return tuple(int(token) for token in tokens)
    except ValueError as e:
        raise LineageError(f"malformed cut list ({body}) at offset {position}") from e


def spec_lineage(ids: Sequence[str], cuts: Sequence[int]) -> Lineage:
    """Flat lineage of one enumerated recombination."""
    if len(ids) == 1 and not cuts:
        return LineageLeaf(id=ids[0])
    return LineageNode(cuts=tuple(cuts), children=tuple(LineageLeaf(id=i) for i in ids))


def evaluate_lineage(lineage: Lineage, registry: Mapping[str, Machine]) -> Machine:
    """Apply recombine bottom-up; leaves resolve through `registry`."""
    if isinstance(lineage, LineageLeaf):
        if lineage.id not in registry:
            raise LineageError(f"unresolved lineage leaf '{lineage.id}'")
        return registry[lineage.id]

    sources = [evaluate_lineage(child, registry) for child in lineage.children]
    try:
        return recombine(make_spec(sources, lineage.cuts))
    except RecombinationError as e:
        raise LineageError(f"malformed recombination node {format_lineage(lineage)}: {e}") from e
