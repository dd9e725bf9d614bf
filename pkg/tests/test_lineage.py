import pytest

from exception.exceptions import LineageError
from models.machine.RecombinationModels import LineageLeaf, LineageNode
from services.recombinator.LineageService import evaluate_lineage, format_lineage, parse_lineage, spec_lineage
from services.tm_core.MachineCodec import encode_name
from tests.conftest import RECOMB_4096_B

FLAT = "[recomb cuts=(7,9) [row:5] [row:2] [row:1]]"
NESTED = "[recomb cuts=(9) [recomb cuts=(7) [row:5] [row:2]] [row:1]]"


def test_parse_flat_lineage():
    lineage = parse_lineage(FLAT)
    assert lineage == LineageNode(
        cuts=(7, 9), children=(LineageLeaf(id="row:5"), LineageLeaf(id="row:2"), LineageLeaf(id="row:1"))
    )
    assert format_lineage(lineage) == FLAT


def test_parse_tolerates_whitespace():
    assert format_lineage(parse_lineage("  [recomb  cuts=( 9 )\n [recomb cuts=(7) [row:5][row:2] ] [row:1] ] ")) == NESTED


def test_single_leaf_is_the_machine_itself(registry):
    assert evaluate_lineage(parse_lineage("[row:3]"), registry) == registry["row:3"]


def test_node_of_identical_children_is_identity(registry):
    assert evaluate_lineage(parse_lineage("[recomb cuts=(5) [row:0] [row:0]]"), registry) == registry["row:0"]


def test_nested_lineage_equals_flat_lineage(registry):
    flat = evaluate_lineage(parse_lineage(FLAT), registry)
    nested = evaluate_lineage(parse_lineage(NESTED), registry)
    assert flat == nested
    assert encode_name(nested) == RECOMB_4096_B


def test_spec_lineage():
    assert format_lineage(spec_lineage(["row:5", "row:2", "row:1"], [7, 9])) == FLAT
    assert spec_lineage(["row:0"], []) == LineageLeaf(id="row:0")


def test_unresolved_leaf(registry):
    with pytest.raises(LineageError, match="row:99"):
        evaluate_lineage(parse_lineage("[recomb cuts=(3) [row:0] [row:99]]"), registry)


def test_cut_outside_rule_range(registry):
    with pytest.raises(LineageError):
        evaluate_lineage(parse_lineage("[recomb cuts=(12) [row:1] [row:2]]"), registry)


@pytest.mark.parametrize("text", [
    "",
    "row:1",
    "[row:1",
    "[recomb cuts=(7) [row:5]]",
    "[recomb cuts=(a) [row:5] [row:2]]",
    "[recomb cuts=(7) [row:5] [row:2]",
    "[recomb cuts=(7) [row:5] [row:2]] [row:3]",
    "[recomb [row:5]]",
])
def test_malformed_lineage(text):
    with pytest.raises(LineageError):
        parse_lineage(text)
