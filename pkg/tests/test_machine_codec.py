import pytest
from hypothesis import given, settings

from exception.exceptions import ActionCodeError, MachineNameError, RuleListError
from models.machine.MachineModels import Machine, Move
from services.tm_core.MachineCodec import (
    decode_action,
    decode_name,
    diff_machines,
    encode_action,
    encode_name,
    format_rules,
    parse_rules,
)
from tests.conftest import ROW0_BARE, ROW0_NAME, WINNER_LISTING, WINNER_NAME, machines


def test_decode_winner_rules():
    machine = decode_name(WINNER_NAME)
    assert machine.rule_count == 9
    assert decode_action(machine.rule(0)) == (1, 1, Move.RIGHT)
    assert decode_action(machine.rule(1)) == (2, 1, Move.LEFT)
    assert decode_action(machine.rule(3)) == (0, 0, Move.STAY)
    assert decode_action(machine.rule(9)) == (0, 0, Move.LEFT)
    assert machine.rule(8) is None


def test_decode_empty_machine():
    machine = decode_name("(0)")
    assert machine == Machine.empty()
    assert encode_name(machine) == "(0)"


def test_bare_and_counted_forms_agree():
    assert decode_name(ROW0_BARE) == decode_name(ROW0_NAME)
    assert encode_name(decode_name(ROW0_BARE)) == ROW0_NAME


def test_encode_reproduces_published_name():
    assert encode_name(decode_name(WINNER_NAME)) == WINNER_NAME


@pytest.mark.parametrize("text", [
    "9, 0, 11, 1, 15, 2, 17, 3, 1, 4, 23, 5, 24, 6, 3, 7, 21, 9, 0",
    "(9,0,11,1,15,2,17,3,1,4,23,5,24,6,3,7,21,9,0,)",
    "  ( 9 0 11 1 15 2 17 3 1 4 23 5 24 6 3 7 21 9 0 )) ",
])
def test_tolerated_formatting(text):
    assert encode_name(decode_name(text)) == WINNER_NAME


@pytest.mark.parametrize("text, message, position", [
    ("(2, 0, 11, 0, 3)", "duplicate rule index 0", 4),
    ("(3, 0, 11)", "rule count 3", 1),
    ("(1, 10, 5)", "rule index 10", 2),
    ("(1, 0, 30)", "action code 30", 3),
    ("(2, 3, 1, 2, 1)", "not ascending", 4),
    ("(1, 0, x)", "malformed integer", 3),
])
def test_malformed_names_are_rejected(text, message, position):
    with pytest.raises(MachineNameError, match=message) as info:
        decode_name(text)
    assert info.value.position == position


def test_decode_action_examples():
    assert decode_action(11) == (1, 1, Move.RIGHT)
    assert decode_action(0) == (0, 0, Move.LEFT)
    assert decode_action(1) == (0, 0, Move.STAY)
    assert decode_action(24) == (4, 0, Move.LEFT)


def test_decode_action_is_a_bijection():
    n = 5
    actions = {decode_action(code, n) for code in range(6 * n)}
    assert len(actions) == 6 * n
    assert {(a.next_state, a.write, a.move) for a in actions} == {
        (q, w, m) for q in range(n) for w in (0, 1) for m in Move
    }
    for code in range(6 * n):
        assert encode_action(*decode_action(code, n), n=n) == code


@pytest.mark.parametrize("code", [-1, 30])
def test_decode_action_out_of_range(code):
    with pytest.raises(ActionCodeError):
        decode_action(code, 5)


@settings(max_examples=10_000, deadline=None)
@given(machines())
def test_codec_round_trip(machine):
    name = encode_name(machine)
    assert decode_name(name) == machine
    assert encode_name(decode_name(name)) == name


@settings(max_examples=200, deadline=None)
@given(machines(n=3))
def test_codec_round_trip_other_state_counts(machine):
    assert decode_name(encode_name(machine), n=3) == machine


def test_format_rules_matches_listing():
    assert format_rules(decode_name(WINNER_NAME)) == WINNER_LISTING


def test_parse_rules_inverts_format_rules():
    assert encode_name(parse_rules(WINNER_LISTING)) == WINNER_NAME


def test_parse_rules_reports_line_of_duplicate():
    text = "# winner fragment\n(0, 0)->(1, 1, 2)\n(0, 0)->(2, 1, 0)\n"
    with pytest.raises(RuleListError) as info:
        parse_rules(text)
    assert info.value.line == 3


def test_parse_rules_rejects_unknown_state():
    with pytest.raises(RuleListError, match="line 1"):
        parse_rules("(0, 0)->(7, 1, 2)")


def test_diff_winner_against_row_zero():
    assert diff_machines(decode_name(ROW0_NAME), decode_name(WINNER_NAME)) == [(3, 11, 1)]
