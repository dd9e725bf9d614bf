import re
from typing import List, Optional, Tuple

from exception.exceptions import ActionCodeError, MachineNameError, RuleListError
from models.machine.MachineModels import (
    DEFAULT_STATES,
    UNDEFINED,
    Action,
    Machine,
    Move,
    code_count_for,
    rule_count_for,
)


_INTEGER = re.compile(r"^[+-]?\d+$")
_SEPARATORS = re.compile(r"[,\s]+")
_RULE_LINE = re.compile(
    r"^\(\s*(\d+)\s*,\s*([01])\s*\)\s*->\s*\(\s*(\d+)\s*,\s*([01])\s*,\s*([012LSR])\s*\)$"
)
_MOVE_LETTERS = {"L": Move.LEFT, "S": Move.STAY, "R": Move.RIGHT}


def decode_action(code: int, n: int = DEFAULT_STATES) -> Action:
    """
    Split an action code into (next state, written symbol, move).

    code = 6*next_state + 3*write + move, move being 0 Left, 1 Stay, 2 Right.
    """
    if not 0 <= code < code_count_for(n):
        raise ActionCodeError(f"action code {code} is outside [0, {code_count_for(n)}) for {n} states")
    next_state, rest = divmod(code, 6)
    write, move = divmod(rest, 3)
    return Action(next_state, write, Move(move))


def encode_action(next_state: int, write: int, move: Move, n: int = DEFAULT_STATES) -> int:
    if not 0 <= next_state < n:
        raise ActionCodeError(f"next state {next_state} is outside [0, {n})")
    if write not in (0, 1):
        raise ActionCodeError(f"written symbol must be 0 or 1, got {write}")
    return 6 * next_state + 3 * write + Move(move).value


def _tokenize(text: str) -> List[int]:
    body = text.strip().lstrip("({[").rstrip(")}]").strip()
    values = []
    for position, token in enumerate((t for t in _SEPARATORS.split(body) if t), start=1):
        if not _INTEGER.match(token):
            raise MachineNameError(f"malformed integer {token!r}", position)
        values.append(int(token))
    return values


def decode_name(text: str, n: int = DEFAULT_STATES) -> Machine:
    """
    Decode a machine name into a Machine.

    Accepts the counted form "(r, i1, c1, ..., ir, cr)" with a leading rule count
    (odd length) as well as the bare pair list (even length).
    """
    values = _tokenize(text)
    offset = 1
    if len(values) % 2 == 1:
        declared = values[0]
        pairs = values[1:]
        if declared != len(pairs) // 2:
            raise MachineNameError(
                f"rule count {declared} does not match the {len(pairs) // 2} listed pairs", 1
            )
        offset = 2
    else:
        pairs = values

    table = [UNDEFINED] * rule_count_for(n)
    previous = -1
    for k in range(0, len(pairs), 2):
        index, code = pairs[k], pairs[k + 1]
        position = offset + k
        if not 0 <= index < rule_count_for(n):
            raise MachineNameError(f"rule index {index} is outside [0, {rule_count_for(n)})", position)
        if not 0 <= code < code_count_for(n):
            raise MachineNameError(f"action code {code} is outside [0, {code_count_for(n)})", position + 1)
        if index == previous:
            raise MachineNameError(f"duplicate rule index {index}", position)
        if index < previous:
            raise MachineNameError(f"rule index {index} is not ascending after {previous}", position)
        table[index] = code
        previous = index

    return Machine(n=n, table=tuple(table))


def encode_name(machine: Machine) -> str:
    """Canonical counted name: leading rule count, ascending indices."""
    values = [machine.rule_count]
    for index, code in machine.defined_rules():
        values.extend((index, code))
    return "(" + ", ".join(str(v) for v in values) + ")"


def canonical_name(text: str, n: int = DEFAULT_STATES) -> str:
    return encode_name(decode_name(text, n))


def format_rules(machine: Machine) -> str:
    """Rule listing, one "(state, read)->(next, write, move)" line per defined rule."""
    lines = []
    for index, code in machine.defined_rules():
        state, read = divmod(index, 2)
        action = decode_action(code, machine.n)
        lines.append(f"({state}, {read})->({action.next_state}, {action.write}, {action.move.value})")
    return "\n".join(lines)


def parse_rules(text: str, n: int = DEFAULT_STATES) -> Machine:
    rules = {}
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        match = _RULE_LINE.match(line)
        if not match:
            raise RuleListError(f"cannot parse rule {line!r}", line_number)
        state, read, next_state, write, move = match.groups()
        state, read = int(state), int(read)
        if not 0 <= state < n:
            raise RuleListError(f"state {state} is outside [0, {n})", line_number)
        index = 2 * state + read
        if index in rules:
            raise RuleListError(f"duplicate rule for ({state}, {read})", line_number)
        move_value = _MOVE_LETTERS[move] if move in _MOVE_LETTERS else Move(int(move))
        try:
            rules[index] = encode_action(int(next_state), int(write), move_value, n)
        except ActionCodeError as e:
            raise RuleListError(str(e), line_number) from e
    return Machine.from_rules(rules, n)


def diff_machines(a: Machine, b: Machine) -> List[Tuple[int, Optional[int], Optional[int]]]:
    """Rule indices where two machines disagree, with each side's code (None when undefined)."""
    if a.n != b.n:
        raise ValueError(f"cannot compare a {a.n}-state machine with a {b.n}-state machine")
    return [(i, a.rule(i), b.rule(i)) for i in range(rule_count_for(a.n)) if a.table[i] != b.table[i]]
