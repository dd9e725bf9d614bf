import logging
from typing import NamedTuple, Optional, Tuple

import numpy as np
from numba import njit

from config import config
from exception.exceptions import OutcomeNotHaltedError
from models.machine.MachineModels import UNDEFINED, Machine
from models.machine.RunModels import RunOutcome, RunStatus
from services.simulator.Tape import Tape

logger = logging.getLogger(__name__)


class RadoReport(NamedTuple):
    rado_steps: int
    rado_ones: int


def _split_table(machine: Machine) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Pre-decode action codes into next-state, write and head-delta arrays (next-state -1 = no rule)."""
    table = machine.as_array()
    defined = table != UNDEFINED
    next_states = np.where(defined, table // 6, -1).astype(np.int64)
    writes = np.where(defined, (table % 6) // 3, 0).astype(np.int8)
    deltas = np.where(defined, table % 3 - 1, 0).astype(np.int64)
    return next_states, writes, deltas


@njit(cache=True)
def _run_kernel(next_states, writes, deltas, cap, capacity):
    left = np.zeros(capacity, dtype=np.int8)
    right = np.zeros(capacity, dtype=np.int8)
    state = 0
    head = 0
    steps = 0
    leftmost = 0
    rightmost = 0
    halted = False
    while True:
        if head >= 0:
            symbol = right[head]
        else:
            symbol = left[-head - 1]
        rule = 2 * state + symbol
        target = next_states[rule]
        if target < 0:
            halted = True
            break
        if steps >= cap:
            break
        if head >= 0:
            right[head] = writes[rule]
        else:
            left[-head - 1] = writes[rule]
        head += deltas[rule]
        if head >= 0:
            if head >= right.shape[0]:
                grown = np.zeros(right.shape[0] * 2, dtype=np.int8)
                grown[: right.shape[0]] = right
                right = grown
            if head > rightmost:
                rightmost = head
        else:
            if -head - 1 >= left.shape[0]:
                grown = np.zeros(left.shape[0] * 2, dtype=np.int8)
                grown[: left.shape[0]] = left
                left = grown
            if head < leftmost:
                leftmost = head
        state = target
        steps += 1
    return halted, steps, head, leftmost, rightmost, left, right


def count_ones(tape: Tape) -> int:
    """Number of 1-cells within the visited extent."""
    ones = np.count_nonzero(tape.right[: tape.rightmost + 1])
    if tape.leftmost < 0:
        ones += np.count_nonzero(tape.left[: -tape.leftmost])
    return int(ones)


def run_with_tape(machine: Machine, cap: Optional[int] = None) -> Tuple[RunOutcome, Tape]:
    """
    Run `machine` from state 0 on the blank tape until it reaches a missing rule
    or has executed `cap` transitions. The halting lookup is not counted as a step.
    """
    cap = config.step_limit if cap is None else cap
    if cap < 0:
        raise ValueError(f"step limit must be nonnegative, got {cap}")

    next_states, writes, deltas = _split_table(machine)
    halted, steps, head, leftmost, rightmost, left, right = _run_kernel(
        next_states, writes, deltas, np.int64(cap), config.tape_capacity
    )
    tape = Tape(left=left, right=right, head=int(head), leftmost=int(leftmost), rightmost=int(rightmost))
    outcome = RunOutcome(
        status=RunStatus.HALTED if halted else RunStatus.STEP_LIMIT_EXCEEDED,
        steps=int(steps),
        ones=count_ones(tape) if halted else None,
        leftmost=tape.leftmost,
        rightmost=tape.rightmost,
        head=tape.head,
    )
    logger.debug(f"Run finished: {outcome.status.value} after {outcome.steps} steps, extent {outcome.extent}")
    return outcome, tape


def run(machine: Machine, cap: Optional[int] = None) -> RunOutcome:
    outcome, _ = run_with_tape(machine, cap)
    return outcome


def rado_report(outcome: RunOutcome) -> RadoReport:
    """
    Counts under Radó's halting-state model: the missing rule is replaced by a
    halting transition that writes 1, adding one step and one symbol.
    """
    if not outcome.halted:
        raise OutcomeNotHaltedError(f"cannot convert a {outcome.status.value} outcome after {outcome.steps} steps")
    return RadoReport(outcome.steps + 1, outcome.ones + 1)
