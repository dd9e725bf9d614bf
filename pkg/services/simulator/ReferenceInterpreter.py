from collections import defaultdict

from models.machine.MachineModels import Machine
from models.machine.RunModels import RunOutcome, RunStatus
from services.tm_core.MachineCodec import decode_action


def reference_run(machine: Machine, cap: int) -> RunOutcome:
    """Dictionary-tape interpreter; slow, kept as the oracle for the numba kernel."""
    tape = defaultdict(int)
    state, head, steps = 0, 0, 0
    leftmost = rightmost = 0
    while True:
        code = machine.rule(2 * state + tape[head])
        if code is None:
            ones = sum(1 for symbol in tape.values() if symbol == 1)
            return RunOutcome(
                status=RunStatus.HALTED, steps=steps, ones=ones,
                leftmost=leftmost, rightmost=rightmost, head=head,
            )
        if steps >= cap:
            return RunOutcome(
                status=RunStatus.STEP_LIMIT_EXCEEDED, steps=steps,
                leftmost=leftmost, rightmost=rightmost, head=head,
            )
        action = decode_action(code, machine.n)
        tape[head] = action.write
        head += action.move.delta
        leftmost = min(leftmost, head)
        rightmost = max(rightmost, head)
        state = action.next_state
        steps += 1
