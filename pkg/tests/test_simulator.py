from itertools import product

import pytest
from hypothesis import given, settings

from config import config
from exception.exceptions import OutcomeNotHaltedError
from models.machine.MachineModels import UNDEFINED, Machine
from models.machine.RunModels import RunOutcome, RunStatus
from pool_storage.BuiltinCatalog import builtin_catalog
from services.simulator.ReferenceInterpreter import reference_run
from services.simulator.Tape import Tape
from services.simulator.TuringSimulator import count_ones, rado_report, run, run_with_tape
from tests.conftest import machines

# (0, 0)->(0, 1, R): writes ones forever
SELF_LOOP = Machine.from_rules({0: 5})
# (0, 0)->(1, 1, R), then no rule for (1, 0)
ONE_RULE = Machine.from_rules({0: 11})


def test_empty_machine_halts_immediately():
    outcome = run(Machine.empty(), 1000)
    assert outcome.status == RunStatus.HALTED
    assert outcome.steps == 0
    assert outcome.ones == 0


def test_empty_machine_halts_under_zero_cap():
    assert run(Machine.empty(), 0).halted


def test_self_loop_hits_the_cap():
    outcome = run(SELF_LOOP, 1000)
    assert outcome.status == RunStatus.STEP_LIMIT_EXCEEDED
    assert outcome.steps == 1000
    assert outcome.ones is None


def test_single_rule_machine():
    outcome = run(ONE_RULE, 1000)
    assert outcome.halted
    assert (outcome.steps, outcome.ones) == (1, 1)
    assert (outcome.leftmost, outcome.rightmost, outcome.head) == (0, 1, 1)


def test_negative_cap_is_rejected():
    with pytest.raises(ValueError):
        run(ONE_RULE, -1)


def test_default_cap_comes_from_config(monkeypatch):
    monkeypatch.setattr(config, "step_limit", 777)
    assert run(SELF_LOOP).steps == 777


def test_schult_machine():
    outcome = run(builtin_catalog()[8].machine, 1_000_000)
    assert outcome.halted
    assert (outcome.ones, outcome.steps) == (501, 134_466)


def test_count_ones():
    assert count_ones(Tape.from_cells({-1: 1, 0: 0, 1: 1})) == 2
    assert count_ones(Tape()) == 0


def test_count_ones_matches_tape_cells():
    _, tape = run_with_tape(builtin_catalog()[8].machine, 1_000_000)
    assert count_ones(tape) == sum(tape.cells().values()) == 501


def test_tape_grows_past_initial_capacity():
    tape = Tape(capacity=4)
    tape.write(-10, 1)
    tape.write(37, 1)
    assert tape.read(-10) == tape.read(37) == 1
    assert tape.read(500) == 0
    assert (tape.leftmost, tape.rightmost) == (-10, 37)
    assert count_ones(tape) == 2


def test_rado_report():
    assert tuple(rado_report(run(ONE_RULE, 10))) == (2, 2)
    assert tuple(rado_report(run(Machine.empty(), 10))) == (1, 1)
    outcome = RunOutcome(status=RunStatus.HALTED, steps=47_176_869, ones=4097, leftmost=-12_000, rightmost=10)
    assert tuple(rado_report(outcome)) == (47_176_870, 4098)


def test_rado_report_rejects_unhalted_runs():
    with pytest.raises(OutcomeNotHaltedError):
        rado_report(run(SELF_LOOP, 10))


@pytest.mark.parametrize("row", [6, 7, 8])
def test_cap_monotonicity(row):
    machine = builtin_catalog()[row].machine
    steps = builtin_catalog()[row].expected_steps
    at_cap = run(machine, steps)
    assert at_cap.halted and at_cap.steps == steps
    assert run(machine, steps + 1000) == at_cap
    below = run(machine, steps - 1)
    assert below.status == RunStatus.STEP_LIMIT_EXCEEDED
    assert below.steps == steps - 1


def test_all_one_state_machines_match_reference():
    for table in product(range(UNDEFINED, 6), repeat=2):
        machine = Machine(n=1, table=table)
        assert run(machine, 1000) == reference_run(machine, 1000), table


@settings(max_examples=300, deadline=None)
@given(machines(n=2))
def test_two_state_machines_match_reference(machine):
    assert run(machine, 500) == reference_run(machine, 500)


@settings(max_examples=100, deadline=None)
@given(machines())
def test_extent_is_bounded_by_steps(machine):
    outcome = run(machine, 2000)
    assert outcome.extent <= outcome.steps + 1
    assert outcome.leftmost <= outcome.head <= outcome.rightmost


@pytest.mark.slow
@pytest.mark.parametrize("row", range(9))
def test_seed_rows_reproduce_published_counts(row):
    entry = builtin_catalog()[row]
    outcome = run(entry.machine, 100_000_000)
    assert outcome.halted
    assert (outcome.ones, outcome.steps) == (entry.expected_ones, entry.expected_steps)


@pytest.mark.slow
def test_longest_recombined_machine(winner):
    outcome = run(winner, 100_000_000)
    assert outcome.halted
    assert (outcome.ones, outcome.steps) == (4097, 70_740_809)
    assert tuple(rado_report(outcome)) == (70_740_810, 4098)
