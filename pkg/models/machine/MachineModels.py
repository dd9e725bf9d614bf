from enum import IntEnum
from typing import List, Mapping, NamedTuple, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

DEFAULT_STATES = 5

# Table slot sentinel for a missing rule; reaching it halts the machine.
UNDEFINED = -1


class Move(IntEnum):
    LEFT = 0
    STAY = 1
    RIGHT = 2

    @property
    def delta(self) -> int:
        return self.value - 1


class Action(NamedTuple):
    next_state: int
    write: int
    move: Move


def rule_count_for(n: int) -> int:
    """Size of the rule-index space {0, ..., 2n-1}."""
    return 2 * n


def code_count_for(n: int) -> int:
    """Size of the action-code space {0, ..., 6n-1}."""
    return 6 * n


class Machine(BaseModel):
    """
    An n-state, binary-alphabet Turing machine with a partial transition table.

    Slot i of `table` holds the action code for rule index i = 2*state + read,
    or UNDEFINED when the machine has no rule for that pair.
    """
    model_config = ConfigDict(frozen=True)

    n: int = Field(DEFAULT_STATES, ge=1, description="Number of states")
    table: Tuple[int, ...] = Field(..., description="Action code per rule index, UNDEFINED for missing rules")

    @model_validator(mode="after")
    def check_table(self):
        if len(self.table) != rule_count_for(self.n):
            raise ValueError(f"table must have {rule_count_for(self.n)} slots, got {len(self.table)}")
        limit = code_count_for(self.n)
        for index, code in enumerate(self.table):
            if code != UNDEFINED and not 0 <= code < limit:
                raise ValueError(f"action code {code} at rule {index} is outside [0, {limit})")
        return self

    @classmethod
    def empty(cls, n: int = DEFAULT_STATES) -> "Machine":
        return cls(n=n, table=(UNDEFINED,) * rule_count_for(n))

    @classmethod
    def from_rules(cls, rules: Mapping[int, int], n: int = DEFAULT_STATES) -> "Machine":
        table = [UNDEFINED] * rule_count_for(n)
        for index, code in rules.items():
            if not 0 <= index < len(table):
                raise ValueError(f"rule index {index} is outside [0, {len(table)})")
            table[index] = code
        return cls(n=n, table=tuple(table))

    def rule(self, index: int) -> Optional[int]:
        code = self.table[index]
        return None if code == UNDEFINED else code

    def defined_rules(self) -> List[Tuple[int, int]]:
        return [(index, code) for index, code in enumerate(self.table) if code != UNDEFINED]

    @property
    def rule_count(self) -> int:
        return sum(1 for code in self.table if code != UNDEFINED)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.table, dtype=np.int64)
