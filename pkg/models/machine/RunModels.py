from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator


class RunStatus(str, Enum):
    HALTED = "halted"
    STEP_LIMIT_EXCEEDED = "step_limit_exceeded"


class RunOutcome(BaseModel):
    """Result of simulating a machine from the blank tape."""
    model_config = ConfigDict(frozen=True)

    status: RunStatus = Field(..., description="Halted or step limit exceeded")
    steps: int = Field(..., ge=0, description="Number of executed transitions")
    ones: Optional[int] = Field(default=None, ge=0, description="1-cells on the tape, halted runs only")
    leftmost: int = Field(default=0, le=0, description="Leftmost position ever under the head")
    rightmost: int = Field(default=0, ge=0, description="Rightmost position ever under the head")
    head: int = Field(default=0, description="Final head position")

    @model_validator(mode="after")
    def check_consistency(self):
        if self.halted and self.ones is None:
            raise ValueError("halted outcomes must report the ones count")
        if not self.halted and self.ones is not None:
            raise ValueError("ones are only reported for halted outcomes")
        if self.ones is not None and self.ones > self.extent:
            raise ValueError("ones cannot exceed the visited extent")
        return self

    @property
    def halted(self) -> bool:
        return self.status == RunStatus.HALTED

    @property
    def extent(self) -> int:
        return self.rightmost - self.leftmost + 1
