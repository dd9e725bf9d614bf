from typing import Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from models.machine.MachineModels import Machine, rule_count_for


class RecombinationSpec(BaseModel):
    """k source machines cut at k-1 nondecreasing rule indices."""
    model_config = ConfigDict(frozen=True)

    sources: Tuple[Machine, ...] = Field(..., description="Source machines in segment order")
    cuts: Tuple[int, ...] = Field(default=(), description="Segment boundaries v1 <= ... <= v(k-1)")

    @model_validator(mode="after")
    def check_cuts(self):
        if not self.sources:
            raise ValueError("at least one source machine is required")
        n = self.sources[0].n
        if any(source.n != n for source in self.sources):
            raise ValueError("all source machines must have the same number of states")
        if len(self.cuts) != len(self.sources) - 1:
            raise ValueError(f"{len(self.sources)} sources need {len(self.sources) - 1} cuts, got {len(self.cuts)}")
        upper = rule_count_for(n) - 1
        previous = 0
        for cut in self.cuts:
            if not 0 <= cut <= upper:
                raise ValueError(f"cut {cut} is outside [0, {upper}]")
            if cut < previous:
                raise ValueError(f"cuts must be nondecreasing, got {list(self.cuts)}")
            previous = cut
        return self

    @property
    def n(self) -> int:
        return self.sources[0].n

    @property
    def arity(self) -> int:
        return len(self.sources)


class LineageLeaf(BaseModel):
    """A lineage leaf: a machine identifier resolved through a registry."""
    model_config = ConfigDict(frozen=True)

    id: str = Field(..., min_length=1, description="Registry identifier, e.g. row:5")


class LineageNode(BaseModel):
    """A recombination record: children recombined at the given cuts."""
    model_config = ConfigDict(frozen=True)

    cuts: Tuple[int, ...] = Field(default=())
    children: Tuple[Union[LineageLeaf, "LineageNode"], ...] = Field(..., min_length=1)

    @field_validator("cuts")
    @classmethod
    def nonnegative_cuts(cls, v):
        if any(cut < 0 for cut in v):
            raise ValueError("cuts must be nonnegative")
        return v

    @model_validator(mode="after")
    def check_arity(self):
        if len(self.cuts) != len(self.children) - 1:
            raise ValueError(f"{len(self.children)} children need {len(self.children) - 1} cuts, got {len(self.cuts)}")
        return self


LineageNode.model_rebuild()

Lineage = Union[LineageLeaf, LineageNode]
