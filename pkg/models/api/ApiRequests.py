from typing import List, Optional

from pydantic import BaseModel, Field, field_validator

from models.machine.MachineModels import DEFAULT_STATES


class RunRequest(BaseModel):
    name: str = Field(..., description="Machine name or registry id")
    step_limit: Optional[int] = Field(default=None, ge=0, description="Step cap, configured default when absent")
    states: int = Field(default=DEFAULT_STATES, ge=1)
    rado: bool = Field(default=False, description="Also report Radó-model counts")


class DecodeRequest(BaseModel):
    name: str = Field(..., description="Machine name, counted or bare pair form")
    states: int = Field(default=DEFAULT_STATES, ge=1)


class EncodeRequest(BaseModel):
    rules: str = Field(..., description="One '(state, read)->(next, write, move)' rule per line")
    states: int = Field(default=DEFAULT_STATES, ge=1)


class RecombineRequest(BaseModel):
    sources: List[str] = Field(..., min_length=1, description="Registry ids or machine names")
    cuts: List[int] = Field(default_factory=list)
    states: int = Field(default=DEFAULT_STATES, ge=1)
    pool: Optional[str] = Field(default=None, description="Extra pool file for id resolution")

    @field_validator("cuts", mode="before")
    @classmethod
    def parse_cuts(cls, v):
        if v is None or v == "":
            return []
        if isinstance(v, str):
            return [int(cut.strip()) for cut in v.split(",") if cut.strip()]
        return v


class LineageRequest(BaseModel):
    lineage: str = Field(..., description="Lineage text, e.g. [recomb cuts=(7,9) [row:5] [row:2] [row:1]]")
    states: int = Field(default=DEFAULT_STATES, ge=1)
    pool: Optional[str] = Field(default=None)
    step_limit: Optional[int] = Field(default=None, ge=0, description="Simulate the result when given")


class VerifyRequest(BaseModel):
    golden: bool = Field(default=False, description="Verify the recombined machines instead of the seeds")
    cap: Optional[int] = Field(default=None, ge=1)
    pool: Optional[str] = Field(default=None, description="Verify a pool file instead")
    states: int = Field(default=DEFAULT_STATES, ge=1)
