from enum import Enum
from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from models.machine.MachineModels import DEFAULT_STATES
from models.machine.RunModels import RunStatus


def mpp_label(ones: int) -> str:
    return f"M_PP({ones})"


class SearchConfig(BaseModel):
    """Parameters of one enumeration search."""
    pool: str = Field(default="builtin", description="'builtin', 'golden', 'all' or a pool file path")
    select: Optional[List[str]] = Field(default=None, description="Restrict the pool to these ids, in this order")
    k: int = Field(default=2, ge=1, description="Recombination arity")
    step_limit: int = Field(default=100_000_000, ge=1, description="Simulation step cap")
    jobs: int = Field(default=1, ge=1, description="Worker processes")
    out: Optional[str] = Field(default=None, description="Output path, .jsonl or .csv")
    dedup: bool = Field(default=True, description="Keep only the first spec per canonical name")
    min_ones: Optional[int] = Field(default=None, ge=0)
    min_steps: Optional[int] = Field(default=None, ge=0)
    states: int = Field(default=DEFAULT_STATES, ge=1)
    rounds: int = Field(default=1, ge=1, description="Iterated recombination rounds")
    count_provenance: bool = Field(default=False, description="Record how many specs produced each name")
    csv_mirror: bool = Field(default=False, description="Also write a .csv next to a .jsonl output")

    @field_validator("select", mode="before")
    @classmethod
    def parse_select(cls, v):
        if v is None or v == "":
            return None
        if isinstance(v, str):
            parsed = [item.strip() for item in v.split(",") if item.strip()]
            return parsed if parsed else None
        return v


class SearchRecord(BaseModel):
    """One simulated recombination, re-simulatable from `name` alone."""
    model_config = ConfigDict(frozen=True)

    name: str = Field(..., description="Canonical machine name")
    lineage: str = Field(..., description="Lineage text of the first spec producing the name")
    status: RunStatus
    steps: int = Field(..., ge=0)
    ones: Optional[int] = Field(default=None, ge=0)
    mpp_class: Optional[str] = Field(default=None, description="M_PP(ones) for halted machines")
    index: int = Field(..., ge=0, description="Position in the enumeration stream")
    round: int = Field(default=1, ge=1)
    provenance_count: Optional[int] = Field(default=None, ge=1)

    @model_validator(mode="after")
    def check_class(self):
        halted = self.status == RunStatus.HALTED
        if halted != (self.mpp_class is not None):
            raise ValueError("mpp_class is present exactly when the machine halted")
        return self


class SearchSummary(BaseModel):
    enumerated: int = 0
    distinct: int = 0
    halted: int = 0
    step_limit_exceeded: int = 0
    kept: int = 0
    classes: Dict[str, int] = Field(default_factory=dict, description="Kept records per M_PP class")
    max_steps: Optional[SearchRecord] = None
    rounds: int = 1
    elapsed_seconds: float = 0.0


class SearchResult(BaseModel):
    records: List[SearchRecord]
    summary: SearchSummary


class VerifyVerdict(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    MEASURED = "MEASURED"


class VerifyEntryResult(BaseModel):
    id: str
    name: str
    expected_ones: Optional[int] = None
    expected_steps: Optional[int] = None
    status: RunStatus
    steps: int
    ones: Optional[int] = None
    verdict: VerifyVerdict
    reason: Optional[str] = None


class VerifyReport(BaseModel):
    cap: int
    results: List[VerifyEntryResult]

    @property
    def passed(self) -> int:
        return sum(1 for r in self.results if r.verdict == VerifyVerdict.PASS)

    @property
    def failed(self) -> int:
        return sum(1 for r in self.results if r.verdict == VerifyVerdict.FAIL)

    @property
    def ok(self) -> bool:
        return self.failed == 0
