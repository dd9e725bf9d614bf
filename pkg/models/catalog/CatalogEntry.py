from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from models.machine.MachineModels import DEFAULT_STATES, Machine
from services.tm_core.MachineCodec import canonical_name, decode_name


class CatalogEntry(BaseModel):
    """A named machine with the (ones, steps) it is expected to produce."""
    model_config = ConfigDict(
        frozen=True,
        json_schema_extra={
            "example": {
                "id": "row:0",
                "name": "(9, 0, 11, 1, 15, 2, 17, 3, 11, 4, 23, 5, 24, 6, 3, 7, 21, 9, 0)",
                "attribution": "Marxen-Buntrock",
                "expected_ones": 4097,
                "expected_steps": 47176869,
                "n": 5,
            }
        },
    )

    id: str = Field(..., pattern=r"^[A-Za-z0-9_:.\-]+$", description="Stable identifier, e.g. row:0")
    name: str = Field(..., description="Canonical machine name")
    attribution: Optional[str] = Field(default=None, description="Who found the machine")
    expected_ones: Optional[int] = Field(default=None, ge=0)
    expected_steps: Optional[int] = Field(default=None, ge=0)
    n: int = Field(default=DEFAULT_STATES, ge=1, description="Number of states")

    @model_validator(mode="before")
    @classmethod
    def canonicalize_name(cls, values):
        # Bare pair lists and counted names both normalize to the counted form.
        if isinstance(values, dict) and isinstance(values.get("name"), str):
            values = dict(values)
            values["name"] = canonical_name(values["name"], values.get("n", DEFAULT_STATES))
        return values

    @property
    def machine(self) -> Machine:
        return decode_name(self.name, self.n)

    @property
    def has_expectations(self) -> bool:
        return self.expected_ones is not None or self.expected_steps is not None

