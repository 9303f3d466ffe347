from pydantic import BaseModel, Field, field_validator
from typing import List, Literal, Optional


class WalkDefaults(BaseModel):
    precision: int = Field(12, ge=1)
    max_oracle: int = Field(24, ge=1)
    verify_limit: int = Field(16, ge=1)
    # oracle worker processes; 1 runs in-process
    workers: int = Field(1, ge=1)


class RunConfig(BaseModel):
    command: Literal["simulate", "verify", "profile", "peaks", "closed-form", "oracle"]
    memory: Literal[0, 1, 2] = 2
    steps: int = Field(0, ge=0)
    init: str = "single"
    out: Optional[str] = None
    format: Literal["csv", "json"] = "csv"
    sequence: Optional[str] = None
    defaults: WalkDefaults = Field(default_factory=WalkDefaults)

    @field_validator("init")
    @classmethod
    def _known_init(cls, v: str) -> str:
        if v in ("single", "symmetric") or (v.startswith("file:") and len(v) > 5):
            return v
        raise ValueError("init must be 'single', 'symmetric' or 'file:PATH'")

    @property
    def init_file(self) -> Optional[str]:
        return self.init[5:] if self.init.startswith("file:") else None


class InitRecord(BaseModel):
    n3: Optional[int] = None
    n2: Optional[int] = None
    n1: int
    p: Literal[0, 1]
    re: int = 0
    im: int = 0


class InitStateFile(BaseModel):
    memory: Literal[0, 1, 2]
    scale: int = Field(0, ge=0)
    records: List[InitRecord] = Field(..., min_length=1)


class WalkCase(BaseModel):
    """One golden case under Walk TestCases/."""
    command: Literal["simulate", "closed-form", "oracle", "peaks"] = "simulate"
    memory: Literal[0, 1, 2] = 2
    steps: int = Field(..., ge=0)
    init: Literal["single", "symmetric"] = "single"
    description: str = ""
