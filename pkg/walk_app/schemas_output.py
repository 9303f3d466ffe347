from pydantic import BaseModel, Field
from typing import Dict, List, Optional


# ---------- Distribution ----------

class Entry(BaseModel):
    k: int
    p: str  # exact "num/den"


class DistributionOutput(BaseModel):
    memory: int
    steps: int
    entries: List[Entry] = []


# ---------- Peaks ----------

class PeakEntry(BaseModel):
    k: int
    p: str
    decimal: str


class PeakReport(BaseModel):
    memory: int
    steps: int
    init: str
    peaks: List[PeakEntry] = []
    symmetric: bool
    mean: str
    variance: str


# ---------- Verification ----------

class Mismatch(BaseModel):
    n: int
    k: int
    j: int
    simulator: str
    oracle: str
    closed_form: str
    parts: List[str] = []


class Deviation(BaseModel):
    part: str
    n: int
    k: int
    reference: Optional[int] = None  # the part as written
    oracle: int
    corrected: Optional[int] = None  # shipped form, corrections applied
    derived: Optional[int] = None
    defect: Optional[str] = None
    corrections: List[str] = []
    variables: List[str] = []
    sign: str
    factors: List[str] = []
    rho: str
    note: str = ""


class WiringFinding(BaseModel):
    # wiring name -> whether the full catalog matched the oracle with it
    matches: Dict[str, bool] = {}
    first_mismatch: Dict[str, str] = {}


class DeviationsReport(BaseModel):
    limit: int
    parts_checked: int
    deviations: List[Deviation] = []
    wiring: WiringFinding = Field(default_factory=WiringFinding)


class VerifyReport(BaseModel):
    limit: int
    passed: bool
    steps_checked: List[int] = []
    mismatch: Optional[Mismatch] = None
    defects: List[str] = []
    deviations: Optional[DeviationsReport] = None
