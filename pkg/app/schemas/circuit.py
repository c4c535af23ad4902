from pydantic import BaseModel, Field
from typing import List, Literal, Optional

from app.models.quantum import Library


class MapRequest(BaseModel):
    real: str = Field(..., description="reversible circuit in .real format")
    library: Library = Library.NCV_V1


class MapResponse(BaseModel):
    qc: str
    library: Library
    toffoli_gates: int
    total_gates: int
    controlled_gates: int


class SimulateRequest(BaseModel):
    source: str
    format: Literal["real", "qc"]
    pattern: str
    trace: bool = False


class SimulateResponse(BaseModel):
    output: str
    trace: List[str] = []


class VerifyRequest(BaseModel):
    real: str
    qc: str
    mode: Literal["exhaustive", "random", "dense"] = "exhaustive"
    samples: Optional[int] = Field(None, ge=1)
    seed: Optional[int] = Field(None, ge=0)


class CostRequest(BaseModel):
    real: str
    ancillae: Optional[int] = None
