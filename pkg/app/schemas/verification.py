from pydantic import BaseModel
from typing import Optional


class Counterexample(BaseModel):
    input: str
    expected: str
    actual: str


class VerificationResult(BaseModel):
    equivalent: bool
    mode: str
    line_count: int
    patterns_checked: int
    seed: Optional[int] = None
    counterexample: Optional[Counterexample] = None
