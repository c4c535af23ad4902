from pydantic import BaseModel, field_validator, model_validator
from typing import Dict, List, Optional


class NcvCostTable(BaseModel):
    """NCV costs per control count, indexed by ancilla count starting at 1."""
    description: str = ""
    rows: Dict[int, List[int]]

    @field_validator("rows")
    @classmethod
    def _non_increasing(cls, rows: Dict[int, List[int]]) -> Dict[int, List[int]]:
        for k, costs in rows.items():
            if not costs:
                raise ValueError(f"row {k} has no populated column")
            if any(later > earlier for earlier, later in zip(costs, costs[1:])):
                raise ValueError(f"row {k} grows with more ancillae: {costs}")
        return rows

    @property
    def max_controls(self) -> int:
        return max(self.rows)


class GateCost(BaseModel):
    gate_index: int
    k: int
    cost: int


class CostReport(BaseModel):
    total_gates: int
    controlled_gates: int
    per_gate_breakdown: List[GateCost] = []

    @model_validator(mode="after")
    def _controlled_within_total(self) -> "CostReport":
        if self.controlled_gates > self.total_gates:
            raise ValueError("controlled_gates exceeds total_gates")
        return self


class GateCostRow(BaseModel):
    gate_index: int
    k: int
    ancillae: Optional[int] = None
    ncv_cost: Optional[int] = None
    ncvv1_cost: int
    delta_percent: Optional[int] = None
    error: Optional[str] = None


class CircuitCostSummary(BaseModel):
    rows: List[GateCostRow]
    ncv_total: int
    ncvv1_total: int
    delta_percent: Optional[int] = None
    incomplete: bool = False
