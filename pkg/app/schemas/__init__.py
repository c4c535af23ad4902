from .circuit import (
    MapRequest,
    MapResponse,
    SimulateRequest,
    SimulateResponse,
    VerifyRequest,
    CostRequest,
)
from .cost import NcvCostTable, GateCost, CostReport, GateCostRow, CircuitCostSummary
from .verification import Counterexample, VerificationResult

__all__ = [
    # Request / response bodies
    "MapRequest",
    "MapResponse",
    "SimulateRequest",
    "SimulateResponse",
    "VerifyRequest",
    "CostRequest",
    # Costs
    "NcvCostTable",
    "GateCost",
    "CostReport",
    "GateCostRow",
    "CircuitCostSummary",
    # Verification
    "Counterexample",
    "VerificationResult",
]
