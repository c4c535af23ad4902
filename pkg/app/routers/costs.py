import json
import logging

from fastapi import APIRouter, HTTPException

from app.errors import QuditMapError
from app.ingestion import parse_real
from app.schemas.circuit import CostRequest
from app.schemas.cost import CircuitCostSummary
from app.services import cost_model

logger = logging.getLogger(__name__)

router = APIRouter(prefix="/api/costs", tags=["Costs"])


@router.post("", response_model=CircuitCostSummary)
def circuit_costs(payload: CostRequest):
    """
    Per-gate NCV vs NCV-|v1> costs. Gates outside the table come back as rows
    with ``error`` set.
    """
    try:
        return cost_model.circuit_costs(parse_real(payload.real), ancillae=payload.ancillae)
    except QuditMapError as exc:
        logger.warning("costs rejected: %s", exc)
        raise HTTPException(status_code=422, detail=str(exc))


@router.get("/tables")
def cost_tables():
    # to_json turns <NA> cells into null
    return {
        "ncv": json.loads(cost_model.ncv_cost_frame().to_json(orient="index")),
        "ncv_v1": json.loads(cost_model.ncvv1_cost_frame().to_json(orient="index")),
    }
