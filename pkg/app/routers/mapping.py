import logging

from fastapi import APIRouter, HTTPException

from app.errors import QuditMapError
from app.ingestion import parse_real, write_qc
from app.mapping import map_circuit
from app.schemas.circuit import MapRequest, MapResponse
from app.services.cost_model import report

logger = logging.getLogger(__name__)

router = APIRouter(prefix="/api/map", tags=["Mapping"])


@router.post("", response_model=MapResponse)
def map_reversible(payload: MapRequest):
    """
    Map a .real circuit to the requested quantum gate library.
    """
    try:
        circuit = parse_real(payload.real)
        quantum = map_circuit(circuit, payload.library)
    except QuditMapError as exc:
        logger.warning("map rejected: %s", exc)
        raise HTTPException(status_code=422, detail=str(exc))

    summary = report(quantum)
    return MapResponse(
        qc=write_qc(quantum),
        library=quantum.library,
        toffoli_gates=circuit.gate_count,
        total_gates=summary.total_gates,
        controlled_gates=summary.controlled_gates,
    )
