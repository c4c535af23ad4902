import logging

from fastapi import APIRouter, HTTPException

from app.errors import QuditMapError
from app.ingestion import parse_qc, parse_real
from app.schemas.circuit import SimulateRequest, SimulateResponse
from app.simulation.quart import (
    bits_to_quart,
    format_quart_state,
    parse_quart_pattern,
    simulate_quantum,
    trace_quantum,
)
from app.simulation.reversible import format_bits, parse_bits, simulate_reversible, trace_reversible

logger = logging.getLogger(__name__)

router = APIRouter(prefix="/api/simulate", tags=["Simulation"])


@router.post("", response_model=SimulateResponse)
def simulate(payload: SimulateRequest):
    """
    Run one input pattern through a .real (Boolean) or .qc (4-valued) circuit.
    """
    try:
        if payload.format == "real":
            circuit = parse_real(payload.source)
            bits = parse_bits(payload.pattern)
            output = format_bits(simulate_reversible(circuit, bits))
            trace = (
                [format_quart_state(bits_to_quart(s)) for s in trace_reversible(circuit, bits)]
                if payload.trace else []
            )
        else:
            circuit = parse_qc(payload.source)
            state = parse_quart_pattern(payload.pattern)
            output = format_quart_state(simulate_quantum(circuit, state), compact=True)
            trace = (
                [format_quart_state(s) for s in trace_quantum(circuit, state)]
                if payload.trace else []
            )
    except QuditMapError as exc:
        logger.warning("simulate rejected: %s", exc)
        raise HTTPException(status_code=422, detail=str(exc))

    return SimulateResponse(output=output, trace=trace)
