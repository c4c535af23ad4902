import logging

from fastapi import APIRouter, HTTPException

from app.errors import QuditMapError
from app.ingestion import parse_qc, parse_real
from app.schemas.circuit import VerifyRequest
from app.schemas.verification import VerificationResult
from app.services.verification import VerifyMode, check_equivalence

logger = logging.getLogger(__name__)

router = APIRouter(prefix="/api/verify", tags=["Verification"])


@router.post("", response_model=VerificationResult)
def verify(payload: VerifyRequest):
    """
    Check a quantum circuit against a reversible one. Inequivalence is a
    normal result (``equivalent: false``), not an error.
    """
    try:
        return check_equivalence(
            parse_real(payload.real),
            parse_qc(payload.qc),
            mode=VerifyMode(payload.mode),
            samples=payload.samples,
            seed=payload.seed,
            # requests are served in-process
            workers=1,
        )
    except QuditMapError as exc:
        logger.warning("verify rejected: %s", exc)
        raise HTTPException(status_code=422, detail=str(exc))
