"""
QuditMap API
============
Reversible Toffoli circuits mapped to NCV and NCV-|v1> quantum circuits:
mapping, simulation, equivalence checking and quantum cost comparison.
"""

import logging
from contextlib import asynccontextmanager
from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware

from app.config import settings
from app.logging_config import setup_logging
from app.services.cost_model import NCV_COST_TABLE

from app.routers.mapping import router as mapping_router
from app.routers.simulation import router as simulation_router
from app.routers.verification import router as verification_router
from app.routers.costs import router as costs_router

logger = logging.getLogger("main")

VERSION = "1.0.0"


@asynccontextmanager
async def lifespan(app: FastAPI):
    """Startup and shutdown events."""
    # ── Startup ──
    setup_logging("DEBUG" if settings.DEBUG else "INFO")
    logger.info("Starting QuditMap API v%s", VERSION)
    logger.info("NCV cost table: controls 1-%d", NCV_COST_TABLE.max_controls)
    logger.info(
        "Dense oracle limits: ncv %d lines, ncv-v1 %d lines",
        settings.DENSE_MAX_LINES_NCV, settings.DENSE_MAX_LINES_NCV_V1,
    )
    logger.info("QuditMap API ready, listening on %s:%s", settings.HOST, settings.PORT)

    yield

    # ── Shutdown ──
    logger.info("Shutting down QuditMap API...")


app = FastAPI(
    title="QuditMap API",
    description="Map reversible circuits to NCV and NCV-|v1> quantum circuits and compare their costs.",
    version=VERSION,
    lifespan=lifespan,
)

app.add_middleware(
    CORSMiddleware,
    allow_origins=settings.CORS_ORIGINS,
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)

app.include_router(mapping_router)
app.include_router(simulation_router)
app.include_router(verification_router)
app.include_router(costs_router)


@app.get("/", tags=["Health"])
async def root():
    return {
        "service": "QuditMap API",
        "version": VERSION,
        "libraries": ["ncv", "ncv-v1"],
        "status": "operational",
    }


@app.get("/health", tags=["Health"])
async def health_check():
    return {"status": "healthy", "cost_table_controls": NCV_COST_TABLE.max_controls}


if __name__ == "__main__":
    import uvicorn

    uvicorn.run(
        "main:app",
        host=settings.HOST,
        port=settings.PORT,
        reload=settings.DEBUG,
    )
