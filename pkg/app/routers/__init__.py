from app.routers.mapping import router as mapping_router
from app.routers.simulation import router as simulation_router
from app.routers.verification import router as verification_router
from app.routers.costs import router as costs_router

__all__ = [
    "mapping_router",
    "simulation_router",
    "verification_router",
    "costs_router",
]
