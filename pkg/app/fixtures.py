"""Worked-example circuits shipped in app/data/fixtures, with their annotated traces."""

import json
import logging
from pathlib import Path
from typing import Dict, Union

from pydantic import BaseModel

from app.ingestion import QC_SUFFIX, REAL_SUFFIX, load_quantum, load_reversible
from app.models.circuit import ReversibleCircuit
from app.models.quantum import QuantumCircuit

logger = logging.getLogger(__name__)

FIXTURE_DIR = Path(__file__).resolve().parent / "data" / "fixtures"


class FigureTrace(BaseModel):
    """Input, output and the state annotated after some gates (key = gates applied)."""
    input: str
    output: str
    columns: Dict[int, str]


def fixture_path(name: str) -> Path:
    path = FIXTURE_DIR / name
    if not path.is_file():
        raise FileNotFoundError(f"no fixture named {name!r} in {FIXTURE_DIR}")
    return path


def load_fixture(name: str) -> Union[ReversibleCircuit, QuantumCircuit]:
    path = fixture_path(name)
    if path.suffix == REAL_SUFFIX:
        return load_reversible(path)
    if path.suffix == QC_SUFFIX:
        return load_quantum(path)
    raise ValueError(f"fixture {name!r} is not a circuit file")


def load_traces() -> Dict[str, FigureTrace]:
    raw = json.loads(fixture_path("traces.json").read_text(encoding="utf-8"))
    return {name: FigureTrace.model_validate(entry) for name, entry in raw.items()}
