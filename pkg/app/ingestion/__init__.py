from pathlib import Path
from typing import Union

from app.ingestion.real_format import RealDocument, parse_real, parse_real_document, write_real
from app.ingestion.qc_format import parse_qc, write_qc
from app.models.circuit import ReversibleCircuit
from app.models.quantum import QuantumCircuit

REAL_SUFFIX = ".real"
QC_SUFFIX = ".qc"


def read_text(path: Union[str, Path]) -> str:
    return Path(path).read_text(encoding="utf-8")


def load_reversible(path: Union[str, Path]) -> ReversibleCircuit:
    return parse_real(read_text(path))


def load_quantum(path: Union[str, Path]) -> QuantumCircuit:
    return parse_qc(read_text(path))


def save_text(path: Union[str, Path], text: str):
    # newline="\n": LF is emitted on every platform
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


__all__ = [
    "RealDocument",
    "parse_real",
    "parse_real_document",
    "write_real",
    "parse_qc",
    "write_qc",
    "read_text",
    "load_reversible",
    "load_quantum",
    "save_text",
    "REAL_SUFFIX",
    "QC_SUFFIX",
]
