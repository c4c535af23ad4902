"""
Reader/writer for reversible circuits in the RevLib ``.real`` style.

Supported subset: '#' comments, .version, .numvars, .variables, .inputs,
.outputs, trivial .constants/.garbage markers, .begin/.end and Toffoli lines
``tK c1 ... c(K-1) target``. Other gate types and negative controls are
rejected with UnsupportedFeature.
"""

import logging
import re

from app.errors import ArityMismatch, CircuitError, InvalidGate, ParseError, UnsupportedFeature
from app.ingestion.document import CircuitDocument, CircuitDocumentReader, resolve_operand
from app.models.circuit import ReversibleCircuit, make_toffoli

logger = logging.getLogger(__name__)

_TOFFOLI_RE = re.compile(r"^t(\d+)$")
_OTHER_GATE_RE = re.compile(r"^(f|p|v|v\+)\d*$")


class RealDocument(CircuitDocument):
    """Parsed .real file with source positions kept for diagnostics."""

    def to_circuit(self) -> ReversibleCircuit:
        index = self.variable_index()
        gates = []
        for gate_line in self.gates:
            match = _TOFFOLI_RE.match(gate_line.keyword)
            if not match:
                if _OTHER_GATE_RE.match(gate_line.keyword):
                    raise UnsupportedFeature(
                        f"gate type {gate_line.keyword!r} is not supported", gate_line.line, gate_line.column
                    )
                raise ParseError(f"unknown gate {gate_line.keyword!r}", gate_line.line, gate_line.column)

            size = int(match.group(1))
            if size < 1 or len(gate_line.operands) != size:
                raise ArityMismatch(
                    f"{gate_line.keyword} expects {size} line(s), got {len(gate_line.operands)}",
                    gate_line.line, gate_line.column,
                )
            lines = [resolve_operand(gate_line, token, index) for token in gate_line.operands]
            try:
                gates.append(make_toffoli(lines[:-1], lines[-1]))
            except CircuitError as exc:
                raise InvalidGate(str(exc), gate_line.line, gate_line.column) from exc

        return ReversibleCircuit(
            line_count=self.line_count,
            gates=tuple(gates),
            line_names=tuple(self.variables),
        )


class RealParser(CircuitDocumentReader):
    document_class = RealDocument

    def parse_document(self, text: str) -> RealDocument:
        return self.read(text)

    def parse(self, text: str) -> ReversibleCircuit:
        circuit = self.parse_document(text).to_circuit()
        logger.info("parse_real: %d lines, %d gates", circuit.line_count, circuit.gate_count)
        return circuit

    @staticmethod
    def write(circuit: ReversibleCircuit) -> str:
        names = circuit.names()
        out = [
            ".version 1.0",
            f".numvars {circuit.line_count}",
            f".variables {' '.join(names)}",
            ".begin",
        ]
        for gate in circuit.gates:
            operands = " ".join(names[line] for line in gate.lines)
            out.append(f"t{gate.k + 1} {operands}")
        out.append(".end")
        return "\n".join(out) + "\n"


real_parser = RealParser()


def parse_real(text: str) -> ReversibleCircuit:
    return real_parser.parse(text)


def parse_real_document(text: str) -> RealDocument:
    return real_parser.parse_document(text)


def write_real(circuit: ReversibleCircuit) -> str:
    return real_parser.write(circuit)
