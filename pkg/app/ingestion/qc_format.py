"""
Reader/writer for quantum circuits (``.qc``).

Same header as ``.real`` plus a mandatory ``.library ncv|ncv-v1`` directive.
Gate lines: ``not t``, ``v t``, ``v+ t``, ``cnot c t``, ``cv c t``, ``cv+ c t``.
The control trigger (1 or v1) follows from the library.
"""

import logging

from app.errors import (
    ArityMismatch,
    CircuitError,
    InvalidGate,
    MissingSection,
    ParseError,
    UnknownLibrary,
)
from app.ingestion.document import CircuitDocument, CircuitDocumentReader, resolve_operand
from app.models.quantum import Library, QuantumCircuit, QuantumGate, QuantumOpKind

logger = logging.getLogger(__name__)

# keyword -> (operation, controlled)
GATE_KEYWORDS = {
    "not": (QuantumOpKind.NOT, False),
    "v": (QuantumOpKind.V, False),
    "v+": (QuantumOpKind.VDAG, False),
    "cnot": (QuantumOpKind.NOT, True),
    "cv": (QuantumOpKind.V, True),
    "cv+": (QuantumOpKind.VDAG, True),
}
_KEYWORD_FOR = {spec: keyword for keyword, spec in GATE_KEYWORDS.items()}


class QcParser(CircuitDocumentReader):
    extra_directives = frozenset({".library"})

    def parse(self, text: str) -> QuantumCircuit:
        document = self.read(text)
        library = self._library(document)
        index = document.variable_index()

        gates = []
        for gate_line in document.gates:
            spec = GATE_KEYWORDS.get(gate_line.keyword)
            if spec is None:
                raise ParseError(f"unknown gate {gate_line.keyword!r}", gate_line.line, gate_line.column)
            kind, controlled = spec
            expected = 2 if controlled else 1
            if len(gate_line.operands) != expected:
                raise ArityMismatch(
                    f"{gate_line.keyword} expects {expected} line(s), got {len(gate_line.operands)}",
                    gate_line.line, gate_line.column,
                )
            lines = [resolve_operand(gate_line, token, index) for token in gate_line.operands]
            try:
                gates.append(QuantumGate(
                    kind=kind,
                    target=lines[-1],
                    control=lines[0] if controlled else None,
                ))
            except CircuitError as exc:
                raise InvalidGate(str(exc), gate_line.line, gate_line.column) from exc

        circuit = QuantumCircuit(
            line_count=document.line_count,
            library=library,
            gates=tuple(gates),
            line_names=tuple(document.variables),
        )
        logger.info(
            "parse_qc: %s, %d lines, %d gates", library.label, circuit.line_count, circuit.gate_count
        )
        return circuit

    @staticmethod
    def _library(document: CircuitDocument) -> Library:
        directive = document.directives.get(".library")
        if directive is None:
            raise MissingSection("missing .library", document.last_line, 1)
        if len(directive.args) != 1:
            column = directive.args[1].column if len(directive.args) > 1 else 1
            raise ParseError(".library takes exactly one argument", directive.line, column)
        token = directive.args[0]
        try:
            return Library(token.text.lower())
        except ValueError:
            raise UnknownLibrary(f"unknown library {token.text!r}", directive.line, token.column) from None

    @staticmethod
    def write(circuit: QuantumCircuit) -> str:
        names = circuit.names()
        out = [
            ".version 1.0",
            f".library {circuit.library.value}",
            f".numvars {circuit.line_count}",
            f".variables {' '.join(names)}",
            ".begin",
        ]
        for gate in circuit.gates:
            keyword = _KEYWORD_FOR[(gate.kind, gate.is_controlled)]
            out.append(f"{keyword} {' '.join(names[line] for line in gate.lines)}")
        out.append(".end")
        return "\n".join(out) + "\n"


qc_parser = QcParser()


def parse_qc(text: str) -> QuantumCircuit:
    return qc_parser.parse(text)


def write_qc(circuit: QuantumCircuit) -> str:
    return qc_parser.write(circuit)
