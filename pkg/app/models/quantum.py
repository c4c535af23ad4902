"""Quantum circuit IR for the NCV and NCV-|v1> gate libraries."""

from enum import Enum
from typing import Optional, Tuple

from pydantic import BaseModel, Field, PositiveInt, model_validator

from app.errors import LineOutOfRange, TargetInControls
from app.models.circuit import LineId, check_line_names


class QuantumOpKind(str, Enum):
    NOT = "NOT"
    V = "V"
    VDAG = "VDAG"

    @property
    def inverse(self) -> "QuantumOpKind":
        return _INVERSE[self]


_INVERSE = {
    QuantumOpKind.NOT: QuantumOpKind.NOT,
    QuantumOpKind.V: QuantumOpKind.VDAG,
    QuantumOpKind.VDAG: QuantumOpKind.V,
}


class Library(str, Enum):
    NCV = "ncv"
    NCV_V1 = "ncv-v1"

    @property
    def radix(self) -> int:
        """Levels per line in the dense model: qubits for NCV, 4-level qudits otherwise."""
        return 2 if self is Library.NCV else 4

    @property
    def label(self) -> str:
        return "NCV" if self is Library.NCV else "NCV-|v1>"


class QuantumGate(BaseModel):
    """NOT, V or V-dagger on ``target``, optionally with a single control line."""

    kind: QuantumOpKind
    target: LineId = Field(ge=0)
    control: Optional[LineId] = Field(default=None, ge=0)

    model_config = {"frozen": True}

    @model_validator(mode="after")
    def _control_not_target(self) -> "QuantumGate":
        if self.control is not None and self.control == self.target:
            raise TargetInControls(self.target)
        return self

    @property
    def is_controlled(self) -> bool:
        return self.control is not None

    @property
    def lines(self) -> Tuple[int, ...]:
        return (self.target,) if self.control is None else (self.control, self.target)

    def inverse(self) -> "QuantumGate":
        return QuantumGate(kind=self.kind.inverse, target=self.target, control=self.control)


def not_gate(target: LineId, control: Optional[LineId] = None) -> QuantumGate:
    return QuantumGate(kind=QuantumOpKind.NOT, target=target, control=control)


def v_gate(target: LineId, control: Optional[LineId] = None) -> QuantumGate:
    return QuantumGate(kind=QuantumOpKind.V, target=target, control=control)


def vdag_gate(target: LineId, control: Optional[LineId] = None) -> QuantumGate:
    return QuantumGate(kind=QuantumOpKind.VDAG, target=target, control=control)


class QuantumCircuit(BaseModel):
    """Gate cascade tagged with the library that fixes its control trigger."""

    line_count: PositiveInt
    library: Library
    gates: Tuple[QuantumGate, ...] = ()
    line_names: Optional[Tuple[str, ...]] = None

    model_config = {"frozen": True}

    @model_validator(mode="after")
    def _check_lines(self) -> "QuantumCircuit":
        if self.line_names is not None:
            check_line_names(self.line_names, self.line_count)
        for gate in self.gates:
            for line in gate.lines:
                if line >= self.line_count:
                    raise LineOutOfRange(line, self.line_count)
        return self

    @property
    def gate_count(self) -> int:
        return len(self.gates)

    @property
    def controlled_count(self) -> int:
        return sum(1 for g in self.gates if g.is_controlled)

    def names(self) -> Tuple[str, ...]:
        if self.line_names is not None:
            return self.line_names
        return tuple(f"x{i + 1}" for i in range(self.line_count))

    def inverse(self) -> "QuantumCircuit":
        """Reversed cascade with V and V-dagger swapped."""
        return self.model_copy(update={"gates": tuple(g.inverse() for g in reversed(self.gates))})
