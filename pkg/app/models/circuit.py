"""Reversible circuit IR: Toffoli gates T(C, t) and cascades of them."""

import logging
import re
from typing import Iterable, Optional, Tuple

from pydantic import BaseModel, Field, PositiveInt, field_validator, model_validator

from app.errors import DuplicateControl, InvalidLineNames, LineOutOfRange, TargetInControls

logger = logging.getLogger(__name__)

# A line is identified by its zero-based index; names live on the circuit.
LineId = int

# Names must survive the circuit file formats: one token, no comment marker,
# and no leading "." so they are never read back as a directive.
LINE_NAME_RE = re.compile(r"[A-Za-z0-9_][^\s#]*")


def check_line_names(names: Tuple[str, ...], line_count: int) -> None:
    if len(names) != line_count:
        raise InvalidLineNames(f"{len(names)} names given for {line_count} lines")
    if len(set(names)) != len(names):
        raise InvalidLineNames("line names must be unique")
    for name in names:
        if not LINE_NAME_RE.fullmatch(name):
            raise InvalidLineNames(f"invalid line name {name!r}")


class ToffoliGate(BaseModel):
    """Flips ``target`` iff every line in ``controls`` is 1.

    Controls are kept sorted by line index so that every downstream output
    (mapping, file writing) is deterministic.
    """

    controls: Tuple[LineId, ...] = ()
    target: LineId = Field(ge=0)

    model_config = {"frozen": True}

    @field_validator("controls")
    @classmethod
    def _sorted_unique(cls, controls: Tuple[int, ...]) -> Tuple[int, ...]:
        seen = set()
        for line in controls:
            if line < 0:
                raise LineOutOfRange(line, 0)
            if line in seen:
                raise DuplicateControl(line)
            seen.add(line)
        return tuple(sorted(controls))

    @model_validator(mode="after")
    def _target_not_control(self) -> "ToffoliGate":
        if self.target in self.controls:
            raise TargetInControls(self.target)
        return self

    @property
    def k(self) -> int:
        """Number of control lines."""
        return len(self.controls)

    @property
    def lines(self) -> Tuple[int, ...]:
        return (*self.controls, self.target)

    def masks(self, line_count: int) -> Tuple[int, int]:
        """(control mask, target mask) over an integer pattern, line 0 = MSB."""
        cmask = 0
        for line in self.controls:
            cmask |= 1 << (line_count - 1 - line)
        return cmask, 1 << (line_count - 1 - self.target)

    def describe(self, names: Optional[Tuple[str, ...]] = None) -> str:
        label = (lambda i: names[i]) if names else (lambda i: f"x{i + 1}")
        ctrl = ",".join(label(c) for c in self.controls)
        return f"T({{{ctrl}}},{label(self.target)})"


class ReversibleCircuit(BaseModel):
    """Ordered cascade g1 ... gd of Toffoli gates over ``line_count`` lines."""

    line_count: PositiveInt
    gates: Tuple[ToffoliGate, ...] = ()
    line_names: Optional[Tuple[str, ...]] = None

    model_config = {"frozen": True}

    @model_validator(mode="after")
    def _check_lines(self) -> "ReversibleCircuit":
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

    def names(self) -> Tuple[str, ...]:
        """Line names, defaulting to x1 ... xn."""
        if self.line_names is not None:
            return self.line_names
        return tuple(f"x{i + 1}" for i in range(self.line_count))

    def append(self, gate: ToffoliGate) -> "ReversibleCircuit":
        return append_gate(self, gate)

    def inverse(self) -> "ReversibleCircuit":
        """Toffoli gates are self-inverse, so the inverse is the reversed cascade."""
        return ReversibleCircuit(
            line_count=self.line_count,
            gates=tuple(reversed(self.gates)),
            line_names=self.line_names,
        )


def make_toffoli(controls: Iterable[LineId], target: LineId) -> ToffoliGate:
    """Build a validated gate; duplicates are rejected, never silently merged."""
    return ToffoliGate(controls=tuple(controls), target=target)


def append_gate(circuit: ReversibleCircuit, gate: ToffoliGate) -> ReversibleCircuit:
    for line in gate.lines:
        if line >= circuit.line_count:
            raise LineOutOfRange(line, circuit.line_count)
    return ReversibleCircuit(
        line_count=circuit.line_count,
        gates=(*circuit.gates, gate),
        line_names=circuit.line_names,
    )
