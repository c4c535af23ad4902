"""
Exception hierarchy for QuditMap.

Everything derives from QuditMapError, which is intentionally not a ValueError:
pydantic only wraps ValueError/AssertionError raised inside validators, so our
errors surface unchanged from model constructors.
"""


def _rebuild(cls, message, state):
    error = cls.__new__(cls)
    Exception.__init__(error, message)
    error.__dict__.update(state)
    return error


class QuditMapError(Exception):
    """Base class for every domain error."""

    # Subclasses take structured constructor arguments, so the default
    # exception pickling (cls(*args)) cannot rebuild them in a worker's parent.
    def __reduce__(self):
        return _rebuild, (type(self), str(self), dict(self.__dict__))


# ── IR ────────────────────────────────────────────────────────────────

class CircuitError(QuditMapError):
    pass


class TargetInControls(CircuitError):
    def __init__(self, target: int):
        self.target = target
        super().__init__(f"target line {target} is also listed as a control")


class DuplicateControl(CircuitError):
    def __init__(self, line: int):
        self.line = line
        super().__init__(f"control line {line} is listed more than once")


class LineOutOfRange(CircuitError):
    def __init__(self, line: int, line_count: int):
        self.line = line
        self.line_count = line_count
        super().__init__(f"line {line} is out of range for a {line_count}-line circuit")


class InvalidLineNames(CircuitError):
    pass


# ── Simulation ────────────────────────────────────────────────────────

class SimulationError(QuditMapError):
    pass


class LengthMismatch(SimulationError):
    def __init__(self, expected: int, actual: int):
        self.expected = expected
        self.actual = actual
        super().__init__(f"expected {expected} values, got {actual}")


class InvalidSymbol(SimulationError):
    pass


class InvalidNcvControl(SimulationError):
    """An NCV gate was controlled by a line holding v0 or v1."""

    def __init__(self, gate_index: int, line: int, value: str):
        self.gate_index = gate_index
        self.line = line
        self.value = value
        super().__init__(
            f"gate {gate_index}: control line {line} holds {value}; "
            "NCV controls must be Boolean"
        )


class TooManyLines(SimulationError):
    def __init__(self, line_count: int, limit: int):
        self.line_count = line_count
        self.limit = limit
        super().__init__(f"{line_count} lines exceeds the limit of {limit}")


class NonBooleanNcvInput(SimulationError):
    pass


class InvalidVerifyOption(SimulationError):
    pass


class NotReversible(SimulationError):
    pass


# ── Mapping ───────────────────────────────────────────────────────────

class MappingError(QuditMapError):
    pass


class UnsupportedControlCount(MappingError):
    def __init__(self, control_count: int, gate_index: int | None = None):
        self.control_count = control_count
        self.gate_index = gate_index
        where = f"gate {gate_index}: " if gate_index is not None else ""
        super().__init__(
            f"{where}Toffoli gate with {control_count} controls has no NCV "
            "decomposition here (at most 2 controls)"
        )


# ── Costs ─────────────────────────────────────────────────────────────

class CostError(QuditMapError):
    pass


class OutOfTableRange(CostError):
    def __init__(self, control_count: int):
        self.control_count = control_count
        super().__init__(f"no NCV cost data for {control_count} control lines (1-15)")


class InsufficientAncillae(CostError):
    def __init__(self, ancillae: int):
        self.ancillae = ancillae
        super().__init__(f"ancilla count must be at least 1, got {ancillae}")


# ── Circuit files ─────────────────────────────────────────────────────

class ParseError(QuditMapError):
    """A malformed circuit document. Line and column are 1-based."""

    def __init__(self, message: str, line: int, column: int = 1):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class UnknownVariable(ParseError):
    pass


class DuplicateVariable(ParseError):
    pass


class ArityMismatch(ParseError):
    pass


class MissingSection(ParseError):
    pass


class UnknownLibrary(ParseError):
    pass


class UnsupportedFeature(ParseError):
    pass


class InvalidGate(ParseError):
    pass
