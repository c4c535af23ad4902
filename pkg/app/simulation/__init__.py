from app.simulation.reversible import (
    Bits,
    pattern_to_bits,
    bits_to_pattern,
    parse_bits,
    format_bits,
    apply_to_pattern,
    simulate_reversible,
    trace_reversible,
    truth_table,
)
from app.simulation.quart import (
    QuartValue,
    QuartState,
    control_trigger,
    step_quart,
    simulate_quantum,
    trace_quantum,
    iter_quantum_states,
    parse_quart_pattern,
    format_quart_state,
    is_boolean_state,
    bits_to_quart,
)
from app.simulation.dense import (
    StateVector,
    gate_unitary,
    base_matrix,
    quart_state_vector,
    simulate_dense,
    simulate_dense_many,
)

__all__ = [
    # Reversible
    "Bits",
    "pattern_to_bits",
    "bits_to_pattern",
    "parse_bits",
    "format_bits",
    "apply_to_pattern",
    "simulate_reversible",
    "trace_reversible",
    "truth_table",
    # 4-valued
    "QuartValue",
    "QuartState",
    "control_trigger",
    "step_quart",
    "simulate_quantum",
    "trace_quantum",
    "iter_quantum_states",
    "parse_quart_pattern",
    "format_quart_state",
    "is_boolean_state",
    "bits_to_quart",
    # Dense oracle
    "StateVector",
    "gate_unitary",
    "base_matrix",
    "quart_state_vector",
    "simulate_dense",
    "simulate_dense_many",
]
