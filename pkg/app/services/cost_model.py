"""
Quantum cost model.

"Cost" is the number of controlled (two-line) gates; total gate counts are
reported alongside. NCV costs for Toffoli gates come from the embedded table
in app/data/ncv_costs.json (control count x available ancillary lines); the
NCV-|v1> cost of a k-control gate is the 2k - 1 controlled gates of its
sensitize/flip/desensitize cascade.
"""

import logging
from pathlib import Path
from typing import Optional, Tuple

import pandas as pd

from app.config import settings
from app.errors import CostError, InsufficientAncillae, OutOfTableRange
from app.models.circuit import ReversibleCircuit, ToffoliGate
from app.models.quantum import QuantumCircuit
from app.schemas.cost import (
    CircuitCostSummary,
    CostReport,
    GateCost,
    GateCostRow,
    NcvCostTable,
)

logger = logging.getLogger(__name__)

# ── Load the NCV cost table once at import ──
_TABLE_PATH = Path(__file__).resolve().parent.parent / "data" / "ncv_costs.json"
NCV_COST_TABLE: NcvCostTable = NcvCostTable.model_validate_json(
    _TABLE_PATH.read_text(encoding="utf-8")
)
logger.debug("Loaded NCV cost table: %d rows from %s", len(NCV_COST_TABLE.rows), _TABLE_PATH.name)

MAX_ANCILLA_COLUMNS = max(len(costs) for costs in NCV_COST_TABLE.rows.values())


def ncv_cost(k: int, ancillae: int) -> int:
    """Cost from the rightmost populated column not exceeding ``ancillae``."""
    row = NCV_COST_TABLE.rows.get(k)
    if row is None:
        raise OutOfTableRange(k)
    if ancillae < 1:
        raise InsufficientAncillae(ancillae)
    return row[min(ancillae, len(row)) - 1]


def ncv_costs(k: int) -> Tuple[int, ...]:
    """All populated columns of row ``k`` (1 ancilla, 2 ancillae, ...)."""
    row = NCV_COST_TABLE.rows.get(k)
    if row is None:
        raise OutOfTableRange(k)
    return tuple(row)


def ncvv1_cost(k: int) -> int:
    if k < 0:
        raise OutOfTableRange(k)
    return 1 if k == 0 else 2 * k - 1


def savings_percent(ncv: int, ncvv1: int) -> int:
    """100 * (ncv - ncvv1) / ncv rounded half-up to an integer percent."""
    return (200 * (ncv - ncvv1) + ncv) // (2 * ncv)


def delta_range(k: int) -> Tuple[int, int]:
    """(min, max) savings of NCV-|v1> over NCV across the populated ancilla columns."""
    v1 = ncvv1_cost(k)
    savings = [savings_percent(cost, v1) for cost in ncv_costs(k)]
    return min(savings), max(savings)


def format_delta(low: int, high: int) -> str:
    return f"{low}%" if low == high else f"{low}-{high}%"


def report(circuit: QuantumCircuit) -> CostReport:
    breakdown = [
        GateCost(gate_index=i, k=1 if g.is_controlled else 0, cost=1 if g.is_controlled else 0)
        for i, g in enumerate(circuit.gates)
    ]
    return CostReport(
        total_gates=circuit.gate_count,
        controlled_gates=circuit.controlled_count,
        per_gate_breakdown=breakdown,
    )


def ancillary_lines(gate: ToffoliGate, line_count: int) -> int:
    """Lines that are neither a control nor the target of ``gate``."""
    return line_count - gate.k - 1


def circuit_costs(circuit: ReversibleCircuit, ancillae: Optional[int] = None) -> CircuitCostSummary:
    """Per-gate NCV vs NCV-|v1> costs.

    With ``ancillae`` unset (and no DEFAULT_ANCILLAE setting) each gate uses the
    circuit's own ancillary lines, floored at the table's first column.
    Out-of-table gates are reported on their row and skipped in the NCV total.
    """
    if ancillae is None:
        ancillae = settings.DEFAULT_ANCILLAE

    rows = []
    ncv_total = 0
    ncvv1_total = 0
    incomplete = False
    for index, gate in enumerate(circuit.gates):
        available = ancillae if ancillae is not None else max(1, ancillary_lines(gate, circuit.line_count))
        v1 = ncvv1_cost(gate.k)
        ncvv1_total += v1
        if gate.k == 0:
            ncv = 1  # NOT gate, identical in both libraries
        else:
            try:
                ncv = ncv_cost(gate.k, available)
            except CostError as exc:
                logger.warning("circuit_costs: gate %d: %s", index, exc)
                rows.append(GateCostRow(
                    gate_index=index, k=gate.k, ancillae=available, ncvv1_cost=v1, error=str(exc),
                ))
                incomplete = True
                continue
        ncv_total += ncv
        rows.append(GateCostRow(
            gate_index=index,
            k=gate.k,
            ancillae=available,
            ncv_cost=ncv,
            ncvv1_cost=v1,
            delta_percent=savings_percent(ncv, v1),
        ))

    overall = None
    if ncv_total and not incomplete:
        overall = savings_percent(ncv_total, ncvv1_total)
    logger.info(
        "circuit_costs: %d gates, NCV total %d, NCV-|v1> total %d%s",
        circuit.gate_count, ncv_total, ncvv1_total, " (incomplete)" if incomplete else "",
    )
    return CircuitCostSummary(
        rows=rows,
        ncv_total=ncv_total,
        ncvv1_total=ncvv1_total,
        delta_percent=overall,
        incomplete=incomplete,
    )


# ── Tables as data frames ──────────────────────────────────────────────

def ncv_cost_frame() -> pd.DataFrame:
    """Control count x ancilla count, unpopulated cells as <NA>."""
    columns = range(1, MAX_ANCILLA_COLUMNS + 1)
    data = {
        k: [costs[a - 1] if a <= len(costs) else pd.NA for a in columns]
        for k, costs in sorted(NCV_COST_TABLE.rows.items())
    }
    frame = pd.DataFrame.from_dict(data, orient="index", columns=list(columns)).astype("Int64")
    frame.index.name = "controls"
    frame.columns.name = "ancillae"
    return frame


def ncvv1_cost_frame() -> pd.DataFrame:
    ks = sorted(NCV_COST_TABLE.rows)
    frame = pd.DataFrame(
        {
            "cost": [ncvv1_cost(k) for k in ks],
            "delta": [format_delta(*delta_range(k)) for k in ks],
        },
        index=pd.Index(ks, name="controls"),
    )
    return frame
