"""Circuit synthesis toolkit for quantum hashing.

Pipelines: plain multiplexed-rotation lowering (one CNOT per rotation), the
ancilla-eliminating phase-form rewrite (half the CNOTs), and a k-level
trade-off between CNOT count and rotation-angle granularity.  A dense
simulator, exact-count predictors, and an epsilon-biased parameter-set
search tie the circuits back to the hashing semantics.
"""

from .angles import ExactAngle
from .ir import Circuit, Gate, Kind, SynthesisReport, cnot_count, circuit_depth, min_nonzero_angle

__all__ = [
    "ExactAngle",
    "Circuit",
    "Gate",
    "Kind",
    "SynthesisReport",
    "cnot_count",
    "circuit_depth",
    "min_nonzero_angle",
]
