"""Ancilla elimination for the phase-form hash circuit.

The pre-rewrite circuit uses m+1 qubits: Hadamards on the m-qubit register,
an X preparing the |1> target, and a multiplexed z-rotation onto that
target (2**m CNOTs once lowered).  The rewrite chain below (split a
controlled Rz into two controlled phase shifts, turn phase shifts into
half-angle rotations, flip rotation signs through X) removes the target
qubit and emits an m-qubit circuit with half the CNOTs, built from the
pairwise half-difference angles.

Caveat, measured and deliberate: with 2**(m-1) CNOTs the rewritten circuit
reproduces the register state exactly only for m = 1.  For m >= 2 the
rewrite drops per-pair mean phases exp(i(theta_2i + theta_2i+1)/4), which
are control-conditioned, not global; no circuit of this CNOT budget can
carry them for generic angles.  `exact=True` appends the cascaded
multiplexed-rotation correction (2**(m-1) - 2 extra CNOTs, still below the
pre-rewrite count) which restores fidelity 1.
"""
from __future__ import annotations

from dataclasses import dataclass, replace

from .angles import ExactAngle, angle_sum, half_diff
from .ir import Circuit, Gate, Kind, SynthesisReport
from .ucr import ucr_fragment

__all__ = [
    "PhaseHashSpec",
    "split_controlled_rz",
    "phase_to_rz",
    "conjugate_rz_by_x",
    "reduce_phase_angles",
    "ancilla_phase_circuit",
    "synthesize_phase_hash",
    "diagonal_phase_fragment",
]


@dataclass(frozen=True)
class PhaseHashSpec:
    """Angle vector of a phase-form hash over a 2**m dimensional register."""

    m: int
    angles: tuple[ExactAngle, ...]
    includes_ancilla: bool = False

    def __post_init__(self):
        if self.m < 1:
            raise ValueError(f"m must be >= 1, got {self.m}")
        if len(self.angles) != 1 << self.m:
            raise ValueError(f"need {1 << self.m} angles, got {len(self.angles)}")


def split_controlled_rz(g: Gate) -> tuple[Gate, Gate]:
    """Split an all-ones controlled Rz into two controlled phase shifts.

    Both factors target the qubit that was the last control; they are
    conditioned on the old target being |0> (negative angle) and |1>
    (positive angle).  The matrix product equals the input gate exactly.
    """
    if g.kind is not Kind.MCR or g.axis != "z":
        raise ValueError("expected a multi-controlled z rotation")
    if g.pattern != "1" * len(g.controls):
        raise ValueError("expected an all-ones control pattern")
    if len(g.controls) < 1:
        raise ValueError("need at least one control to split")
    new_target = g.controls[-1]
    shared = g.controls[:-1] + (g.target,)
    ones = "1" * (len(g.controls) - 1)
    lo = Gate.mcr("p", shared, ones + "0", new_target, -g.angle)
    hi = Gate.mcr("p", shared, ones + "1", new_target, g.angle)
    return lo, hi


def phase_to_rz(g: Gate) -> tuple[Gate, ExactAngle]:
    """Phase shift as a half-angle z rotation plus a quarter-angle global phase."""
    if g.kind is not Kind.P:
        raise ValueError("expected a phase-shift gate")
    return Gate.rz(g.angle.half(), g.target), g.angle.quarter()


def conjugate_rz_by_x(g: Gate, x: Gate) -> tuple[Gate, Gate]:
    """Swap [controlled-Rz, X-on-target] into [X-on-target, controlled-Rz(-theta)].

    The returned pair is the same unitary as the input pair, gate lists read
    left to right.
    """
    if g.kind is not Kind.MCR or g.axis != "z":
        raise ValueError("expected a multi-controlled z rotation")
    if x.kind is not Kind.X or x.target != g.target:
        raise ValueError("X gate must act on the rotation target")
    return x, replace(g, angle=-g.angle)


def reduce_phase_angles(angles) -> list[ExactAngle]:
    """Pairwise half differences (theta_2i - theta_2i+1)/2, exact."""
    angles = list(angles)
    if len(angles) % 2:
        raise ValueError(f"angle vector length must be even, got {len(angles)}")
    return [half_diff(angles[2 * i], angles[2 * i + 1]) for i in range(len(angles) // 2)]


def ancilla_phase_circuit(m: int, angles) -> SynthesisReport:
    """Pre-rewrite form: H on the register, X on the |1> target, lowered UCR."""
    spec = PhaseHashSpec(m, tuple(angles), includes_ancilla=True)
    gates = [Gate.h(q) for q in range(m)]
    gates.append(Gate.x(m))
    gates += ucr_fragment("z", range(m), m, spec.angles)
    return SynthesisReport.for_circuit(Circuit(m + 1, gates), predicted_cnots=1 << m)


def diagonal_phase_fragment(wires, phases) -> tuple[list[Gate], ExactAngle]:
    """Gates applying exp(i phases[j]) to basis |j> of the given wires.

    Cascaded multiplexed z-rotations: differences drive the bottom wire,
    pair means recurse upward.  Returns (gates, leftover global phase).
    """
    wires = tuple(wires)
    phases = list(phases)
    if len(phases) != 1 << len(wires):
        raise ValueError("need one phase per basis state")
    if not wires:
        return [], phases[0]
    diffs = [phases[2 * i + 1] - phases[2 * i] for i in range(len(phases) // 2)]
    means = [(phases[2 * i] + phases[2 * i + 1]).half() for i in range(len(phases) // 2)]
    gates = ucr_fragment("z", wires[:-1], wires[-1], diffs)
    rest, leftover = diagonal_phase_fragment(wires[:-1], means)
    return gates + rest, leftover


def synthesize_phase_hash(spec: PhaseHashSpec, exact: bool = False) -> SynthesisReport:
    """Ancilla-free phase-form circuit on m qubits with 2**(m-1) CNOTs.

    The emitted circuit is H on every qubit, a multiplexed z-rotation with
    the pairwise half-difference angles onto the last qubit, and a closing X
    on that qubit.  The recorded global phase is sum(theta)/2**(m+1), the
    factor that makes the m=1 case (and the `exact` variant) match the
    pre-rewrite state exactly.
    """
    m, angles = spec.m, spec.angles
    reduced = reduce_phase_angles(angles)
    gates = [Gate.h(q) for q in range(m)]
    gates += ucr_fragment("z", range(m - 1), m - 1, reduced)
    gates.append(Gate.x(m - 1))
    phase = angle_sum(angles)
    for _ in range(m + 1):
        phase = phase.half()
    if exact and m >= 2:
        means = [(angles[2 * i] + angles[2 * i + 1]).quarter() for i in range(len(angles) // 2)]
        correction, leftover = diagonal_phase_fragment(range(m - 1), means)
        gates += correction
        phase = leftover
    predicted = 1 << (m - 1)
    if exact:
        predicted += (1 << (m - 1)) - 2 if m >= 2 else 0
    return SynthesisReport.for_circuit(Circuit(m, gates), predicted, global_phase=phase)
