"""Lowering of uniformly controlled rotations to single-qubit rotations + CNOTs.

A UCR over m controls lowers to an alternating run of 2**m rotations and
2**m CNOTs.  The rotation angles are the exact linear transform
theta' = M^T theta / 2**m with M[i][j] = (-1)**(binary i . gray j); the CNOT
controls walk the bit-ruler sequence, closing the Gray cycle on the most
significant control line.  One recursion step of the same construction
(split on the top control) is exposed separately because the trade-off
pipeline reuses it.
"""
from __future__ import annotations

from .angles import ExactAngle, half_diff, half_sum
from .gray import binary_gray_dot
from .ir import Circuit, Gate, Kind, SynthesisReport

__all__ = [
    "multiplexed_angles",
    "decomposition_step",
    "cnot_control_sequence",
    "ucr_fragment",
    "synthesize_ucr",
]


def multiplexed_angles(angles) -> list[ExactAngle]:
    """Exact angle transform for the fully lowered UCR, in emission order."""
    angles = list(angles)
    d = len(angles)
    if d < 1 or d & (d - 1):
        raise ValueError(f"angle vector length must be a power of two, got {d}")
    m = d.bit_length() - 1
    out = []
    for j in range(d):
        acc = ExactAngle(0)
        for i in range(d):
            acc = acc - angles[i] if binary_gray_dot(i, j) else acc + angles[i]
        for _ in range(m):
            acc = acc.half()
        out.append(acc)
    return out


def decomposition_step(u: Gate) -> list[Gate]:
    """One split of a UCR on its top control: [UCR', CNOT, UCR'', CNOT].

    The two child UCRs carry the exact half-sum / half-difference angle
    vectors over the remaining controls; the product of the four gates equals
    the input UCR.
    """
    if u.kind is not Kind.UCR:
        raise ValueError(f"expected a ucr gate, got {u.kind}")
    m = len(u.controls)
    if m < 1:
        raise ValueError("cannot split a ucr with no controls")
    r = 1 << (m - 1)
    top, rest = u.controls[0], u.controls[1:]
    sums = [half_sum(u.angles[i], u.angles[r + i]) for i in range(r)]
    diffs = [half_diff(u.angles[i], u.angles[r + i]) for i in range(r)]
    return [
        Gate.ucr(u.axis, rest, u.target, sums),
        Gate.cnot(top, u.target),
        Gate.ucr(u.axis, rest, u.target, diffs),
        Gate.cnot(top, u.target),
    ]


def cnot_control_sequence(m: int) -> tuple[int, ...]:
    """Control-line numbers (1 = least significant, m = most) of the 2**m CNOTs.

    Line of the j-th CNOT is the bit flipping between consecutive Gray
    codewords; the final CNOT closes the cycle on line m.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    return tuple(min((j & -j).bit_length(), m) for j in range(1, (1 << m) + 1))


def ucr_fragment(axis: str, controls, target: int, angles) -> list[Gate]:
    """Lowered gate list for a UCR on explicit wires (controls[0] = MSB)."""
    controls = tuple(controls)
    angles = list(angles)
    m = len(controls)
    if len(angles) != 1 << m:
        raise ValueError(f"need {1 << m} angles, got {len(angles)}")
    if m == 0:
        return [Gate.rotation(axis, angles[0], target)]
    lowered = multiplexed_angles(angles)
    seq = cnot_control_sequence(m)
    gates: list[Gate] = []
    for j in range(1 << m):
        gates.append(Gate.rotation(axis, lowered[j], target))
        gates.append(Gate.cnot(controls[m - seq[j]], target))
    return gates


def synthesize_ucr(axis: str, m: int, angles) -> SynthesisReport:
    """Lower a UCR with m controls into a (m+1)-qubit circuit.

    Wires are 0..m-1 for the controls (0 = most significant) and m for the
    target.  Emits exactly 2**m rotations and 2**m CNOTs.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    circuit = Circuit(m + 1, ucr_fragment(axis, range(m), m, angles))
    return SynthesisReport.for_circuit(circuit, predicted_cnots=1 << m)
