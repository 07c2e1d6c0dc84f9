"""Dense state-vector / unitary oracle for desk-scale verification (<= 12 qubits).

Macro gates (mcx, mcr, ucr) are applied straight from their defining action
on basis states, NOT by lowering them, so this oracle stays independent of
the synthesis passes it checks.

States are flat complex vectors of length 2**width indexed big-endian
(qubit 0 is the most significant bit of the index).
"""
from __future__ import annotations

import math

import numpy as np

from .ir import Circuit, Gate, Kind

__all__ = [
    "MAX_UNITARY_QUBITS",
    "basis_state",
    "apply",
    "unitary_of",
    "equivalent_up_to_phase",
    "global_phase_factor",
    "fidelity",
]

MAX_UNITARY_QUBITS = 12

_SQRT2_INV = 1.0 / math.sqrt(2.0)


def basis_state(width: int, bits: str | int = 0) -> np.ndarray:
    if isinstance(bits, str):
        if len(bits) != width:
            raise ValueError(f"bitstring length {len(bits)} != width {width}")
        bits = int(bits, 2)
    v = np.zeros(1 << width, dtype=complex)
    v[bits] = 1.0
    return v


def _axis_matrix(axis: str, theta: float) -> np.ndarray:
    h = theta / 2.0
    if axis == "z":
        return np.array([[np.exp(-1j * h), 0], [0, np.exp(1j * h)]])
    if axis == "y":
        c, s = math.cos(h), math.sin(h)
        return np.array([[c, -s], [s, c]], dtype=complex)
    if axis == "p":
        return np.array([[1, 0], [0, np.exp(1j * h)]])
    raise ValueError(f"unknown axis {axis!r}")


def _apply_2x2(t: np.ndarray, mat: np.ndarray, axis: int) -> None:
    """In-place 2x2 on one tensor axis; works with any extra trailing axes."""
    i0 = tuple(slice(None) if k != axis else 0 for k in range(t.ndim))
    i1 = tuple(slice(None) if k != axis else 1 for k in range(t.ndim))
    s0, s1 = t[i0].copy(), t[i1].copy()
    t[i0] = mat[0, 0] * s0 + mat[0, 1] * s1
    t[i1] = mat[1, 0] * s0 + mat[1, 1] * s1


def _apply_gate(t: np.ndarray, g: Gate, width: int) -> None:
    k = g.kind
    if k is Kind.X:
        _apply_2x2(t, np.array([[0, 1], [1, 0]], dtype=complex), g.target)
    elif k is Kind.H:
        _apply_2x2(t, _SQRT2_INV * np.array([[1, 1], [1, -1]], dtype=complex), g.target)
    elif k in (Kind.RZ, Kind.RY, Kind.P):
        axis = {"rz": "z", "ry": "y", "p": "p"}[k.value]
        _apply_2x2(t, _axis_matrix(axis, g.angle.to_float()), g.target)
    elif k is Kind.CNOT:
        idx = [slice(None)] * t.ndim
        idx[g.control] = 1
        sub = t[tuple(idx)]
        tgt = g.target - (1 if g.control < g.target else 0)
        _apply_2x2(sub, np.array([[0, 1], [1, 0]], dtype=complex), tgt)
    elif k is Kind.MCX:
        sub, tgt = _control_view(t, g.controls, "1" * len(g.controls), g.target)
        _apply_2x2(sub, np.array([[0, 1], [1, 0]], dtype=complex), tgt)
    elif k is Kind.MCR:
        sub, tgt = _control_view(t, g.controls, g.pattern, g.target)
        _apply_2x2(sub, _axis_matrix(g.axis, g.angle.to_float()), tgt)
    elif k is Kind.UCR:
        m = len(g.controls)
        for val in range(1 << m):
            pattern = format(val, f"0{m}b") if m else ""
            sub, tgt = _control_view(t, g.controls, pattern, g.target)
            _apply_2x2(sub, _axis_matrix(g.axis, g.angles[val].to_float()), tgt)
    else:
        raise ValueError(f"cannot simulate gate kind {k}")


def _control_view(t: np.ndarray, controls: tuple[int, ...], pattern: str, target: int):
    idx: list = [slice(None)] * t.ndim
    for c, b in zip(controls, pattern):
        idx[c] = int(b)
    sub = t[tuple(idx)]
    tgt = target - sum(1 for c in controls if c < target)
    return sub, tgt


def apply(c: Circuit, state: np.ndarray | None = None) -> np.ndarray:
    """Apply the circuit's gates in order; returns a fresh state vector."""
    dim = 1 << c.width
    if state is None:
        state = basis_state(c.width)
    if state.shape != (dim,):
        raise ValueError(f"state length {state.shape} does not match width {c.width}")
    in_norm = np.linalg.norm(state)
    t = state.astype(complex).reshape((2,) * c.width)
    for g in c.gates:
        _apply_gate(t, g, c.width)
    out = t.reshape(dim)
    assert abs(np.linalg.norm(out) - in_norm) < 1e-12, "norm drifted"
    return out


def unitary_of(c: Circuit) -> np.ndarray:
    """Full matrix of the circuit, gates applied in order to identity columns."""
    if c.width > MAX_UNITARY_QUBITS:
        raise ValueError(f"width {c.width} exceeds unitary limit {MAX_UNITARY_QUBITS}")
    dim = 1 << c.width
    t = np.eye(dim, dtype=complex).reshape((2,) * c.width + (dim,))
    for g in c.gates:
        _apply_gate(t, g, c.width)
    return t.reshape(dim, dim)


def global_phase_factor(u: np.ndarray, v: np.ndarray, tol: float = 1e-10) -> complex | None:
    """The unit scalar lam with u^dagger v = lam * I within tol, else None.

    lam is read off the largest-modulus entry of u^dagger v to avoid
    near-zero divisions.
    """
    if u.shape != v.shape:
        raise ValueError(f"shape mismatch {u.shape} vs {v.shape}")
    w = u.conj().T @ v
    k = np.unravel_index(np.argmax(np.abs(w)), w.shape)
    lam = w[k]
    if abs(abs(lam) - 1.0) > tol:
        return None
    lam = lam / abs(lam)
    if np.max(np.abs(w - lam * np.eye(w.shape[0]))) > tol:
        return None
    return lam


def equivalent_up_to_phase(u: np.ndarray, v: np.ndarray, tol: float = 1e-10) -> bool:
    """True iff u^dagger v = lam * I for some unit-modulus lam, within tol."""
    if u.shape != v.shape:
        raise ValueError(f"shape mismatch {u.shape} vs {v.shape}")
    w = u.conj().T @ v
    k = np.unravel_index(np.argmax(np.abs(w)), w.shape)
    lam = w[k]
    if abs(abs(lam) - 1.0) > tol:
        return False
    lam = lam / abs(lam)
    return bool(np.max(np.abs(w - lam * np.eye(w.shape[0]))) <= tol)


def fidelity(s1: np.ndarray, s2: np.ndarray) -> float:
    if s1.shape != s2.shape:
        raise ValueError(f"shape mismatch {s1.shape} vs {s2.shape}")
    return float(abs(np.vdot(s1, s2)))
