"""Circuit intermediate representation.

Contains:
    - Kind: gate tags (lowered set plus the macro gates the passes rewrite)
    - Gate: immutable tagged record, one constructor per kind
    - Circuit: qubit count + ordered gate list (+ optional basis-state hint)
    - metrics: cnot_count, circuit_depth, min_nonzero_angle
    - JSON (de)serialization with arbitrary-precision angle numerators

Qubit 0 is the most significant position in basis-state labels.  Multiplexed
(UCR) angle vectors are indexed by the standard-binary value of the control
register read in `controls` order; Gray-code reorderings are always explicit
rewrite steps, never an index convention.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum

from .angles import ExactAngle

__all__ = [
    "Kind",
    "Gate",
    "Circuit",
    "SynthesisReport",
    "LOWERED_KINDS",
    "cnot_count",
    "circuit_depth",
    "min_nonzero_angle",
]


class Kind(str, Enum):
    X = "x"
    H = "h"
    RZ = "rz"
    RY = "ry"
    P = "p"
    CNOT = "cnot"
    MCR = "mcr"
    MCX = "mcx"
    UCR = "ucr"


LOWERED_KINDS = frozenset({Kind.X, Kind.H, Kind.RZ, Kind.RY, Kind.P, Kind.CNOT})

_ROT_KINDS = frozenset({Kind.RZ, Kind.RY, Kind.P})
_AXIS_KIND = {"z": Kind.RZ, "y": Kind.RY, "p": Kind.P}


@dataclass(frozen=True)
class Gate:
    kind: Kind
    target: int
    control: int | None = None
    controls: tuple[int, ...] = ()
    pattern: str | None = None
    axis: str | None = None
    angle: ExactAngle | None = None
    angles: tuple[ExactAngle, ...] = ()

    @staticmethod
    def x(target: int) -> "Gate":
        return Gate(Kind.X, target)

    @staticmethod
    def h(target: int) -> "Gate":
        return Gate(Kind.H, target)

    @staticmethod
    def rz(angle: ExactAngle, target: int) -> "Gate":
        return Gate(Kind.RZ, target, angle=angle)

    @staticmethod
    def ry(angle: ExactAngle, target: int) -> "Gate":
        return Gate(Kind.RY, target, angle=angle)

    @staticmethod
    def p(angle: ExactAngle, target: int) -> "Gate":
        return Gate(Kind.P, target, angle=angle)

    @staticmethod
    def rotation(axis: str, angle: ExactAngle, target: int) -> "Gate":
        return Gate(_AXIS_KIND[axis], target, angle=angle)

    @staticmethod
    def cnot(control: int, target: int) -> "Gate":
        if control == target:
            raise ValueError("control and target must differ")
        return Gate(Kind.CNOT, target, control=control)

    @staticmethod
    def mcr(axis: str, controls, pattern: str, target: int, angle: ExactAngle) -> "Gate":
        controls = tuple(controls)
        if axis not in ("z", "y", "p"):
            raise ValueError(f"unsupported rotation axis {axis!r}")
        if len(pattern) != len(controls):
            raise ValueError("pattern length must equal control count")
        if any(c not in "01" for c in pattern):
            raise ValueError(f"pattern must be a bitstring, got {pattern!r}")
        _check_distinct(controls, target)
        return Gate(Kind.MCR, target, controls=controls, pattern=pattern, axis=axis, angle=angle)

    @staticmethod
    def mcx(controls, target: int) -> "Gate":
        controls = tuple(controls)
        _check_distinct(controls, target)
        return Gate(Kind.MCX, target, controls=controls)

    @staticmethod
    def ucr(axis: str, controls, target: int, angles) -> "Gate":
        controls = tuple(controls)
        angles = tuple(angles)
        if axis not in ("z", "y"):
            raise ValueError(f"unsupported rotation axis {axis!r}")
        if len(angles) != 1 << len(controls):
            raise ValueError(
                f"angle vector length {len(angles)} != 2**{len(controls)} controls"
            )
        _check_distinct(controls, target)
        return Gate(Kind.UCR, target, controls=controls, axis=axis, angles=angles)

    def wires(self) -> tuple[int, ...]:
        if self.kind is Kind.CNOT:
            return (self.control, self.target)
        if self.controls:
            return self.controls + (self.target,)
        return (self.target,)

    def validate(self, width: int) -> None:
        for w in self.wires():
            if not 0 <= w < width:
                raise ValueError(f"wire {w} out of range for width {width}")
        if len(set(self.wires())) != len(self.wires()):
            raise ValueError(f"repeated wire in {self}")


def _check_distinct(controls: tuple[int, ...], target: int) -> None:
    wires = controls + (target,)
    if len(set(wires)) != len(wires):
        raise ValueError(f"control/target indices must be distinct, got {wires}")


@dataclass
class Circuit:
    width: int
    gates: list[Gate] = field(default_factory=list)
    initial_state_hint: str | None = None  # chars 0/1/x, qubit 0 first

    def __post_init__(self):
        if self.width < 1:
            raise ValueError(f"width must be >= 1, got {self.width}")
        self.validate()

    def validate(self) -> None:
        if self.initial_state_hint is not None:
            if len(self.initial_state_hint) != self.width or any(
                c not in "01x" for c in self.initial_state_hint
            ):
                raise ValueError(f"bad initial_state_hint {self.initial_state_hint!r}")
        for g in self.gates:
            g.validate(self.width)

    @property
    def is_lowered(self) -> bool:
        return all(g.kind in LOWERED_KINDS for g in self.gates)

    def append(self, gate: Gate) -> "Circuit":
        gate.validate(self.width)
        self.gates.append(gate)
        return self

    def extend(self, gates) -> "Circuit":
        for g in gates:
            self.append(g)
        return self

    def to_json(self) -> dict:
        return {
            "width": self.width,
            "initial_state": self.initial_state_hint,
            "gates": [_gate_to_json(g) for g in self.gates],
        }

    @staticmethod
    def from_json(obj: dict) -> "Circuit":
        c = Circuit(int(obj["width"]), initial_state_hint=obj.get("initial_state"))
        for g in obj["gates"]:
            c.append(_gate_from_json(g))
        return c

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, separators=(",", ":")) + "\n"

    @staticmethod
    def loads(text: str) -> "Circuit":
        return Circuit.from_json(json.loads(text))


def _gate_to_json(g: Gate) -> dict:
    if g.kind in (Kind.X, Kind.H):
        return {"kind": g.kind.value, "target": g.target}
    if g.kind in _ROT_KINDS:
        return {"kind": g.kind.value, "target": g.target, "angle": g.angle.to_json()}
    if g.kind is Kind.CNOT:
        return {"kind": "cnot", "control": g.control, "target": g.target}
    if g.kind is Kind.MCX:
        return {"kind": "mcx", "controls": list(g.controls), "target": g.target}
    if g.kind is Kind.MCR:
        return {
            "kind": "mcr",
            "axis": g.axis,
            "controls": list(g.controls),
            "pattern": g.pattern,
            "target": g.target,
            "angle": g.angle.to_json(),
        }
    if g.kind is Kind.UCR:
        return {
            "kind": "ucr",
            "axis": g.axis,
            "controls": list(g.controls),
            "target": g.target,
            "angles": [a.to_json() for a in g.angles],
        }
    raise ValueError(f"unknown gate kind {g.kind}")


def _gate_from_json(obj: dict) -> Gate:
    kind = obj["kind"]
    if kind == "x":
        return Gate.x(obj["target"])
    if kind == "h":
        return Gate.h(obj["target"])
    if kind in ("rz", "ry", "p"):
        angle = ExactAngle.from_json(obj["angle"])
        return Gate(Kind(kind), obj["target"], angle=angle)
    if kind == "cnot":
        return Gate.cnot(obj["control"], obj["target"])
    if kind == "mcx":
        return Gate.mcx(obj["controls"], obj["target"])
    if kind == "mcr":
        return Gate.mcr(
            obj["axis"],
            obj["controls"],
            obj["pattern"],
            obj["target"],
            ExactAngle.from_json(obj["angle"]),
        )
    if kind == "ucr":
        return Gate.ucr(
            obj["axis"],
            obj["controls"],
            obj["target"],
            [ExactAngle.from_json(a) for a in obj["angles"]],
        )
    raise ValueError(f"unknown gate kind {kind!r}")


def _require_lowered(c: Circuit, what: str) -> None:
    for g in c.gates:
        if g.kind not in LOWERED_KINDS:
            raise ValueError(f"{what} requires a lowered circuit, found {g.kind.value} gate")


def cnot_count(c: Circuit) -> int:
    _require_lowered(c, "cnot_count")
    return sum(1 for g in c.gates if g.kind is Kind.CNOT)


def circuit_depth(c: Circuit) -> int:
    """Greedy ASAP layering: gates sharing a wire are ordered, others packed."""
    _require_lowered(c, "circuit_depth")
    level = [0] * c.width
    depth = 0
    for g in c.gates:
        wires = g.wires()
        layer = 1 + max(level[w] for w in wires)
        for w in wires:
            level[w] = layer
        depth = max(depth, layer)
    return depth


def min_nonzero_angle(c: Circuit) -> ExactAngle | None:
    _require_lowered(c, "min_nonzero_angle")
    best: ExactAngle | None = None
    for g in c.gates:
        if g.kind in _ROT_KINDS and not g.angle.is_zero:
            a = abs(g.angle)
            if best is None or a < best:
                best = a
    return best


@dataclass
class SynthesisReport:
    """A synthesized circuit plus the metrics every pass is judged on."""

    circuit: Circuit
    cnot_count: int
    depth: int
    min_angle: ExactAngle | None
    predicted_cnots: int
    prediction_matches: bool
    global_phase: ExactAngle = ExactAngle(0)

    @staticmethod
    def for_circuit(
        circuit: Circuit, predicted_cnots: int, global_phase: ExactAngle = ExactAngle(0)
    ) -> "SynthesisReport":
        n = cnot_count(circuit)
        return SynthesisReport(
            circuit=circuit,
            cnot_count=n,
            depth=circuit_depth(circuit),
            min_angle=min_nonzero_angle(circuit),
            predicted_cnots=predicted_cnots,
            prediction_matches=n == predicted_cnots,
            global_phase=global_phase,
        )

    def to_json(self) -> dict:
        return {
            "cnot_count": self.cnot_count,
            "depth": self.depth,
            "min_angle": None if self.min_angle is None else self.min_angle.to_json(),
            "global_phase": self.global_phase.to_json(),
            "predicted_cnots": self.predicted_cnots,
            "prediction_matches": self.prediction_matches,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, separators=(",", ":")) + "\n"
