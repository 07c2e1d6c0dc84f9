"""Exact rotation angles as rational multiples of pi.

An angle is stored as ``num * pi / (den_base * 2**den_exp)``.  ``den_base``
carries the odd-ish part of the denominator (the hash modulus q, usually 1
otherwise) and ``den_exp`` counts halvings that have not cancelled against
the numerator.  Every operation used by the synthesis passes (sum,
difference, halving) is integer-exact; conversion to float happens only at
simulation or emission time.

Angles are deliberately NOT reduced mod 2*pi: global-phase bookkeeping in
the rewrite passes needs the unreduced values.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

__all__ = ["ExactAngle", "ZERO", "PI", "half_sum", "half_diff", "angle_sum"]


@dataclass(frozen=True, eq=False)
class ExactAngle:
    num: int
    den_base: int = 1
    den_exp: int = 0

    def __post_init__(self):
        num, base, exp = self.num, self.den_base, self.den_exp
        if base <= 0:
            raise ValueError(f"den_base must be positive, got {base}")
        if exp < 0:
            raise ValueError(f"den_exp must be non-negative, got {exp}")
        if num == 0:
            base, exp = 1, 0
        else:
            g = math.gcd(num, base)
            if g > 1:
                num //= g
                base //= g
            while exp > 0 and num % 2 == 0:
                num //= 2
                exp -= 1
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den_base", base)
        object.__setattr__(self, "den_exp", exp)

    # The canonical (num, den_base, den_exp) split is not unique across
    # different den_base/den_exp factorings of the same value, so equality
    # and hashing go through the exact rational value in units of pi.
    def value(self) -> Fraction:
        return Fraction(self.num, self.den_base << self.den_exp)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactAngle):
            return NotImplemented
        return self.value() == other.value()

    def __hash__(self) -> int:
        return hash(self.value())

    def __lt__(self, other: "ExactAngle") -> bool:
        return self.value() < other.value()

    def __le__(self, other: "ExactAngle") -> bool:
        return self.value() <= other.value()

    def __neg__(self) -> "ExactAngle":
        return ExactAngle(-self.num, self.den_base, self.den_exp)

    def __add__(self, other: "ExactAngle") -> "ExactAngle":
        if not isinstance(other, ExactAngle):
            return NotImplemented
        base = self.den_base * other.den_base // math.gcd(self.den_base, other.den_base)
        exp = max(self.den_exp, other.den_exp)
        num = self.num * (base // self.den_base) * (1 << (exp - self.den_exp)) + other.num * (
            base // other.den_base
        ) * (1 << (exp - other.den_exp))
        return ExactAngle(num, base, exp)

    def __sub__(self, other: "ExactAngle") -> "ExactAngle":
        return self + (-other)

    def half(self) -> "ExactAngle":
        return ExactAngle(self.num, self.den_base, self.den_exp + 1)

    def quarter(self) -> "ExactAngle":
        return ExactAngle(self.num, self.den_base, self.den_exp + 2)

    def __abs__(self) -> "ExactAngle":
        return ExactAngle(abs(self.num), self.den_base, self.den_exp)

    @property
    def is_zero(self) -> bool:
        return self.num == 0

    def to_float(self) -> float:
        return float(self.value()) * math.pi

    @staticmethod
    def from_total_den(num: int, den: int) -> "ExactAngle":
        """Build from num*pi/den, splitting den into odd part and 2-adic part."""
        if den <= 0:
            raise ValueError(f"denominator must be positive, got {den}")
        exp = 0
        while den % 2 == 0:
            den //= 2
            exp += 1
        return ExactAngle(num, den, exp)

    def to_json(self) -> dict:
        return {"num": str(self.num), "den_base": self.den_base, "den_exp": self.den_exp}

    @staticmethod
    def from_json(obj: dict) -> "ExactAngle":
        return ExactAngle(int(obj["num"]), int(obj["den_base"]), int(obj["den_exp"]))

    def __repr__(self) -> str:
        if self.num == 0:
            return "ExactAngle(0)"
        den = self.den_base << self.den_exp
        return f"ExactAngle({self.num}*pi/{den})" if den > 1 else f"ExactAngle({self.num}*pi)"


ZERO = ExactAngle(0)
PI = ExactAngle(1)


def half_sum(a: ExactAngle, b: ExactAngle) -> ExactAngle:
    """(a + b) / 2, exact."""
    return (a + b).half()


def half_diff(a: ExactAngle, b: ExactAngle) -> ExactAngle:
    """(a - b) / 2, exact."""
    return (a - b).half()


def angle_sum(angles) -> ExactAngle:
    total = ZERO
    for a in angles:
        total = total + a
    return total
