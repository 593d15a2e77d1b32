"""Hamilton quaternion arithmetic on 64-bit floats.

Component order is (scalar, i, j, k) everywhere, including the JSON
interchange form produced by ``to_json``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class Quaternion:
    """A quaternion c1 + c2*i + c3*j + c4*k."""

    c1: float = 0.0
    c2: float = 0.0
    c3: float = 0.0
    c4: float = 0.0

    def components(self) -> tuple[float, float, float, float]:
        return (self.c1, self.c2, self.c3, self.c4)

    def conjugate(self) -> Quaternion:
        return Quaternion(self.c1, -self.c2, -self.c3, -self.c4)

    def norm(self) -> float:
        return math.hypot(self.c1, self.c2, self.c3, self.c4)

    def inverse(self) -> Quaternion:
        n2 = self.c1 * self.c1 + self.c2 * self.c2 + self.c3 * self.c3 + self.c4 * self.c4
        if n2 == 0.0:
            raise ZeroDivisionError("inverse: the zero quaternion is not invertible")
        return Quaternion(self.c1 / n2, -self.c2 / n2, -self.c3 / n2, -self.c4 / n2)

    def to_json(self) -> list[float]:
        return [self.c1, self.c2, self.c3, self.c4]

    def __add__(self, other: Quaternion) -> Quaternion:
        return Quaternion(self.c1 + other.c1, self.c2 + other.c2,
                          self.c3 + other.c3, self.c4 + other.c4)

    def __sub__(self, other: Quaternion) -> Quaternion:
        return Quaternion(self.c1 - other.c1, self.c2 - other.c2,
                          self.c3 - other.c3, self.c4 - other.c4)

    def __neg__(self) -> Quaternion:
        return Quaternion(-self.c1, -self.c2, -self.c3, -self.c4)

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            return hamilton_mul(self, other)
        if isinstance(other, (int, float)):
            return scale(float(other), self)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float)):
            return scale(float(other), self)
        return NotImplemented


ZERO = Quaternion()
ONE = Quaternion(1.0)
I = Quaternion(0.0, 1.0)
J = Quaternion(0.0, 0.0, 1.0)
K = Quaternion(0.0, 0.0, 0.0, 1.0)


def hamilton_mul(p: Quaternion, q: Quaternion) -> Quaternion:
    """Hamilton product p*q, with i**2 = j**2 = k**2 = ijk = -1."""
    return Quaternion(
        p.c1 * q.c1 - p.c2 * q.c2 - p.c3 * q.c3 - p.c4 * q.c4,
        p.c1 * q.c2 + p.c2 * q.c1 + p.c3 * q.c4 - p.c4 * q.c3,
        p.c1 * q.c3 - p.c2 * q.c4 + p.c3 * q.c1 + p.c4 * q.c2,
        p.c1 * q.c4 + p.c2 * q.c3 - p.c3 * q.c2 + p.c4 * q.c1,
    )


def add(p: Quaternion, q: Quaternion) -> Quaternion:
    return p + q


def conjugate(q: Quaternion) -> Quaternion:
    return q.conjugate()


def norm(q: Quaternion) -> float:
    return q.norm()


def inverse(q: Quaternion) -> Quaternion:
    return q.inverse()


def scale(s: float, q: Quaternion) -> Quaternion:
    return Quaternion(s * q.c1, s * q.c2, s * q.c3, s * q.c4)
