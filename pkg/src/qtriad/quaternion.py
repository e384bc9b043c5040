"""Quaternion arithmetic over complex pairs, plus a point at infinity.

A quaternion q = x0 + x1*e1 + x2*e2 + x3*e3 (with e1^2 = e2^2 = e3^2 =
e1*e2*e3 = -1) is stored as the complex pair (z1, z2) with z1 = x0 + x1*i,
z2 = x2 + x3*i and q = z1 + z2*e2. The pair form is canonical; the real
4-tuple is a derived view with an exact round-trip.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

DEFAULT_TOL = 1e-12


@dataclass(frozen=True, slots=True)
class Quaternion:
    """Immutable quaternion z1 + z2*e2.

    Multiplication follows the pair rule
        (a1 + a2*e2)(b1 + b2*e2) = (a1*b1 - a2*conj(b2)) + (a1*b2 + a2*conj(b1))*e2
    which encodes e1*e2 = e3 and the anticommutation of the imaginary units.
    Scalars (int/float/complex) multiply as quaternions with zero e2 part, so
    q * c and c * q differ for non-real c, as they must.
    """

    z1: complex = 0j
    z2: complex = 0j

    def __post_init__(self):
        object.__setattr__(self, "z1", complex(self.z1))
        object.__setattr__(self, "z2", complex(self.z2))
        for part in (self.z1.real, self.z1.imag, self.z2.real, self.z2.imag):
            if not math.isfinite(part):
                raise ValueError(f"quaternion components must be finite, got {part!r}")

    @classmethod
    def from_components(cls, x0: float, x1: float, x2: float, x3: float) -> "Quaternion":
        """Build from the real 4-tuple (x0, x1, x2, x3)."""
        return cls(complex(x0, x1), complex(x2, x3))

    def components(self) -> tuple[float, float, float, float]:
        """Real 4-tuple view (exact; no rounding)."""
        return (self.z1.real, self.z1.imag, self.z2.real, self.z2.imag)

    def conjugate(self) -> "Quaternion":
        """Negate the e1, e2, e3 parts: conj(z1 + z2*e2) = conj(z1) - z2*e2."""
        return Quaternion(self.z1.conjugate(), -self.z2)

    def norm_sq(self) -> float:
        return (
            self.z1.real * self.z1.real
            + self.z1.imag * self.z1.imag
            + self.z2.real * self.z2.real
            + self.z2.imag * self.z2.imag
        )

    def norm(self) -> float:
        return math.hypot(self.z1.real, self.z1.imag, self.z2.real, self.z2.imag)

    def inverse(self) -> "Quaternion":
        """Multiplicative inverse conj(q)/|q|^2.

        Raises ZeroDivisionError on the zero quaternion; mapping that case to
        the point at infinity is the projection layer's job, not the algebra's.
        """
        n2 = self.norm_sq()
        if n2 == 0.0:
            raise ZeroDivisionError("zero quaternion has no inverse")
        return Quaternion(self.z1.conjugate() / n2, -self.z2 / n2)

    def isclose(self, other: "Quaternion", tol: float = DEFAULT_TOL) -> bool:
        """Componentwise closeness within an absolute tolerance.

        Exact equality is the dataclass ``==``; this is the float-friendly one.
        """
        return (
            abs(self.z1 - other.z1) <= tol and abs(self.z2 - other.z2) <= tol
        )

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            b1, b2 = other.z1, other.z2
        elif isinstance(other, (int, float, complex)):
            b1, b2 = complex(other), 0j
        else:
            return NotImplemented
        return Quaternion(
            self.z1 * b1 - self.z2 * b2.conjugate(),
            self.z1 * b2 + self.z2 * b1.conjugate(),
        )

    def __rmul__(self, other):
        if isinstance(other, (int, float, complex)):
            return Quaternion(complex(other) * self.z1, complex(other) * self.z2)
        return NotImplemented

    def __add__(self, other):
        if isinstance(other, Quaternion):
            return Quaternion(self.z1 + other.z1, self.z2 + other.z2)
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, Quaternion):
            return Quaternion(self.z1 - other.z1, self.z2 - other.z2)
        return NotImplemented

    def __neg__(self):
        return Quaternion(-self.z1, -self.z2)

    def __abs__(self) -> float:
        return self.norm()


ZERO = Quaternion(0j, 0j)
ONE = Quaternion(1 + 0j, 0j)
E1 = Quaternion(1j, 0j)
E2 = Quaternion(0j, 1 + 0j)
E3 = Quaternion(0j, 1j)


class _Infinity:
    """The point at infinity of the extended quaternions.

    A singleton carrying no payload; it never compares equal to a finite
    Quaternion.
    """

    __slots__ = ()

    def __repr__(self) -> str:
        return "inf"


INFINITY = _Infinity()

ExtendedQuaternion = Quaternion | _Infinity


def is_infinite(q: ExtendedQuaternion) -> bool:
    return q is INFINITY
