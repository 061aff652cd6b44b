"""Arithmetic in the prime field F_p for odd primes p > 3.

Coefficients elsewhere in the package are stored as plain ints in [0, p)
for speed; :class:`FieldElement` is the value type exposed at the API
boundary and enforces the field invariants.
"""

from __future__ import annotations

from dataclasses import dataclass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def check_prime(p: int) -> int:
    """Validate the modulus: an odd prime > 3 (so 2, 3, 6 are invertible)."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p <= 3:
        raise ValueError(f"characteristic must exceed 3, got {p}")
    return p


def inv_mod(x: int, p: int) -> int:
    if x % p == 0:
        raise ZeroDivisionError("inversion of zero in F_p")
    return pow(x, -1, p)


@dataclass(frozen=True)
class FieldElement:
    """A residue in F_p, normalized to [0, p)."""

    value: int
    p: int

    def __post_init__(self):
        check_prime(self.p)
        object.__setattr__(self, "value", self.value % self.p)

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.p != self.p:
                raise ValueError(f"mixed primes {self.p} and {other.p}")
            return other
        return FieldElement(int(other), self.p)

    def __add__(self, other):
        other = self._coerce(other)
        return FieldElement(self.value + other.value, self.p)

    def __sub__(self, other):
        other = self._coerce(other)
        return FieldElement(self.value - other.value, self.p)

    def __mul__(self, other):
        other = self._coerce(other)
        return FieldElement(self.value * other.value, self.p)

    def __neg__(self):
        return FieldElement(-self.value, self.p)

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        return FieldElement(pow(self.value, n, self.p), self.p)

    def inv(self) -> "FieldElement":
        return FieldElement(inv_mod(self.value, self.p), self.p)

    def __truediv__(self, other):
        return self * self._coerce(other).inv()

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.value} (mod {self.p})"
