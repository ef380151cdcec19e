"""Arithmetic in the prime field F_p.

Polynomials keep their coefficients as plain reduced ints for speed; the
:class:`FieldElement` wrapper is what crosses the public API (evaluation
results, explicit scalar work).
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import CapacityExceeded, DivisionByZero, ModulusMismatch, NotPrime

MAX_MODULUS = 2**20


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class PrimeModulus:
    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or not is_prime(self.p):
            raise NotPrime(f"{self.p!r} is not a prime")

    def __call__(self, value: int) -> FieldElement:
        return FieldElement(value % self.p, self)

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise DivisionByZero("0 has no inverse")
        return pow(a, -1, self.p)

    def elements(self):
        return [FieldElement(v, self) for v in range(self.p)]


def make_modulus(p: int, cap: int = MAX_MODULUS) -> PrimeModulus:
    if not isinstance(p, int) or isinstance(p, bool):
        raise NotPrime(f"{p!r} is not an integer")
    if p > cap:
        if is_prime(p):
            raise CapacityExceeded(f"modulus {p} exceeds cap {cap}")
        raise NotPrime(f"{p} is not a prime")
    return PrimeModulus(p)


@dataclass(frozen=True)
class FieldElement:
    value: int
    modulus: PrimeModulus

    def __post_init__(self):
        if not 0 <= self.value < self.modulus.p:
            object.__setattr__(self, "value", self.value % self.modulus.p)

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.modulus.p != self.modulus.p:
                raise ModulusMismatch(f"F_{self.modulus.p} vs F_{other.modulus.p}")
            return other.value
        if isinstance(other, int):
            return other % self.modulus.p
        return NotImplemented

    def _new(self, v: int) -> FieldElement:
        return FieldElement(v % self.modulus.p, self.modulus)

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._new(self.value + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._new(self.value - o)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._new(o - self.value)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._new(self.value * o)

    __rmul__ = __mul__

    def __neg__(self):
        return self._new(-self.value)

    def inv(self) -> FieldElement:
        return self._new(self.modulus.inv(self.value))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self._new(self.value * self.modulus.inv(o))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self._new(o * self.modulus.inv(self.value))

    def __pow__(self, k: int):
        if k < 0:
            return self.inv() ** (-k)
        return self._new(pow(self.value, k, self.modulus.p))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.modulus.p == other.modulus.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.modulus.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.modulus.p))

    def __int__(self):
        return self.value

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"{self.value} (mod {self.modulus.p})"


def field_arith(a: FieldElement, b: FieldElement | int | None, op: str) -> FieldElement:
    """Dispatch a named field operation; ``b`` is ignored for ``neg``/``inv``
    and must be an int exponent for ``pow``."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if isinstance(b, FieldElement) and b.modulus.p != a.modulus.p:
            raise ModulusMismatch(f"F_{a.modulus.p} vs F_{b.modulus.p}")
        return a / b
    if op == "pow":
        return a ** int(b)
    if op == "neg":
        return -a
    if op == "inv":
        return a.inv()
    raise ValueError(f"unknown field operation {op!r}")
