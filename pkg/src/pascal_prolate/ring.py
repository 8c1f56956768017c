"""Exact scalars: rationals, residues mod p^n, Legendre symbols, binomials."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

# Python's Fraction is always reduced with a positive denominator.
ExactRational = Fraction

Rational = Union[int, Fraction]


class NonInvertibleDenominator(ArithmeticError):
    """A rational whose denominator is divisible by p cannot be reduced mod p^n."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


def check_odd_prime(p: int) -> None:
    if not isinstance(p, int) or p < 3 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p!r}")


class ModInt:
    """Residue class in Z/p^n for an odd prime p.

    Plain ints mix freely; two ModInts must share p and n.
    """

    __slots__ = ("value", "p", "n", "modulus")

    def __init__(self, value: int, p: int, n: int = 1):
        if n < 1:
            raise ValueError("level n must be >= 1")
        m = p**n
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "modulus", m)
        object.__setattr__(self, "value", value % m)

    def __setattr__(self, name, value):
        raise AttributeError("ModInt is immutable")

    def _coerce(self, other) -> int:
        if isinstance(other, ModInt):
            if other.modulus != self.modulus:
                raise ValueError(
                    f"modulus mismatch: {self.modulus} vs {other.modulus}")
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def _new(self, value: int) -> ModInt:
        return ModInt(value, self.p, self.n)

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._new(self.value + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._new(self.value - o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._new(o - self.value)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._new(self.value * o)

    __rmul__ = __mul__

    def __neg__(self):
        return self._new(-self.value)

    def __pos__(self):
        return self

    def inverse(self) -> ModInt:
        if self.value % self.p == 0:
            raise ZeroDivisionError(f"{self.value} is not a unit mod {self.modulus}")
        return self._new(pow(self.value, -1, self.modulus))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * self._new(o).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self.inverse() * o

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return self._new(pow(self.value, k, self.modulus))

    def __eq__(self, other):
        if isinstance(other, ModInt):
            return self.modulus == other.modulus and self.value == other.value
        if isinstance(other, int):
            return (self.value - other) % self.modulus == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.modulus))

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"ModInt({self.value}, {self.p}, {self.n})"

    def __str__(self):
        return f"{self.value} (mod {self.modulus})"


def legendre_symbol(a: int, p: int) -> int:
    """Legendre symbol (a/p) by Euler's criterion; 0 when p divides a."""
    if p < 3 or p % 2 == 0:
        raise ValueError(f"p must be an odd prime, got {p}")
    a %= p
    if a == 0:
        return 0
    r = pow(a, (p - 1) // 2, p)
    return 1 if r == 1 else -1


def pochhammer(q: Rational, k: int) -> Fraction:
    """Rising factorial q(q+1)...(q+k-1)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    q = Fraction(q)
    out = Fraction(1)
    for i in range(k):
        out *= q + i
    return out


def binomial(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def rational_to_mod(x: Rational, p: int, n: int = 1) -> ModInt:
    x = Fraction(x)
    if x.denominator % p == 0:
        raise NonInvertibleDenominator(f"{x} has denominator divisible by {p}")
    m = p**n
    return ModInt(x.numerator * pow(x.denominator, -1, m), p, n)


def format_rational(x: Rational) -> str:
    """Serialize as 'num/den', or just 'num' for integers."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"
