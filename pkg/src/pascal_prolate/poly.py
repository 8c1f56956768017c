"""Dense univariate polynomials over an exact scalar ring.

Coefficients are stored lowest degree first. The scalar ring is whatever the
coefficients are: ``int``/``Fraction`` for rational work, :class:`ModInt` for
congruences. Trailing zeros are stripped so equality is structural.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable

from .ring import ModInt, rational_to_mod


def _strip(coeffs: list) -> tuple:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class DensePoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs = _strip(list(coeffs))

    @classmethod
    def monomial(cls, k: int, c=1) -> DensePoly:
        return cls([0] * k + [c])

    @classmethod
    def linear(cls, c0, c1) -> DensePoly:
        """c0 + c1 z."""
        return cls([c0, c1])

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __getitem__(self, k: int):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        if isinstance(other, DensePoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction, ModInt)):
            return self == DensePoly([other])
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"DensePoly({list(self.coeffs)!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            c = c.value if isinstance(c, ModInt) else c
            if k == 0:
                terms.append(f"{c}")
            elif k == 1:
                terms.append(f"({c})*z")
            else:
                terms.append(f"({c})*z^{k}")
        return " + ".join(terms)

    # arithmetic

    def _lift(self, other) -> DensePoly:
        if isinstance(other, DensePoly):
            return other
        return DensePoly([other])

    def __add__(self, other):
        other = self._lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return DensePoly(self[k] + other[k] for k in range(n))

    __radd__ = __add__

    def __neg__(self):
        return DensePoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, DensePoly):
            return DensePoly(c * other for c in self.coeffs)
        if self.is_zero() or other.is_zero():
            return DensePoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return DensePoly(out)

    def __rmul__(self, other):
        return DensePoly(other * c for c in self.coeffs)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = DensePoly([1])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __truediv__(self, c):
        """Division by a scalar."""
        return DensePoly(x / c for x in self.coeffs)

    def divmod(self, divisor: DensePoly) -> tuple[DensePoly, DensePoly]:
        """Euclidean division; the divisor's leading coefficient must be invertible."""
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd = divisor.degree
        lead = divisor.coeffs[-1]
        if len(rem) <= dd:
            return DensePoly(), DensePoly(rem)
        quot = [0] * (len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            q = Fraction(c, lead) if isinstance(c, int) and isinstance(lead, int) else c / lead
            quot[i - dd] = q
            for j, d in enumerate(divisor.coeffs):
                rem[i - dd + j] = rem[i - dd + j] - q * d
        return DensePoly(quot), DensePoly(rem[:dd])

    def __floordiv__(self, divisor: DensePoly) -> DensePoly:
        return self.divmod(divisor)[0]

    def __mod__(self, divisor: DensePoly) -> DensePoly:
        return self.divmod(divisor)[1]

    # calculus and evaluation

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> DensePoly:
        return DensePoly(k * c for k, c in enumerate(self.coeffs) if k > 0)

    def compose(self, inner: DensePoly) -> DensePoly:
        """self(inner(z)) by Horner's rule."""
        acc = DensePoly()
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def map(self, fn: Callable) -> DensePoly:
        return DensePoly(fn(c) for c in self.coeffs)

    def reduce_mod(self, p: int, n: int = 1) -> DensePoly:
        """Coefficient-wise image in Z/p^n (denominators must be units)."""
        return self.map(lambda c: rational_to_mod(c, p, n))

    def reversed(self, bound: int) -> DensePoly:
        """z^bound f(1/z); requires bound >= degree."""
        if bound < self.degree:
            raise ValueError("bound below degree")
        coeffs = list(self.coeffs) + [0] * (bound + 1 - len(self.coeffs))
        return DensePoly(coeffs[::-1])

    def is_palindromic(self, bound: int | None = None) -> bool:
        bound = self.degree if bound is None else bound
        return self.reversed(bound) == self

    def valuation(self) -> int:
        """Order of vanishing at z = 0 (-1 for the zero polynomial)."""
        for k, c in enumerate(self.coeffs):
            if c != 0:
                return k
        return -1


Z = DensePoly([0, 1])
ONE = DensePoly([1])


def one_minus_z_pow(k: int) -> DensePoly:
    return DensePoly([1, -1]) ** k
