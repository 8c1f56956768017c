"""The period series F(z) = 2F1(1/2, 1/2; 1; z), the polynomials U_n, and
the congruence U_n(z) = F(z)^2 mod p^n on the open p-adic unit disk.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .genfun import theorem_A_poly
from .poly import DensePoly
from .ring import check_odd_prime, pochhammer, rational_to_mod


class TruncatedSeries:
    """Power series known modulo z^order (order may be math.inf for polynomials)."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Sequence, order: float):
        if order != math.inf:
            coeffs = list(coeffs)[: int(order)]
        self.coeffs = [Fraction(c) for c in coeffs]
        self.order = order

    @classmethod
    def exact(cls, poly) -> TruncatedSeries:
        coeffs = poly.coeffs if isinstance(poly, DensePoly) else [poly]
        return cls(coeffs, math.inf)

    def __getitem__(self, k: int) -> Fraction:
        if k >= self.order:
            raise IndexError(f"coefficient {k} beyond known order {self.order}")
        return self.coeffs[k] if k < len(self.coeffs) else Fraction(0)

    def valuation(self) -> float:
        for k, c in enumerate(self.coeffs):
            if c != 0:
                return k
        return self.order

    def known(self) -> list[Fraction]:
        """Coefficients that are determined, padded with zeros up to the order."""
        if self.order == math.inf:
            return list(self.coeffs)
        n = int(self.order)
        return self.coeffs[:n] + [Fraction(0)] * (n - len(self.coeffs))

    def _lift(self, other) -> TruncatedSeries:
        if isinstance(other, TruncatedSeries):
            return other
        return TruncatedSeries.exact(other)

    def __add__(self, other):
        other = self._lift(other)
        order = min(self.order, other.order)
        n = max(len(self.coeffs), len(other.coeffs))
        if order != math.inf:
            n = min(n, int(order))
        a, b = self.coeffs, other.coeffs
        return TruncatedSeries(
            [(a[k] if k < len(a) else 0) + (b[k] if k < len(b) else 0) for k in range(n)],
            order)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __mul__(self, other):
        other = self._lift(other)
        order =min(self.order + other.valuation(), other.order + self.valuation())
        n = len(self.coeffs) + len(other.coeffs) - 1
        if order != math.inf:
            n = min(n, int(order))
        out = [Fraction(0)] * max(n, 0)
        for i, a in enumerate(self.coeffs):
            if a == 0 or i >= n:
                continue
            for j, b in enumerate(other.coeffs[: n - i]):
                out[i + j] += a * b
        return TruncatedSeries(out, order)

    __rmul__ = __mul__

    def derivative(self) -> TruncatedSeries:
        return TruncatedSeries([k * c for k, c in enumerate(self.coeffs) if k > 0],
                               self.order - 1)

    def truncate(self, n: int) -> DensePoly:
        return DensePoly(self[k] for k in range(n))

    def __repr__(self):
        return f"TruncatedSeries({self.coeffs!r}, order={self.order})"


def _p(coeffs) -> TruncatedSeries:
    return TruncatedSeries.exact(DensePoly(coeffs))


def period_series(K: int) -> TruncatedSeries:
    """F(z) = sum_k ((1/2)_k / k!)^2 z^k, known through z^(K-1)."""
    if K < 1:
        raise ValueError("K must be >= 1")
    half = Fraction(1, 2)
    return TruncatedSeries(
        [(pochhammer(half, k) / math.factorial(k)) ** 2 for k in range(K)], K)


def hypergeometric_residual(f: TruncatedSeries) -> TruncatedSeries:
    """z(1-z) f'' + (1-2z) f' - f/4."""
    d1 = f.derivative()
    d2 = d1.derivative()
    return _p([0, 1, -1]) * d2 + _p([1, -2]) * d1 - Fraction(1, 4) * f


def symmetric_square_residual(f: TruncatedSeries) -> TruncatedSeries:
    """z^2(1-z)^2 f''' + 3z(1-z)(1-2z) f'' + (1-7z(1-z)) f' - (1/2-z) f."""
    d1 = f.derivative()
    d2 = d1.derivative()
    d3 = d2.derivative()
    return (_p([0, 0, 1, -2, 1]) * d3
            + _p([0, 3, -9, 6]) * d2
            + _p([1, -7, 7]) * d1
            - _p([Fraction(1, 2), -1]) * f)


def _vanishes_through(r: TruncatedSeries, last: int) -> bool:
    return all(r[k] == 0 for k in range(last + 1))


def hypergeometric_ode_check(K: int, series: TruncatedSeries | None = None) -> bool:
    """Residual of the hypergeometric equation vanishes through z^(K-2)."""
    f = period_series(K) if series is None else series
    if f.order < K:
        raise ValueError("series known to lower order than K")
    return _vanishes_through(hypergeometric_residual(f), K - 2)


def symmetric_square_ode_check(K: int, series: TruncatedSeries | None = None) -> bool:
    """Residual of the symmetric-square equation at F^2 vanishes through z^(K-3)."""
    if series is None:
        F = period_series(K)
        series = F * F
    if series.order < K:
        raise ValueError("series known to lower order than K")
    return _vanishes_through(symmetric_square_residual(series), K - 3)


def U_n_poly(p: int, n: int) -> DensePoly:
    """theorem_A_poly(p^n - 1)."""
    check_odd_prime(p)
    if n < 1:
        raise ValueError("level n must be >= 1")
    return theorem_A_poly(p**n - 1)


@dataclass
class PadicReport:
    p: int
    n: int
    samples: list
    ok: bool
    witness: Optional[int] = None
    details: list = field(default_factory=list)

    def as_dict(self) -> dict:
        return {"p": self.p, "n": self.n, "samples": self.samples,
                "pass": self.ok, "witness": self.witness}


def padic_congruence_check(p: int, n: int, samples: Iterable[int],
                           U: DensePoly | None = None) -> PadicReport:
    """U_n(pt) = (sum_{k<n} c_k (pt)^k)^2 mod p^n for each sample t.

    U_n is evaluated exactly at z = pt and only then reduced; individual
    coefficients of U_n may carry p in their denominators.
    """
    U = U_n_poly(p, n) if U is None else U
    F = period_series(n).truncate(n)
    samples = list(samples)
    details = []
    witness = None
    for t in samples:
        z = p * t
        lhs = rational_to_mod(U(Fraction(z)), p, n)
        rhs = rational_to_mod(F(Fraction(z)) ** 2, p, n)
        details.append((t, lhs.value, rhs.value))
        if lhs != rhs and witness is None:
            witness = t
    return PadicReport(p, n, samples, witness is None, witness, details)


def coefficientwise_agreement(p: int, n: int, K: int | None = None) -> list[int]:
    """Indices k <= K where [z^k] U_n and [z^k] F^2 agree mod p^n.

    Diagnostic only: coefficients with p in a denominator count as disagreeing.
    """
    U = U_n_poly(p, n)
    K = U.degree if K is None else K
    F = period_series(K + 1)
    F2 = F * F
    agree = []
    for k in range(K + 1):
        try:
            if rational_to_mod(U[k], p, n) == rational_to_mod(F2[k], p, n):
                agree.append(k)
        except ArithmeticError:
            pass
    return agree
