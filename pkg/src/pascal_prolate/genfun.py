"""Generating functions of vectors and the eigenvalue-1 eigenvector of T_N.

A vector v = (v_0, ..., v_N) is encoded as f(v; z) = sum_k v_k z^(N-k), so
the last entry is the constant term.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import factorial

from .operators import (
    Vector,
    binomial_adjoint_apply,
    binomial_apply,
    pascal_apply,
)
from .poly import ONE, DensePoly, Z, one_minus_z_pow
from .ring import Rational, pochhammer


class PoleBeforeTermination(ArithmeticError):
    pass


class NonPolynomialResult(ValueError):
    pass


class NotAnEigenvector(ValueError):
    pass


# generating functions

def gen_poly(v: Vector) -> DensePoly:
    return DensePoly(reversed(list(v)))


def vector_from_poly(f: DensePoly, N: int) -> list:
    if f.degree > N:
        raise ValueError(f"degree {f.degree} exceeds N = {N}")
    return [f[N - k] for k in range(N + 1)]


# terminating 2F1

@dataclass(frozen=True)
class HypergeometricSpec:
    """2F1(a, b; c; z) with a = -degree, so the series stops at z^degree."""

    a: Fraction
    b: Fraction
    c: Fraction
    degree: int

    @classmethod
    def terminating(cls, a: Rational, b: Rational, c: Rational) -> HypergeometricSpec:
        a = Fraction(a)
        if a.denominator != 1 or a > 0:
            raise ValueError(f"upper parameter a = {a} must be a nonpositive integer")
        return cls(a, Fraction(b), Fraction(c), int(-a))

    def __post_init__(self):
        if self.a != -self.degree:
            raise ValueError("a must equal -degree")


def hyp2f1_terminating(spec: HypergeometricSpec) -> DensePoly:
    coeffs = [Fraction(1)]
    term = Fraction(1)
    for k in range(spec.degree):
        num = (spec.a + k) * (spec.b + k)
        den = (spec.c + k) * (k + 1)
        if den == 0:
            if num != 0:
                raise PoleBeforeTermination(
                    f"(c)_k vanishes at k = {k + 1} <= degree {spec.degree}")
            # numerator vanished first; every later term is zero too
            break
        term = term * num / den
        coeffs.append(term)
    return DensePoly(coeffs)


def hyp2f1(a: Rational, b: Rational, c: Rational) -> DensePoly:
    return hyp2f1_terminating(HypergeometricSpec.terminating(a, b, c))


def _check_even(N: int) -> None:
    if N < 0 or N % 2:
        raise ValueError(f"N must be even and nonnegative, got {N}")


def legendre_factor(N: int) -> DensePoly:
    """P(z) = 2F1(-N/2, N/2+1; -N; z)."""
    _check_even(N)
    h = N // 2
    return hyp2f1(-h, h + 1, -N)


def pfaff_factor(N: int) -> DensePoly:
    """2F1(-N/2, -3N/2-1; -N; z), the Pfaff image of P(z/(z-1))(1-z)^(N/2)."""
    _check_even(N)
    h = N // 2
    return hyp2f1(-h, -3 * h - 1, -N)


def theorem_A_poly(N: int) -> DensePoly:
    """Generating function of the eigenvalue-1 eigenvector of T_N (N even)."""
    return legendre_factor(N) * pfaff_factor(N)


def theorem_A_vector(N: int) -> list[Fraction]:
    """Eigenvector of T_N with eigenvalue 1, normalized so v_N = 1.

    Built from the double Pochhammer sum directly, not from the polynomial
    product. The sum over j + k = l gives the coefficient of z^l, which is
    the entry v_(N-l).
    """
    _check_even(N)
    h = N // 2
    left = [pochhammer(-h, j) * pochhammer(h + 1, j) / (factorial(j) * pochhammer(-N, j))
            for j in range(h + 1)]
    right = [pochhammer(-h, k) * pochhammer(-3 * h - 1, k) / (factorial(k) * pochhammer(-N, k))
             for k in range(h + 1)]
    coeff = []
    for ell in range(N + 1):
        lo, hi = max(0, ell - h), min(h, ell)
        coeff.append(sum((left[j] * right[ell - j] for j in range(lo, hi + 1)), Fraction(0)))
    return coeff[::-1]


# Moebius substitutions

class MobiusMap(Enum):
    ONE_MINUS_Z = "1-z"               # f(1-z)
    Z_OVER_Z_MINUS_1 = "z/(z-1)"      # (1-z)^d f(z/(z-1))
    ONE_MINUS_INV_Z = "1-1/z"         # z^d f(1-1/z)
    INV_Z = "1/z"                     # z^d f(1/z)


def mobius_substitute(f: DensePoly, mapping: MobiusMap, d: int = 0) -> DensePoly:
    if mapping is MobiusMap.ONE_MINUS_Z:
        return f.compose(DensePoly([1, -1]))
    if d < f.degree:
        raise NonPolynomialResult(
            f"scale exponent {d} is below deg f = {f.degree}")
    out = DensePoly()
    if mapping is MobiusMap.Z_OVER_Z_MINUS_1:
        # (z/(z-1))^k (1-z)^d = (-z)^k (1-z)^(d-k)
        for k, c in enumerate(f):
            if c != 0:
                out = out + c * (-1) ** k * DensePoly.monomial(k) * one_minus_z_pow(d - k)
        return out
    if mapping is MobiusMap.ONE_MINUS_INV_Z:
        # (1-1/z)^k z^d = (z-1)^k z^(d-k)
        for k, c in enumerate(f):
            if c != 0:
                out = out + c * DensePoly([-1, 1]) ** k * DensePoly.monomial(d - k)
        return out
    if mapping is MobiusMap.INV_Z:
        return f.reversed(d)
    raise ValueError(mapping)


# functional equations

def taction_image(N: int, v: Vector) -> DensePoly:
    """Polynomial part of z^(2N+1) (z-1)^-(N+1) f(v; 1-1/z).

    Equals f(T_N v; z); computed by exact division by (z-1)^(N+1).
    """
    if len(v) != N + 1:
        raise ValueError(f"vector has length {len(v)}, expected {N + 1}")
    numerator = DensePoly.monomial(N + 1) * mobius_substitute(
        gen_poly(v), MobiusMap.ONE_MINUS_INV_Z, N)
    quotient, _ = numerator.divmod(DensePoly([-1, 1]) ** (N + 1))
    return quotient


def b_adjoint_identity_check(N: int, v: Vector) -> bool:
    """f(B* v; z) = (z-1)^N f(v; z/(z-1))."""
    lhs = gen_poly(binomial_adjoint_apply(N, v))
    rhs = (-1) ** N * mobius_substitute(gen_poly(v), MobiusMap.Z_OVER_Z_MINUS_1, N)
    return lhs == rhs


def eigen_relation_check(N: int, v: Vector, lam: Rational) -> bool:
    """lam f(v; z) = (z-1)^N f(B v; z/(z-1)) for a lam-eigenvector v of T_N."""
    if pascal_apply(N, v) != [lam * x for x in v]:
        raise NotAnEigenvector(f"T_{N} v != {lam} v")
    rhs = (-1) ** N * mobius_substitute(
        gen_poly(binomial_apply(N, v)), MobiusMap.Z_OVER_Z_MINUS_1, N)
    return lam * gen_poly(v) == rhs


def helper_identity_check(N: int) -> bool:
    """Q(z) = P(z)(1-z)^(N+1) + (-1)^(N/2) P(1-z) z^(N+1), P and Q as above."""
    P = legendre_factor(N)
    rhs = (P * one_minus_z_pow(N + 1)
           + (-1) ** (N // 2) * P.compose(ONE - Z) * DensePoly.monomial(N + 1))
    return pfaff_factor(N) == rhs


def pfaff_identity_check(N: int) -> bool:
    """(1-z)^(N/2) P(z/(z-1)) equals the Pfaff factor as a polynomial."""
    P = legendre_factor(N)
    return mobius_substitute(P, MobiusMap.Z_OVER_Z_MINUS_1, N // 2) == pfaff_factor(N)


def palindromy_check(N: int) -> bool:
    return legendre_factor(N).is_palindromic(N // 2)
