"""Exact differential operators whose coefficients are rational functions with
poles only at z = 0 and z = 1.

Functions are represented as q(z) z^a (1-z)^b with q a rational polynomial
and a, b integers. Everything is exact; nothing is ever evaluated at a pole.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Optional, Sequence

from .genfun import legendre_factor
from .poly import DensePoly, Z

_ONE_MINUS_Z = DensePoly([1, -1])


class ExtendedFunction:
    """q(z) z^a (1-z)^b, normalized so that q(0) != 0 and q(1) != 0 (or q = 0)."""

    __slots__ = ("q", "a", "b")

    def __init__(self, q, a: int = 0, b: int = 0):
        if not isinstance(q, DensePoly):
            q = DensePoly([q])
        q = q.map(Fraction)
        if q.is_zero():
            a = b = 0
        else:
            while q[0] == 0:
                q = DensePoly(q.coeffs[1:])
                a += 1
            while q(1) == 0:
                q, _ = q.divmod(_ONE_MINUS_Z)
                b += 1
        self.q, self.a, self.b = q, a, b

    @classmethod
    def zero(cls) -> ExtendedFunction:
        return cls(DensePoly())

    def is_zero(self) -> bool:
        return self.q.is_zero()

    def __eq__(self, other):
        if not isinstance(other, ExtendedFunction):
            other = ExtendedFunction(other)
        return (self.q, self.a, self.b) == (other.q, other.a, other.b)

    def __hash__(self):
        return hash((self.q, self.a, self.b))

    def __repr__(self):
        return f"ExtendedFunction({self.q}, a={self.a}, b={self.b})"

    def _lift(self, other) -> ExtendedFunction:
        return other if isinstance(other, ExtendedFunction) else ExtendedFunction(other)

    def __add__(self, other):
        other = self._lift(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        a, b = min(self.a, other.a), min(self.b, other.b)

        def shifted(f: ExtendedFunction) -> DensePoly:
            return f.q * DensePoly.monomial(f.a - a) * _ONE_MINUS_Z ** (f.b - b)

        return ExtendedFunction(shifted(self) + shifted(other), a, b)

    __radd__ = __add__

    def __neg__(self):
        return ExtendedFunction(-self.q, self.a, self.b)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        return ExtendedFunction(self.q * other.q, self.a + other.a, self.b + other.b)

    __rmul__ = __mul__

    def __truediv__(self, other):
        """Division by a scalar or by c z^a (1-z)^b; anything else is not closed."""
        other = self._lift(other)
        if other.q.degree != 0:
            raise ArithmeticError(f"cannot divide by {other}: non-monomial factor")
        c = other.q[0]
        return ExtendedFunction(self.q / c, self.a - other.a, self.b - other.b)

    def __pow__(self, k: int):
        if k < 0:
            return ExtendedFunction(1) / self ** (-k)
        return ExtendedFunction(self.q ** k, self.a * k, self.b * k)

    def derivative(self) -> ExtendedFunction:
        # d/dz [q z^a (1-z)^b] = [q' z(1-z) + a q (1-z) - b q z] z^(a-1) (1-z)^(b-1)
        q = self.q
        inner = (q.derivative() * Z * _ONE_MINUS_Z
                 + self.a * q * _ONE_MINUS_Z
                 - self.b * q * Z)
        return ExtendedFunction(inner, self.a - 1, self.b - 1)

    def __call__(self, z):
        """Numeric or exact evaluation away from z = 0, 1."""
        return self.q(z) * z**self.a * (1 - z) ** self.b

    def as_polynomial(self) -> DensePoly:
        if self.a < 0 or self.b < 0:
            raise ValueError(f"{self} is not a polynomial")
        return self.q * DensePoly.monomial(self.a) * _ONE_MINUS_Z ** self.b


def ef(q, a: int = 0, b: int = 0) -> ExtendedFunction:
    return ExtendedFunction(q, a, b)


def derivatives(f: ExtendedFunction, m: int) -> list[ExtendedFunction]:
    out = [f]
    for _ in range(m):
        out.append(out[-1].derivative())
    return out


@dataclass(frozen=True)
class DifferentialOperator:
    """sum_i coeffs[i] d^i/dz^i."""

    coeffs: tuple

    def __init__(self, coeffs: Sequence):
        cs = [c if isinstance(c, ExtendedFunction) else ExtendedFunction(c) for c in coeffs]
        while len(cs) > 1 and cs[-1].is_zero():
            cs.pop()
        if cs[-1].is_zero():
            raise ValueError("leading coefficient must be nonzero")
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> ExtendedFunction:
        return self.coeffs[-1]

    def __call__(self, f) -> ExtendedFunction:
        return apply_diff_op(self, f)

    def monic(self) -> DifferentialOperator:
        lead = self.leading
        return DifferentialOperator([c / lead for c in self.coeffs])

    def scaled(self, g) -> DifferentialOperator:
        return DifferentialOperator([g * c for c in self.coeffs])

    def conjugate(self, g: ExtendedFunction) -> DifferentialOperator:
        """Coefficients of y -> g^-1 L(g y), by Leibniz's rule (g a monomial factor)."""
        dg = derivatives(g, self.order)
        out = []
        for j in range(self.order + 1):
            s = ExtendedFunction.zero()
            for k in range(j, self.order + 1):
                s = s + comb(k, j) * self.coeffs[k] * dg[k - j]
            out.append(s / g)
        return DifferentialOperator(out)


def apply_diff_op(op: DifferentialOperator, f) -> ExtendedFunction:
    if not isinstance(f, ExtendedFunction):
        f = ExtendedFunction(f)
    ds = derivatives(f, op.order)
    out = ExtendedFunction.zero()
    for c, d in zip(op.coeffs, ds):
        out = out + c * d
    return out


D = DifferentialOperator([0, 1])


def theoremB_operator(N: int, mu) -> DifferentialOperator:
    """y -> z^2(1-z)^2 y''' + 3z(1-z)((N-1)z-N) y''
             + N((2N-5)z^2 + (2-5N)z + 2N+1) y' + (N((2N+1)z + N^2+N+1) - mu) y."""
    mu = Fraction(mu)
    c3 = ef(1, 2, 2)
    c2 = ef(DensePoly([-3 * N, 3 * (N - 1)]), 1, 1)
    c1 = ef(DensePoly([N * (2 * N + 1), N * (2 - 5 * N), N * (2 * N - 5)]))
    c0 = ef(DensePoly([N * (N * N + N + 1) - mu, N * (2 * N + 1)]))
    return DifferentialOperator([c0, c1, c2, c3])


def symmetric_square(L: DifferentialOperator) -> DifferentialOperator:
    """Symmetric square of a monic L = d^2 + v1 d + v0."""
    if L.order != 2 or L.leading != ExtendedFunction(1):
        raise ValueError("symmetric_square expects a monic second-order operator")
    v0, v1 = L.coeffs[0], L.coeffs[1]
    u2 = 3 * v1
    u1 = 4 * v0 + v1.derivative() + 2 * v1 * v1
    u0 = 2 * v0.derivative() + 4 * v0 * v1
    return DifferentialOperator([u0, u1, u2, ExtendedFunction(1)])


def conjugated_operator(N: int, mu) -> DifferentialOperator:
    """Monic form of theoremB_operator after substituting y~ = z^(N+1) y."""
    return theoremB_operator(N, mu).conjugate(ef(1, N + 1)).monic()


def symmsquare_S(N: int, mu) -> DifferentialOperator:
    """The monic third-order operator S written out term by term."""
    M = N * N + 2 * N
    mu = Fraction(mu)
    u2 = ef(DensePoly([3, -6]), -1, -1)                       # -3(2z-1)/(z(1-z))
    u1 = ef(M - 6, -1, -1) - ef(M, -2, -2)
    u0 = ef(M, -2, -1) - ef(mu, -2, -2)
    return DifferentialOperator([u0, u1, u2, ef(1)])


def symmsquare_L(N: int) -> DifferentialOperator:
    """L = d^2 + (1-2z)/(z(1-z)) d - ((N^2+2N)(z^2-z+1) + 1)/(4 z^2 (1-z)^2)."""
    M = N * N + 2 * N
    v1 = ef(DensePoly([1, -2]), -1, -1)
    v0 = ef(DensePoly([M + 1, -M, M]), -2, -2) * Fraction(-1, 4)
    return DifferentialOperator([v0, v1, ef(1)])


def symmetric_square_criterion(N: int, mu) -> Optional[DifferentialOperator]:
    """Return L with L^(s2) equal to the conjugated theoremB_operator, or None.

    The first two symmetric-square equations determine v1, v0; the third is a
    consistency condition.
    """
    S = conjugated_operator(N, mu)
    u0, u1, u2 = S.coeffs[0], S.coeffs[1], S.coeffs[2]
    v1 = u2 / 3
    v0 = (u1 - v1.derivative() - 2 * v1 * v1) / 4
    if u0 != 2 * v0.derivative() + 4 * v0 * v1:
        return None
    return DifferentialOperator([v0, v1, ef(1)])


def gensoln_basis(N: int) -> list[ExtendedFunction]:
    """y1, y2, y3 built from P(z) = 2F1(-N/2, N/2+1; -N; z)."""
    P = legendre_factor(N)
    P_flip = P.compose(DensePoly([1, -1]))
    return [
        ef(P_flip * P_flip, N + 1, -(N + 1)),
        ef(P_flip * P),
        ef(P * P, -(N + 1), N + 1),
    ]


def gensoln_operator(N: int) -> DifferentialOperator:
    """z^2(1-z)^2 S at mu = (N^2+2N)/2, i.e. with denominators cleared."""
    return symmsquare_S(N, Fraction(N * N + 2 * N, 2)).scaled(ef(1, 2, 2))


def gensoln_basis_check(N: int, op: DifferentialOperator | None = None) -> bool:
    op = gensoln_operator(N) if op is None else op
    return all(apply_diff_op(op, y).is_zero() for y in gensoln_basis(N))


def substitution_conjugate_check(N: int) -> bool:
    """theoremB(N, mu)[z^(N+1) y] = z^(N+1) z^2 (1-z)^2 S[y] at mu = (N^2+2N)/2."""
    mu = Fraction(N * N + 2 * N, 2)
    B = theoremB_operator(N, mu)
    S = symmsquare_S(N, mu)
    if conjugated_operator(N, mu) != S:
        return False
    weight = ef(1, N + 1)
    for j in range(N + 4):
        y = ef(DensePoly.monomial(j))
        if B(weight * y) != weight * ef(1, 2, 2) * S(y):
            return False
    return True
