"""Matrix-free actions of the symmetric Pascal matrix T_N, the commuting
Jacobi matrix J_N and the binomial transform B_N (with its adjoint).

Vectors are plain sequences of exact numbers (int or Fraction) of length
N + 1. Nothing here materializes a matrix except :func:`dense`, which exists
for cross-checking.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .ring import binomial

Vector = Sequence  # of int | Fraction


class OperatorKind(Enum):
    PASCAL = "pascal"
    JACOBI = "jacobi"
    BINOMIAL_FORWARD = "binomial"
    BINOMIAL_ADJOINT = "binomial-adjoint"


@dataclass(frozen=True)
class OperatorSpec:
    kind: OperatorKind
    order: int

    def apply(self, v: Vector) -> list:
        return _APPLY[self.kind](self.order, v)

    def matrix(self) -> list[list]:
        return dense(self.kind, self.order)


def jacobi_a(N: int, n: int) -> int:
    """Off-diagonal entry a(n) = (N+1)^2 n - n^3."""
    return (N + 1) ** 2 * n - n**3


def jacobi_b(N: int, n: int) -> int:
    """Diagonal entry b(n) = 2n^3 + 3n^2 + 2n - (N+1)^2 n."""
    return 2 * n**3 + 3 * n**2 + 2 * n - (N + 1) ** 2 * n


def _check_len(N: int, v: Vector) -> None:
    if N < 0:
        raise ValueError("order N must be nonnegative")
    if len(v) != N + 1:
        raise ValueError(f"vector has length {len(v)}, expected N+1 = {N + 1}")


def pascal_apply(N: int, v: Vector) -> list:
    """(T_N v)_j = sum_k C(j+k, j) v_k."""
    _check_len(N, v)
    out = []
    for j in range(N + 1):
        # C(j+k, j) built incrementally in k: C(j+k+1, j) = C(j+k, j)(j+k+1)/(k+1)
        c = 1
        s = 0
        for k in range(N + 1):
            s += c * v[k]
            c = c * (j + k + 1) // (k + 1)
        out.append(s)
    return out


def jacobi_apply(N: int, v: Vector) -> list:
    _check_len(N, v)
    out = []
    for n in range(N + 1):
        s = jacobi_b(N, n) * v[n]
        if n > 0:
            s += jacobi_a(N, n) * v[n - 1]
        if n < N:
            s += jacobi_a(N, n + 1) * v[n + 1]
        out.append(s)
    return out


def binomial_apply(N: int, v: Vector) -> list:
    """(B_N v)_j = sum_k (-1)^k C(j, k) v_k."""
    _check_len(N, v)
    out = []
    for j in range(N + 1):
        c = 1
        s = 0
        for k in range(j + 1):
            s += c * v[k] if k % 2 == 0 else -c * v[k]
            c = c * (j - k) // (k + 1)
        out.append(s)
    return out


def binomial_adjoint_apply(N: int, v: Vector) -> list:
    """(B_N^* v)_j = (-1)^j sum_k C(k, j) v_k."""
    _check_len(N, v)
    out = []
    for j in range(N + 1):
        s = sum(binomial(k, j) * v[k] for k in range(j, N + 1))
        out.append(s if j % 2 == 0 else -s)
    return out


_APPLY: dict[OperatorKind, Callable[[int, Vector], list]] = {
    OperatorKind.PASCAL: pascal_apply,
    OperatorKind.JACOBI: jacobi_apply,
    OperatorKind.BINOMIAL_FORWARD: binomial_apply,
    OperatorKind.BINOMIAL_ADJOINT: binomial_adjoint_apply,
}


def dense(kind: OperatorKind, N: int) -> list[list[int]]:
    """Materialize the (N+1)x(N+1) matrix from its entry formula."""
    size = range(N + 1)
    if kind is OperatorKind.PASCAL:
        return [[binomial(j + k, j) for k in size] for j in size]
    if kind is OperatorKind.JACOBI:
        rows = [[0] * (N + 1) for _ in size]
        for n in size:
            rows[n][n] = jacobi_b(N, n)
            if n < N:
                rows[n][n + 1] = rows[n + 1][n] = jacobi_a(N, n + 1)
        return rows
    if kind is OperatorKind.BINOMIAL_FORWARD:
        return [[(-1) ** k * binomial(j, k) for k in size] for j in size]
    if kind is OperatorKind.BINOMIAL_ADJOINT:
        return [[(-1) ** j * binomial(k, j) for k in size] for j in size]
    raise ValueError(kind)


def basis_vector(N: int, k: int) -> list[int]:
    e = [0] * (N + 1)
    e[k] = 1
    return e


@dataclass
class StructureReport:
    N: int
    ok: bool
    failed: Optional[str] = None
    witness: Optional[list] = None


STRUCTURE_IDENTITIES = ("B^2 = I", "T = B B*", "T J = J T", "B T B T = I")


def structure_checks(N: int) -> StructureReport:
    """Check B^2 = I, T = BB*, TJ = JT and BTBT = I on every basis vector."""
    if N < 0:
        raise ValueError("order N must be nonnegative")
    for k in range(N + 1):
        e = basis_vector(N, k)
        results = (
            binomial_apply(N, binomial_apply(N, e)) == e,
            pascal_apply(N, e) == binomial_apply(N, binomial_adjoint_apply(N, e)),
            pascal_apply(N, jacobi_apply(N, e)) == jacobi_apply(N, pascal_apply(N, e)),
            binomial_apply(N, pascal_apply(N, binomial_apply(N, pascal_apply(N, e)))) == e,
        )
        for name, good in zip(STRUCTURE_IDENTITIES, results):
            if not good:
                return StructureReport(N, False, name, e)
    return StructureReport(N, True)


def scale(c, v: Vector) -> list:
    return [c * x for x in v]


def binomial_sign(N: int, v: Vector) -> int:
    """Return s in {+1, -1} with B_N v = s v; raise if v is not a B-eigenvector."""
    w = binomial_apply(N, v)
    if w == list(v):
        return 1
    if w == [-x for x in v]:
        return -1
    raise ValueError("vector is not an eigenvector of the binomial transform")


def as_fractions(v: Vector) -> list[Fraction]:
    return [Fraction(x) for x in v]
