"""Numerical evaluation of the contour-integral operator

    (1/2 pi i) int_{Re w = 1/2} f(v; w) / (w^(N+1) (1-w)^(N+1) (1-z+zw)) dw

by the trapezoid rule on w = 1/2 + it, t in [-T, T].

Closing the line to the left picks up the poles at w = 0 and, when
Re(1 - 1/z) < 1/2 (equivalently |z - 1| < 1), at w = 1 - 1/z. Only in that
case does the integral reproduce f(T_N v; z). For z outside the disk the
value differs from it by exactly :func:`crossing_residue`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .genfun import gen_poly
from .operators import Vector


class ContourSingularity(ValueError):
    pass


@dataclass(frozen=True)
class QuadratureResult:
    value: complex
    error: float
    truncation: float
    step: float


def _tail_bound(coeff_abs_sum: float, N: int, z: complex, T: float) -> float:
    # For |t| >= T >= 1: |f(w)| <= S |w|^N, |w|, |1-w| >= |t|, and
    # |1-z+zw| >= |z||t| - |1-z| >= |z||t|/2 once T >= 2|1-z|/|z|.
    if z == 0:
        return 2 * coeff_abs_sum / ((N + 1) * T ** (N + 1))
    return 4 * coeff_abs_sum / (abs(z) * (N + 2) * T ** (N + 2))


def choose_truncation(N: int, v: Vector, z: complex, tol: float) -> float:
    S = float(sum(abs(Fraction(c)) for c in v)) or 1.0
    T = 1.0
    if z != 0:
        T = max(T, 2 * abs(1 - z) / abs(z))
    while _tail_bound(S, N, z, T) > tol / 10:
        T *= 1.5
    return T


def _integrand(coeffs: np.ndarray, N: int, z: complex, t: np.ndarray) -> np.ndarray:
    w = 0.5 + 1j * t
    # |w| = |1 - w| on the line, and w (1 - w) = 1/4 + t^2
    fw = np.polyval(coeffs, w)
    return fw / ((0.25 + t * t) ** (N + 1) * (1 - z + z * w))


def integral_operator_numeric(N: int, v: Vector, z: complex, tol: float = 1e-8,
                              truncation: float | None = None, step: float = 0.25,
                              max_halvings: int = 12, singular_tol: float = 1e-12
                              ) -> QuadratureResult:
    if N < 1:
        raise ValueError("N must be >= 1 for the integrand to decay")
    if len(v) != N + 1:
        raise ValueError(f"vector has length {len(v)}, expected {N + 1}")
    z = complex(z)
    if z != 0:
        pole = 1 - 1 / z
        if abs(pole.real - 0.5) < singular_tol:
            raise ContourSingularity(
                f"1 - z + z w vanishes at w = {pole} on the contour (z = {z})")

    # np.polyval wants highest degree first; f(v; w) = sum v_k w^(N-k)
    coeffs = np.array([float(Fraction(c)) for c in v], dtype=float)
    S = float(np.abs(coeffs).sum()) or 1.0
    T = truncation if truncation is not None else choose_truncation(N, v, z, tol)
    tail = _tail_bound(S, N, z, T)

    def trapezoid(h: float) -> complex:
        n = int(math.ceil(T / h))
        t = np.linspace(-n * h, n * h, 2 * n + 1)
        vals = _integrand(coeffs, N, z, t)
        if z != 0 and np.min(np.abs(1 - z + z * (0.5 + 1j * t))) < singular_tol:
            raise ContourSingularity(f"integrand pole on the discretized contour (z = {z})")
        total = h * (vals.sum() - 0.5 * (vals[0] + vals[-1]))
        # dw = i dt cancels the i in 1/(2 pi i)
        return complex(total / (2 * math.pi))

    h = step
    prev = trapezoid(h)
    diff = math.inf
    for _ in range(max_halvings):
        h /= 2
        cur = trapezoid(h)
        diff = abs(cur - prev)
        prev = cur
        if diff < tol / 10:
            break
    return QuadratureResult(prev, diff + tail, T, h)


def crossing_residue(N: int, v: Vector, z: Fraction) -> Fraction:
    """Residue of the integrand at w = 1 - 1/z, i.e. z^(2N+1) f(v; 1-1/z) / (z-1)^(N+1)."""
    z = Fraction(z)
    if z == 0 or z == 1:
        raise ValueError("no finite crossing pole for z in {0, 1}")
    f = gen_poly(v)
    return z ** (2 * N + 1) * f(1 - 1 / z) / (z - 1) ** (N + 1)


def in_validity_disk(z: complex) -> bool:
    """True when the pole 1 - 1/z lies left of the line (|z - 1| < 1), or z = 0."""
    return z == 0 or abs(complex(z) - 1) < 1
