"""Point counts on the Legendre family E_z: y^2 = x(x-1)(x-z) over F_p, and
the mod-p congruences linking them to the eigenvalue-1 eigenvector of T_(p-1).
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from functools import lru_cache
from typing import Callable, Iterable, Optional

import numpy as np

from .genfun import legendre_factor, pfaff_factor, theorem_A_vector, gen_poly
from .parallel import parallel_map
from .poly import DensePoly
from .ring import ModInt, binomial, check_odd_prime, legendre_symbol


@dataclass(frozen=True)
class CurveCount:
    p: int
    z: int
    points: int
    trace: int

    def as_dict(self) -> dict:
        return asdict(self)


@dataclass
class CheckResult:
    name: str
    p: int
    ok: bool
    witness: Optional[int] = None


@dataclass
class SupersingularReport:
    p: int
    zs: list
    consistent: bool


def _check_z(p: int, z: int) -> int:
    z %= p
    if z in (0, 1):
        raise ValueError(f"z = {z} gives a singular curve")
    return z


def nonsingular_zs(p: int) -> range:
    return range(2, p)


def count_points(p: int, z: int) -> CurveCount:
    """#E_z(F_p) = 1 + sum_x (1 + (x(x-1)(x-z) / p))."""
    check_odd_prime(p)
    z = _check_z(p, z)
    s = sum(legendre_symbol(x * (x - 1) * (x - z), p) for x in range(p))
    points = 1 + p + s
    return CurveCount(p, z, points, p + 1 - points)


def period_2P1(p: int, z: int) -> int:
    check_odd_prime(p)
    z = _check_z(p, z)
    return sum(legendre_symbol(x * (x - 1) * (x - z), p) for x in range(p))


@lru_cache(maxsize=64)
def _character_table(p: int) -> np.ndarray:
    chi = np.array([legendre_symbol(x, p) for x in range(p)], dtype=np.int64)
    chi.setflags(write=False)
    return chi


def _count_row(args: tuple[int, int]) -> CurveCount:
    p, z = args
    chi = _character_table(p)
    x = np.arange(p, dtype=np.int64)
    vals = (x * (x - 1) % p) * ((x - z) % p) % p
    points = 1 + p + int(chi[vals].sum())
    return CurveCount(p, z, points, p + 1 - points)


def count_sweep(p: int, zs: Iterable[int] | None = None, workers: int = 1) -> list[CurveCount]:
    """Point counts for every nonsingular z (or the given ones), in z order."""
    check_odd_prime(p)
    zs = sorted({_check_z(p, z) for z in zs}) if zs is not None else list(nonsingular_zs(p))
    if p * p >= 2**62:
        raise ValueError("p too large for the vectorized sweep")
    return parallel_map(_count_row, [(p, z) for z in zs], workers)


def hasse_poly(p: int) -> DensePoly:
    """Igusa polynomial sum_k C((p-1)/2, k)^2 z^k over Z/p."""
    check_odd_prime(p)
    m = (p - 1) // 2
    return DensePoly(ModInt(binomial(m, k) ** 2, p) for k in range(m + 1))


def _eigen_poly_mod(p: int) -> DensePoly:
    return gen_poly(theorem_A_vector(p - 1)).reduce_mod(p)


def _first_failure(p: int, pred: Callable[[int], bool]) -> Optional[int]:
    for z in nonsingular_zs(p):
        if not pred(z):
            return z
    return None


def hasse_check(p: int, counts: list[CurveCount] | None = None) -> CheckResult:
    """(-1)^((p-1)/2) H_p(z) = 1 - #E_z mod p for every nonsingular z."""
    counts = counts or count_sweep(p)
    H = hasse_poly(p)
    sign = (-1) ** ((p - 1) // 2)
    by_z = {c.z: c.points for c in counts}
    bad = _first_failure(p, lambda z: sign * H(ModInt(z, p)) == 1 - by_z[z])
    return CheckResult("hasse", p, bad is None, bad)


def theoremC_check(p: int, counts: list[CurveCount] | None = None) -> CheckResult:
    """f(v; z) = (#E_z - 1)^2 mod p, with v the eigenvector for N = p - 1."""
    counts = counts or count_sweep(p)
    f = _eigen_poly_mod(p)
    by_z = {c.z: c.points for c in counts}
    bad = _first_failure(p, lambda z: f(ModInt(z, p)) == (by_z[z] - 1) ** 2)
    return CheckResult("theorem-c", p, bad is None, bad)


def pfaff_congruence_check(p: int) -> CheckResult:
    """2F1(-N/2, -3N/2-1; -N; z) = 2F1(-N/2, N/2+1; -N; z) mod p, N = p - 1."""
    check_odd_prime(p)
    N = p - 1
    ok = pfaff_factor(N).reduce_mod(p) == legendre_factor(N).reduce_mod(p)
    return CheckResult("pfaff", p, ok)


def hasse_hyp_congruence_check(p: int) -> CheckResult:
    """H_p(z) = 2F1(-N/2, N/2+1; -N; z) mod p, N = p - 1."""
    check_odd_prime(p)
    ok = hasse_poly(p) == legendre_factor(p - 1).reduce_mod(p)
    return CheckResult("hasse-hyp", p, ok)


MOBIUS_GROUP: dict[str, Callable] = {
    "z": lambda z: z,
    "1-z": lambda z: 1 - z,
    "1/z": lambda z: 1 / z,
    "1/(1-z)": lambda z: 1 / (1 - z),
    "1-1/z": lambda z: 1 - 1 / z,
    "(z-1)/z": lambda z: (z - 1) / z,
}


def mobius_orbit_check(p: int) -> CheckResult:
    """f is constant on every orbit of the six-element Moebius group mod p."""
    check_odd_prime(p)
    f = _eigen_poly_mod(p)

    def invariant(z: int) -> bool:
        x = ModInt(z, p)
        base = f(x)
        return all(f(chi(x)) == base for chi in MOBIUS_GROUP.values())

    bad = _first_failure(p, invariant)
    return CheckResult("mobius-orbit", p, bad is None, bad)


def supersingular_scan(p: int, counts: list[CurveCount] | None = None) -> SupersingularReport:
    H = hasse_poly(p)
    counts = counts or count_sweep(p)
    roots = [z for z in nonsingular_zs(p) if H(ModInt(z, p)) == 0]
    trace_zero = [c.z for c in counts if c.trace == 0]
    return SupersingularReport(p, roots, roots == trace_zero)


def hasse_bound_ok(count: CurveCount) -> bool:
    return abs(count.trace) <= math.isqrt(4 * count.p)


def congruence_suite(p: int, workers: int = 1) -> list[CheckResult]:
    counts = count_sweep(p, workers=workers)
    return [
        theoremC_check(p, counts),
        hasse_check(p, counts),
        pfaff_congruence_check(p),
        hasse_hyp_congruence_check(p),
        mobius_orbit_check(p),
    ]
