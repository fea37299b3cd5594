"""Closed-form characteristic polynomials and bounds for the extremal unicyclic graphs.

The factor polynomials are, in ``rho`` with coefficients depending on ``n``:

* ``g1`` for the quadrangle with ``n - 4`` pendants on one vertex (G1),
* ``g2`` for ``S_{n-1} + e`` with a pendant on a triangle vertex (G2),
* ``g3`` for ``S_{n-1} + e`` with a pendant on a leaf (G3),
* ``t1`` for ``S_n + e``.

The full AG characteristic polynomials are

    Phi1 = rho^(n-4) g1 / (8(n-2))
    Phi2 = rho^(n-4) g2 / (4(n-2))
    Phi3 = rho^(n-6) g3 / (8(n-2))
    Phi(S_n+e) = rho^(n-4) (rho + 1) t1

and each largest root equals the AG spectral radius of its graph.
"""

from __future__ import annotations

import enum
import logging
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .graph import Graph

log = logging.getLogger(__name__)


class PolyFamily(str, enum.Enum):
    PHI1 = "phi1"
    PHI2 = "phi2"
    PHI3 = "phi3"
    PHI_STAR_PLUS_EDGE = "phi-star-plus-edge"
    G1 = "g1"
    G2 = "g2"
    G3 = "g3"
    T1 = "t1"


FACTORS = (PolyFamily.G1, PolyFamily.G2, PolyFamily.G3, PolyFamily.T1)


class BracketError(ArithmeticError):
    pass


def factor_coeffs(family: PolyFamily | str, n: int) -> np.ndarray:
    """Coefficients of g1, g2, g3 or t1 in ``rho``, highest degree first."""
    family = PolyFamily(family)
    if family is PolyFamily.G1:
        return np.array([
            8.0 * (n - 2),
            0.0,
            -(2 * n**3 - 10 * n**2 + 34 * n - 40),
            0.0,
            4.0 * (n - 4) * (n - 1) ** 2,
        ])
    if family is PolyFamily.G2:
        return np.array([
            4.0 * (n - 2),
            0.0,
            -(6 * n**3 - 31 * n**2 + 115 * n - 136) / 6,
            -(5 * n**2 + 5 * n) / 6,
            2 * n**2 / 3 + 19 * (n - 4) * (n - 1) ** 2 / 8,
        ])
    if family is PolyFamily.G3:
        return np.array([
            8.0 * (n - 2),
            0.0,
            -(2 * n**3 - 11 * n**2 + 39 * n - 44),
            -2.0 * n**2,
            13 * n**2 / 4 + 9 * (n - 2) + 17 * (n - 5) * (n - 1) ** 2 / 4,
            9 * n**2 / 4,
            -9 * (n - 5) * (n - 1) ** 2 / 4,
        ])
    if family is PolyFamily.T1:
        return np.array([
            1.0,
            -1.0,
            -(n**3 - 2 * n**2 + 2 * n + 1) / (4 * (n - 1)),
            (n - 3) * n**2 / (4 * (n - 1)),
        ])
    raise ValueError(f"{family.value} is not a factor polynomial")


def phi_coeffs(family: PolyFamily | str, n: int) -> np.ndarray:
    """Expanded monic coefficients of a full characteristic polynomial, degree ``n``."""
    family = PolyFamily(family)
    _check_order(n)
    if family is PolyFamily.PHI1:
        core, shift = factor_coeffs(PolyFamily.G1, n) / (8 * (n - 2)), n - 4
    elif family is PolyFamily.PHI2:
        core, shift = factor_coeffs(PolyFamily.G2, n) / (4 * (n - 2)), n - 4
    elif family is PolyFamily.PHI3:
        core, shift = factor_coeffs(PolyFamily.G3, n) / (8 * (n - 2)), n - 6
    elif family is PolyFamily.PHI_STAR_PLUS_EDGE:
        core, shift = np.polymul([1.0, 1.0], factor_coeffs(PolyFamily.T1, n)), n - 4
    else:
        raise ValueError(f"{family.value} is not a full characteristic polynomial")
    if shift >= 0:
        return np.concatenate([core, np.zeros(shift)])
    # n = 5 for Phi3: the trailing coefficients of g3 vanish and rho^(n-6) cancels
    tail = core[shift:]
    if np.any(np.abs(tail) > 1e-12 * np.abs(core).max()):
        raise ValueError(f"{family.value} is not a polynomial at n={n}")
    return core[:shift]


def _check_order(n: int) -> None:
    if n < 5:
        raise ValueError(f"closed forms are stated for n >= 5, got n={n}")


def eval_poly(family: PolyFamily | str, rho: float, n: int) -> float:
    """Evaluate one of the closed forms at ``(rho, n)``.

    Factor families (g1, g2, g3, t1) are returned without their ``rho`` power
    prefactors and normalising constants.
    """
    family = PolyFamily(family)
    if family in FACTORS:
        if n < 2:
            raise ValueError(f"factor polynomials need n >= 2, got n={n}")
        return float(np.polyval(factor_coeffs(family, n), rho))
    _check_order(n)
    if family is PolyFamily.PHI3 and n < 6:
        return float(np.polyval(phi_coeffs(family, n), rho))
    g = {
        PolyFamily.PHI1: (PolyFamily.G1, 8 * (n - 2), n - 4),
        PolyFamily.PHI2: (PolyFamily.G2, 4 * (n - 2), n - 4),
        PolyFamily.PHI3: (PolyFamily.G3, 8 * (n - 2), n - 6),
    }
    if family is PolyFamily.PHI_STAR_PLUS_EDGE:
        return rho ** (n - 4) * (rho + 1) * eval_poly(PolyFamily.T1, rho, n)
    fac, denom, power = g[family]
    return rho**power * eval_poly(fac, rho, n) / denom


def eval_g3_derivative(k: int, rho: float, n: int) -> float:
    """k-th derivative of g3 with respect to ``rho``, ``1 <= k <= 4``."""
    if not 1 <= k <= 4:
        raise ValueError(f"derivative order must be 1..4, got {k}")
    return float(np.polyval(np.polyder(factor_coeffs(PolyFamily.G3, n), k), rho))


def g3_fourth_derivative_printed(rho: float, n: int) -> float:
    return (2880 * n - 5760) * rho**2 + 24 * (-2 * n**3 + 11 * n**2 - 39 * n + 44)


# --- root finding ---------------------------------------------------------------


def root_bracket(family: PolyFamily | str, n: int) -> tuple[float, float]:
    """Interval expected to contain the largest root of a factor polynomial."""
    family = PolyFamily(family)
    if family is PolyFamily.G1:
        return (n - 1.5) / 2, (n - 1) / 2
    if family is PolyFamily.G2:
        if n >= 22:
            return (n - 1.6) / 2, (n - 1.5) / 2
        return (n - 1.75) / 2, (n - 1) / 2
    if family is PolyFamily.G3:
        if n >= 17:
            return (n - 1.75) / 2, (n - 1.6) / 2
        return (n - 2) / 2, (n - 1) / 2
    if family is PolyFamily.T1:
        return (n - 1) / 2, n / 2
    raise ValueError(f"no bracket for {family.value}")


def _scale(coeffs: np.ndarray, x: float) -> float:
    return float(np.polyval(np.abs(coeffs), abs(x)))


def largest_root(family: PolyFamily | str, n: int) -> float:
    """Largest real root of g1, g2, g3 or t1: bisection on the bracket, then Newton."""
    family = PolyFamily(family)
    if family not in FACTORS:
        raise ValueError(f"largest_root takes a factor polynomial, got {family.value}")
    if n < 8:
        raise ValueError(f"largest_root needs n >= 8, got n={n}")
    c = factor_coeffs(family, n)
    lo, hi = root_bracket(family, n)
    flo, fhi = np.polyval(c, lo), np.polyval(c, hi)
    if not (flo < 0 < fhi):
        log.info("bracket (%g, %g) for %s at n=%d fails sign test; widening", lo, hi, family.value, n)
        lo, hi = (n - 2) / 2, n / 2
        flo, fhi = np.polyval(c, lo), np.polyval(c, hi)
        if not (flo < 0 < fhi):
            raise BracketError(
                f"{family.value} at n={n}: f({lo})={flo:.6g}, f({hi})={fhi:.6g}; no sign change"
            )
    while hi - lo > 1e-10:
        mid = 0.5 * (lo + hi)
        if np.polyval(c, mid) < 0:
            lo = mid
        else:
            hi = mid
    x = 0.5 * (lo + hi)
    dc = np.polyder(c)
    for _ in range(5):
        fx = float(np.polyval(c, x))
        if abs(fx) <= 1e-12 * _scale(c, x):
            break
        step = fx / float(np.polyval(dc, x))
        if not lo - 1e-9 <= x - step <= hi + 1e-9:
            break
        x -= step
    return x


# --- bounds -----------------------------------------------------------------------


def lemma4_bound(g: Graph, v: int) -> float:
    """Upper bound ``(d^2 + 2m - n + 1) / (2 sqrt d)`` on ``(A_ag X)_v`` with ``X = sqrt(deg)``."""
    d = g.degrees[v]
    if d < 1:
        raise ValueError(f"vertex {v} is isolated")
    return (d * d + 2 * g.m - g.n + 1) / (2.0 * math.sqrt(d))


def row_image(g: Graph, v: int) -> float:
    """``(A_ag X)_v`` for ``X = (sqrt d_1, ..., sqrt d_n)``."""
    d = g.degrees
    return math.fsum(
        (d[v] + d[u]) / (2.0 * math.sqrt(d[v] * d[u])) * math.sqrt(d[u]) for u in g.adjacency[v]
    )


def lemma7_threshold(n: int, delta: int) -> float | None:
    """Strict upper bound on the AG radius of unicyclic graphs with max degree ``delta``, if one applies."""
    if n < 8:
        raise ValueError(f"threshold is stated for n >= 8, got n={n}")
    if n <= 15:
        return (n - 1.45) / 2 if delta <= n - 4 else None
    if n <= 21:
        return (n - 1.65) / 2 if delta <= n - 3 else None
    return (n - 1.75) / 2 if delta <= n - 3 else None


def zheng_upper_bound(n: int, m: int) -> float:
    """Upper bound on the AG radius in terms of order and size; tight exactly for stars."""
    if n < 2 or m < n - 1:
        raise ValueError(f"need n >= 2 and m >= n - 1, got n={n}, m={m}")
    s = math.sqrt(n - 1)
    return 0.5 * (s + 1 / s) * math.sqrt(2 * m - n + 1)


# --- sign conditions ---------------------------------------------------------------


@dataclass(frozen=True)
class SignCondition:
    """A claimed sign of a factor (or g3 derivative) at a point depending on ``n``.

    ``printed`` is the simplified expression in ``n`` as published; ``direct``
    evaluates the transcribed polynomial itself.  The two are compared
    separately from the sign check.
    """

    name: str
    direct: Callable[[int], float]
    printed: Callable[[int], float]
    positive: bool
    n_min: int


def _at(family: PolyFamily, shift: float) -> Callable[[int], float]:
    return lambda n: eval_poly(family, (n - shift) / 2, n)


def _g3d(k: int, shift: float) -> Callable[[int], float]:
    return lambda n: eval_g3_derivative(k, (n - shift) / 2, n)


SIGN_CONDITIONS: tuple[SignCondition, ...] = (
    SignCondition(
        "g1((n-1)/2) > 0", _at(PolyFamily.G1, 1.0),
        lambda n: n**4 / 2 - 3 * n**3 - 5 * n**2 / 2 + 12 * n - 7, True, 7,
    ),
    SignCondition(
        "g1((n-1.5)/2) < 0", _at(PolyFamily.G1, 1.5),
        lambda n: -3 * n**3 / 8 - 25 * n**2 / 8 + 93 * n / 32 + 23 / 16, False, 2,
    ),
    SignCondition(
        "g2((n-1.5)/2) > 0", _at(PolyFamily.G2, 1.5),
        lambda n: n**4 / 24 - 43 * n**3 / 48 - 53 * n**2 / 96 + 143 * n / 64 + 23 / 32, True, 22,
    ),
    SignCondition(
        "g2((n-1.6)/2) < 0", _at(PolyFamily.G2, 1.6),
        lambda n: -n**4 / 120 - 17 * n**3 / 30 - 301 * n**2 / 375 + 22081 * n / 15000 + 6487 / 3750,
        False, 2,
    ),
    SignCondition(
        "g3((n-1.6)/2) > 0", _at(PolyFamily.G3, 1.6),
        lambda n: (3 * n**6 / 80 - 149 * n**5 / 200 + 2293 * n**4 / 1000 + 4573 * n**3 / 10000
                   - 107861 * n**2 / 50000 - 54663 * n / 12500 - 2619 / 62500),
        True, 17,
    ),
    SignCondition(
        "g3'((n-1.6)/2) > 0", _g3d(1, 1.6),
        lambda n: (n**6 / 2 - 47 * n**5 / 10 + 1157 * n**4 / 100 - 1201 * n**3 / 250
                   - 1162 * n**2 / 125 + 79367 * n / 12500 + 72954 / 3125),
        True, 6,
    ),
    SignCondition(
        "g3''((n-1.6)/2) > 0", _g3d(2, 1.6),
        lambda n: 9 * n**5 - 369 * n**4 / 5 + 9347 * n**3 / 50 - 3977 * n**2 / 25 - 5149 * n / 250 + 15703 / 250,
        True, 5,
    ),
    SignCondition(
        "g3'''((n-1.6)/2) > 0", _g3d(3, 1.6),
        lambda n: 96 * n**4 - 3228 * n**3 / 5 + 6912 * n**2 / 5 - 26448 * n / 25 + 3456 / 25,
        True, 4,
    ),
    SignCondition(
        "g3''''((n-1.6)/2) > 0", _g3d(4, 1.6),
        lambda n: 672 * n**3 - 3480 * n**2 + 27576 * n / 5 - 13152 / 5,
        True, 3,
    ),
    SignCondition(
        "g3((n-1.75)/2) < 0", _at(PolyFamily.G3, 1.75),
        lambda n: (-47 * n**5 / 128 + 155 * n**4 / 128 + 1423 * n**3 / 1024 - 4115 * n**2 / 2048
                   - 43479 * n / 32768 - 3105 / 16384),
        False, 4,
    ),
    SignCondition(
        "t1((n-1)/2) < 0", _at(PolyFamily.T1, 1.0),
        lambda n: (-n**3 + 2 * n**2 - 9 * n + 4) / (8 * (n - 1)), False, 8,
    ),
    SignCondition(
        "t1(n/2) > 0", _at(PolyFamily.T1, 0.0),
        lambda n: (n**3 - 6 * n**2 - n) / (8 * (n - 1)), True, 8,
    ),
)
