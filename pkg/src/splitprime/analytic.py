"""Floating-point layer: L(1, chi_d), the extreme-value statistic, the
lower-bound function for the least split prime, and the ratio against it.

All logarithms are natural.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .arith import FundamentalDiscriminant, _base_primes, chi
from .errors import DomainError

PI = 3.14159265358979323846264338327950288
EULER_GAMMA = 0.57721566490153286060651209008240243
# pi^2 / (6 e^gamma)
CHOWLA_THRESHOLD = 0.92356383167418138232350995398770392
# (3 e^gamma / (2 pi))^2
BOUND_CONSTANT = (3.0 * math.exp(EULER_GAMMA) / (2.0 * PI)) ** 2

DEFAULT_SERIES_TERMS = 10**6


@dataclass(frozen=True)
class LValueReport:
    d: int
    h: int
    l_exact: float
    l_series: float
    x_d: float


@dataclass(frozen=True)
class BoundReport:
    d: int
    h: int
    logD: float
    bound: float
    p: int
    ratio: float


def l_one_exact(d: int, h: int) -> float:
    """L(1, chi_d) from the class number formula, pi*h/sqrt(d)."""
    if d <= 4:
        raise DomainError(f"class number formula needs d > 4 (got {d}); extra units")
    if h < 1:
        raise DomainError(f"class number must be positive, got {h}")
    return PI * h / math.sqrt(d)


def character_table(d: int) -> np.ndarray:
    """chi_d(n) for n = 0..d-1 as an int8 array (one full period).

    Only chi at primes is evaluated directly; the rest follows from
    complete multiplicativity.
    """
    vals = np.ones(d, dtype=np.int8)
    vals[0] = 0
    for q in _base_primes(d - 1).tolist():
        s = chi(d, q)
        if s == 1:
            continue
        qk = q
        while qk < d:
            vals[qk::qk] *= s
            qk *= q
    return vals


def l_one_series(d: int, terms: int = DEFAULT_SERIES_TERMS) -> float:
    """Partial sum of sum chi_d(n)/n plus an averaged tail correction.

    The sum is cut at M, the largest multiple of d not above ``terms``, where
    the character sum vanishes; the tail beyond M is then approximately
    mean(A)/M with A the partial character sums over one period. The
    remaining error is O(d/M^2).
    """
    d = FundamentalDiscriminant(d)
    if terms < d:
        raise DomainError(f"need terms >= d ({terms} < {d})")
    period = character_table(d).astype(np.float64)
    blocks = terms // d
    m = blocks * d
    n = np.arange(1, m + 1, dtype=np.float64)
    signs = np.tile(np.roll(period, -1), blocks)
    head = float(np.sum(signs / n))
    partial = np.cumsum(np.roll(period, -1))
    return head + float(partial.mean()) / m


def x_statistic(d: int, h: int) -> float:
    """L(1, chi_d) * log log d."""
    if d < 16:
        raise DomainError(f"x statistic needs d >= 16, got {d}")
    return l_one_exact(d, h) * math.log(math.log(d))


def chowla_threshold() -> float:
    """pi^2 / (6 e^gamma), the limiting small value of the x statistic."""
    return CHOWLA_THRESHOLD


def growth(y: float) -> float:
    """y * log(2 log y) / log y, increasing for y > e."""
    ly = math.log(y)
    return y * math.log(2.0 * ly) / ly


def bound_function(logD: float) -> float:
    """Lower-bound shape for the least split prime in terms of log|D_L|."""
    if not logD > math.e:
        raise DomainError(f"bound needs log|D| > e, got {logD}")
    return BOUND_CONSTANT * growth(logD) ** 2


def log_disc(d: int, h: int) -> float:
    """log |D_H| = h log d for the Hilbert class field."""
    return h * math.log(d)


def ratio(p: int, d: int, h: int) -> float:
    return p / bound_function(log_disc(d, h))


def f_d(x: float, d: int) -> float:
    """x sqrt(d) log d / (pi log log d); maps the x statistic to log|D_H|."""
    if d < 16:
        raise DomainError(f"f_d needs d >= 16, got {d}")
    ld = math.log(d)
    return x * math.sqrt(d) * ld / (PI * math.log(ld))


def bound_report(d: int, h: int, p: int) -> BoundReport:
    logD = log_disc(d, h)
    b = bound_function(logD)
    return BoundReport(d=d, h=h, logD=logD, bound=b, p=p, ratio=p / b)


def lvalue_report(d: int, h: int, terms: int = DEFAULT_SERIES_TERMS) -> LValueReport:
    l_exact = l_one_exact(d, h)
    x = l_exact * math.log(math.log(d)) if d >= 16 else float("nan")
    return LValueReport(
        d=int(d), h=h, l_exact=l_exact, l_series=l_one_series(d, max(terms, d)), x_d=x
    )
