import math
import random

import mpmath
import numpy as np
import pytest

from _oracles import fundamental, l_value_hp
from splitprime import analytic
from splitprime.analytic import (
    bound_function,
    chowla_threshold,
    f_d,
    growth,
    l_one_exact,
    l_one_series,
    lvalue_report,
    ratio,
    x_statistic,
)
from splitprime.errors import DomainError
from splitprime.forms import class_number
from splitprime.table1 import ROWS

mpmath.mp.dps = 40


def hp_bound(logD):
    L = mpmath.mpf(logD)
    c = (3 * mpmath.exp(mpmath.euler) / (2 * mpmath.pi)) ** 2
    return c * (L * mpmath.log(2 * mpmath.log(L)) / mpmath.log(L)) ** 2


def test_constants_against_mpmath():
    assert analytic.PI == float(mpmath.pi)
    assert analytic.EULER_GAMMA == float(mpmath.euler)
    thr = mpmath.pi**2 / (6 * mpmath.exp(mpmath.euler))
    assert chowla_threshold() == pytest.approx(float(thr), rel=1e-15)
    assert 0.9 < chowla_threshold() < 1
    assert abs(chowla_threshold() - 0.9235646) < 1e-6


@pytest.mark.parametrize("d, h, approx", [(163, 1, 0.24607), (427, 2, 0.30410)])
def test_l_one_exact(d, h, approx):
    lv, _ = l_value_hp(d, h)
    got = l_one_exact(d, h)
    assert got == pytest.approx(float(lv), rel=1e-15)
    assert abs(got - approx) < 1e-4
    assert round(math.sqrt(d) * got / math.pi) == h


def test_l_one_exact_domain():
    with pytest.raises(DomainError):
        l_one_exact(4, 1)
    with pytest.raises(DomainError):
        l_one_exact(3, 1)


@pytest.mark.parametrize("d, h", [(163, 1), (427, 2)])
def test_l_one_series_converges(d, h):
    assert abs(l_one_series(d, 10**6) - l_one_exact(d, h)) < 1e-3


def test_l_one_series_d3():
    # outside the class-number formula's domain (six units): L(1, chi_{-3}) = pi/(3 sqrt 3)
    expected = float(mpmath.pi / (3 * mpmath.sqrt(3)))
    assert abs(l_one_series(3, 10**5) - expected) < 1e-6
    assert abs(l_one_series(4, 10**5) - math.pi / 4) < 1e-6


def test_l_one_series_tail_correction_is_tight():
    # with the averaged tail the error is far below the raw truncation error
    for d, h in [(163, 1), (1555, 4), (3763, 6)]:
        assert abs(l_one_series(d, 2 * 10**5) - l_one_exact(d, h)) < 1e-6


def test_l_one_series_requires_full_period():
    with pytest.raises(DomainError):
        l_one_series(163, 100)


def test_character_table_matches_kronecker():
    from splitprime.arith import chi

    for d in (3, 20, 163, 427, 1555):
        table = analytic.character_table(d)
        assert [int(v) for v in table] == [chi(d, n) for n in range(d)]


def test_round_trip_class_number():
    rng = random.Random(11)
    pool = [d for d in range(5, 10**5 + 1) if fundamental(d)]
    for d in rng.sample(pool, 500):
        h = class_number(d)
        assert round(math.sqrt(d) * l_one_exact(d, h) / math.pi) == h


def test_x_statistic():
    _, x = l_value_hp(163, 1)
    assert x_statistic(163, 1) == pytest.approx(float(x), rel=1e-14)
    assert round(x_statistic(163, 1), 4) == 0.4006
    assert x_statistic(19, 1) > 0
    with pytest.raises(DomainError):
        x_statistic(15, 2)


def test_bound_function_row_one():
    logD = math.log(163)
    assert bound_function(logD) == pytest.approx(float(hp_bound(logD)), rel=1e-13)
    assert round(bound_function(logD), 4) == 9.8660
    assert abs(41 / bound_function(logD) - 4.1557) <= 5e-5
    assert abs(107 / bound_function(2 * math.log(427)) - 2.4287) <= 5e-5


def test_bound_function_domain():
    with pytest.raises(DomainError):
        bound_function(math.e)
    with pytest.raises(DomainError):
        bound_function(1.0)
    bound_function(math.log(16))


@pytest.mark.parametrize("p, d, h, expected", [(41, 163, 1, 4.1557), (595939, 2383747, 98, 2.9359),
                                               (370159, 1480627, 99, 1.9012)])
def test_ratio_examples(p, d, h, expected):
    assert abs(ratio(p, d, h) - expected) <= 5e-5


def test_ratio_all_rows_against_mpmath():
    for row in ROWS:
        logD = row.h * mpmath.log(row.d)
        expected = row.p / hp_bound(logD)
        assert ratio(row.p, row.d, row.h) == pytest.approx(float(expected), rel=1e-12)
        assert abs(float(expected) - float(row.ratio_4dp)) <= 5e-5


def test_f_d_identity_all_rows():
    for row in ROWS:
        x = x_statistic(row.d, row.h)
        assert f_d(x, row.d) == pytest.approx(row.h * math.log(row.d), rel=1e-9)
    assert f_d(1, 163) < f_d(2, 163)
    with pytest.raises(DomainError):
        f_d(1.0, 15)


def test_growth_monotone_on_grid():
    ys = np.geomspace(math.e * (1 + 1e-9), 1e12, 10**4)
    g = [growth(float(y)) for y in ys]
    assert all(a < b for a, b in zip(g, g[1:]))
    b = [bound_function(float(y)) for y in ys]
    assert all(u < v for u, v in zip(b, b[1:]))


def test_lvalue_report():
    rep = lvalue_report(163, 1)
    assert rep.d == 163 and type(rep.d) is int
    assert rep.l_exact == l_one_exact(163, 1)
    assert abs(rep.l_series - rep.l_exact) < 1e-3
    assert rep.x_d == x_statistic(163, 1)
