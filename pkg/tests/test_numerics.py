import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import oracle_mpf
from zetaforms.apery import AperyPair, accelerated_zeta3_partial, apery_by_recurrence
from zetaforms.core import ZetaLinearForm
from zetaforms.numerics import (
    HighPrecReal,
    beukers_integral,
    cube_maximum,
    direct_sum,
    eta,
    hurwitz_zeta,
    linear_form_value,
    polylog,
    rate_fit,
    zeta,
)
from zetaforms.numerics.sums import significant_precision
from zetaforms.polylog_forms import rn_rational

REC = apery_by_recurrence(100)


def exact_mp(x: Fraction):
    return mpmath.mpf(x.numerator) / x.denominator


# -- zeta ------------------------------------------------------------------------


def test_zeta_closed_forms():
    with mpmath.workdps(60):
        assert zeta(2, 50).agrees(mpmath.pi**2 / 6, 50)
        assert zeta(4, 50).agrees(mpmath.pi**4 / 90, 50)


def test_zeta_against_frozen(oracles):
    for s, v in oracles["zeta"].items():
        assert zeta(int(s), 60).agrees(oracle_mpf(v), 60)


def test_zeta3_two_methods():
    # Euler-Maclaurin against the accelerated series; 60 terms leave an error below 4^-60 ~ 1e-36
    z = zeta(3, 50)
    with mpmath.workdps(60):
        partial = exact_mp(accelerated_zeta3_partial(60))
        assert z.agrees(partial, 35)
        assert z.agrees(mpmath.mpf("1.2020569031595942854"), 19)


def test_zeta_rejects_small_s():
    with pytest.raises(ValueError):
        zeta(1)


def test_eta_and_hurwitz():
    with mpmath.workdps(60):
        assert eta(1, 50).agrees(mpmath.log(2), 50)
        assert eta(2, 50).agrees(mpmath.pi**2 / 12, 50)
        assert hurwitz_zeta(3, mpmath.mpf(1) / 2, 50).agrees(7 * mpmath.zeta(3), 49)


def test_certificate_meets_precision():
    for s in (2, 3, 5, 11):
        v = zeta(s, 50)
        assert v.digits() >= 48


@pytest.mark.parametrize("p", [30, 50, 80])
def test_precision_plus_ten_stable(p):
    for s in (2, 3, 7):
        a, b = zeta(s, p), zeta(s, p + 10)
        with mpmath.workdps(p + 30):
            assert abs(a.value - b.value) <= a.error
    a, b = polylog(3, Fraction(1, 2), p), polylog(3, Fraction(1, 2), p + 10)
    with mpmath.workdps(p + 30):
        assert abs(a.value - b.value) <= a.error
    a, b = direct_sum(rn_rational(3), 1, 1, p), direct_sum(rn_rational(3), 1, 1, p + 10)
    with mpmath.workdps(p + 30):
        assert abs(a.value - b.value) <= a.error


def test_highprec_arithmetic_propagates_error():
    a, b = zeta(2, 40), zeta(3, 40)
    with mpmath.workdps(60):
        assert (a + b).error == a.error + b.error
        assert (a - b).error == a.error + b.error
        assert abs(a.scale(-3).error - 3 * a.error) <= 1e-40 * a.error


# -- polylog -----------------------------------------------------------------------


def test_polylog_examples(oracles):
    with mpmath.workdps(60):
        assert polylog(1, -1, 50).agrees(-mpmath.log(2), 50)
    assert polylog(2, 1, 50).agrees(zeta(2, 50), 50)
    assert polylog(3, Fraction(1, 2), 60).agrees(oracle_mpf(oracles["li3_half"]), 60)
    assert polylog(2, Fraction(1, 2), 60).agrees(oracle_mpf(oracles["li2_half"]), 60)


def test_li3_half_against_200_terms_and_tail():
    with mpmath.workdps(70):
        x = mpmath.mpf(1) / 2
        head = mpmath.fsum(x**k / mpmath.mpf(k) ** 3 for k in range(1, 201))
        tail_bound = x**201 / (201**3 * (1 - x))
        v = polylog(3, Fraction(1, 2), 40)
        assert abs(v.value - head) <= tail_bound + mpmath.mpf(10) ** -40
        assert tail_bound < mpmath.mpf(10) ** -40


def test_polylog_rejects_divergent():
    with pytest.raises(ValueError):
        polylog(1, 1)
    with pytest.raises(ValueError):
        polylog(2, Fraction(3, 2))
    with pytest.raises(ValueError):
        polylog(0, Fraction(1, 2))


@settings(max_examples=40)
@given(st.integers(1, 8), st.fractions(min_value=-1, max_value=1, max_denominator=50))
def test_polylog_abs_dominates(j, x):
    if j == 1 and abs(x) == 1:
        return
    a = polylog(j, x, 30).value
    b = polylog(j, abs(x), 30).value
    with mpmath.workdps(50):
        assert a <= b + mpmath.mpf(10) ** -28


def test_polylog_fallback_region_against_mpmath():
    x = Fraction(9, 10)
    with mpmath.workdps(50):
        assert polylog(3, x, 40).agrees(mpmath.polylog(3, mpmath.mpf(9) / 10), 38)


# -- linear forms ---------------------------------------------------------------------


def test_linear_form_examples():
    v1 = linear_form_value(REC[1], 50)
    assert mpmath.nstr(v1.value, 4) == "0.01028"
    z3 = zeta(3, 50)
    assert linear_form_value(REC[0], 50).agrees(z3, 50)
    form = ZetaLinearForm(Fraction(-6), {3: Fraction(5)})
    assert form.value(50).agrees(v1, 50)


def test_forms_nonvanishing_and_alternation_free():
    for p in REC[1:31]:
        v = linear_form_value(p, 50)
        assert abs(v.value) > v.error
        assert v.value > 0


def test_log2_forms():
    form = ZetaLinearForm(Fraction(0), {}, Fraction(2))
    with mpmath.workdps(60):
        assert form.value(50).agrees(2 * mpmath.log(2), 50)


# -- rate fits ------------------------------------------------------------------------


def _i_values(N):
    out = {}
    for p in REC[1 : N + 1]:
        prec = significant_precision(lambda q: linear_form_value(p, q), 30)
        out[p.n] = linear_form_value(p, prec)
    return out


def test_rate_fit_apery_forms():
    fit = rate_fit(_i_values(100), 4 * math.log(math.sqrt(2) - 1))
    assert fit.within(0.02)
    assert len(fit.samples) == 100


def test_rate_fit_u_growth():
    fit = rate_fit({p.n: p.u for p in REC[1:]}, 4 * math.log(math.sqrt(2) + 1))
    assert fit.within(0.02)


def test_rate_fit_constant_and_errors():
    assert rate_fit([7] * 12).slope == 0
    with pytest.raises(ValueError):
        rate_fit([1] * 9)
    with pytest.raises(ValueError):
        rate_fit([1] * 11).within(0.1)


@given(st.floats(-3, 3, allow_nan=False), st.floats(-5, 5, allow_nan=False))
def test_rate_fit_recovers_exact_slope(slope, icpt):
    fit = rate_fit({n: slope * n + icpt for n in range(20)}, logs=True)
    assert fit.slope == pytest.approx(slope, abs=1e-9)


def test_rate_fit_uses_last_half_only():
    vals = {n: (0.0 if n < 10 else 2.0 * n) for n in range(20)}
    assert rate_fit(vals, logs=True).slope == pytest.approx(2.0)


# -- direct sums --------------------------------------------------------------------


def test_direct_sum_certified():
    v = direct_sum(rn_rational(2), 1, 1, 50)
    assert v.error < mpmath.mpf(10) ** -50
    # n = 0: -R_0'(k) = 2/k^3
    assert direct_sum(rn_rational(0), 1, 1, 50).agrees(zeta(3, 50).scale(2), 50)


# -- quadrature ------------------------------------------------------------------------


def _two_form(n):
    z3 = zeta(3, 30)
    with mpmath.workdps(40):
        return 2 * (REC[n].u * z3.value - exact_mp(REC[n].v))


def test_beukers_n0():
    assert abs(beukers_integral(0).value - _two_form(0)) < 1e-10


@pytest.mark.parametrize("n", [1, 2])
def test_beukers_small_n(n):
    v = beukers_integral(n)
    assert abs(v.value - _two_form(n)) < 1e-8
    assert v.error < 1e-8


def test_beukers_limits():
    with pytest.raises(ValueError):
        beukers_integral(0, 30)
    with pytest.raises(ValueError):
        beukers_integral(4)


def test_cube_maximum():
    res = cube_maximum()
    assert abs(res.value - (math.sqrt(2) - 1) ** 4) < 1e-8
    u, v, w = res.point
    assert abs(u - v) < 1e-4
