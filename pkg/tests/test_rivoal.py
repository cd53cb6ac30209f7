import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import oracle_mpf, oracle_table, table_matches
from zetaforms.apery import apery_by_recurrence
from zetaforms.core import lcm_upto
from zetaforms.numerics import linear_form_value
from zetaforms.numerics.sums import significant_precision
from zetaforms.polylog_forms import reconstruction_check
from zetaforms.rivoal import (
    RivoalParams,
    asymptotic_dimension_constant,
    ball_conjecture_probe,
    coefficient_growth,
    denominator_lemma_check,
    dimension_trend,
    evaluate_at_minus_one,
    form_at_one,
    growth_bound,
    nesterenko_bound,
    nesterenko_bound_logs,
    odd_a_forms,
    rate_phi,
    residue_at_infinity_vanishes,
    rivoal_decompose,
    rivoal_rational,
    series_comparison,
    sharpness_probe,
    symmetry_check,
    zeta_form,
)

REC = apery_by_recurrence(20)


def dec(a, r, n, method="product"):
    return rivoal_decompose(RivoalParams(a, r, n), method)


# -- parameters -------------------------------------------------------------------


@pytest.mark.parametrize("a,r,n", [(2, 1, 1), (4, 2, 1), (4, 0, 1), (6, 1, 0)])
def test_invalid_params_rejected(a, r, n):
    with pytest.raises(ValueError):
        RivoalParams(a, r, n)


def test_large_configuration_accepted_at_n1():
    d = dec(169, 10, 1)
    assert residue_at_infinity_vanishes(d)
    assert denominator_lemma_check(d)


# -- tables -----------------------------------------------------------------------


@pytest.mark.parametrize("a,r,n", [(4, 1, 2), (5, 2, 2), (6, 1, 1), (3, 1, 2)])
def test_table_matches_frozen_oracle(a, r, n):
    assert table_matches(dec(a, r, n).table, oracle_table(f"rivoal/{a},{r},{n}"))


@pytest.mark.parametrize("a,r", [(3, 1), (4, 1), (5, 2), (6, 1), (7, 3), (8, 2)])
def test_product_equals_local(a, r):
    for n in range(1, 5):
        assert dec(a, r, n).table == dec(a, r, n, "local").table


def test_reconstruction_5_2_2():
    d = dec(5, 2, 2)
    assert reconstruction_check(d.table, rivoal_rational(d.params), 20, seed=7)


@given(st.sampled_from([(3, 1), (4, 1), (5, 1), (5, 2), (6, 1), (6, 2), (8, 3)]), st.integers(1, 5))
def test_no_residue_at_infinity(ar, n):
    assert residue_at_infinity_vanishes(dec(*ar, n))


# -- symmetry and vanishing --------------------------------------------------------


def test_symmetry_a4():
    for n in range(1, 7):
        assert symmetry_check(dec(4, 1, n))


def test_symmetry_a3_even_n_sign():
    for n in (2, 4, 6):
        d = dec(3, 1, n)
        assert symmetry_check(d)
        for j in range(1, 4):
            assert d.params.sign(j) == (-1) ** j
            p = d.decomposition.P(j)
            assert p == p.reciprocal(n) * (-1) ** j


@given(st.sampled_from([(4, 1), (6, 1), (6, 2), (8, 2), (8, 3), (10, 4)]), st.integers(1, 4))
def test_even_a_even_index_vanishing_two_ways(ar, n):
    d = dec(*ar, n)
    a = ar[0]
    assert symmetry_check(d)
    for j in range(2, a + 1, 2):
        # anti-palindromic under z^n reversal, and zero at 1 by direct evaluation
        assert d.params.sign(j) == -1
        assert d.P_at(j, 1) == 0
    assert d.P_at(1, 1) == 0


def test_degenerate_zero_polynomial_symmetric():
    from zetaforms.core.forms import reciprocity_holds
    from zetaforms.core import Polynomial

    assert reciprocity_holds(Polynomial(), 5, -1)


# -- forms at z = 1 ---------------------------------------------------------------


def test_a4_forms_are_apery():
    for n in range(1, 9):
        f = zeta_form(dec(4, 1, n))
        assert f.constant == -2 * REC[n].v
        assert f.coefficient(3) == 2 * REC[n].u
        assert f.arguments() == [3]


def test_a4_n2_exact():
    f = zeta_form(dec(4, 1, 2))
    assert (f.constant, f.coefficient(3)) == (Fraction(-351, 2), 146)


def test_a6_n1_shape():
    d = dec(6, 1, 1)
    assert d.P_at(2, 1) == 0 and d.P_at(4, 1) == 0
    f = zeta_form(d)
    assert f.arguments() == [3, 5]
    assert 1 not in f.coefficients and 2 not in f.coefficients and 4 not in f.coefficients


def test_a8_r2_denominators():
    for n in range(1, 5):
        f = zeta_form(dec(8, 2, n))
        assert f.scaled_integral(lcm_upto(n) ** 8)


@given(st.sampled_from([(3, 1), (4, 1), (5, 1), (5, 2), (6, 1), (6, 2), (7, 2), (8, 2)]), st.integers(1, 5))
def test_every_form_has_da_denominator(ar, n):
    f = form_at_one(dec(*ar, n))
    assert f.scaled_integral(lcm_upto(n) ** ar[0])


def test_odd_a_forms_shapes():
    f = odd_a_forms(dec(3, 1, 2))
    assert f.arguments() == [2]
    d = dec(3, 1, 2)
    assert d.P_at(3, 1) == 0
    f = odd_a_forms(dec(5, 1, 1))
    assert f.arguments() == [3, 5]
    f = odd_a_forms(dec(5, 2, 2))
    assert f.arguments() == [2, 4]
    with pytest.raises(ValueError):
        odd_a_forms(dec(4, 1, 1))
    with pytest.raises(ValueError):
        zeta_form(dec(5, 1, 1))


def test_forms_match_their_values():
    for a, r, n in [(4, 1, 3), (5, 1, 1), (5, 2, 2), (6, 1, 2), (3, 1, 2)]:
        d = dec(a, r, n)
        f = form_at_one(d)
        from zetaforms.numerics import direct_sum

        prec = significant_precision(lambda p: linear_form_value(f, p), 40)
        direct = direct_sum(rivoal_rational(d.params), 1, 0, prec)
        assert direct.agrees(linear_form_value(f, prec), prec - 5)


# -- z = 2 and z = -1 --------------------------------------------------------------


@pytest.mark.parametrize("a,r,n", [(4, 1, 3), (5, 2, 2), (6, 1, 2)])
def test_z2_direct_vs_decomposition(oracles, a, r, n):
    direct, value = series_comparison(dec(a, r, n), 2, 50)
    frozen = oracle_mpf(oracles["direct"][f"rivoal/{a},{r},{n}/z=2"])
    assert direct.agrees(value, 45)
    assert direct.agrees(frozen, 45)


def test_minus_one_a3_gives_zeta2_forms(oracles):
    b = oracles["apery_zeta2"]
    for n in range(1, 7):
        rep = evaluate_at_minus_one(dec(3, 1, n))
        f = rep.form
        assert f.coefficient(2) == -b[n]
        assert f.coefficient(3) == 0
        assert f.log2 == 0
        assert f.scaled_integral(lcm_upto(n) ** 2)
        assert rep.agree(45)


def test_minus_one_log2_vanishes_with_p1():
    for a, r, n in [(4, 1, 2), (5, 2, 1), (6, 1, 3)]:
        d = dec(a, r, n)
        rep = evaluate_at_minus_one(d)
        assert (rep.form.log2 == 0) == (d.P_at(1, -1) == 0)
        assert rep.agree(45)


# -- denominators ----------------------------------------------------------------


def test_denominator_lemma_a4():
    for n in range(1, 11):
        assert denominator_lemma_check(dec(4, 1, n))


def test_top_polynomial_is_integral():
    for a, r, n in [(4, 1, 3), (5, 2, 2), (8, 2, 3)]:
        d = dec(a, r, n)
        assert d.decomposition.P(a).is_integral()


def test_sharpness_probe_finds_witness():
    found = sharpness_probe([(4, 1)], 8)
    assert found
    assert found[0] == {"a": 4, "r": 1, "n": 4, "j": 0}
    assert not denominator_lemma_check(dec(4, 1, 4), drop=1)


def test_ball_probe_asserted_cases():
    for n in range(1, 21):
        assert ball_conjecture_probe(dec(4, 1, n))
    for n in range(1, 9):
        assert ball_conjecture_probe(dec(6, 1, n))


def test_ball_probe_a8_r2_recorded():
    outcomes = [ball_conjecture_probe(dec(8, 2, n)) for n in range(1, 7)]
    assert all(isinstance(x, bool) for x in outcomes)


def test_ball_probe_needs_even_a():
    with pytest.raises(ValueError):
        ball_conjecture_probe(dec(5, 2, 1))


# -- growth and rates --------------------------------------------------------------


@pytest.mark.parametrize("a,r", [(4, 1), (6, 2)])
def test_coefficient_growth_at_30(a, r):
    assert coefficient_growth(dec(a, r, 30)) <= 1.10 * growth_bound(a, r)


def test_rate_phi_apery():
    est = rate_phi(1, 4, 1, 50)
    with mpmath.workdps(50):
        target = (mpmath.sqrt(2) - 1) ** 4
        assert abs(est.phi - target) < mpmath.mpf(10) ** -40
    assert 0.5 < est.s0 <= 1


def test_rate_phi_grid_bound():
    for r in range(1, 6):
        for a in range(2 * r + 1, 21):
            est = rate_phi(r, a, 1, 30)
            assert est.phi <= est.upper_bound
            assert mpmath.mpf(r) / (r + 1) < est.s0 <= 1
            assert float(est.upper_bound) == pytest.approx(2.0 ** (r + 1) / r ** (a - 2 * r), rel=1e-12)


def test_rate_phi_rejects_z_below_one():
    with pytest.raises(ValueError):
        rate_phi(1, 4, Fraction(1, 2))


def test_empirical_rate_a4_at_40():
    f = zeta_form(dec(4, 1, 40))
    v = linear_form_value(f, 160)
    rate = float(mpmath.log(abs(v.value))) / 40
    log_phi = rate_phi(1, 4).log_phi
    assert abs(rate - log_phi) / abs(log_phi) < 0.05


def test_minus_one_rate_is_reported_only():
    # no rate formula at z = -1; record that |S_n(-1)| decays
    vals = [abs(evaluate_at_minus_one(dec(4, 1, n), 60).value.value) for n in range(2, 8)]
    assert all(b < a for a, b in zip(vals, vals[1:]))


# -- dimension bounds ---------------------------------------------------------------


def test_nesterenko_examples():
    assert nesterenko_bound(1 / math.e, math.e) == pytest.approx(2)
    la = 4 * math.log(math.sqrt(2) - 1) + 3
    lb = 4 * math.log(math.sqrt(2) + 1) + 3
    b = nesterenko_bound_logs(la, lb)
    assert b == pytest.approx(1.0805294, abs=1e-6)
    assert b > 1


@pytest.mark.parametrize("alpha,beta", [(0, 2), (1, 2), (0.5, 1), (-0.1, 3)])
def test_nesterenko_rejects_out_of_range(alpha, beta):
    with pytest.raises(ValueError):
        nesterenko_bound(alpha, beta)


def test_theorem_style_trend():
    limit = asymptotic_dimension_constant()
    assert limit == pytest.approx(0.5906161, abs=1e-6)
    pts = dimension_trend([10**k for k in (3, 6, 12, 30, 100)])
    ratios = [p.ratio for p in pts]
    assert all(x < y < limit for x, y in zip(ratios, ratios[1:]))
    assert abs(ratios[-1] - limit) / limit < 0.05
