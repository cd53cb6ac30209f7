from fractions import Fraction

import pytest

from zetaforms.apery import apery_by_recurrence
from zetaforms.core import FormalSeries, TruncationError, lcm_upto
from zetaforms.modular import (
    DiffOperatorL,
    apply_L,
    build_E_F_t,
    congruence_suite,
    divisor_sigma,
    eisenstein,
    f_closed_form,
    gamma_coefficients,
    modular_apery,
)

REC = apery_by_recurrence(40)


@pytest.fixture(scope="module")
def M20():
    return modular_apery(20)


def test_eisenstein_examples():
    e2 = eisenstein("E2", 1, 6)
    assert [int(e2[k]) for k in range(4)] == [1, -24, -72, -96]
    e4 = eisenstein("E4", 2, 6)
    assert e4[2] == 240 and e4[1] == 0 and e4[0] == 1
    for kind in ("E2", "E4"):
        for j in (1, 2, 3, 6):
            assert eisenstein(kind, j, 10)[0] == 1


def test_eisenstein_rejects_unknown():
    with pytest.raises(ValueError):
        eisenstein("E6", 1, 5)


def test_build_E_F_t_against_naive_oracle(oracles):
    E, F, t = build_E_F_t(12)
    q = oracles["qseries"]
    assert [E[k] for k in range(13)] == [Fraction(x) for x in q["E"]]
    assert [F[k] for k in range(13)] == [Fraction(x) for x in q["F"]]
    assert [int(t[k]) for k in range(13)] == q["t"]
    assert E[0] == Fraction(-5 + 2 - 3 + 30, 24) == 1
    assert [int(t[k]) for k in range(4)] == [0, 1, -12, 66]
    assert F[1] == 6 and F[0] == 0
    for s in (E, F, t):
        assert s.is_integral()


def test_f_closed_form_to_50():
    _, F, _ = build_E_F_t(50)
    for n in range(1, 51):
        assert F[n] == f_closed_form(n)


def test_divisor_sigma_non_integer():
    assert divisor_sigma(3, Fraction(5, 2)) == 0
    assert divisor_sigma(3, 0) == 0
    assert divisor_sigma(1, 6) == 12


def test_modular_u_v(M20):
    assert [int(M20.U[k]) for k in range(6)] == [1, 5, 73, 1445, 33001, 819005]
    assert M20.V[0] == 0 and M20.V[1] == 6
    assert M20.V[4] == Fraction(11424695, 288)
    assert (lcm_upto(4) ** 3 * M20.V[4]).denominator == 1


def test_modular_equals_recurrence_to_20(M20):
    for n in range(21):
        assert M20.U[n] == REC[n].u and M20.V[n] == REC[n].v


def test_reversion_round_trip(M20):
    q = FormalSeries.variable(20)
    assert M20.q_of_t.compose(M20.t_of_q) == q
    assert M20.t_of_q.compose(M20.q_of_t) == q


def test_operator_kills_U():
    M = modular_apery(18)
    LU = apply_L(DiffOperatorL.apery(), M.U)
    assert LU.order == 15
    assert all(LU[k] == 0 for k in range(16))


def test_operator_on_V_is_the_constant_v1():
    # L(V)(0) = V_1 since the t-free part of L is d/dt - 5 and V_0 = 0
    M = modular_apery(18)
    LV = apply_L(DiffOperatorL.apery(), M.V)
    assert LV[0] == M.V[1] - 5 * M.V[0] == 6
    assert all(LV[k] == 0 for k in range(1, 16))


def test_operator_on_one():
    one = FormalSeries.constant(1, 10)
    L1 = apply_L(DiffOperatorL.apery(), one)
    assert [L1[k] for k in range(L1.order + 1)] == [-5, 1] + [0] * (L1.order - 1)


def test_operator_needs_order():
    with pytest.raises(TruncationError):
        apply_L(DiffOperatorL.apery(), FormalSeries([1, 2, 3], 2))


def test_gamma(oracles):
    g = gamma_coefficients(12)
    assert g == oracles["qseries"]["gamma"]
    assert g[0] == 1 and g[1] == 0
    assert (g[2], g[4], g[6]) == (-4, -2, 24)


def test_gamma_even_vanishing_up_to_computed_order():
    g = gamma_coefficients(80)
    assert all(g[k - 1] == 0 for k in range(2, 81, 2))


def test_congruence_examples():
    g = gamma_coefficients(7)
    assert REC[5].u % 125 == 5
    assert (REC[2].u - g[4]) % 25 == 0
    assert (REC[3].u - g[6]) % 49 == 0
    assert (REC[4].u - REC[0].u) % 125 == 0


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_congruence_suite(p):
    rep = congruence_suite(p, rs=(1, 2), ms=(1, 3))
    assert rep.ok
    fams = rep.families()
    assert fams["three-term"] == "pass"
    assert fams["half-index vs gamma"] == "pass"
    if p >= 5:
        assert fams["u_p = 5"] == "pass" and fams["p-power index"] == "pass"
    else:
        assert fams["u_p = 5"] == "not applicable"


def test_congruence_suite_rejects_non_prime():
    for p in (2, 9, 1):
        with pytest.raises(ValueError):
            congruence_suite(p)
