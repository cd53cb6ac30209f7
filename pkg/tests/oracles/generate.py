"""Regenerate frozen.json from tools independent of the package.

Run once by hand (needs sympy); the tests only read the frozen file.

    python3 tests/oracles/generate.py
"""

import json
from fractions import Fraction
from pathlib import Path

import mpmath
import sympy as sp

X = sp.Symbol("X")
OUT = Path(__file__).with_name("frozen.json")


def poch(x, k):
    return sp.prod([x + i for i in range(k)]) if k else sp.Integer(1)


def table_of(expr, n_poles):
    """{i: {j: "p/q"}} from sympy.apart."""
    out = {}
    for term in sp.Add.make_args(sp.apart(sp.together(expr), X)):
        num, den = sp.fraction(sp.factor(term))
        base = sp.factor_list(den)[1]
        if not base:
            raise ValueError(f"polynomial part {term}")
        (lin, j), = base
        c = num / sp.factor_list(den)[0] / sp.Poly(lin, X).LC() ** j
        i = int(sp.Poly(lin, X).monic().all_coeffs()[1])
        out.setdefault(str(i), {})[str(j)] = str(sp.Rational(c))
    return out


def rn(n):
    return poch(X - n, n) ** 2 / poch(X, n + 1) ** 2


def vwp(n):
    return sp.factorial(n) ** 2 * (2 * X + n) * poch(X - n, n) * poch(X + n + 1, n) / poch(X, n + 1) ** 4


def rivoal(a, r, n):
    return 2 * sp.factorial(n) ** (a - 2 * r) * (X + sp.Rational(n, 2)) * poch(X - r * n, r * n) * poch(X + n + 1, r * n) / poch(X, n + 1) ** a


def derivative(a, n):
    return sp.factorial(n) ** (a - 6) * (X + sp.Rational(n, 2)) * poch(X - n, n) ** 3 * poch(X + n + 1, n) ** 3 / poch(X, n + 1) ** a


def mp_term(expr, d):
    f = sp.lambdify(X, sp.diff(expr, X, d), "mpmath")
    return f


def direct(expr, z, d, dps):
    """(-1)^d / d! ... here: d = 0 gives sum R(k) z^-k, d = 1 gives -sum R'(k) z^-k, d = 2 gives sum R''(k) z^-k / 2."""
    f = mp_term(expr, d)
    scale = {0: 1, 1: -1, 2: mpmath.mpf(1) / 2}[d]
    with mpmath.workdps(dps + 20):
        z = mpmath.mpf(z)
        s = mpmath.nsum(lambda k: f(k) / z**k, [1, mpmath.inf])
        return mpmath.nstr(scale * s, dps)


def apery_zeta2(N):
    b = [1, 3]
    for n in range(2, N + 1):
        b.append(Fraction((11 * n * n - 11 * n + 3) * b[n - 1] + (n - 1) ** 2 * b[n - 2], n * n))
    return [int(x) for x in b]


def naive_qseries(N):
    """t, E, F through q^N by naive multiplication and divisor sums."""
    def sigma(k, m):
        return sum(d**k for d in range(1, m + 1) if m % d == 0) if m >= 1 and m == int(m) else 0

    def eis(c, k, j):
        return [1] + [c * sigma(k, m // j) if m % j == 0 else 0 for m in range(1, N + 1)]

    E = [sp.Rational(-5 * a + 2 * b - 3 * c + 30 * d, 24) for a, b, c, d in zip(eis(-24, 1, 1), eis(-24, 1, 2), eis(-24, 1, 3), eis(-24, 1, 6))]
    F = [sp.Rational(a - 28 * b + 63 * c - 36 * d, 40) for a, b, c, d in zip(eis(240, 3, 1), eis(240, 3, 2), eis(240, 3, 3), eis(240, 3, 6))]
    q = sp.Symbol("q")
    prod = sp.Integer(1)
    for m in range(1, N + 1):
        if sp.gcd(m, 6) == 1:
            prod = sp.expand(prod * (1 - q**m) ** 12)
            prod = sum(prod.coeff(q, k) * q**k for k in range(N + 1))
    t = sp.Poly(sp.expand(q * prod), q)
    tc = [int(t.coeff_monomial(q**k)) for k in range(N + 1)]
    g = sp.Integer(1)
    for m in range(1, N + 1):
        g = sp.expand(g * (1 - q ** (2 * m)) ** 4 * (1 - q ** (4 * m)) ** 4)
        g = sum(g.coeff(q, k) * q**k for k in range(N + 1))
    gc = [int(sp.expand(q * g).coeff(q, k)) for k in range(1, N + 1)]
    return {"t": tc, "E": [str(x) for x in E], "F": [str(x) for x in F], "gamma": gc}


def main():
    mpmath.mp.dps = 90
    data = {
        "zeta": {str(s): mpmath.nstr(mpmath.zeta(s), 80) for s in range(2, 14)},
        "log2": mpmath.nstr(mpmath.log(2), 80),
        "li3_half": mpmath.nstr(mpmath.polylog(3, mpmath.mpf(1) / 2), 80),
        "li2_half": mpmath.nstr(mpmath.polylog(2, mpmath.mpf(1) / 2), 80),
        "tables": {},
        "direct": {},
    }
    for n in range(0, 5):
        data["tables"][f"rn/{n}"] = table_of(rn(n), n + 1)
    for n in range(1, 4):
        data["tables"][f"vwp/{n}"] = table_of(vwp(n), n + 1)
    for a, r, n in [(4, 1, 2), (5, 2, 2), (6, 1, 1), (3, 1, 2)]:
        data["tables"][f"rivoal/{a},{r},{n}"] = table_of(rivoal(a, r, n), n + 1)
    data["tables"]["derivative/6,1"] = table_of(derivative(6, 1), 2)
    for a, r, n in [(4, 1, 3), (5, 2, 2), (6, 1, 2)]:
        data["direct"][f"rivoal/{a},{r},{n}/z=2"] = direct(rivoal(a, r, n), 2, 0, 50)
    for n in (1, 2, 3):
        data["direct"][f"sigma/{n}/z=2"] = direct(rn(n), 2, 1, 50)
        data["direct"][f"sigma/{n}/z=-1"] = direct(rn(n), -1, 1, 50)
    data["direct"]["derivative/6,2/z=2"] = direct(derivative(6, 2), 2, 2, 50)
    data["apery_zeta2"] = apery_zeta2(8)
    data["qseries"] = naive_qseries(12)
    OUT.write_text(json.dumps(data, indent=1, sort_keys=True) + "\n")


if __name__ == "__main__":
    main()
