"""Command-line entry point: tables, verification suites, rate fits, bounds.

Exit codes: 0 when every check passes, 1 when some check fails, 2 on a
usage error. Reports go to standard output; progress goes to standard error.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
import time
from fractions import Fraction

import mpmath

from . import apery as ap
from . import modular as mod
from . import polylog_forms as pf
from . import quantitative as qt
from . import rivoal as rv
from .core.arith import lcm_upto
from .numerics import linear_form_value, rate_fit
from .numerics.sums import significant_precision
from .report import Numeric, Outcome, ReportDocument, check, exact

SUITES = ("all", "constructions", "denominators", "pade", "orthogonality", "congruences", "modular", "rivoal", "quantitative")
DEFAULT_LEMMA_PARAMS = ((4, 1), (5, 2), (6, 1), (8, 2))
DEFAULT_PRIMES = (3, 5, 7, 11, 13)
LOG_ALPHA_APERY = 4 * math.log(math.sqrt(2) - 1)
LOG_BETA_APERY = 4 * math.log(math.sqrt(2) + 1)


class UsageError(Exception):
    pass


def default_precision() -> int:
    raw = os.environ.get("ZETAFORMS_PRECISION", "50")
    try:
        p = int(raw)
    except ValueError:
        raise UsageError(f"ZETAFORMS_PRECISION must be an integer, got {raw!r}")
    if p < 15:
        raise UsageError("ZETAFORMS_PRECISION must be at least 15")
    return p


def progress(msg: str) -> None:
    print(msg, file=sys.stderr, flush=True)


def _numeric(x, digits: int) -> Numeric:
    v = x.value if hasattr(x, "value") else x
    return Numeric(mpmath.nstr(v, digits, strip_zeros=False), digits)


def parse_params(text: str | None) -> tuple[int, int] | None:
    if text is None:
        return None
    try:
        a, r = (int(s) for s in text.split(","))
    except ValueError:
        raise UsageError(f"--params expects 'a,r', got {text!r}")
    return a, r


# -- apery --------------------------------------------------------------------


def cmd_apery(max_n: int, precision: int) -> ReportDocument:
    if max_n < 0:
        raise UsageError("--max-n must be >= 0")
    rep = ReportDocument("apery", {"max_n": max_n, "precision": precision})
    pairs = ap.apery_by_recurrence(max_n)
    for p in pairs:
        n = p.n
        progress(f"apery n={n}")
        witness = {"n": str(n), "u": exact(p.u), "v": exact(p.v)}
        ok = p.u.denominator == 1
        if n >= 1:
            delta = p.v * pairs[n - 1].u - p.u * pairs[n - 1].v
            scaled = 2 * lcm_upto(n) ** 3 * p.v
            witness["delta"] = exact(delta)
            witness["2d_n^3 v"] = exact(scaled)
            ok = ok and delta == Fraction(6, n**3) and scaled.denominator == 1
        value = linear_form_value(p, significant_precision(lambda q: linear_form_value(p, q), precision, start=precision))
        out = Outcome(f"n={n}", "pass" if ok else "fail", witness, {"I_n": _numeric(value, precision)})
        rep.add(out)
    return rep


# -- verify suites --------------------------------------------------------------


def suite_constructions(rep: ReportDocument, max_n: int) -> None:
    rec = ap.apery_by_recurrence(max_n)
    M = mod.modular_apery(max(max_n, 1))
    for n in range(max_n + 1):
        progress(f"constructions n={n}")
        builds = {"explicit": ap.apery_by_sum(n), "sigma": pf.abc_polynomials(n).apery_pair()}
        if n >= 1:
            builds["vwp"] = pf.vwp_decomposition(n).apery_pair()
        builds["modular"] = ap.AperyPair(n, M.U[n], M.V[n], "modular")
        bad = sorted(k for k, b in builds.items() if not b.same_values(rec[n]))
        rep.add(
            check(
                f"constructions agree n={n}",
                not bad,
                u=exact(rec[n].u),
                v=exact(rec[n].v),
                compared=",".join(sorted(builds)),
                mismatched=",".join(bad),
            )
        )


def suite_denominators(rep: ReportDocument, max_n: int, params: tuple[int, int] | None) -> None:
    bad = []
    for n in range(1, max_n + 1):
        if not ap.denominator_check(n).ok:
            bad.append(str(n))
    rep.add(check(f"u_n and 2 d_n^3 v_n integral, n<={max_n}", not bad, failing_n=",".join(bad)))
    for a, r in [params] if params else DEFAULT_LEMMA_PARAMS:
        for n in range(1, min(max_n, 6) + 1):
            progress(f"denominators a={a} r={r} n={n}")
            dec = rv.rivoal_decompose(rv.RivoalParams(a, r, n))
            rep.add(check(f"d_n^(a-j) P_j integral a={a} r={r} n={n}", rv.denominator_lemma_check(dec)))


def suite_pade(rep: ReportDocument, max_n: int) -> None:
    for n in range(max_n + 1):
        progress(f"pade n={n}")
        rep.add(check(f"order conditions n={n}", pf.pade_order_check(n) and pf.order_is_sharp(n)))
    for n in range(1, min(max_n, 6) + 1):
        dim = pf.pade_solution_dimension(n)
        rep.add(check(f"solution space dimension n={n}", dim == 1 and pf.pade_kernel_matches(n), dimension=str(dim)))


def suite_orthogonality(rep: ReportDocument, max_n: int) -> None:
    for n in range(1, max_n + 1):
        progress(f"orthogonality n={n}")
        first, second = pf.orthogonality_moments(n, n)
        rep.add(
            check(
                f"orthogonality n={n}",
                pf.orthogonality_check(n),
                first_at_k_eq_n=exact(first),
                second_at_k_eq_n=exact(second),
            )
        )


def suite_congruences(rep: ReportDocument, primes) -> None:
    for p in primes:
        progress(f"congruences p={p}")
        res = mod.congruence_suite(p)
        for fam, status in sorted(res.families().items()):
            rep.add(Outcome(f"{fam} p={p}", status, {"p": str(p)}))


def suite_modular(rep: ReportDocument, max_n: int) -> None:
    N = max(max_n, 4) + 3
    M = mod.modular_apery(N)
    rec = ap.apery_by_recurrence(N)
    L = mod.DiffOperatorL.apery()
    LU = mod.apply_L(L, M.U)
    LV = mod.apply_L(L, M.V)
    top = LU.order
    rep.add(check(f"L(U) = 0 through t^{top}", all(LU[k] == 0 for k in range(top + 1))))
    # the constant is forced: L(V)(0) = V_1 = v_1
    const = LV[0]
    rep.add(
        check(
            f"L(V) constant through t^{top}",
            all(LV[k] == 0 for k in range(1, top + 1)) and const == rec[1].v,
            constant=exact(const),
        )
    )
    rep.add(
        check(
            f"U, V equal the recurrence through t^{N}",
            all(M.U[n] == rec[n].u and M.V[n] == rec[n].v for n in range(N + 1)),
        )
    )
    gam = mod.gamma_coefficients(N)
    odd_only = all(gam[k - 1] == 0 for k in range(2, N + 1, 2))
    rep.add(Outcome(f"gamma_n = 0 for even n <= {N}", "pass" if odd_only else "info", {"gamma": ",".join(map(str, gam))}))


def suite_rivoal(rep: ReportDocument, max_n: int, params: tuple[int, int] | None, precision: int) -> None:
    a, r = params or (6, 1)
    for n in range(1, max_n + 1):
        progress(f"rivoal a={a} r={r} n={n}")
        rp = rv.RivoalParams(a, r, n)
        dec = rv.rivoal_decompose(rp)
        tag = f"a={a} r={r} n={n}"
        rep.add(check(f"symmetry {tag}", rv.symmetry_check(dec)))
        rep.add(check(f"no residue at infinity {tag}", rv.residue_at_infinity_vanishes(dec)))
        rep.add(check(f"denominator lemma {tag}", rv.denominator_lemma_check(dec)))
        if rp.a_even:
            form = rv.zeta_form(dec)
            even_zero = dec.P_at(1, 1) == 0 and all(dec.P_at(j, 1) == 0 for j in range(2, a + 1, 2))
            rep.add(check(f"P_1(1) and even zeta coefficients vanish {tag}", even_zero))
            ball = rv.ball_conjecture_probe(dec)
            asserted = (a, r) in ((4, 1), (6, 1))
            status = ("pass" if ball else "fail") if asserted else "info"
            rep.add(Outcome(f"d_n^(a-1) kappa integral {tag}", status, {"holds": str(ball).lower()}))
            rep.add(Outcome(f"form {tag}", "info", {f"zeta({s})": exact(form.coefficient(s)) for s in form.support()} | {"1": exact(form.constant)}))
        direct, decv = rv.series_comparison(dec, 2, precision)
        digits = precision - 10
        rep.add(check(f"z=2 direct vs decomposition to {digits} digits {tag}", direct.agrees(decv, digits)))


def suite_quantitative(rep: ReportDocument, max_n: int) -> None:
    data = qt.apery_exponent_data()
    mu = qt.exponent_bound(data)
    rep.add(check("irrationality exponent preset", abs(mu - 13.4179) <= 1e-4, mu=f"{mu:.6f}"))
    budget = qt.growth_budget_check()
    rep.add(check("budget 3*35 + 34 + 8*33 below the threshold", budget.total == 403 and budget.holds, total=str(budget.total)))
    for n in range(1, min(max_n, 3) + 1):
        progress(f"quantitative derivative form a=6 n={n}")
        dec, form = qt.derivative_form(6, n)
        rep.add(check(f"2 d_n^(a+2) kappa integral a=6 n={n}", qt.denominator_exponent_check(dec, form, 2)))
        conj = qt.denominator_exponent_check(dec, form, 1)
        rep.add(Outcome(f"2 d_n^(a+1) kappa integral a=6 n={n}", "info", {"holds": str(conj).lower()}))
    progress("quantitative ten-block form n=1")
    zdec, _ = qt.zudilin_form(1)
    rep.add(check("ten-block symmetry n=1", zdec.symmetry_holds()))
    rep.add(check("ten-block vanishing n=1", zdec.vanishing_holds()))
    rep.add(check("ten-block index ranges n=1", zdec.index_ranges_hold()))
    coarse = zdec.coarse_denominator_holds()
    rep.add(check("ten-block coarse denominator n=1", all(coarse.values())))


def cmd_verify(suite: str, max_n: int | None, params, primes, precision: int) -> ReportDocument:
    if suite not in SUITES:
        raise UsageError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    if max_n is not None and max_n < 0:
        raise UsageError("--max-n must be >= 0")
    rep = ReportDocument("verify", {"suite": suite, "max_n": -1 if max_n is None else max_n, "precision": precision})
    if params:
        rep.parameters["params"] = f"{params[0]},{params[1]}"
        try:
            rv.RivoalParams(params[0], params[1], 1)
        except ValueError as e:
            raise UsageError(str(e))
    run = SUITES[1:] if suite == "all" else (suite,)

    def n_or(default: int) -> int:
        return default if max_n is None else max_n

    for s in run:
        if s == "constructions":
            suite_constructions(rep, n_or(15))
        elif s == "denominators":
            suite_denominators(rep, n_or(50), params)
        elif s == "pade":
            suite_pade(rep, n_or(10))
        elif s == "orthogonality":
            suite_orthogonality(rep, n_or(10))
        elif s == "congruences":
            suite_congruences(rep, primes)
        elif s == "modular":
            suite_modular(rep, n_or(15))
        elif s == "rivoal":
            suite_rivoal(rep, n_or(4), params, precision)
        elif s == "quantitative":
            suite_quantitative(rep, n_or(3))
    return rep


# -- rates --------------------------------------------------------------------


def _fit_outcome(name: str, fit, tol: float) -> Outcome:
    return Outcome(
        name,
        "pass" if fit.within(tol) else "fail",
        {"samples": str(len(fit.samples)), "tolerance": str(tol)},
        {"slope": Numeric(f"{fit.slope:.6f}", 6), "target": Numeric(f"{fit.target:.6f}", 6)},
    )


def cmd_rates(target: str, params, max_n: int | None, precision: int, tol: float) -> ReportDocument:
    if target not in ("apery", "rivoal"):
        raise UsageError(f"unknown target {target!r}")
    N = max_n if max_n is not None else (100 if target == "apery" else 20)
    if N < 10:
        raise UsageError("--max-n must be >= 10 for a rate fit")
    rep = ReportDocument("rates", {"target": target, "max_n": N, "precision": precision, "tolerance": str(tol)})
    if target == "apery":
        pairs = ap.apery_by_recurrence(N)
        vals = {}
        for p in pairs[1:]:
            progress(f"rates apery n={p.n}")
            vals[p.n] = linear_form_value(p, significant_precision(lambda q: linear_form_value(p, q), precision, start=precision))
        rep.add(_fit_outcome("log|I_n| slope", rate_fit(vals, LOG_ALPHA_APERY), tol))
        rep.add(_fit_outcome("log u_n slope", rate_fit({p.n: p.u for p in pairs[1:]}, LOG_BETA_APERY), tol))
        return rep
    a, r = params or (4, 1)
    rep.parameters["params"] = f"{a},{r}"
    try:
        rv.RivoalParams(a, r, 1)
    except ValueError as e:
        raise UsageError(str(e))
    est = rv.rate_phi(r, a, 1, precision)
    vals = {}
    for n in range(1, N + 1):
        progress(f"rates rivoal a={a} r={r} n={n}")
        form = rv.form_at_one(rv.rivoal_decompose(rv.RivoalParams(a, r, n)))
        vals[n] = linear_form_value(form, significant_precision(lambda q: linear_form_value(form, q), precision, start=precision))
    rep.add(_fit_outcome(f"log|S_n(1)| slope a={a} r={r}", rate_fit(vals, float(est.log_phi)), tol))
    rep.add(Outcome("phi", "info", {"r": str(r), "a": str(a)}, {"phi": _numeric(est.phi, 20), "s0": _numeric(est.s0, 20)}))
    return rep


# -- bound --------------------------------------------------------------------


def cmd_bound(alpha, beta, preset: str | None, a: int) -> ReportDocument:
    rep = ReportDocument("bound", {})
    if preset is None:
        if alpha is None or beta is None:
            raise UsageError("give --alpha and --beta, or --preset")
        rep.parameters.update({"alpha": repr(alpha), "beta": repr(beta)})
        try:
            b = rv.nesterenko_bound(alpha, beta)
        except ValueError as e:
            raise UsageError(str(e))
        rep.add(Outcome("dimension lower bound", "info", {}, {"bound": Numeric(f"{b:.6f}", 6)}))
        rep.add(Outcome("irrationality exponent", "info", {}, {"mu": Numeric(f"{1 - math.log(beta) / math.log(alpha):.6f}", 6)}))
        return rep
    rep.parameters["preset"] = preset
    if preset == "apery-zeta3":
        data = qt.apery_exponent_data()
        mu = qt.exponent_bound(data)
        dim = rv.nesterenko_bound_logs(data.log_alpha, data.log_beta)
        rep.add(check("irrationality exponent", abs(mu - qt.REFERENCE_EXPONENTS["apery"]) <= 1e-4, mu=f"{mu:.6f}"))
        rep.add(check("dimension bound above 1", dim > 1, bound=f"{dim:.6f}"))
        return rep
    if preset == "rivoal":
        if a % 2 or a < 4:
            raise UsageError("--a must be even and >= 4 for the rivoal preset")
        rep.parameters["a"] = a
        pt = rv.dimension_trend([a])[0]
        r = pt.r
        log_alpha, log_beta = rv.rate_exact_bound_for_params(a, r)
        rep.parameters["r"] = r
        if log_alpha >= 0:
            rep.add(Outcome("dimension lower bound", "info", {"reason": "log alpha >= 0, no bound"}))
        else:
            b = rv.nesterenko_bound_logs(log_alpha, log_beta)
            rep.add(
                Outcome(
                    "dimension lower bound",
                    "info",
                    {"r": str(r)},
                    {"bound": Numeric(f"{b:.6f}", 6), "log_alpha": Numeric(f"{log_alpha:.6f}", 6), "log_beta": Numeric(f"{log_beta:.6f}", 6)},
                )
            )
        rep.add(
            Outcome(
                "proxy trend",
                "info",
                {"ell": str(pt.ell)},
                {"bound": Numeric(f"{pt.bound:.6f}", 6), "ratio_to_log_ell": Numeric(f"{pt.ratio:.6f}", 6),
                 "limit": Numeric(f"{rv.asymptotic_dimension_constant():.6f}", 6)},
            )
        )
        return rep
    raise UsageError(f"unknown preset {preset!r}")


# -- entry point --------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="zetaforms", description=__doc__.splitlines()[0])
    parser.add_argument("--format", choices=("json", "csv", "text"), default="text")
    parser.add_argument("--precision", type=int, default=None, help="decimal digits (default: $ZETAFORMS_PRECISION or 50)")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("apery", help="u_n, v_n, I_n, Delta_n table")
    p.add_argument("--max-n", type=int, default=10)
    p.add_argument("--format", choices=("json", "csv", "text"), default=argparse.SUPPRESS)

    p = sub.add_parser("verify", help="run an invariant suite")
    p.add_argument("suite", choices=SUITES)
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--params", default=None, help="a,r")
    p.add_argument("--p", type=int, action="append", default=None, help="prime for the congruence suite (repeatable)")
    p.add_argument("--format", choices=("json", "csv", "text"), default=argparse.SUPPRESS)

    p = sub.add_parser("rates", help="empirical growth rates against reference constants")
    p.add_argument("--target", choices=("apery", "rivoal"), default="apery")
    p.add_argument("--params", default=None, help="a,r")
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--tolerance", type=float, default=0.05)
    p.add_argument("--format", choices=("json", "csv", "text"), default=argparse.SUPPRESS)

    p = sub.add_parser("bound", help="dimension bound and irrationality exponent")
    p.add_argument("--alpha", type=float, default=None)
    p.add_argument("--beta", type=float, default=None)
    p.add_argument("--preset", choices=("apery-zeta3", "rivoal"), default=None)
    p.add_argument("--a", type=int, default=20)
    p.add_argument("--format", choices=("json", "csv", "text"), default=argparse.SUPPRESS)
    return parser


def run(argv=None) -> tuple[ReportDocument, str]:
    args = build_parser().parse_args(argv)
    if args.command is None:
        raise UsageError("a subcommand is required")
    precision = args.precision if args.precision is not None else default_precision()
    if precision < 15:
        raise UsageError("--precision must be at least 15")
    start = time.perf_counter()
    if args.command == "apery":
        rep = cmd_apery(args.max_n, precision)
    elif args.command == "verify":
        primes = tuple(args.p) if args.p else DEFAULT_PRIMES
        for q in primes:
            if q < 3 or not mod.is_prime(q):
                raise UsageError(f"--p must be an odd prime, got {q}")
        rep = cmd_verify(args.suite, args.max_n, parse_params(args.params), primes, precision)
    elif args.command == "rates":
        rep = cmd_rates(args.target, parse_params(args.params), args.max_n, precision, args.tolerance)
    else:
        rep = cmd_bound(args.alpha, args.beta, args.preset, args.a)
    rep.timing["seconds"] = round(time.perf_counter() - start, 3)
    return rep, args.format


def main(argv=None) -> int:
    try:
        rep, fmt = run(argv)
    except UsageError as e:
        print(f"zetaforms: error: {e}", file=sys.stderr)
        return 2
    sys.stdout.write(rep.render(fmt))
    return 0 if rep.ok else 1


if __name__ == "__main__":
    sys.exit(main())
