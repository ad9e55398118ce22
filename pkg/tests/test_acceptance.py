"""Acceptance suite: one printed PASS/FAIL line per criterion, then the assertion.

Reference values are mpmath results pinned as literals, or exact closed forms
evaluated in binary64.
"""

import math
import subprocess
import sys
import time
from fractions import Fraction

from clausenkit import identities
from clausenkit.ctet import Route, ctet_routes, pairwise_deltas
from clausenkit.harmonic import (
    catalan_split_elliptic, catalan_split_sums, even_legendre_ratio_sum, ik_exact, ik_quad, legendre_moment,
    legendre_zero_sum_limit, tan_integral_clausen, trig_integral_quad,
)
from clausenkit.logtrig import (
    hyperbolic_integrals, hyperbolic_limit, lobachevsky_pi_sixth_trigamma, trig_weight_integral,
)
from clausenkit.numkit import catalan_alternating
from clausenkit.quad import integrate
from clausenkit.specfun import cl2, i_xu, lobachevsky, pfq_series, polygamma
from quad_battery import BATTERY

PI = math.pi
LN2 = math.log(2.0)

# mpmath, 20 digits
G = 0.91596559417721901505
TRIGAMMA_THIRD = 10.095597125427094082
C11 = 0.17390061066200274273
SPLIT_EVEN = 0.34565490194916410039  # (pi/2) sum ((1/2)_m/m!)^2/(2m)
SPLIT_ODD = 0.26113486155954141088   # (pi/2) sum ((1/2)_m/m!)^2/(2m+1)
L_PI_SIXTH = 0.024617146247382480076  # -int_0^(pi/6) ln cos t dt


def announce(capsys, n: int, ok: bool, detail: str) -> None:
    with capsys.disabled():
        print(f"\ncriterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")


def test_criterion_1_routes_agree(capsys):
    start = time.perf_counter()
    values = ctet_routes()
    elapsed = time.perf_counter() - start
    deltas = pairwise_deltas(values)
    limits = {frozenset({Route.SERIES, Route.CLAUSEN}): 1e-12, frozenset({Route.SERIES, Route.SRP}): 1e-11,
              frozenset({Route.CLAUSEN, Route.SRP}): 1e-11}
    worst = []
    ok = elapsed < 5.0 and len(deltas) == 6
    for d in deltas:
        limit = limits.get(frozenset({d.a, d.b}), 1e-9)
        ok = ok and d.delta <= limit
        worst.append(f"{d.a.value}/{d.b.value} {d.delta:.1e}<={limit:.0e}")
    # every route also against the 40-digit value
    ok = ok and all(abs(v.value.value - C11) <= 1e-9 for v in values)
    announce(capsys, 1, ok, f"{elapsed:.2f}s; " + ", ".join(worst))
    assert ok


def _golden_checks():
    q_sin = trig_integral_quad(PI / 2, "sin", 1e-10)
    q_tan = trig_integral_quad(PI / 2, "tan", 1e-10)
    even, odd = catalan_split_sums()
    e_even, e_odd = catalan_split_elliptic()
    x2s2 = trig_weight_integral(PI / 4, "x2/sin2", 1e-10).lhs
    x2t2 = trig_weight_integral(PI / 4, "x2/tan2", 1e-10).lhs
    return [
        ("Cl2(pi/2) = G", cl2(PI / 2).value, G),
        ("G by accelerated alternating sum", catalan_alternating(), G),
        ("Cl2(pi/3) by trigamma", cl2(PI / 3).value, (TRIGAMMA_THIRD - 2 * PI ** 2 / 3) / (2 * math.sqrt(3))),
        ("Cl2(pi/3) by computed trigamma", cl2(PI / 3).value,
         (polygamma(1, 1 / 3) - 2 * PI ** 2 / 3) / (2 * math.sqrt(3))),
        ("3F2(1/2,1/2,1/2;3/2,3/2;1)", pfq_series([0.5, 0.5, 0.5], [1.5, 1.5], 1.0).value, PI / 2 * LN2),
        ("even Legendre ratio sum", even_legendre_ratio_sum().value, 2 * LN2 - 1),
        ("P_n(0)/(n+1) sum", legendre_zero_sum_limit().value, LN2 - 1),
        ("int a/sin a on [0, pi/2]", q_sin.value, 2 * G),
        ("int a/tan a on [0, pi/2]", q_tan.value, PI / 2 * LN2),
        ("int a/tan a by Clausen", tan_integral_clausen(PI / 2), PI / 2 * LN2),
        ("int x^2/sin^2 on [0, pi/4]", x2s2.value, G - PI / 16 * (PI - 4 * LN2)),
        ("int x^2/tan^2 on [0, pi/4]", x2t2.value, G - PI / 16 * (PI - 4 * LN2) - PI ** 3 / 192),
        ("L(pi/6)", lobachevsky(PI / 6), L_PI_SIXTH),
        ("L(pi/6) by trigamma", lobachevsky_pi_sixth_trigamma(), L_PI_SIXTH),
        ("(pi/6) ln2 - L(pi/6) = Cl2(pi/3)/3", PI / 6 * LN2 - lobachevsky(PI / 6), cl2(PI / 3).value / 3),
        ("even-index half sum", even.value, SPLIT_EVEN),
        ("even-index half sum closed", even.value, PI * LN2 - 2 * G),
        ("odd-index half sum", odd.value, SPLIT_ODD),
        ("odd-index half sum closed", odd.value, 2 * G - PI / 2),
        ("even-index half sum by K", e_even.value, SPLIT_EVEN),
        ("odd-index half sum by K", e_odd.value, SPLIT_ODD),
    ], [q_sin, q_tan, x2s2, x2t2, e_even, e_odd]


def test_criterion_2_golden_values(capsys):
    checks, quads = _golden_checks()
    bad = [(name, abs(got - want)) for name, got, want in checks if not abs(got - want) <= 1e-12]
    ok = not bad and all(q.converged for q in quads)
    worst = max(abs(got - want) for _, got, want in checks)
    announce(capsys, 2, ok, f"{len(checks)} values, worst error {worst:.1e} (limit 1e-12)"
             + (f"; failing: {bad}" if bad else ""))
    assert ok, bad


def test_criterion_3_identity_suite(capsys):
    start = time.perf_counter()
    report = identities.run_suite(seed=0)
    elapsed = time.perf_counter() - start
    res = report.identities
    few = [r.id for r in res if len(r.samples) < 5]
    disc = [r for r in res if r.policy is identities.Policy.DISCREPANCY]
    disc_ok = len(disc) == 2 and all(r.status == "discrepancy-resolved" and r.resolution for r in disc)
    ok = len(res) >= 40 and not few and report.ok and disc_ok and elapsed < 60.0
    n_assert = len(res) - len(disc)
    announce(capsys, 3, ok, f"{len(res)} identities ({n_assert} ASSERT, {len(report.assert_failures)} failing), "
             f"min samples {min(len(r.samples) for r in res)}, discrepancies "
             f"{[(r.id, r.resolution['matched']) for r in disc]}, {elapsed:.1f}s")
    assert ok


def test_criterion_4_derivative_and_limit(capsys):
    h = 1e-5
    us = [0.3 + 0.6 * k for k in range(10)]
    d_err = max(abs((i_xu(h, u) - i_xu(-h, u)) / (2 * h) + cl2(u).value) for u in us)
    ts = [PI / 3, 0.2, 1.0, 2.0, 3.0]
    lim = []
    for t in ts:
        q = hyperbolic_integrals(40.0, t).full.lhs
        lim.append((q.converged, abs(q.value - hyperbolic_limit(t))))
    l_err = max(e for _, e in lim)
    ok = d_err <= 1e-6 and l_err <= 1e-9 and all(c for c, _ in lim)
    announce(capsys, 4, ok, f"derivative worst {d_err:.1e} over 10 points (limit 1e-6); "
             f"y=40 limit worst {l_err:.1e} over {len(ts)} angles (limit 1e-9)")
    assert ok


def test_criterion_5_exact_layer(capsys):
    worst = max(abs(float(ik_exact(j, k)) - ik_quad(j, k)) for j in (0, 1) for k in range(13))
    ics = [
        (ik_exact(0, 0), (Fraction(0), Fraction(1, 4), "pi")),
        (ik_exact(0, 1), (Fraction(1), Fraction(-1, 4), "pi")),
        (ik_exact(1, 0), (Fraction(0), Fraction(1, 2), "ln2")),
        (ik_exact(1, 1), (Fraction(1, 2), Fraction(-1, 2), "ln2")),
    ]
    ic_ok = all((r.a, r.b, r.basis.value) == want for r, want in ics)
    mom_ok = all(legendre_moment(k, k + 1) == Fraction(1, 2 ** (k + 1)) for k in range(13))
    ok = worst <= 1e-12 and ic_ok and mom_ok
    announce(capsys, 5, ok, f"k<=12 worst {worst:.1e} (limit 1e-12); initial conditions exact: {ic_ok}; "
             f"1/2^(k+1) moments exact: {mom_ok}")
    assert ok


def test_criterion_6_quadrature_honesty(capsys):
    lies, converged, total = [], 0, 0
    for tol in (1e-6, 1e-10, 1e-12):
        for case in BATTERY:
            r = integrate(case.problem(tol))
            total += 1
            if r.converged:
                converged += 1
                if abs(r.value - case.exact) > 10 * r.err_estimate:
                    lies.append((case.name, tol))
    ok = len(BATTERY) == 20 and not lies
    announce(capsys, 6, ok, f"{converged}/{total} converged runs, {len(lies)} with error > 10x estimate {lies}")
    assert ok


def test_criterion_7_determinism(tmp_path, capsys):
    outs = []
    for name in ("a.json", "b.json"):
        path = tmp_path / name
        p = subprocess.run([sys.executable, "-m", "clausenkit", "verify", "--seed", "42", "--json", str(path)],
                           capture_output=True, text=True)
        outs.append((p.returncode, path.read_bytes()))
    ok = outs[0][0] == outs[1][0] == 0 and outs[0][1] == outs[1][1]
    announce(capsys, 7, ok, f"two verify --seed 42 --json runs, {len(outs[0][1])} bytes, identical: "
             f"{outs[0][1] == outs[1][1]}")
    assert ok
