"""Harmonic numbers and the series built from them.

Covers the alternating sums S_j(alpha, beta, r, p, q) and their closed and
integral forms, Ramanujan's H, Harris's vbar expansion, Legendre-polynomial
series for Cl2 and Li2, the exact Legendre moment integrals and the
cos(u/2) power series for Cl2.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable

from .numkit import (EPS, Accumulator, DomainError, ExtReal, bernoulli_fraction,
                     constants, richardson_limit)
from .quad import QuadResult, gauss_kronrod_vector, integrate_semi_infinite, quad, tanh_sinh_dist
from .specfun import (cl2, elliptic_k_agm, legendre_all, legendre_coefficients, lerch_phi, li2,
                      pfq_series, polygamma)

PI = math.pi
LN2 = math.log(2.0)
SQRT2 = math.sqrt(2.0)
IMAG_RESIDUE_MAX = 1e-11
LEGENDRE_BOUND_C = 0.5
LEGENDRE_BOUND_P = 3.0


def _real(z: complex, what: str) -> float:
    """Drop an imaginary part that must vanish, refusing if it does not."""
    if abs(z.imag) > IMAG_RESIDUE_MAX * max(1.0, abs(z.real)):
        raise ArithmeticError(f"{what}: imaginary residue {z.imag:.3g} should vanish")
    return z.real


# ---------------------------------------------------------------------------
# Harmonic numbers

@lru_cache(maxsize=None)
def harm_exact(n: int, r: int = 1) -> Fraction:
    if n < 0 or r < 1:
        raise DomainError("harm_exact needs n >= 0 and r >= 1")
    if n == 0:
        return Fraction(0)
    return harm_exact(n - 1, r) + Fraction(1, n ** r)


def harm(n: int, r: int = 1) -> float:
    """Generalized harmonic number H_n^(r) = sum_{j<=n} j^-r.

    Exact rational arithmetic up to n = 64, a compensated float sum beyond.
    """
    if isinstance(n, bool) or int(n) != n or n < 0:
        raise DomainError("harm needs an integer n >= 0")
    if not 1 <= r <= 4:
        raise DomainError("harm order r must be 1..4")
    n = int(n)
    if n <= 64:
        return float(harm_exact(n, r))
    acc = Accumulator()
    for j in range(n, 0, -1):
        acc.add(1.0 / j ** r)
    return acc.value


def harm_polygamma(n: int, r: int = 1) -> float:
    """H_n^(r) through polygamma differences."""
    m = r - 1
    return (-1) ** m / math.factorial(m) * (polygamma(m, n + 1.0) - polygamma(m, 1.0))


# ---------------------------------------------------------------------------
# The alternating S-family

@dataclass(frozen=True)
class SumSpec:
    """sum_n (-1/beta^3)^n H_{pn+q}^(r) / (n + 1/alpha)^j."""

    alpha: float
    beta: float
    j: int = 1
    r: int = 1
    p: int = 1
    q: int = 0

    def __post_init__(self):
        if not self.alpha > 0:
            raise DomainError("SumSpec alpha must be > 0")
        if not abs(self.beta) > 1:
            raise DomainError("SumSpec needs |beta| > 1")
        if self.j < 1 or self.r < 1 or self.p < 1 or self.q < 0:
            raise DomainError("SumSpec needs j, r, p >= 1 and q >= 0")

    @property
    def w(self) -> float:
        return -1.0 / self.beta ** 3

    @property
    def c(self) -> float:
        return 1.0 / self.alpha


def s_family(spec: SumSpec, tol: float = 1e-16) -> ExtReal:
    """Direct summation with a geometric tail bound."""
    w, c = spec.w, spec.c
    aw = abs(w)
    acc = Accumulator()
    h = Accumulator()
    hidx = 0
    wn = 1.0
    n = 0
    while True:
        top = spec.p * n + spec.q
        while hidx < top:
            hidx += 1
            h.add(1.0 / hidx ** spec.r)
        term = wn * h.value / (n + c) ** spec.j
        acc.add(term)
        nxt_h = h.value + sum(1.0 / k ** spec.r for k in range(top + 1, top + spec.p + 1))
        nxt = aw ** (n + 1) * nxt_h / (n + 1 + c) ** spec.j
        tail = nxt * (1.0 + math.log(n + 3)) / (1.0 - aw)
        if n >= 1 and tail <= tol * max(1.0, abs(acc.value)):
            return acc.result(tail)
        wn *= w
        n += 1
        if n > 100000:
            raise ArithmeticError("s_family did not converge")


def s_family_value(alpha, beta, j=1, r=1, p=1, q=0) -> float:
    return s_family(SumSpec(alpha, beta, j, r, p, q)).value


# ---------------------------------------------------------------------------
# S(2, 2) in closed form

S22_ROUTES = ("clausen", "dilog_conjugate", "dilog_shifted", "ramanujan")


def s22_closed_forms() -> list[float]:
    """Four closed-form evaluations of S(2, 2), in the order of S22_ROUTES."""
    k = constants()
    tp, om = k.theta_plus, k.omega
    clausen = 4.0 * SQRT2 * (cl2(tp + PI).value + tp * LN2)
    e = cmath.exp(1j * tp)
    conj = 2.0 * SQRT2 * (2.0 * tp * LN2 - 1j * (li2(-e) - li2(-e.conjugate())))
    shifted = SQRT2 * (-5.0 * (PI - 2.0 * math.atan(2.0 * SQRT2)) * LN2 + 4.0 * om * math.log(8.0 / 3.0)
                       + 2j * (li2((4 - 1j * SQRT2) / 8) - li2((4 + 1j * SQRT2) / 8)))
    raman = s2_ramanujan(2.0)
    return [clausen, _real(conj, "dilog_conjugate"), _real(shifted, "dilog_shifted"), raman]


def s2_ramanujan(beta: float) -> float:
    """S(2, beta) from the Ramanujan closed form at x = i beta^(-3/2)."""
    if not beta > 1:
        raise DomainError("s2_ramanujan needs beta > 1")
    x = 1j / beta ** 1.5
    v = ramanujan_even_sum(x)
    return _real(v, "ramanujan route")


def ramanujan_even_sum(x: complex) -> complex:
    """sum_k H_k x^(2k)/(k + 1/2) in closed form."""
    L = cmath.log((1 - x) / (1 + x))
    return 2.0 / x * (LN2 * L + 0.25 * L * L + PI * PI / 12.0 + li2((x - 1) / (x + 1)))


def s2beta_closed(beta: float) -> float:
    """S(2, beta) = 2 beta^(3/2) [Cl2(theta) - 2 arccot(beta^(3/2)) ln 2]."""
    if not beta > 1:
        raise DomainError("s2beta_closed needs beta > 1")
    b3 = beta ** 3
    th = math.acos((1.0 - b3) / (1.0 + b3))
    b32 = beta ** 1.5
    return 2.0 * b32 * (cl2(th).value - 2.0 * math.atan(1.0 / b32) * LN2)


def s2beta_theta(beta: float) -> float:
    b3 = beta ** 3
    return math.acos((1.0 - b3) / (1.0 + b3))


def _accelerated_sum(term: Callable[[int], float], first: int = 1, n0: int = 32,
                     levels: int = 8) -> ExtReal:
    """sum_{k>=first} term(k) for terms with an asymptotic expansion in 1/k.

    Partial sums at n0 * 2^i are extrapolated with error exponents 1, 2, ...
    """
    sums = []
    acc = Accumulator()
    k = first
    target = n0
    while len(sums) < levels:
        acc.add(term(k))
        if k - first + 1 == target:
            sums.append(acc.value)
            target *= 2
        k += 1
    best, err = None, math.inf
    for depth in range(2, levels + 1):
        v, e = richardson_limit(sums[-depth:], list(range(1, depth)))
        if e < err:
            best, err = v, e
    return ExtReal(best, 2.0 * err + 4.0 * EPS * abs(best))


def clausen_hypergeometric_series(beta: float) -> ExtReal:
    """sum_k 2F1(1, k; k+1; -1/beta^3) / (k (2k-1)), which equals beta^(3/2) Cl2(theta)."""
    if not beta > 1:
        raise DomainError("needs beta > 1")
    w = -1.0 / beta ** 3
    # 2F1(1, k; k+1; w) / k = Phi(w, 1, k)
    return _accelerated_sum(lambda k: lerch_phi(w, 1, float(k)).real / (2 * k - 1))


def s_alpha_hypergeometric_series(alpha: float, beta: float) -> ExtReal:
    """S(alpha, beta) from the partial-fraction digamma route (sum over k of 2F1 pairs)."""
    if not alpha > 1:
        raise DomainError("needs alpha > 1")
    w = -1.0 / beta ** 3
    c = 1.0 / alpha
    # 2F1(1, 1+c; 2+c; w) = (1+c) Phi(w, 1, 1+c); 2F1(1, k+1; k+2; w) = (k+1) Phi(w, 1, k+1)
    fa = (1.0 + c) * lerch_phi(w, 1, 1.0 + c).real

    def term(k):
        fb = (k + 1) * lerch_phi(w, 1, k + 1.0).real
        return 1.0 / (k * (alpha * k - 1.0)) * (fa / (1.0 + alpha) - k / (k + 1.0) * fb)

    s = _accelerated_sum(term)
    return s.scale(-alpha * w)


def s2_hypergeometric_form(beta: float) -> ExtReal:
    """S(2, beta) = -4 beta^(3/2) ln2 arccot(beta^(3/2)) + 2 sum_k 2F1(...)/(k(2k-1))."""
    b32 = beta ** 1.5
    return clausen_hypergeometric_series(beta).scale(2.0) + (-4.0 * b32 * LN2 * math.atan(1.0 / b32))


def clausen_atanh_integrals(beta: float, tol: float = 1e-13) -> tuple[QuadResult, QuadResult, QuadResult]:
    """Three quadratures over v in [0, 1] tied to beta^(3/2) Cl2(theta).

    Returns (2 beta^3 int atanh v/(v^2+beta^3), 2 beta^3 int v^2 atanh v/(v^2+beta^3),
    2 beta^3 [ln 2 - beta^3 int atanh v/(v^2+beta^3)]). The first equals the
    hypergeometric series; the last two are equal to each other but not to it.
    """
    b3 = beta ** 3

    def g1(x, dlo, dhi):
        return _atanh_dist(x, dhi) / (x * x + b3)

    def g2(x, dlo, dhi):
        return x * x * _atanh_dist(x, dhi) / (x * x + b3)

    r1 = tanh_sinh_dist(g1, 0.0, 1.0, tol)
    r2 = tanh_sinh_dist(g2, 0.0, 1.0, tol)
    k = 2 * b3
    first = QuadResult(k * r1.value, k * r1.err_estimate, r1.evals, r1.converged)
    second = QuadResult(k * r2.value, k * r2.err_estimate, r2.evals, r2.converged)
    third = QuadResult(k * (LN2 - b3 * r1.value), k * b3 * r1.err_estimate, r1.evals, r1.converged)
    return first, second, third


def s2_dilog_difference(beta: float) -> float:
    """(i/sqrt x)[Li2((i+sqrt x)/(-i+sqrt x)) - Li2((-i+sqrt x)/(i+sqrt x))] at x = beta^-3.

    Equals -2 beta^(3/2) Cl2(theta).
    """
    sx = beta ** -1.5
    v = 1j / sx * (li2((1j + sx) / (-1j + sx)) - li2((-1j + sx) / (1j + sx)))
    return _real(v, "dilog difference")


def _atanh_dist(x: float, dhi: float) -> float:
    # atanh x with 1 - x supplied exactly
    return 0.5 * (math.log1p(x) - math.log(dhi))


# ---------------------------------------------------------------------------
# Integral representations of the S-family

@dataclass(frozen=True)
class RouteValue:
    name: str
    value: ExtReal
    converged: bool


def _f_c(z: float, c: float) -> float:
    # 2F1(1, c; 1+c; z) = c Phi(z, 1, c)
    return c * lerch_phi(z, 1, c).real


def _polylog_small(r: int, x: float) -> float:
    if r == 1:
        return -math.log1p(-x)
    if r == 2:
        return li2(x).real
    if abs(x) > 0.5:
        raise DomainError("polylog series used only for |x| <= 1/2")
    acc = Accumulator()
    p = x
    k = 1
    while True:
        t = p / k ** r
        acc.add(t)
        if abs(t) < 1e-18 * max(abs(acc.value), 1e-300):
            return acc.value
        p *= x
        k += 1


S_ROUTES = ("hypergeometric_kernel", "incomplete_beta", "laplace", "log_squared", "free_parameter",
            "harmonic_log_kernel", "nielsen", "lerch_kernel", "polylog_kernel")


def s_integral_reps(spec: SumSpec, tol: float = 1e-12, only: Iterable[str] | None = None) -> list[RouteValue]:
    """Every integral representation that applies to `spec`, each by quadrature.

    `only` restricts the work to the named routes; routes that do not apply
    to `spec` are silently absent from the result.
    """
    w, c, alpha, beta = spec.w, spec.c, spec.alpha, spec.beta
    b3 = beta ** 3
    out: list[RouteValue] = []
    wanted = set(S_ROUTES if only is None else only)
    unknown = wanted - set(S_ROUTES)
    if unknown:
        raise DomainError(f"unknown S-family routes: {sorted(unknown)}")

    def add(name, res: QuadResult, scale=1.0, shift=0.0):
        v = res.value * scale + shift
        out.append(RouteValue(name, ExtReal(v, abs(scale) * res.err_estimate + 4 * EPS * abs(v)), res.converged))

    basic = spec.j == 1 and spec.r == 1 and spec.p == 1 and spec.q == 0

    if spec.j == 1 and spec.r == 1 and "hypergeometric_kernel" in wanted:
        fw = _f_c(w, c)
        p, q = spec.p, spec.q

        def g_hyp(t, dlo, dhi):
            return -(t ** q * _f_c(w * t ** p, c) - fw) / dhi

        add("hypergeometric_kernel", tanh_sinh_dist(g_hyp, 0.0, 1.0, tol), alpha)

    if basic and "incomplete_beta" in wanted:
        # incomplete Beta form: B_x(c, 0) = x^c/c 2F1(c, 1; c+1; x) and
        # t^-c B_{wt}(c, 0) = w^c/c F(wt) on the principal branch
        fw = _f_c(w, c)
        pref = 1.0 / complex(-1.0 / b3) ** c
        wc = complex(w) ** c / c

        def g_beta(t, dlo, dhi):
            return (wc * (_f_c(w * t, c) - fw)) / (-dhi) * pref

        rre = tanh_sinh_dist(lambda t, dl, dh: g_beta(t, dl, dh).real, 0.0, 1.0, tol)
        rim = tanh_sinh_dist(lambda t, dl, dh: g_beta(t, dl, dh).imag, 0.0, 1.0, tol)
        _real(complex(rre.value, rim.value), "incomplete Beta route")
        add("incomplete_beta", rre)

    if basic and "laplace" in wanted:
        def g_laplace(u, dlo, dhi):
            return u ** c / (u + b3) * math.log1p(u / b3) / u

        add("laplace", tanh_sinh_dist(g_laplace, 0.0, 1.0, tol), -b3)

    if basic and "log_squared" in wanted:
        def g_sq(s, dlo, dhi):
            if s == 0.0:
                return 0.0
            return s ** c * (math.log1p(-w * s) / s) ** 2

        r = tanh_sinh_dist(g_sq, 0.0, 1.0, tol)
        add("log_squared", r, (1.0 - c) / (2.0 * w), math.log1p(-w) ** 2 / (2.0 * w))

    if basic and "free_parameter" in wanted:
        out.append(_method_free_parameter(spec, 2.0, tol))

    if basic and alpha == 2.0 and beta > 1:
        if "harmonic_log_kernel" in wanted:
            x = 1.0 / b3
            sx = math.sqrt(x)

            def g_c12(t, dlo, dhi):
                lt = math.log(dhi)
                if t < 1e-6:
                    bracket = -2.0 * x / 3.0 + 0.8 * x * x * t
                else:
                    y = sx * math.sqrt(t)
                    bracket = (1.0 / (1.0 + x * t) - math.atan(y) / y) / t
                return -lt * bracket

            add("harmonic_log_kernel", tanh_sinh_dist(g_c12, 0.0, 1.0, tol))
        if "nielsen" in wanted:
            add("nielsen", nielsen_integral(-1.0 / b3, tol))

    # Lerch kernel, any j and r
    fac = (-1.0) ** (spec.r - 1) / math.factorial(spec.r - 1)
    if spec.p == 1 and spec.q == 0 and "lerch_kernel" in wanted:
        j = spec.j
        phiw = lerch_phi(w, j, c).real

        def g_lerch(t, dlo, dhi):
            lt = math.log(t) if t < 0.5 else math.log1p(-dhi)
            return (lerch_phi(w * t, j, c).real - phiw) * lt ** (spec.r - 1) / (-dhi)

        add("lerch_kernel", tanh_sinh_dist(g_lerch, 0.0, 1.0, tol), fac)

    if spec.j == 1 and spec.p == 1 and spec.q == 0 and "polylog_kernel" in wanted:
        r_ = spec.r

        def g_poly(s, dlo, dhi):
            return s ** (c - 1.0) * _polylog_small(r_, w * s) / (1.0 - w * s)

        add("polylog_kernel", tanh_sinh_dist(g_poly, 0.0, 1.0, tol))
    return out


def _method_free_parameter(spec: SumSpec, t: float, tol: float) -> RouteValue:
    """Free-parameter harmonic-number representation (any t > 0)."""
    alpha, c, b3 = spec.alpha, spec.c, spec.beta ** 3
    fw = _f_c(spec.w, c)

    def h(x):
        if x == 0.0:
            return 0.0
        return math.log(x) / (x + t) ** 2 * _f_c(-t / (b3 * (x + t)), c)

    r1 = quad(h, 0.0, 1.0, tol, singular=True)
    r2 = integrate_semi_infinite(h, 1.0, tol)
    integral = r1.value + r2.value
    val = alpha * math.log(t) * fw - (b3 / 2.0 * (math.log(b3 / (t * (b3 + 1.0))) ** 2 - math.log(1.0 / t) ** 2)
                                      + (alpha - 1.0) * t * integral)
    err = (alpha - 1.0) * t * (r1.err_estimate + r2.err_estimate) + 8 * EPS * abs(val)
    return RouteValue("free_parameter", ExtReal(val, err), r1.converged and r2.converged)


def sqrt_log_integral(w: float, tol: float = 1e-12) -> QuadResult:
    """int_0^w ln(1-z)/(sqrt(z)(1-z)) dz for 0 < w < 1."""
    if not 0 < w < 1:
        raise DomainError("sqrt_log_integral needs 0 < w < 1")
    return quad(lambda z: math.log1p(-z) / (math.sqrt(z) * (1 - z)) if z > 0 else 0.0, 0.0, w, tol, singular=True)


def sqrt_log_integral_closed(w: float) -> complex:
    """The same integral through dilogarithms of (1 -+ sqrt w)/2, read with ln(2(1-w))."""
    s = cmath.sqrt(w)
    lm, lp = cmath.log(s - 1), cmath.log(s + 1)
    return (li2((1 - s) / 2) - li2((1 + s) / 2) + 0.5 * (lm * lm - lp * lp)
            + cmath.log(2 * (1 - w)) * (lp - lm) + 1j * PI * cmath.log(1 + s) + PI / 2 * (PI + 2j * LN2))


# ---------------------------------------------------------------------------
# Nielsen route for sum H_n x^n / (n + 1/2)

def nielsen_f(x: float) -> float:
    """f(x) = sum_j (j+1)^2/(j+3/2) x^j in closed form."""
    if x == 0.0:
        return 2.0 / 3.0
    if abs(x) < 1e-3:
        return sum((j + 1) ** 2 / (j + 1.5) * x ** j for j in range(12))
    z = complex(x)
    s = cmath.sqrt(z)
    v = (s * (3 * z - 1) / (z - 1) ** 2 + cmath.atanh(s)) / (2 * z * s)
    return _real(v, "nielsen_f")


def nielsen_f_antiderivative(x: float) -> float:
    """int_0^x f = 1/(1-x) - atanh(sqrt x)/sqrt x."""
    if x == 0.0:
        return 0.0
    s = cmath.sqrt(complex(x))
    return _real(1.0 / (1.0 - x) - cmath.atanh(s) / s, "nielsen antiderivative")


def nielsen_integral(x: float, tol: float = 1e-12) -> QuadResult:
    """sum_{n>=1} H_n x^n/(n+1/2) = zeta(2) int_0^x f - x int_0^1 f(tx) Li2(t) dt."""
    r1 = quad(nielsen_f, 0.0, x, tol)
    r2 = quad(lambda t: nielsen_f(t * x) * li2(t).real, 0.0, 1.0, tol, singular=True)
    v = PI * PI / 6.0 * r1.value - x * r2.value
    return QuadResult(v, PI * PI / 6.0 * r1.err_estimate + abs(x) * r2.err_estimate,
                      r1.evals + r2.evals, r1.converged and r2.converged)


def nielsen_direct(x: float, tol: float = 1e-16) -> ExtReal:
    """sum_{n>=1} a_{n-1} H_n x^n / n^2 with a_{n-1} = n^2/(n+1/2), summed directly."""
    return _geometric_sum(lambda n, h: h * x ** n / (n + 0.5), abs(x), tol)


# ---------------------------------------------------------------------------
# Generating functions of harmonic numbers

def _geometric_sum(term: Callable[[int, float], float], ratio: float, tol: float,
                   r: int = 1, start: int = 1) -> ExtReal:
    """Sum term(n, H_n^(r)) for n >= start; tail from the geometric ratio with a log guard."""
    if not ratio < 1:
        raise DomainError("geometric sum needs |z| < 1")
    acc = Accumulator()
    h = Accumulator()
    for k in range(1, start):
        h.add(1.0 / k ** r)
    n = start
    while True:
        h.add(1.0 / n ** r)
        t = term(n, h.value)
        acc.add(t)
        tail = abs(t) * ratio * (1.0 + math.log(n + 2)) / (1.0 - ratio)
        if n > start + 2 and tail <= tol * max(1.0, abs(acc.value)):
            return acc.result(tail)
        n += 1
        if n > 10 ** 6:
            raise ArithmeticError("geometric sum did not converge")


def harmonic_gf(z: float, r: int = 1, tol: float = 1e-16) -> ExtReal:
    """sum_{n>=1} H_n^(r) z^n."""
    return _geometric_sum(lambda n, h: h * z ** n, abs(z), tol, r)


def harmonic_gf_closed(z: float, r: int = 1) -> float:
    """Li_r(z)/(1 - z)."""
    return _polylog_any(r, z) / (1.0 - z)


def _polylog_any(r, z):
    if r == 1:
        return -math.log1p(-z)
    if r == 2:
        return li2(z).real
    return _polylog_small(r, z)


def harmonic_gf_partial(z: float, n_terms: int) -> float:
    """(1 - z) sum_{n<=N} H_n z^n + ln(1 - z); tends to 0 as N grows."""
    acc = Accumulator()
    h = 0.0
    for n in range(1, n_terms + 1):
        h += 1.0 / n
        acc.add(h * z ** n)
    return (1.0 - z) * acc.value + math.log1p(-z)


def harmonic_gf_integrated(z: float, tol: float = 1e-16) -> ExtReal:
    """sum_{n>=1} H_n z^(n+1)/(n+1), which equals ln^2(1-z)/2."""
    return _geometric_sum(lambda n, h: h * z ** (n + 1) / (n + 1), abs(z), tol)


# ---------------------------------------------------------------------------
# The s(x), t(x) pair

def st_closed(x: float) -> tuple[complex, complex]:
    """Closed forms of s(x) = sum (-x)^(n+1/2) H_2n/(n+1/2) and t(x) (H_{2n+1})."""
    if not 0 < x <= 1:
        raise DomainError("st_closed needs 0 < x <= 1")
    sx = math.sqrt(x)
    om = math.atan(sx)
    lg = math.log1p(x)
    s = -1j * om * lg
    t = -1j * (om * lg + 1j * (li2(1j * sx) - li2(-1j * sx)))
    return s, t


def st_clausen_part(x: float) -> float:
    """-i [Li2(i sqrt x) - Li2(-i sqrt x)] written with Clausen values."""
    om = math.atan(math.sqrt(x))
    return om * math.log(x) + cl2(2 * om).value - cl2(2 * om + PI).value


def st_series(x: float, tol: float = 1e-16) -> tuple[complex, complex]:
    """Direct summation of s(x) and t(x); (-x)^(n+1/2) = (-x)^n i sqrt(x)."""
    if not 0 < x < 1:
        raise DomainError("st_series needs 0 < x < 1")
    sx = math.sqrt(x)
    acc_s, acc_t = Accumulator(), Accumulator()
    h = 0.0
    hidx = 0
    n = 0
    while True:
        while hidx < 2 * n:
            hidx += 1
            h += 1.0 / hidx
        h2n = h
        h2n1 = h + 1.0 / (2 * n + 1)
        base = (-x) ** n / (n + 0.5)
        acc_s.add(base * h2n)
        acc_t.add(base * h2n1)
        if abs(base) * (h2n1 + 2.0) * x / (1 - x) < tol * max(1e-300, abs(acc_t.value)) and n > 2:
            break
        n += 1
    return 1j * sx * acc_s.value, 1j * sx * acc_t.value


# ---------------------------------------------------------------------------
# Ramanujan's H

def ramanujan_h(x: float) -> float:
    """H(x) = sum_{k>=1} H_k x^(2k-1)/(2k-1), closed form for 0 < x < 1."""
    if not 0 < x < 1:
        raise DomainError("ramanujan_h needs 0 < x < 1")
    L = math.log((1 - x) / (1 + x))
    return ((LN2 - 1) * L + math.log1p(-x * x) / x + 0.25 * L * L + PI * PI / 12.0
            + li2((x - 1) / (x + 1)).real)


def ramanujan_h_reflected(x: float) -> float:
    """H((1-x)/(1+x)) in the original functional form."""
    if not 0 < x < 1:
        raise DomainError("needs 0 < x < 1")
    return ((LN2 - 1) * math.log(x) + (1 + x) / (1 - x) * math.log(4 * x / (1 + x) ** 2)
            + 0.25 * math.log(x) ** 2 + PI * PI / 12.0 + li2(-x).real)


def ramanujan_h_series(x: float, n_terms: int) -> float:
    acc = Accumulator()
    h = 0.0
    for k in range(1, n_terms + 1):
        h += 1.0 / k
        acc.add(h * x ** (2 * k - 1) / (2 * k - 1))
    return acc.value


def ramanujan_shift_series(x: float, n_terms: int) -> float:
    """sum_{k>=0} H_k x^(2k+1)/(2k+1)."""
    acc = Accumulator()
    h = 0.0
    for k in range(1, n_terms + 1):
        h += 1.0 / k
        acc.add(h * x ** (2 * k + 1) / (2 * k + 1))
    return acc.value


def ramanujan_shift_closed(x: float) -> float:
    """H(x) - 2 atanh x - ln(1 - x^2)/x."""
    return ramanujan_h(x) - 2 * math.atanh(x) - math.log1p(-x * x) / x


# ---------------------------------------------------------------------------
# Harris's vbar expansion

def harris_v(z: float) -> float:
    """v(z) through the dilogarithm."""
    a, b = 0.5 * (1 - z), 0.5 * (1 + z)
    return (0.5 * (li2(a).real - li2(b).real)
            + 0.25 * (math.log(a) ** 2 - math.log(b) ** 2))


def harris_vbar_direct(z: float) -> float:
    return harris_v(z) + 2 * z * LN2


@lru_cache(maxsize=8)
def _binomial_h2_sums(lmax: int) -> tuple[float, ...]:
    # e_l = sum_{m>=l} H_m^(2) binom(m, l)/2^m for l = 0..lmax
    e = []
    for l in range(lmax + 1):
        acc = Accumulator()
        m = l
        w = 2.0 ** -l  # binom(l, l)/2^l
        h2 = float(harm_exact(l, 2)) if l <= 64 else harm(l, 2)
        while True:
            t = h2 * w
            acc.add(t)
            if m > 2 * l + 20 and t < 1e-19 * acc.value:
                break
            m += 1
            h2 += 1.0 / (m * m)
            w *= m / (2.0 * (m - l))
        e.append(acc.value)
    return tuple(e)


def li2_half_shift_series(z: float, sign: int, n_terms: int = 120) -> ExtReal:
    """Li2((1 + sign z)/2) = ((1 - sign z)/2) sum_l e_l (sign z)^l, |z| < 1."""
    if sign not in (1, -1):
        raise DomainError("sign must be +1 or -1")
    if not abs(z) < 1:
        raise DomainError("li2_half_shift_series needs |z| < 1")
    e = _binomial_h2_sums(n_terms)
    x = sign * z
    acc = Accumulator()
    for l, el in enumerate(e):
        acc.add(el * x ** l)
    # e_l is bounded by zeta(2) sum_m binom(m, l)/2^m = 2 zeta(2)
    tail = 4.0 * abs(x) ** (n_terms + 1) / (1 - abs(x))
    return acc.result(tail).scale(0.5 * (1 - x))


@lru_cache(maxsize=8)
def harris_coefficients(n_coeffs: int) -> tuple[float, ...]:
    """C_0..C_{n-1} of vbar(z) = sum C_n z^(2n+1), from harmonic-number expansions.

    Log part: (H_2n + ln 2)/(2n+1). Dilog part: (e_2n - e_{2n+1})/2 with
    e_l = sum_{m>=l} H_m^(2) binom(m, l)/2^m. The n = 0 coefficient also
    carries the 2 ln 2 shift.
    """
    e = _binomial_h2_sums(2 * n_coeffs)
    out = []
    for n in range(n_coeffs):
        h2n = float(harm_exact(2 * n)) if 2 * n <= 64 else harm(2 * n)
        c = (h2n + LN2) / (2 * n + 1) + 0.5 * (e[2 * n] - e[2 * n + 1])
        if n == 0:
            c += 2 * LN2
        out.append(c)
    return tuple(out)


def harris_vbar(z: float, n_terms: int = 60) -> tuple[ExtReal, tuple[float, ...]]:
    """vbar(z) from the odd power series truncated after n_terms coefficients."""
    if not abs(z) < 1:
        raise DomainError("harris_vbar needs |z| < 1")
    coeffs = harris_coefficients(n_terms)
    acc = Accumulator()
    for n, c in enumerate(coeffs):
        acc.add(c * z ** (2 * n + 1))
    # |C_n| decays like ln(n)/n; bound the tail by the last coefficient times a geometric factor
    tail = abs(coeffs[-1]) * 2.0 * abs(z) ** (2 * n_terms + 1) / (1 - z * z)
    return acc.result(tail), coeffs


# ---------------------------------------------------------------------------
# Legendre series

def legendre_cos_integrals(theta: float, n_max: int, tol: float = 1e-13) -> list[float]:
    """int_0^theta P_n(cos t) dt for n = 0..n_max, one shared adaptive rule."""
    vals, err, ok = gauss_kronrod_vector(lambda t: legendre_all(n_max, math.cos(t)), 0.0, theta, tol)
    if not ok:
        raise ArithmeticError(f"Legendre integrals did not converge (err {err:.3g})")
    return vals


def legendre_cos_integral_fourier(n: int, theta: float) -> float:
    """int_0^theta P_n(cos t) dt from the cosine expansion of P_n(cos t)."""
    a = [1.0]
    for k in range(1, n + 1):
        a.append(a[-1] * (k - 0.5) / k)
    acc = Accumulator()
    for k in range(n + 1):
        m = n - 2 * k
        c = a[k] * a[n - k]
        acc.add(c * theta if m == 0 else c * math.sin(m * theta) / m)
    return acc.value


def _legendre_oscillating_tail(theta: float, n_terms: int) -> float:
    """sum_{n>N} c_n A (n+1/2)^-1.5 sin((n+1/2) theta - pi/4), c_n = (1/n + 1/(n+1))/2.

    A (n+1/2)^-1.5 sin(...) with A = sqrt(2/(pi sin theta)) is the leading
    oscillating part of int_0^theta P_n(cos t) dt - 1/(n+1/2). Summed directly
    for 4000 terms; the rest by one summation-by-parts step.
    """
    amp = math.sqrt(2.0 / (PI * math.sin(theta)))
    acc = Accumulator()
    m = n_terms + 4000
    for n in range(n_terms + 1, m + 1):
        h = n + 0.5
        acc.add(0.5 * (1.0 / n + 1.0 / (n + 1)) * h ** -1.5 * math.sin(h * theta - 0.25 * PI))
    h = m + 1.5
    rest = (cmath.exp(1j * (h * theta - 0.25 * PI)) / (1.0 - cmath.exp(1j * theta))).imag / (m + 1) * h ** -1.5
    return amp * (acc.value + rest)


def cl2_legendre_series(theta: float, n_terms: int) -> ExtReal:
    """Cl2(theta) as (1/2 - ln2) theta + (1/2) sum (1/n + 1/(n+1)) int_0^theta P_n(cos t) dt.

    The partial sum gets two tail corrections: the exact telescoped 1/(N+1)
    from the non-oscillating part 1/(n+1/2) of each integral, and the summed
    leading oscillating part. Both assume N sin(theta) >> 1, so the stated
    bound grows as sin(theta)^-2 toward 0 and pi.
    """
    if not 0 < theta < PI:
        raise DomainError("cl2_legendre_series needs 0 < theta < pi")
    if not 1 <= n_terms <= 200:
        raise DomainError("cl2_legendre_series supports 1 <= N <= 200")
    J = legendre_cos_integrals(theta, n_terms)
    acc = Accumulator()
    acc.add((0.5 - LN2) * theta)
    for n in range(1, n_terms + 1):
        acc.add(0.5 * (1.0 / n + 1.0 / (n + 1)) * J[n])
    acc.add(1.0 / (n_terms + 1))
    acc.add(_legendre_oscillating_tail(theta, n_terms))
    return acc.result(LEGENDRE_BOUND_C / n_terms ** LEGENDRE_BOUND_P * max(1.0, math.sin(theta) ** -2.0))


def cl2_legendre_raw(theta: float, n_terms: int) -> float:
    """Uncorrected partial sum of the Legendre series for Cl2."""
    J = legendre_cos_integrals(theta, n_terms)
    acc = Accumulator()
    acc.add((0.5 - LN2) * theta)
    for n in range(1, n_terms + 1):
        acc.add(0.5 * (1.0 / n + 1.0 / (n + 1)) * J[n])
    return acc.value


def central_binomial_ratio(m: int) -> float:
    """((1/2)_m / m!)^2."""
    r = 1.0
    for k in range(1, m + 1):
        r *= (k - 0.5) / k
    return r * r


def even_legendre_ratio_sum(tol: float = 1e-13) -> ExtReal:
    """sum_{m>=1} (1/(2m) + 1/(2m+1)) ((1/2)_m/m!)^2, which is 2 ln2 - 1."""
    return _accelerated_sum(lambda m: (0.5 / m + 1.0 / (2 * m + 1)) * central_binomial_ratio(m))


def pochhammer_square_sum_direct(a: float, b: float) -> ExtReal:
    """sum_{m>=1} (1/(2m) + 1/(2m+1)) ((a)_m/(b)_m)^2 by extrapolated partial sums (needs b > a)."""
    if not b - a > 0:
        raise DomainError("needs b > a")
    s = 2.0 * (b - a)
    ratio = [1.0]

    def term(m):
        while len(ratio) <= m:
            k = len(ratio) - 1
            ratio.append(ratio[-1] * (a + k) / (b + k))
        return (0.5 / m + 1.0 / (2 * m + 1)) * ratio[m] ** 2

    sums, acc, target, levels = [], Accumulator(), 32, 10
    m = 1
    while len(sums) < levels:
        acc.add(term(m))
        if m == target:
            sums.append(acc.value)
            target *= 2
        m += 1
    best, err = None, math.inf
    for depth in range(2, levels + 1):
        v, e = richardson_limit(sums[-depth:], [s + i for i in range(depth - 1)])
        if e < err:
            best, err = v, e
    return ExtReal(best, 2 * err + 4 * EPS * abs(best))


def pochhammer_square_sum_hyper(a: float, b: float) -> ExtReal:
    """The same sum as a/b squared times two unit-argument 4F3 values."""
    f1 = pfq_series([1, 1, a + 1, a + 1], [2, b + 1, b + 1], 1.0)
    f2 = pfq_series([1, 1.5, a + 1, a + 1], [2.5, b + 1, b + 1], 1.0)
    return (f1.scale(0.5) + f2.scale(1.0 / 3.0)).scale(a * a / (b * b))


def catalan_split_sums() -> tuple[ExtReal, ExtReal]:
    """(pi/2) sum 1/(2m) ((1/2)_m/m!)^2 and (pi/2) sum 1/(2m+1) (...)^2 via unit-argument pFq."""
    even = pfq_series([1, 1, 1.5, 1.5], [2, 2, 2], 1.0).scale(0.125)
    odd = pfq_series([0.5, 0.5, 0.5], [1, 1.5], 1.0) - 1.0
    return even.scale(PI / 2), odd.scale(PI / 2)


def catalan_split_elliptic(tol: float = 1e-12) -> tuple[QuadResult, QuadResult]:
    """The two sums above from elliptic-K integrals over [0, 1]."""

    def k_of(t, dhi):
        # K at modulus sqrt(t), complementary modulus sqrt(1 - t)
        return _elliptic_k_complement(math.sqrt(t), math.sqrt(dhi))

    even = tanh_sinh_dist(lambda t, dl, dh: (k_of(t, dh) - PI / 2) / t if t > 0 else PI / 8, 0.0, 1.0, tol)
    odd = tanh_sinh_dist(lambda t, dl, dh: k_of(t, dh) / math.sqrt(t) - PI / 2 / math.sqrt(t), 0.0, 1.0, tol)
    # sum_{k>=1} c_k^2 x^k/(2k) = (1/pi) int (K - pi/2)/t ; sum_{k>=1} c_k^2/(2k+1) = (1/pi) int (K - pi/2)/sqrt t
    e = QuadResult(0.5 * even.value, 0.5 * even.err_estimate, even.evals, even.converged)
    o = QuadResult(0.5 * odd.value, 0.5 * odd.err_estimate, odd.evals, odd.converged)
    return e, o


def _elliptic_k_complement(k: float, kp: float) -> float:
    a, b = 1.0, kp
    for _ in range(60):
        if abs(a - b) <= 1e-16 * a:
            break
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    return PI / (a + b)


def elliptic_k_unit_integral(tol: float = 1e-12) -> QuadResult:
    """int_0^1 K(sqrt m) dm over the parameter m = k^2 (equals 2)."""
    return tanh_sinh_dist(lambda t, dl, dh: _elliptic_k_complement(math.sqrt(t), math.sqrt(dh)), 0.0, 1.0, tol)


def li2_legendre_series(z: float, n_terms: int) -> ExtReal:
    """Li2(z) from the Legendre expansion of -ln(1-x), integrated termwise.

    Each term is regularized as (P_k(x) - P_k(0))/x; the constants cancel in
    total. The partial sums oscillate with period four, so the mean of the
    last four is returned.
    """
    if not -1 <= z < 1 or z == 0:
        raise DomainError("li2_legendre_series needs -1 <= z < 1, z != 0")
    if n_terms < 4:
        raise DomainError("li2_legendre_series needs N >= 4")
    p0 = [float(legendre_p0(k)) for k in range(n_terms + 1)]

    def integrand(x):
        ps = legendre_all(n_terms, x)
        return [(ps[k] - p0[k]) / x for k in range(n_terms + 1)]

    vals, err, ok = gauss_kronrod_vector(integrand, 0.0, z, 1e-13) if z > 0 else _neg(integrand, z)
    partial = []
    acc = Accumulator()
    for k in range(1, n_terms + 1):
        acc.add((2 * k + 1) / (k * (k + 1)) * vals[k])
        partial.append(acc.value)
    avg = sum(partial[-4:]) / 4.0
    return ExtReal(avg, 1.0 / n_terms ** 2 + 100 * err)


def _neg(integrand, z):
    vals, err, ok = gauss_kronrod_vector(integrand, z, 0.0, 1e-13)
    return [-v for v in vals], err, ok


def legendre_p0(n: int) -> Fraction:
    from .specfun import legendre_p_at_zero
    return legendre_p_at_zero(n)


def legendre_zero_sum(n_terms: int) -> float:
    """Partial sum of sum_{n>=1} (4n+1)/(2n(2n+1)) P_2n(0); limit ln 2 - 1."""
    acc = Accumulator()
    for n in range(1, n_terms + 1):
        acc.add((4 * n + 1) / (2 * n * (2 * n + 1)) * float(legendre_p0(2 * n)))
    return acc.value


def legendre_zero_sum_limit() -> ExtReal:
    """Alternating-sign sum above, accelerated (the terms alternate in sign)."""
    from .numkit import alternating_sum

    def mag(k):
        n = k + 1
        return (4 * n + 1) / (2 * n * (2 * n + 1)) * abs(float(legendre_p0(2 * n)))

    v = -alternating_sum(mag, 40)
    return ExtReal(v, 1e-14)


def theta_of_a(a: float) -> float:
    return math.acos((1 - a * a) / (1 + a * a))


def cl2_legendre_moment_series(a: float, n_terms: int) -> ExtReal:
    """Cl2(theta(a)) as 2 sum_k a^(k+1)/(k+1) int_0^(1/a) v^(k+1) P_k(av)/(1+v^2) dv.

    With w = a v each term is 2a/(k+1) int_0^1 w^(k+1) P_k(w)/(a^2+w^2) dw.
    """
    if not a > 0:
        raise DomainError("cl2_legendre_moment_series needs a > 0")
    a2 = a * a

    def integrand(w):
        ps = legendre_all(n_terms, w)
        out = []
        p = w
        for k in range(n_terms + 1):
            out.append(p * ps[k] / (a2 + w * w))
            p *= w
        return out

    vals, err, ok = gauss_kronrod_vector(integrand, 0.0, 1.0, 1e-13)
    acc = Accumulator()
    for k in range(n_terms + 1):
        acc.add(2 * a / (k + 1) * vals[k])
    # I_k^(1)(a) <= 1/(a^2 2^(k+1)) up to a slowly varying factor
    tail = 2 * a / (n_terms + 2) * 2.0 / (a2 * 2.0 ** (n_terms + 2)) * 2
    return acc.result(tail + (n_terms + 1) * err)


# ---------------------------------------------------------------------------
# Exact Legendre moment integrals

class Basis(Enum):
    PI = "pi"
    LN2 = "ln2"


@dataclass(frozen=True)
class RationalPair:
    """a + b*pi or a + b*ln2 with exact rational a, b."""

    a: Fraction
    b: Fraction
    basis: Basis

    def __float__(self):
        return self.to_float()

    def to_float(self) -> float:
        # a and b grow large with cancelling signs, so evaluate in 80 digits
        with localcontext() as ctx:
            ctx.prec = 80
            const = _pi_decimal(80) if self.basis is Basis.PI else Decimal(2).ln()
            v = (Decimal(self.a.numerator) / Decimal(self.a.denominator)
                 + Decimal(self.b.numerator) / Decimal(self.b.denominator) * const)
            return float(v)


@lru_cache(maxsize=4)
def _pi_decimal(prec: int) -> Decimal:
    # the standard decimal-module recipe
    with localcontext() as ctx:
        ctx.prec = prec + 2
        three = Decimal(3)
        lasts, t, s, n, na, d, da = 0, three, 3, 1, 0, 0, 24
        while s != lasts:
            lasts = s
            n, na = n + na, na + 8
            d, da = d + da, da + 32
            t = (t * n) / d
            s += t
    return +s


@lru_cache(maxsize=None)
def _inverse_square_moment(i: int) -> tuple[Fraction, Fraction]:
    """int_0^1 v^i/(1+v^2) dv as (rational part, coefficient of pi or of ln2)."""
    # base values pi/4 and ln2/2; step M_{i+2} = 1/(i+1) - M_i
    if i == 0:
        return Fraction(0), Fraction(1, 4)
    if i == 1:
        return Fraction(0), Fraction(1, 2)
    a, b = _inverse_square_moment(i - 2)
    return Fraction(1, i - 1) - a, -b


def legendre_moment(k: int, m: int) -> Fraction:
    """int_0^1 v^m P_k(v) dv exactly."""
    return sum((c / (m + i + 1) for i, c in enumerate(legendre_coefficients(k))), Fraction(0))


def ik_exact(j: int, k: int) -> RationalPair:
    """I_k^(j) = int_0^1 v^(k+j) P_k(v)/(1+v^2) dv as an exact rational pair.

    Uses M_{m+2} + M_m = int_0^1 v^m (...) dv in the power m of v, started
    from int 1/(1+v^2) = pi/4 and int v/(1+v^2) = ln2/2.
    """
    if j not in (0, 1):
        raise DomainError("ik_exact needs j in {0, 1}")
    if isinstance(k, bool) or int(k) != k or not 0 <= k <= 64:
        raise DomainError("ik_exact needs 0 <= k <= 64")
    a = Fraction(0)
    b = Fraction(0)
    for i, c in enumerate(legendre_coefficients(k)):
        if c == 0:
            continue
        ai, bi = _inverse_square_moment(i + k + j)
        a += c * ai
        b += c * bi
    return RationalPair(a, b, Basis.PI if j == 0 else Basis.LN2)


def ik_quad(j: int, k: int, a: float = 1.0, tol: float = 1e-15) -> float:
    """Direct quadrature of int_0^1 v^(k+j) P_k(v)/(a^2+v^2) dv."""
    from .specfun import legendre_p
    r = quad(lambda v: v ** (k + j) * legendre_p(k, v) / (a * a + v * v), 0.0, 1.0, tol)
    return r.value


def ik_hypergeometric(k: int) -> ExtReal:
    """I_k^(1)(1) from the terminating-at-infinity 3F2 at -1."""
    if k % 2 == 0:
        m = k // 2
        return pfq_series([1, m + 1, m + 1.5], [1.5, 2 * m + 2], -1.0).scale(2.0 ** -(2 * m + 1))
    m = (k - 1) // 2
    return pfq_series([1, m + 1.5, m + 2], [1.5, 2 * m + 3], -1.0).scale(2.0 ** -(2 * m + 2))


# ---------------------------------------------------------------------------
# Cl2 from the cos(u/2) power series and its integral form

def cl2_cos_half_series(u: float, n_terms: int = 300) -> ExtReal:
    """Cl2(u) = 2[asin(c) ln2 - sum_j (1/2)_j^2/(3/2)_j O_j c^(2j+1)/j!], c = cos(u/2),

    with O_j = sum_{k<j} 1/(2k+1).
    """
    if not 0 < u < 2 * PI:
        raise DomainError("cl2_cos_half_series needs 0 < u < 2 pi")
    c = math.cos(0.5 * u)
    c2 = c * c
    acc = Accumulator()
    coef = 1.0  # (1/2)_j^2 / ((3/2)_j j!)
    odd = 0.0
    p = c
    t = 0.0
    for j in range(1, n_terms + 1):
        coef *= (j - 0.5) ** 2 / ((j + 0.5) * j)
        odd += 1.0 / (2 * j - 1)
        p *= c2
        t = coef * odd * p
        acc.add(t)
    # next term and ratio bound
    coef_n = coef * (n_terms + 0.5) ** 2 / ((n_terms + 1.5) * (n_terms + 1))
    odd_n = odd + 1.0 / (2 * n_terms + 1)
    nxt = abs(coef_n * odd_n * p * c2)
    rho = c2 * (odd_n + 1.0 / (2 * n_terms + 3)) / odd_n
    tail = nxt / (1 - rho) if rho < 0.999 else nxt * 4.0 * (n_terms + 1)
    val = 2.0 * (math.asin(c) * LN2 - acc.value)
    return ExtReal(val, 2.0 * (tail + 2 * EPS * acc.abs_sum) + EPS * abs(val))


def cl2_cos_half_integral(u: float, tol: float = 1e-12) -> ExtReal:
    """Cl2(u) from the t-integral form, including the sgn(cos(u/2)) factor."""
    if not 0 < u < 2 * PI:
        raise DomainError("cl2_cos_half_integral needs 0 < u < 2 pi")
    c = math.cos(0.5 * u)
    s = math.sin(0.5 * u)
    c2 = c * c
    one_minus_s = c2 / (1.0 + s)
    b_arg = math.sqrt(0.5 * one_minus_s)
    end = math.asin(b_arg)

    def g(t, dlo, dhi):
        if t <= 0:
            return 0.0
        # 1 - t c^2 = s^2 + dhi c^2 keeps accuracy near t = 1
        root = math.sqrt(s * s + dhi * c2)
        a_arg = math.sqrt(0.5 * t * c2 / (1.0 + root))
        # asin(A) - asin(B) = asin((A^2 - B^2)/(A sqrt(1-B^2) + B sqrt(1-A^2))), and
        # A^2 - B^2 carries an exact factor dhi, divided out here
        den = a_arg * math.sqrt(1.0 - b_arg * b_arg) + b_arg * math.sqrt(1.0 - a_arg * a_arg)
        if den == 0.0:
            return 0.0
        q = -0.5 * one_minus_s * (c2 / (s + root) + 1.0 + s) / (1.0 + root) / den
        d = dhi * q
        diff = (math.asin(d) / d if d else 1.0) * q
        return -(diff + end / (1.0 + math.sqrt(t))) / t

    r = tanh_sinh_dist(g, 0.0, 1.0, tol)
    if not r.converged:
        raise ArithmeticError("cl2_cos_half_integral quadrature did not converge")
    sgn = 1.0 if c > 0 else (-1.0 if c < 0 else 0.0)
    val = 2.0 * (math.asin(c) * LN2 - sgn * r.value)
    return ExtReal(val, 2.0 * r.err_estimate + 4 * EPS * abs(val))


def odd_reciprocal_sum(j: int) -> Fraction:
    """2 sum_{k<j} 1/(2k+1) exactly."""
    return 2 * sum((Fraction(1, 2 * k + 1) for k in range(j)), Fraction(0))


def odd_reciprocal_harmonic(j: int) -> Fraction:
    """2 H_{2j-1} - H_{j-1}."""
    return 2 * harm_exact(2 * j - 1) - harm_exact(j - 1)


# ---------------------------------------------------------------------------
# Bernoulli-series trigonometric integrals

def _zeta_even(two_k: int) -> float:
    if two_k <= 60:
        b = abs(bernoulli_fraction(two_k))
        return float(b * (2 ** (two_k - 1)) / math.factorial(two_k)) * PI ** two_k
    acc = Accumulator()
    for n in range(6, 0, -1):
        acc.add(n ** -float(two_k))
    return acc.value


def bernoulli_trig_sums(b: float) -> tuple[ExtReal, ExtReal]:
    """(int_0^b a/sin a da, int_0^b a/tan a da) from their Bernoulli-number series, |b| < pi.

    Coefficients use |B_2k| (2k)!^-1 = 2 zeta(2k)/(2 pi)^2k, so the terms are
    2 eta(2k) (b/pi)^2k b/(2k+1) and 2 zeta(2k) (b/pi)^2k b/(2k+1).
    """
    if not abs(b) < PI:
        raise DomainError("bernoulli_trig_sums needs |b| < pi")
    x = (b / PI) ** 2
    acc_s, acc_t = Accumulator(), Accumulator()
    acc_s.add(b)
    acc_t.add(b)
    p = b
    k = 1
    ts = tt = 0.0
    while True:
        p *= x
        z = _zeta_even(2 * k)
        eta = (1.0 - 2.0 ** (1 - 2 * k)) * z
        ts = 2.0 * eta * p / (2 * k + 1)
        tt = 2.0 * z * p / (2 * k + 1)
        acc_s.add(ts)
        acc_t.add(-tt)
        if abs(tt) * x / (1 - x) < 1e-17 * max(abs(acc_t.value), abs(b), 1e-300) or k > 20000:
            break
        k += 1
    tail_s = abs(ts) * x / (1 - x) * 1.01
    tail_t = abs(tt) * x / (1 - x) * 1.01
    return acc_s.result(tail_s), acc_t.result(tail_t)


def tan_integral_clausen(b: float) -> float:
    """int_0^b a cot a da = b ln|2 sin b| + Cl2(2b)/2."""
    if b == 0:
        return 0.0
    return b * math.log(abs(2.0 * math.sin(b))) + 0.5 * cl2(2 * b).value


def trig_integral_quad(b: float, kind: str, tol: float = 1e-13) -> QuadResult:
    """Quadrature of a/sin a ('sin') or a/tan a ('tan') over [0, b]."""
    if kind == "sin":
        f = (lambda a: a / math.sin(a) if a != 0 else 1.0)
    elif kind == "tan":
        f = (lambda a: a / math.tan(a) if a != 0 else 1.0)
    else:
        raise DomainError("kind must be 'sin' or 'tan'")
    return quad(f, 0.0, b, tol, singular=abs(b) > 2.5)
