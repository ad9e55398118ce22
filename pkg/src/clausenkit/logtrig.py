"""Log-trigonometric and hyperbolic integrals with Clausen closed forms.

Each public evaluator returns an IntegralCheck: the integral by quadrature
next to its closed form, so callers can compare the two routes directly.
Closed forms that pass through complex arithmetic record the imaginary
residue they dropped.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .numkit import DomainError, ExtReal
from .quad import QuadResult, gauss_kronrod, integrate_semi_infinite, quad, tanh_sinh_dist
from .specfun import cl2f, lobachevsky, pfq_series, polygamma

PI = math.pi
LN2 = math.log(2.0)
IMAG_RESIDUE_MAX = 1e-11


@dataclass(frozen=True)
class IntegralCheck:
    """An integral by quadrature (lhs) and by closed form (rhs)."""

    lhs: QuadResult
    rhs: float
    imag_residue: float = 0.0

    @property
    def abs_err(self) -> float:
        return abs(self.lhs.value - self.rhs)

    def agrees(self, tol: float = 1e-9) -> bool:
        """True when the routes match within max(tol, 10 x quadrature estimate)."""
        return (self.lhs.converged and self.imag_residue <= IMAG_RESIDUE_MAX
                and self.abs_err <= max(tol, 10.0 * self.lhs.err_estimate))


def _project(z: complex) -> tuple[float, float]:
    return z.real, abs(z.imag)


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise DomainError(msg)


# ---------------------------------------------------------------------------
# ln of sums and differences of trigonometric functions

def sin_shift_log_integral(kappa: float, u: float, alpha: float, tol: float = 1e-12) -> IntegralCheck:
    """kappa int_0^u ln(sin(kappa x) + sin(alpha)) dx.

    Needs kappa > 0, 0 < alpha < pi/2, |u| <= alpha and kappa u >= -alpha so
    the logarithm's argument stays non-negative.
    """
    _require(kappa > 0, "kappa must be positive")
    _require(0 < alpha < PI / 2, "alpha must lie in (0, pi/2)")
    _require(abs(u) <= alpha, "need |u| <= alpha")
    _require(kappa * u >= -alpha, "need kappa u >= -alpha")
    sa = math.sin(alpha)
    lhs = quad(lambda x: math.log(math.sin(kappa * x) + sa), 0.0, u, tol, singular=True)
    lhs = QuadResult(kappa * lhs.value, kappa * lhs.err_estimate, lhs.evals, lhs.converged)
    ku = kappa * u
    rhs = cl2f(alpha) - cl2f(ku + alpha) + cl2f(alpha - ku + PI) - cl2f(alpha + PI) - ku * LN2
    return IntegralCheck(lhs, rhs)


def cos_difference_log_integral(big_a: float, k: float, x: float, tol: float = 1e-10) -> IntegralCheck:
    """int_0^x ln|cos A - cos(kt)| dt for k > 0, x > 0."""
    _require(k > 0 and x > 0, "need k > 0 and x > 0")
    ca = math.cos(big_a)
    span = k * x
    m_max = int(span / (2 * PI)) + 2
    points = sorted({(s * big_a + 2 * PI * m) / k for m in range(-m_max, m_max + 1) for s in (1, -1)
                     if 0 < (s * big_a + 2 * PI * m) / k < x})

    def f(t):
        d = abs(ca - math.cos(k * t))
        return math.log(d) if d > 0 else -745.0

    lhs = quad(f, 0.0, x, tol, singular=True, points=points or (0.5 * x,))
    rhs = -(cl2f(span - big_a) + cl2f(span + big_a) + span * LN2) / k
    return IntegralCheck(lhs, rhs)


def _sin_cosh_closed(big_a: float, k: float, x: float) -> float:
    r1 = math.exp(-big_a)
    kx = k * x
    th1 = kx - PI / 2
    w1 = -math.atan(r1 * math.cos(kx) / (1.0 - r1 * math.sin(kx)))
    at = math.atan(r1)
    brace = (-2.0 * big_a * (w1 + at) + cl2f(2 * at) - cl2f(PI + 2 * at)
             + cl2f(2 * w1) - cl2f(2 * w1 + 2 * th1) + cl2f(2 * th1))
    return (big_a - LN2) * x - brace / k


def sin_cosh_log_integral(big_a: float, k: float, x: float, tol: float = 1e-12) -> IntegralCheck:
    """int_0^x ln|sin(kt) - cosh A| dt for A > 0, k != 0.

    The closed form uses r1 = exp(-A); its Cl2(2 theta_1) term enters with a
    plus sign.
    """
    _require(big_a > 0, "A must be positive")
    _require(k != 0, "k must be non-zero")
    ch = math.cosh(big_a)
    lhs = quad(lambda t: math.log(abs(math.sin(k * t) - ch)), 0.0, x, tol)
    return IntegralCheck(lhs, _sin_cosh_closed(big_a, k, x))


# ---------------------------------------------------------------------------
# x^m over trigonometric denominators

TRIG_WEIGHT_KINDS = ("x/sin", "x/tan", "x2/sin2", "x2/tan2")


def trig_weight_closed(b: float, kind: str) -> complex:
    """Complex closed form of int_0^b x/sin x, x/tan x, x^2/sin^2 x or x^2/tan^2 x."""
    c = cmath.exp(1j * b)
    if kind == "x/sin":
        return (cl2f(b) - cl2f(b + PI) + 1j * PI / 4 * (2 * b - PI)
                + b * cmath.log((1 - c) / (1 + c)) + 1j * PI * PI / 4)
    if kind == "x/tan":
        return (cl2f(b) + cl2f(b + PI) - 1j * PI * PI / 4 + b * (cmath.log(1 - c * c) - 1j * b / 2)
                + 0.5j * (PI * b - b * b + PI * PI / 2))
    if kind in ("x2/sin2", "x2/tan2"):
        v = cl2f(2 * b) + 1j * b * (PI - 2 * b) + b * (2 * cmath.log(1 - c * c) - b / math.tan(b))
        return v - b ** 3 / 3 if kind == "x2/tan2" else v
    raise DomainError(f"unknown kind {kind!r}; expected one of {TRIG_WEIGHT_KINDS}")


def _trig_weight_integrand(kind: str):
    def x_sin(a):
        return a / math.sin(a) if a else 1.0

    def x_tan(a):
        return a * math.cos(a) / math.sin(a) if a else 1.0

    def x2_sin2(a):
        return (a / math.sin(a)) ** 2 if a else 1.0

    def x2_tan2(a):
        return (a * math.cos(a) / math.sin(a)) ** 2 if a else 1.0

    return {"x/sin": x_sin, "x/tan": x_tan, "x2/sin2": x2_sin2, "x2/tan2": x2_tan2}[kind]


def trig_weight_integral(b: float, kind: str, tol: float = 1e-12) -> IntegralCheck:
    """Quadrature and closed form for one of TRIG_WEIGHT_KINDS on [0, b], 0 < b < pi."""
    _require(kind in TRIG_WEIGHT_KINDS, f"unknown kind {kind!r}")
    _require(0 < b < PI, "need 0 < b < pi")
    lhs = gauss_kronrod(_trig_weight_integrand(kind), 0.0, b, tol)
    re, im = _project(trig_weight_closed(b, kind))
    return IntegralCheck(lhs, re, im)


def x_over_sin_plus_a(b: float, a: float, tol: float = 1e-12) -> IntegralCheck:
    """int_0^b x/(sin x + a) dx for |a| < 1 while sin x + a stays positive.

    With phi = asin a the integral is
    [b ln|sin((b+phi)/2)/cos((b-phi)/2)| - Cl2(phi) + Cl2(b+phi) + Cl2(pi-phi) - Cl2(pi+b-phi)]/cos phi.
    """
    _require(abs(a) < 1, "need |a| < 1")
    phi = math.asin(a)
    limit = PI + phi if a >= 0 else -phi
    _require(0 < b < limit, "sin x + a must stay positive on (0, b]")
    lhs = gauss_kronrod(lambda x: x / (math.sin(x) + a), 0.0, b, tol)
    rhs = (b * math.log(abs(math.sin(0.5 * (b + phi)) / math.cos(0.5 * (b - phi))))
           - cl2f(phi) + cl2f(b + phi) + cl2f(PI - phi) - cl2f(PI + b - phi)) / math.cos(phi)
    return IntegralCheck(lhs, rhs)


def x_over_tan_plus_a_closed(b: float, a: float) -> float:
    """[b ln|2 sin(b+psi)| - Cl2(2 psi)/2 + Cl2(2b+2psi)/2 + a b^2/2]/(1+a^2), psi = atan a."""
    psi = math.atan(a)
    return (b * math.log(abs(2 * math.sin(b + psi))) - 0.5 * cl2f(2 * psi)
            + 0.5 * cl2f(2 * b + 2 * psi) + 0.5 * a * b * b) / (1 + a * a)


def x_over_tan_plus_a_candidates(b: float, a: float) -> dict[str, complex]:
    """Two readings of a dilogarithm-based closed form for int_0^b x/(tan x + a).

    The bracketed terms t1 and t2 are either added ("sum") or multiplied
    ("product"); phi_a is taken in [0, 2 pi).
    """
    phi_a = -math.atan(2 * a / (1 - a * a)) if a * a != 1 else -PI / 2 * math.copysign(1.0, a)
    if phi_a < 0:
        phi_a += 2 * PI
    v_plus = cmath.sqrt((1 + 1j * a) / (1 - 1j * a))
    t1 = 2 / (1 + a * a) * (cl2f(phi_a) - cl2f(phi_a - 2 * b) + 2 * b * cmath.log(1 - cmath.exp(1j * (phi_a - 2 * b))))
    t2 = 2j * b / (1 + 1j * a) * (b + (b - phi_a + PI) / (1 - 1j * a))
    return {"sum": (t1 + t2) / (8 * v_plus), "product": t1 * t2 / (8 * v_plus)}


def x_over_tan_plus_a(b: float, a: float, tol: float = 1e-12) -> IntegralCheck:
    """int_0^b x/(tan x + a) dx while sin x + a cos x keeps one sign on (0, b]."""
    psi = math.atan(a)
    limit = PI - psi if a >= 0 else -psi
    _require(0 < b < limit, "tan x + a must not vanish on (0, b]")

    def f(x):
        den = math.sin(x) + a * math.cos(x)
        return x * math.cos(x) / den if den else 1.0

    lhs = gauss_kronrod(f, 0.0, b, tol)
    return IntegralCheck(lhs, x_over_tan_plus_a_closed(b, a))


def sin_square_difference_log_integral(u: float, alpha: float, tol: float = 1e-12) -> IntegralCheck:
    """int_0^u ln|sin^2 x - sin^2 alpha| dx for |u| <= |alpha| < pi/2."""
    _require(0 < abs(alpha) < PI / 2, "need 0 < |alpha| < pi/2")
    _require(abs(u) <= abs(alpha), "need |u| <= |alpha|")
    s2 = math.sin(alpha) ** 2

    def f(x):
        d = abs(math.sin(x) ** 2 - s2)
        return math.log(d) if d > 0 else -745.0

    lhs = quad(f, 0.0, u, tol, singular=True)
    rhs = 0.5 * (cl2f(2 * (alpha - u)) - cl2f(2 * (alpha + u))) - 2 * u * LN2
    return IntegralCheck(lhs, rhs)


def x_over_shifted_sin(b: float, a: float, tol: float = 1e-12) -> IntegralCheck:
    """int_0^b x/sin(x + a) dx for a > 0, b > 0, a + b < pi.

    Closed form: F(a+b) - F(a) - a ln(tan((a+b)/2)/tan(a/2)) with F the
    Clausen form of int_0^s y/sin y dy.
    """
    _require(a > 0 and b > 0 and a + b < PI, "need a, b > 0 and a + b < pi")
    lhs = gauss_kronrod(lambda x: x / math.sin(x + a), 0.0, b, tol)
    fa, ia = _project(trig_weight_closed(a, "x/sin"))
    fb, ib = _project(trig_weight_closed(a + b, "x/sin"))
    rhs = fb - fa - a * (math.log(math.tan(0.5 * (a + b))) - math.log(math.tan(0.5 * a)))
    return IntegralCheck(lhs, rhs, max(ia, ib))


# ---------------------------------------------------------------------------
# Dispatcher over the four families

def log_trig_integrals(part: str, params: dict, tol: float = 1e-12) -> IntegralCheck:
    """Route one parameter set to its integral family.

    part "a": {"kappa", "u", "alpha"} or {"A", "k", "x", "form": "cos"};
    part "b": {"A", "k", "x"}; part "c": {"b", "kind"}; part "d": {"b", "a",
    "form": "sin" | "tan"}; part "sin2": {"u", "alpha"}; part "shift": {"b", "a"}.
    """
    p = dict(params)
    if part == "a":
        if p.get("form") == "cos":
            return cos_difference_log_integral(p["A"], p["k"], p["x"], tol)
        return sin_shift_log_integral(p.get("kappa", 1.0), p["u"], p["alpha"], tol)
    if part == "b":
        return sin_cosh_log_integral(p["A"], p["k"], p["x"], tol)
    if part == "c":
        return trig_weight_integral(p["b"], p.get("kind", "x/sin"), tol)
    if part == "d":
        if p.get("form", "sin") == "tan":
            return x_over_tan_plus_a(p["b"], p["a"], tol)
        return x_over_sin_plus_a(p["b"], p["a"], tol)
    if part == "sin2":
        return sin_square_difference_log_integral(p["u"], p["alpha"], tol)
    if part == "shift":
        return x_over_shifted_sin(p["b"], p["a"], tol)
    raise DomainError(f"unknown part {part!r}")


# ---------------------------------------------------------------------------
# J(c, d) = int_0^1 ln(x + c)/sqrt(d^2 - x^2) dx

def j_parameters(c: float, d: float) -> tuple[float, float, float]:
    """(A, r1, omega_1) used by the closed form, with r1 = exp(-A)."""
    _require(d > 1 and c / d > 1, "need d > 1 and c/d > 1")
    big_a = math.acosh(c / d)
    r1 = math.exp(-big_a)
    kx = -math.asin(1.0 / d)
    w1 = -math.atan(r1 * math.cos(kx) / (1.0 - r1 * math.sin(kx)))
    return big_a, r1, w1


def j_integral(c: float, d: float) -> ExtReal:
    """J(c, d) in closed form: ln d asin(1/d) + int_0^asin(1/d) ln(sin t + c/d) dt."""
    big_a, _, _ = j_parameters(c, d)
    x = math.asin(1.0 / d)
    # sin(-t) - cosh A = -(sin t + c/d), so the absolute value is the integrand
    v = math.log(d) * x + _sin_cosh_closed(big_a, -1.0, x)
    return ExtReal(v, 2e-15 * max(1.0, abs(v)))


def j_integral_quad(c: float, d: float, tol: float = 1e-13) -> QuadResult:
    _require(d > 1 and c / d > 1, "need d > 1 and c/d > 1")
    d2 = d * d
    return gauss_kronrod(lambda x: math.log(x + c) / math.sqrt(d2 - x * x), 0.0, 1.0, tol)


def j_integral_check(c: float, d: float, tol: float = 1e-13) -> IntegralCheck:
    return IntegralCheck(j_integral_quad(c, d, tol), j_integral(c, d).value)


def j_integral_shifted(c: float, d: float, h: float, tol: float = 1e-13) -> QuadResult:
    """int_0^1 ln(x + c)/((x + h) sqrt(d^2 - x^2)) dx, by quadrature only."""
    _require(d > 1 and c > 1, "need d > 1 and c > 1")
    _require(not -1 <= h <= 0, "x + h must not vanish on [0, 1]")
    d2 = d * d
    return gauss_kronrod(lambda x: math.log(x + c) / ((x + h) * math.sqrt(d2 - x * x)), 0.0, 1.0, tol)


# ---------------------------------------------------------------------------
# int_b^inf ln((u+a)/(u-a)) du/(1+u^2)

def _log_ratio_angles(a: float, b: float) -> tuple[float, float, float, float]:
    theta = 2.0 * math.atan(a)  # acos((1-a^2)/(1+a^2)) without cancellation
    r = (b + a) / (b - a)
    omega = math.atan2(r * math.sin(theta), 1.0 - r * math.cos(theta))
    chi = PI - theta - omega
    return theta, r, omega, chi


def log_ratio_tail_closed(a: float, b: float) -> float:
    _require(b > a > 0, "need b > a > 0")
    theta, _, omega, chi = _log_ratio_angles(a, b)
    return cl2f(PI - theta) - 0.5 * (cl2f(2 * omega) + cl2f(2 * chi))


def log_ratio_tail_integral(a: float, b: float, tol: float = 1e-12) -> IntegralCheck:
    """int_b^inf ln((u+a)/(u-a))/(1+u^2) du against its Clausen form, b > a > 0."""
    _require(b > a > 0, "need b > a > 0")
    lhs = integrate_semi_infinite(lambda u: math.log1p(2 * a / (u - a)) / (1 + u * u), b, tol)
    return IntegralCheck(lhs, log_ratio_tail_closed(a, b))


def log_ratio_angle_integral(a: float, b: float, tol: float = 1e-12) -> QuadResult:
    """The same tail written as int_{atan b}^{pi/2} ln|(tan p + a)/(tan p - a)| dp.

    Also valid at b = 0, where a = 1 gives 2G; the pole of the logarithm at
    tan p = a is then an interior breakpoint.
    """
    _require(a > 0 and b >= 0, "need a > 0 and b >= 0")

    def f(p):
        s, c = math.sin(p), math.cos(p)
        num, den = s + a * c, s - a * c
        return math.log(abs(num / den)) if den else 0.0

    lo = math.atan(b)
    pole = math.atan(a)
    points = (pole,) if lo < pole else ()
    return quad(f, lo, PI / 2, tol, singular=True, points=points)


def log_kernel_check(theta: float, r: float, tol: float = 1e-12) -> IntegralCheck:
    """-sin(theta) int_0^r ln y/(1 - 2y cos theta + y^2) dy

    against (Cl2(2 theta) + Cl2(2 omega) + Cl2(2 chi))/2, where
    tan omega = r sin theta/(1 - r cos theta) and chi = pi - theta - omega.
    """
    _require(0 < theta < PI and r > 0, "need 0 < theta < pi and r > 0")
    ct = math.cos(theta)
    points = (1.0,) if r > 1 else ()
    q = quad(lambda y: math.log(y) / (1 - 2 * y * ct + y * y), 0.0, r, tol, singular=True, points=points)
    st = math.sin(theta)
    lhs = QuadResult(-st * q.value, st * q.err_estimate, q.evals, q.converged)
    omega = math.atan2(r * st, 1 - r * ct)
    chi = PI - theta - omega
    return IntegralCheck(lhs, 0.5 * (cl2f(2 * theta) + cl2f(2 * omega) + cl2f(2 * chi)))


def log_kernel_series(x: float, z: float, tol: float = 1e-16) -> float:
    """sum_n z^n/n^2 (n ln z - 1) sin(n x) for 0 < z < 1."""
    _require(0 < z < 1, "need 0 < z < 1")
    lz = math.log(z)
    total = 0.0
    zn = 1.0
    n = 0
    while True:
        n += 1
        zn *= z
        t = zn / (n * n) * (n * lz - 1) * math.sin(n * x)
        total += t
        if zn * (n * abs(lz) + 1) / (n * n * (1 - z)) < tol * max(1.0, abs(total)) or n > 100000:
            return total


def log_kernel_integral(x: float, z: float, tol: float = 1e-12) -> QuadResult:
    """sin x int_0^z ln y/(1 - 2y cos x + y^2) dy."""
    cx = math.cos(x)
    q = quad(lambda y: math.log(y) / (1 - 2 * y * cx + y * y), 0.0, z, tol, singular=True)
    s = math.sin(x)
    return QuadResult(s * q.value, abs(s) * q.err_estimate, q.evals, q.converged)


# ---------------------------------------------------------------------------
# Hyperbolic integrals over [0, y]

@dataclass(frozen=True)
class HyperbolicTriple:
    """int_0^y x cosh x/(cosh 2x - cos 2t), int_0^y x/(cosh x + cos t), int_0^y x/(cosh x - cos t)."""

    full: IntegralCheck
    plus: IntegralCheck
    minus: IntegralCheck


def _hyperbolic_angles(y: float, t: float) -> tuple[float, float]:
    # Both angles enter only through Cl2(2 w) and Cl2(2(w -/+ t)), which are
    # pi-periodic in w, so the quadrant from atan2 is immaterial.
    if y > 700:
        return t, PI - t
    ey = math.exp(y)
    st, ct = math.sin(t), math.cos(t)
    w1 = math.atan2(ey * st, 1 + ey * ct)
    w3 = math.atan2(ey * st, 1 - ey * ct)
    return w1, w3


def hyperbolic_closed(y: float, t: float) -> tuple[float, float, float]:
    """Closed forms (full, plus, minus); full equals (plus + minus)/4."""
    _require(y > 0 and 0 < t < PI, "need y > 0 and 0 < t < pi")
    w1, w3 = _hyperbolic_angles(y, t)
    st = math.sin(t)
    c1 = -cl2f(2 * w1) + cl2f(2 * (w1 - t))
    c3 = -cl2f(2 * w3) + cl2f(2 * (w3 + t))
    plus = (2 * cl2f(t) + c1) / st
    minus = (2 * cl2f(PI - t) + c3) / st
    full = (-4 * cl2f(PI + t) + c1 + cl2f(2 * t) + c3) / (4 * st)
    return full, plus, minus


def hyperbolic_limit(t: float) -> float:
    """int_0^inf x cosh x/(cosh 2x - cos 2t) dx = (Cl2(t) - Cl2(2t)/4)/sin t."""
    _require(0 < t < PI, "need 0 < t < pi")
    return (cl2f(t) - 0.25 * cl2f(2 * t)) / math.sin(t)


def _hyperbolic_quad(f, y: float, tol: float) -> QuadResult:
    if y <= 60:
        return gauss_kronrod(f, 0.0, y, tol)
    head = gauss_kronrod(f, 0.0, 60.0, tol)
    return head + quad(f, 60.0, y, tol)


def hyperbolic_integrals(y: float, t: float, tol: float = 1e-12) -> HyperbolicTriple:
    """The three integrals over [0, y] by quadrature and in Clausen form."""
    full, plus, minus = hyperbolic_closed(y, t)
    ct, c2t = math.cos(t), math.cos(2 * t)

    def f_full(x):
        if x > 350:
            return 2 * x * math.exp(-x)
        return x * math.cosh(x) / (math.cosh(2 * x) - c2t)

    def f_plus(x):
        return x / (math.cosh(x) + ct) if x < 700 else 0.0

    def f_minus(x):
        return x / (math.cosh(x) - ct) if x < 700 else 0.0

    return HyperbolicTriple(IntegralCheck(_hyperbolic_quad(f_full, y, tol), full),
                            IntegralCheck(_hyperbolic_quad(f_plus, y, tol), plus),
                            IntegralCheck(_hyperbolic_quad(f_minus, y, tol), minus))


def hyperbolic_plus_algebraic(y: float, t: float, tol: float = 1e-12) -> QuadResult:
    """int_{sech y}^1 (ln(1 + sqrt(1-v^2)) - ln v)/((1 + v cos t) sqrt(1-v^2)) dv."""
    _require(y > 0 and 0 < t < PI, "need y > 0 and 0 < t < pi")
    ct = math.cos(t)
    lo = 1.0 / math.cosh(y)

    def g(v, dlo, dhi):
        s = math.sqrt(dhi * (1.0 + v))
        return (math.log1p(s) - math.log(v)) / ((1 + v * ct) * s)

    return tanh_sinh_dist(g, lo, 1.0, tol)


def hyperbolic_minus_angular(y: float, t: float, tol: float = 1e-12) -> QuadResult:
    """int_0^{acos sech y} (ln(1 + sin p) - ln cos p)/(1 - cos t cos p) dp."""
    _require(y > 0 and 0 < t < PI, "need y > 0 and 0 < t < pi")
    ct = math.cos(t)
    hi = math.acos(1.0 / math.cosh(y))
    return gauss_kronrod(lambda p: (math.log1p(math.sin(p)) - math.log(math.cos(p))) / (1 - ct * math.cos(p)),
                         0.0, hi, tol)


# ---------------------------------------------------------------------------
# Psi(x) = int_0^x asin(t)/t dt and the half-integer pFq family

def psi_closed(x: float) -> float:
    """Psi(x) = [Cl2(2 asin x) + 2 asin(x) ln2 + (pi - 2 asin sqrt(1-x^2)) ln x]/2."""
    _require(0 < x <= 1, "need 0 < x <= 1")
    s = math.asin(x)
    return 0.5 * (cl2f(2 * s) + 2 * s * LN2 + (PI - 2 * math.asin(math.sqrt(1 - x * x))) * math.log(x))


def psi_hypergeometric(x: float) -> ExtReal:
    """Psi(x) = x 3F2(1/2,1/2,1/2; 3/2,3/2; x^2)."""
    _require(0 < x <= 1, "need 0 < x <= 1")
    return pfq_series((0.5, 0.5, 0.5), (1.5, 1.5), x * x).scale(x)


def psi_quad(x: float, tol: float = 1e-12) -> QuadResult:
    """Psi(x) as int_0^{asin x} t cot t dt."""
    _require(0 < x <= 1, "need 0 < x <= 1")
    return quad(lambda t: t * math.cos(t) / math.sin(t) if t else 1.0, 0.0, math.asin(x), tol,
                singular=x == 1.0)


def psi_pair(x: float) -> tuple[ExtReal, float]:
    """(hypergeometric route, Clausen closed form) for Psi(x)."""
    return psi_hypergeometric(x), psi_closed(x)


def half_pfq_closed(z: float) -> float:
    """3F2(1/2,1/2,1/2; 3/2,3/2; z) in Clausen form, 0 < z <= 1."""
    _require(0 < z <= 1, "need 0 < z <= 1")
    s = math.asin(math.sqrt(z))
    return (cl2f(2 * s) + 2 * s * LN2 + 0.5 * math.log(z) * (PI - 2 * math.asin(math.sqrt(1 - z)))) / (2 * math.sqrt(z))


def log_sine_power_integral(ell: int, phi: float, tol: float = 1e-13) -> QuadResult:
    """int_0^phi ln^ell(sin p) dp for 0 < phi <= pi/2."""
    _require(ell >= 0 and 0 < phi <= PI / 2, "need ell >= 0 and 0 < phi <= pi/2")
    if ell == 0:
        return QuadResult(phi, 0.0, 0, True)
    return quad(lambda p: math.log(math.sin(p)) ** ell, 0.0, phi, tol, singular=True)


def half_pfq_log_sine_sum(k: int, z: float, tol: float = 1e-13) -> tuple[ExtReal, QuadResult]:
    """(k+1)F(k)(1/2,...; 3/2,...; z) by series, and as a binomial sum of log-sine integrals.

    The sum is (1/((k-1)! sqrt z)) sum_l (-1)^l C(k-1, l) (ln(z)/2)^(k-1-l) int_0^{asin sqrt z} ln^l sin.
    """
    _require(k >= 1 and 0 < z < 1, "need k >= 1 and 0 < z < 1")
    series = pfq_series((0.5,) * (k + 1), (1.5,) * k, z)
    phi = math.asin(math.sqrt(z))
    hl = 0.5 * math.log(z)
    scale = 1.0 / (math.factorial(k - 1) * math.sqrt(z))
    val, err, ev, ok = 0.0, 0.0, 0, True
    for ell in range(k):
        q = log_sine_power_integral(ell, phi, tol)
        w = (-1) ** ell * math.comb(k - 1, ell) * hl ** (k - 1 - ell) * scale
        val += w * q.value
        err += abs(w) * q.err_estimate
        ev += q.evals
        ok = ok and q.converged
    return series, QuadResult(val, err, ev, ok)


# ---------------------------------------------------------------------------
# Lobachevsky function values

def lobachevsky_shifted(theta: float, sign: int) -> tuple[float, float]:
    """(L(pi/2 + sign theta), (pi/2 + sign theta) ln2 + sign Cl2(2 theta)/2)."""
    _require(sign in (1, -1), "sign must be +1 or -1")
    x = PI / 2 + sign * theta
    return lobachevsky(x), x * LN2 + sign * 0.5 * cl2f(2 * theta)


def lobachevsky_pi_sixth_trigamma() -> float:
    """L(pi/6) = (pi/6) ln2 - (psi'(1/3) - 2 pi^2/3)/(6 sqrt3)."""
    return PI / 6 * LN2 - (polygamma(1, 1.0 / 3.0) - 2 * PI * PI / 3) / (6 * math.sqrt(3.0))


def triangular_entropy() -> tuple[float, float]:
    """Ground-state entropy per spin of the triangular antiferromagnet, two ways.

    Returns (ln2/2 - (3/pi) L(pi/6), (3 psi'(1/3)/(2 pi) - pi)/(3 sqrt3)).
    """
    return (0.5 * LN2 - 3 / PI * lobachevsky(PI / 6),
            (1.5 / PI * polygamma(1, 1.0 / 3.0) - PI) / (3 * math.sqrt(3.0)))


def catalan_from_half_pfq() -> float:
    """G = sqrt2 3F2(1/2,1/2,1/2; 3/2,3/2; 1/2) - (pi/4) ln2, via the series."""
    return math.sqrt(2.0) * pfq_series((0.5, 0.5, 0.5), (1.5, 1.5), 0.5).value - PI / 4 * LN2

