"""Four independent evaluations of the tetrahedral constant C(1,1).

series:   sum_n (-1/8)^n/(n+1/2) [1/(n+1/2) - 3(ln2 + H_n)]
clausen:  2^(5/2) [Cl2(4 alpha) - Cl2(2 alpha)], alpha = asin(1/3)
rajantie: 2^(5/2) times a smooth integral over [0, 1]
srp:      the three-electron integral at its all-unit parameter point
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .harmonic import harm_exact
from .logtrig import j_integral, j_integral_shifted
from .numkit import DD, EPS, Accumulator, DomainError, ExtReal, constants
from .quad import QuadResult, gauss_kronrod
from .specfun import cl2

PI = math.pi
LN2 = math.log(2.0)
SQRT2 = math.sqrt(2.0)
TWO_5_2 = 4.0 * SQRT2


class Route(Enum):
    SERIES = "series"
    CLAUSEN = "clausen"
    RAJANTIE = "rajantie"
    SRP = "srp"


@dataclass(frozen=True)
class CtetRoute:
    route: Route
    value: ExtReal


# Agreement demanded between two routes; the quadrature route sets the floor.
ROUTE_TOLERANCES = {
    frozenset({Route.SERIES, Route.CLAUSEN}): 1e-12,
    frozenset({Route.SERIES, Route.SRP}): 1e-11,
    frozenset({Route.CLAUSEN, Route.SRP}): 1e-11,
}
RAJANTIE_TOLERANCE = 1e-9


def route_tolerance(a: Route, b: Route) -> float:
    if Route.RAJANTIE in (a, b):
        return RAJANTIE_TOLERANCE
    return ROUTE_TOLERANCES[frozenset({a, b})]


# ---------------------------------------------------------------------------
# Series

def _series_term(n: int, hn: float) -> float:
    h = n + 0.5
    return (-0.125) ** n / h * (1.0 / h - 3.0 * (LN2 + hn))


def _series_tail(n: int, hn: float) -> float:
    # |t_m| for m >= n is at most 8^-m (3(ln2 + H_m) + 2)/(m + 1/2), and H_m
    # grows by < 1/(n+1) per step, so the geometric sum is dominated by 1.3 |t_n|
    return 1.3 * 0.125 ** n * (3.0 * (LN2 + hn + 1.0) + 2.0) / (n + 0.5)


def ctet_series(tol: float = 1e-14) -> ExtReal:
    """Sum the exponentially convergent series until the tail drops below tol.

    For tol < 1e-13 the result comes from the double-double evaluation.
    """
    if not tol >= 1e-14:
        raise DomainError("ctet_series needs tol >= 1e-14")
    if tol < 1e-13:
        hi, lo, tail = _series_dd(tol)
        v = hi + lo
        return ExtReal(v, tail + EPS * abs(v))
    acc = Accumulator()
    hn = 0.0
    n = 0
    while True:
        acc.add(_series_term(n, hn))
        n += 1
        hn += 1.0 / n
        tail = _series_tail(n, hn)
        if tail < 0.1 * tol:
            break
    return acc.result(tail)


def _ln2_dd() -> DD:
    with localcontext() as ctx:
        ctx.prec = 60
        ln2 = Decimal(2).ln()
        hi = float(ln2)
        lo = float(ln2 - Decimal(hi))
    return DD(hi, lo)


@lru_cache(maxsize=4)
def _series_dd(tol: float) -> tuple[float, float, float]:
    # Rational parts are summed exactly; only ln2 and the final rounding are inexact.
    rational = Fraction(0)
    log_weight = Fraction(0)
    n = 0
    while True:
        h = Fraction(2 * n + 1, 2)
        p = Fraction(-1, 8) ** n
        rational += p / (h * h) - 3 * p * harm_exact(n) / h
        log_weight += p / h
        n += 1
        tail = _series_tail(n, float(harm_exact(n)))
        if tail < 1e-33:
            break
    v = DD.of(rational) - _ln2_dd() * DD.of(3 * log_weight)
    return v.hi, v.lo, tail


def ctet_series_reference() -> DD:
    """The series in double-double, carrying about 32 significant digits."""
    hi, lo, _ = _series_dd(0.0)
    return DD(hi, lo)


# ---------------------------------------------------------------------------
# Clausen differences

def ctet_clausen() -> ExtReal:
    """2^(5/2) [Cl2(4 alpha) - Cl2(2 alpha)] with alpha = asin(1/3)."""
    alpha = constants().alpha
    return (cl2(4 * alpha) - cl2(2 * alpha)).scale(TWO_5_2)


def ctet_clausen_omega() -> ExtReal:
    """4 sqrt2 [Cl2(4 omega) - Cl2(2 omega)] with omega = atan(1/(2 sqrt2))."""
    om = constants().omega
    return (cl2(4 * om) - cl2(2 * om)).scale(TWO_5_2)


def ctet_clausen_shifted() -> ExtReal:
    """4 sqrt2 [Cl2(2 omega) + 2 Cl2(2 omega + pi)], the duplicated form."""
    om = constants().omega
    return (cl2(2 * om) + cl2(2 * om + PI).scale(2.0)).scale(TWO_5_2)


# ---------------------------------------------------------------------------
# Rajantie's integral

def rajantie_integrand(x: float) -> float:
    x2 = x * x
    return (math.log(0.75) + math.log((x + 3) / (x + 2)) + x2 / (x2 - 4) * math.log(4 / (x + 2))
            + x / (x + 2) * math.log((x + 3) / 3)) / math.sqrt(3 - x2)


def rajantie_partial_fraction_integrand(x: float) -> float:
    """The same integrand after partial fractions, term by term."""
    ln4 = 2 * LN2
    lx3 = math.log(x + 3)
    lx2 = math.log(x + 2)
    inv_m, inv_p = 1 / (x - 2), 1 / (x + 2)
    return ((inv_m - inv_p) * ln4 + 2 * (1 - inv_p) * lx3 - (2 + inv_m - inv_p) * lx2
            + 2 * math.log(3) * inv_p) / math.sqrt(3 - x * x)


def ctet_rajantie(tol: float = 1e-12) -> ExtReal:
    """2^(5/2) times the Gauss-Kronrod integral of rajantie_integrand on [0, 1]."""
    if not tol >= 1e-12:
        raise DomainError("ctet_rajantie needs tol >= 1e-12")
    r = gauss_kronrod(rajantie_integrand, 0.0, 1.0, tol)
    if not r.converged:
        raise ArithmeticError(f"rajantie quadrature did not converge (estimate {r.err_estimate:.3g})")
    v = TWO_5_2 * r.value
    return ExtReal(v, TWO_5_2 * r.err_estimate + 4 * EPS * abs(v))


def rajantie_elementary_piece(tol: float = 1e-13) -> tuple[QuadResult, float, float]:
    """ln4 int_0^1 (1/(x-2) - 1/(x+2))/sqrt(3-x^2) dx by quadrature,
    as ln4 [atan(1/sqrt2) - atan(5/sqrt2)], and as theta_plus ln4."""
    ln4 = 2 * LN2
    q = gauss_kronrod(lambda x: ln4 * (1 / (x - 2) - 1 / (x + 2)) / math.sqrt(3 - x * x), 0.0, 1.0, tol)
    atans = ln4 * (math.atan(1 / SQRT2) - math.atan(5 / SQRT2))
    return q, atans, constants().theta_plus * ln4


def rajantie_decomposition(tol: float = 1e-13) -> dict[str, float]:
    """Split the partial-fraction integral into J-type pieces.

    Keys are the pieces; "total" is their sum, which equals C(1,1)/2^(5/2).
    J(3, sqrt3) and J(2, sqrt3) come from their Clausen closed forms, the
    shifted pieces from quadrature.
    """
    d = math.sqrt(3.0)
    pieces = {
        "elementary": constants().theta_plus * 2 * LN2,
        "J(3)": 2 * j_integral(3.0, d).value,
        "Jh(3,2)": -2 * j_integral_shifted(3.0, d, 2.0, tol).value,
        "J(2)": -2 * j_integral(2.0, d).value,
        "Jh(2,-2)": -j_integral_shifted(2.0, d, -2.0, tol).value,
        "Jh(2,2)": j_integral_shifted(2.0, d, 2.0, tol).value,
        "ln3": 2 * math.log(3) * gauss_kronrod(lambda x: 1 / ((x + 2) * math.sqrt(3 - x * x)), 0.0, 1.0, tol).value,
    }
    acc = Accumulator()
    acc.extend(pieces.values())
    pieces["total"] = acc.value
    return pieces


# ---------------------------------------------------------------------------
# Standard reference point of the three-electron integral

def _srp_gamma() -> tuple[tuple[float, ...], ...]:
    return tuple(tuple(5.0 if j == k else -1.0 for k in range(4)) for j in range(4))


@dataclass(frozen=True)
class SrpParameters:
    sigma_abs: float = SQRT2
    Gamma: tuple[float, float, float] = (-1.75, -1.75, -1.75)
    gamma: tuple[tuple[float, ...], ...] = field(default_factory=_srp_gamma)

    def __post_init__(self):
        if len(self.Gamma) != 3 or len(self.gamma) != 4 or any(len(row) != 4 for row in self.gamma):
            raise DomainError("SrpParameters needs 3 Gamma values and a 4x4 gamma table")


def _srp_cl2(g: float, sigma_abs: float) -> ExtReal:
    return cl2(PI - 2 * math.atan(g / sigma_abs))


def srp_gamma_terms(params: SrpParameters = SrpParameters()) -> list[float]:
    """The Cl2(pi - 2 atan(Gamma_j/|sigma|)) contributions, one per Gamma_j."""
    return [_srp_cl2(g, params.sigma_abs).value for g in params.Gamma]


def srp_integral(params: SrpParameters = SrpParameters()) -> ExtReal:
    """(16 pi^3/|sigma|)[-2 sum_j Cl2(pi - 2atan(Gamma_j/|sigma|)) + sum_jk Cl2(pi - 2atan(gamma_jk/|sigma|))]."""
    s = params.sigma_abs
    total = ExtReal(0.0)
    for g in params.Gamma:
        total = total - _srp_cl2(g, s).scale(2.0)
    for row in params.gamma:
        for g in row:
            total = total + _srp_cl2(g, s)
    return total.scale(16 * PI ** 3 / s)


def ctet_srp(params: SrpParameters = SrpParameters()) -> ExtReal:
    """C(1,1) as the reference-point integral divided by 8 pi^3."""
    return srp_integral(params).scale(1.0 / (8 * PI ** 3))


def ctet_srp_consolidated() -> ExtReal:
    """2 sqrt2 [-3 Cl2(2 theta_plus) + 6 Cl2(pi + 2atan(1/sqrt2)) + 2 Cl2(pi - 2atan(5/sqrt2))]."""
    tp = constants().theta_plus
    v = (cl2(2 * tp).scale(-3.0) + cl2(PI + 2 * math.atan(1 / SQRT2)).scale(6.0)
         + cl2(PI - 2 * math.atan(5 / SQRT2)).scale(2.0))
    return v.scale(2 * SQRT2)


# ---------------------------------------------------------------------------
# All routes

_EVALUATORS = {
    Route.SERIES: ctet_series,
    Route.CLAUSEN: ctet_clausen,
    Route.RAJANTIE: ctet_rajantie,
    Route.SRP: ctet_srp,
}


def ctet_routes(routes=tuple(Route)) -> list[CtetRoute]:
    out = []
    for r in routes:
        r = Route(r)
        out.append(CtetRoute(r, _EVALUATORS[r]()))
    return out


@dataclass(frozen=True)
class RouteDelta:
    a: Route
    b: Route
    delta: float
    tolerance: float

    @property
    def ok(self) -> bool:
        return self.delta <= self.tolerance


def pairwise_deltas(values: list[CtetRoute]) -> list[RouteDelta]:
    return [RouteDelta(x.route, y.route, abs(x.value.value - y.value.value), route_tolerance(x.route, y.route))
            for x, y in combinations(values, 2)]
