"""A registry of checkable identities, a seeded runner and report rendering.

Each Identity pairs two evaluators over a parameter map. The runner draws
parameter points from the identity's sampler, compares the two sides, and
collects the results into a Report that renders to JSON or markdown.
Literature references and the equation manifest live in data/refs.json.
"""

from __future__ import annotations

import cmath
import fnmatch
import json
import math
import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from multiprocessing import get_context
from typing import Any, Callable, Mapping, Sequence

from . import ctet as _ctet
from .harmonic import (
    SumSpec, catalan_split_elliptic, catalan_split_sums, central_binomial_ratio, cl2_cos_half_integral,
    cl2_cos_half_series, cl2_legendre_moment_series, cl2_legendre_series, clausen_atanh_integrals,
    clausen_hypergeometric_series, elliptic_k_unit_integral, even_legendre_ratio_sum, harm_exact,
    harm_polygamma, harmonic_gf, harmonic_gf_closed, harmonic_gf_integrated, harris_vbar, harris_vbar_direct,
    ik_exact, ik_hypergeometric, ik_quad, legendre_cos_integral_fourier, legendre_cos_integrals,
    legendre_moment, legendre_p0, legendre_zero_sum_limit, li2_half_shift_series, li2_legendre_series,
    nielsen_direct, nielsen_f, nielsen_f_antiderivative, nielsen_integral, odd_reciprocal_harmonic,
    odd_reciprocal_sum, pochhammer_square_sum_direct, pochhammer_square_sum_hyper, ramanujan_even_sum,
    ramanujan_h, ramanujan_h_reflected, ramanujan_h_series, ramanujan_shift_closed, ramanujan_shift_series,
    s22_closed_forms, s2_dilog_difference, s2_hypergeometric_form, s2_ramanujan, s2beta_closed, s2beta_theta,
    s_alpha_hypergeometric_series, s_family, s_integral_reps, sqrt_log_integral, sqrt_log_integral_closed,
    st_clausen_part, st_closed, st_series, tan_integral_clausen, theta_of_a, trig_integral_quad,
    bernoulli_trig_sums,
)
from .logtrig import (
    IMAG_RESIDUE_MAX, IntegralCheck, TRIG_WEIGHT_KINDS, catalan_from_half_pfq, cos_difference_log_integral,
    half_pfq_closed, half_pfq_log_sine_sum, hyperbolic_closed, hyperbolic_integrals, hyperbolic_limit,
    hyperbolic_minus_angular, hyperbolic_plus_algebraic, j_integral_check, j_parameters,
    lobachevsky_pi_sixth_trigamma, lobachevsky_shifted, log_kernel_check, log_kernel_integral,
    log_kernel_series, log_ratio_angle_integral, log_ratio_tail_closed, log_ratio_tail_integral,
    log_sine_power_integral, psi_closed, psi_hypergeometric, psi_quad, sin_cosh_log_integral,
    sin_shift_log_integral, sin_square_difference_log_integral, triangular_entropy, trig_weight_integral,
    x_over_shifted_sin, x_over_sin_plus_a, x_over_tan_plus_a, x_over_tan_plus_a_candidates,
    x_over_tan_plus_a_closed,
)
from .numkit import Accumulator, alternating_sum, bernoulli_fraction, constants
from .quad import QuadResult, gauss_kronrod, integrate_semi_infinite, quad
from .specfun import (
    chi2, cl2, cl2_integral, cl2_sine_series, elliptic_k_agm, i_xu, i_xu_quad, legendre_all, legendre_p,
    lerch_phi, li2, li2_im_polar, lobachevsky, lobachevsky_quad, lsn, pfq_series, polygamma, ti2,
)

PI = math.pi
LN2 = math.log(2.0)
SQRT2 = math.sqrt(2.0)
SQRT3 = math.sqrt(3.0)

SERIES_TOL = 1e-12
QUAD_TOL = 1e-9
BOUNDARY_MARGIN = 1e-3
DEFAULT_SAMPLES = 5

Params = Mapping[str, Any]
Evaluator = Callable[[Params], float]


class Policy(Enum):
    ASSERT = "ASSERT"
    DISCREPANCY = "DISCREPANCY"


# ---------------------------------------------------------------------------
# Sampling

@dataclass(frozen=True)
class Sampler:
    """All fixed points first, then seeded draws until at least `count` points exist."""

    fixed: tuple[Params, ...] = ()
    draw: Callable[[random.Random], Params] | None = None
    count: int = DEFAULT_SAMPLES

    def points(self, rng: random.Random) -> list[dict]:
        pts = [dict(p) for p in self.fixed]
        while len(pts) < self.count:
            if self.draw is None:
                pts.append(dict(self.fixed[len(pts) % len(self.fixed)]))
            else:
                pts.append(dict(self.draw(rng)))
        return pts


def uniform(rng: random.Random, lo: float, hi: float) -> float:
    """A draw from [lo, hi] kept BOUNDARY_MARGIN away from both ends."""
    return rng.uniform(lo + BOUNDARY_MARGIN, hi - BOUNDARY_MARGIN)


def _cases(*names: str, **common) -> Sampler:
    return Sampler(tuple({"case": n, **common} for n in names))


# ---------------------------------------------------------------------------
# Records

@dataclass(frozen=True)
class Identity:
    id: str
    description: str
    paper_ref: str
    lhs: Evaluator
    rhs: Evaluator
    sampler: Sampler
    tolerance: float = SERIES_TOL
    policy: Policy = Policy.ASSERT
    # DISCREPANCY records only: each named candidate for the right side
    candidates: tuple[tuple[str, Evaluator], ...] = ()

    def __post_init__(self):
        if not self.tolerance > 0:
            raise ValueError(f"{self.id}: tolerance must be positive")
        if self.policy is Policy.DISCREPANCY and not self.candidates:
            raise ValueError(f"{self.id}: a discrepancy record needs candidate forms")

    @property
    def group(self) -> str:
        return self.id.rstrip("abcdefghijklmnopqrstuvwxyz")


@dataclass(frozen=True)
class SampleCheck:
    inputs: dict
    lhs_value: float | None
    rhs_value: float | None
    abs_err: float
    rel_err: float
    within_tol: bool


@dataclass(frozen=True)
class IdentityResult:
    id: str
    description: str
    paper_ref: str
    policy: Policy
    status: str
    tolerance: float
    samples: tuple[SampleCheck, ...]
    message: str = ""
    resolution: dict | None = None
    wall_ms: int = 0

    @property
    def max_abs_err(self) -> float:
        return max((s.abs_err for s in self.samples), default=0.0)


@dataclass(frozen=True)
class Report:
    seed: int
    tol_scale: float
    identities: tuple[IdentityResult, ...] = field(default_factory=tuple)
    wall_ms: int = 0

    @property
    def assert_failures(self) -> list[IdentityResult]:
        return [r for r in self.identities if r.policy is Policy.ASSERT and r.status != "pass"]

    @property
    def ok(self) -> bool:
        return not self.assert_failures


@lru_cache(maxsize=1)
def _refs() -> dict:
    text = resources.files("clausenkit").joinpath("data/refs.json").read_text(encoding="utf-8")
    return json.loads(text)


def equation_manifest() -> list[str]:
    """Every equation label the catalog is expected to cover."""
    return list(_refs()["manifest"])


# ---------------------------------------------------------------------------
# Evaluator helpers

def _paired(fn: Callable[[Params], tuple[float, float]]) -> tuple[Evaluator, Evaluator]:
    """Split a function returning (lhs, rhs) into two evaluators sharing one call."""
    memo: dict = {}

    def run(p):
        key = json.dumps(p, sort_keys=True, default=str)
        if memo.get("key") != key:
            memo["key"] = key
            memo["value"] = fn(p)
        return memo["value"]

    return (lambda p: run(p)[0]), (lambda p: run(p)[1])


def _q(r: QuadResult) -> float:
    if not r.converged:
        raise ArithmeticError(f"quadrature did not converge (estimate {r.err_estimate:.3g})")
    return r.value


def _check(c: IntegralCheck) -> tuple[float, float]:
    if c.imag_residue > IMAG_RESIDUE_MAX:
        raise ArithmeticError(f"closed form left an imaginary residue {c.imag_residue:.3g}")
    return _q(c.lhs), c.rhs


def _checked(fn: Callable[[Params], IntegralCheck]) -> tuple[Evaluator, Evaluator]:
    return _paired(lambda p: _check(fn(p)))


def _g() -> float:
    return constants().catalan


def _cl2(x: float) -> float:
    return cl2(x).value


def _tail_integral(f: Callable[[float], float], a: float, tol: float = 1e-12) -> float:
    return _q(integrate_semi_infinite(f, a, tol))


def _x_over_root(z: float, power: int = 1) -> Callable[[float], float]:
    # x^power / sqrt(e^(2x) - z), written to avoid overflow for large x
    def f(x):
        if x == 0.0:
            return 0.0 if power > 0 or z < 1 else math.inf
        if x > 300:
            return math.exp(power * math.log(x) - x)
        d = math.expm1(2 * x) + (1 - z)
        return x ** power / math.sqrt(d)
    return f


def _pfq_half(k: int, z: float) -> float:
    return pfq_series([0.5] * (k + 1), [1.5] * k, z).value


def _series(term: Callable[[int], float], start: int = 0, rtol: float = 1e-18, n_max: int = 200000) -> float:
    acc = Accumulator()
    small = 0
    for n in range(start, n_max):
        t = term(n)
        acc.add(t)
        small = small + 1 if abs(t) <= rtol * max(abs(acc.value), 1e-300) else 0
        if small >= 3:
            return acc.value
    raise ArithmeticError("series did not reach its tolerance")


# ---------------------------------------------------------------------------
# I-01: four definitions of Cl2

def _cl2_atan_form(theta: float) -> float:
    s, c = math.sin(theta), math.cos(theta)
    return _q(quad(lambda x: math.atan(x * s / (1 - x * c)) / x if x else s, 0.0, 1.0, 1e-12))


def _cl2_log_kernel_form(theta: float) -> float:
    s, c = math.sin(theta), math.cos(theta)
    r = quad(lambda x: math.log(x) / (x * x - 2 * x * c + 1) if x else 0.0, 0.0, 1.0, 1e-12, singular=True)
    return -s * _q(r)


def _theta_sampler(lo=0.0, hi=2 * PI, fixed=(PI / 2, PI / 3, 2.0)) -> Sampler:
    return Sampler(tuple({"theta": t} for t in fixed), lambda rng: {"theta": uniform(rng, lo, hi)})


def _group_01() -> list[Identity]:
    return [
        Identity("I-01a", "Cl2 equals minus the integral of ln|2 sin(t/2)|", "",
                 lambda p: _cl2(p["theta"]), lambda p: _q(cl2_integral(p["theta"], 1e-12)),
                 _theta_sampler(), QUAD_TOL),
        Identity("I-01b", "Cl2 as the arctangent integral over [0, 1]", "",
                 lambda p: _cl2(p["theta"]), lambda p: _cl2_atan_form(p["theta"]),
                 _theta_sampler(0.1, 2 * PI - 0.1), QUAD_TOL),
        Identity("I-01c", "Cl2 as -sin(theta) times the log-kernel integral", "",
                 lambda p: _cl2(p["theta"]), lambda p: _cl2_log_kernel_form(p["theta"]),
                 _theta_sampler(0.1, 2 * PI - 0.1), QUAD_TOL),
        Identity("I-01d", "Cl2 as [Li2(e^(i theta)) - Li2(e^(-i theta))]/(2i), any real theta", "",
                 lambda p: _cl2(p["theta"]),
                 lambda p: ((li2(cmath.exp(1j * p["theta"])) - li2(cmath.exp(-1j * p["theta"]))) / 2j).real,
                 _theta_sampler(-2 * PI, 4 * PI, (PI / 2, -1.0, 7.5))),
        Identity("I-01e", "Cl2 against 20000 terms of its sine series (Abel tail below 1e-8)", "",
                 lambda p: _cl2(p["theta"]), lambda p: cl2_sine_series(p["theta"], 20000).value,
                 _theta_sampler(0.6, 2 * PI - 0.6), 1e-8),
    ]


# ---------------------------------------------------------------------------
# I-02: C(1,1) by every route

_CLOSED_ROUTES: dict[str, Callable[[], float]] = {
    "clausen": lambda: _ctet.ctet_clausen().value,
    "clausen_omega": lambda: _ctet.ctet_clausen_omega().value,
    "clausen_shifted": lambda: _ctet.ctet_clausen_shifted().value,
    "srp": lambda: _ctet.ctet_srp().value,
    "srp_consolidated": lambda: _ctet.ctet_srp_consolidated().value,
}


def _rajantie_partial_fractions(tol: float) -> float:
    r = gauss_kronrod(_ctet.rajantie_partial_fraction_integrand, 0.0, 1.0, tol)
    return 4 * SQRT2 * _q(r)


_QUAD_ROUTES: dict[str, Callable[[], float]] = {
    "rajantie": lambda: _ctet.ctet_rajantie(1e-12).value,
    "rajantie_coarse": lambda: _ctet.ctet_rajantie(1e-10).value,
    "partial_fractions": lambda: _rajantie_partial_fractions(1e-12),
    "partial_fractions_coarse": lambda: _rajantie_partial_fractions(1e-10),
    "j_decomposition": lambda: 4 * SQRT2 * _ctet.rajantie_decomposition()["total"],
}


def _group_02() -> list[Identity]:
    return [
        Identity("I-02a", "C(1,1) series equals its Clausen and SRP closed forms", "",
                 lambda p: _ctet.ctet_series().value, lambda p: _CLOSED_ROUTES[p["route"]](),
                 Sampler(tuple({"route": r} for r in _CLOSED_ROUTES))),
        Identity("I-02b", "C(1,1) series equals its quadrature routes", "",
                 lambda p: _ctet.ctet_series().value, lambda p: _QUAD_ROUTES[p["route"]](),
                 Sampler(tuple({"route": r} for r in _QUAD_ROUTES)), QUAD_TOL),
    ]


# ---------------------------------------------------------------------------
# I-03: S(2,2) and the integral representations of S(alpha, beta)

def _s22_route(p: Params) -> float:
    if p["route"] == "general_beta":
        return s2beta_closed(2.0)
    return s22_closed_forms()[p["index"]]


def _alpha_beta(rng: random.Random, alpha=(1.2, 4.0), beta=(1.3, 4.0), signed=True) -> dict:
    b = uniform(rng, *beta)
    if signed and rng.random() < 0.5:
        b = -b
    return {"alpha": uniform(rng, *alpha), "beta": b}


def _route_value(p: Params, route: str) -> float:
    spec = SumSpec(p["alpha"], p["beta"], p.get("j", 1), p.get("r", 1), p.get("p", 1), p.get("q", 0))
    (rv,) = s_integral_reps(spec, only=(route,))
    if not rv.converged:
        raise ArithmeticError(f"{route} quadrature did not converge")
    return rv.value.value


def _direct_s(p: Params) -> float:
    return s_family(SumSpec(p["alpha"], p["beta"], p.get("j", 1), p.get("r", 1),
                            p.get("p", 1), p.get("q", 0))).value


def _route_record(id_: str, description: str, route: str, draw, fixed=({"alpha": 2.0, "beta": 2.0},),
                  tol=QUAD_TOL) -> Identity:
    return Identity(id_, description, "", _direct_s, lambda p: _route_value(p, route),
                    Sampler(tuple(fixed), draw), tol)


def _group_03() -> list[Identity]:
    s22 = tuple({"route": name, "index": i} for i, name in
                enumerate(("clausen", "dilog_conjugate", "dilog_shifted", "ramanujan")))
    return [
        Identity("I-03a", "S(2,2) direct sum equals its closed forms", "",
                 lambda p: s_family(SumSpec(2.0, 2.0)).value, _s22_route,
                 Sampler(s22 + ({"route": "general_beta", "index": -1},))),
        Identity("I-03b", "S(alpha,beta) as a 2F1-difference integral and as an incomplete Beta integral", "",
                 _direct_s, lambda p: _route_value(p, p["route"]),
                 Sampler(({"alpha": 2.0, "beta": 2.0, "route": "hypergeometric_kernel"},
                          {"alpha": 2.0, "beta": 2.0, "route": "incomplete_beta"}),
                         lambda rng: {**_alpha_beta(rng),
                                      "route": rng.choice(("hypergeometric_kernel", "incomplete_beta"))}),
                 QUAD_TOL),
        _route_record("I-03c", "S(alpha,beta) as a Laplace-type integral over [0, 1]", "laplace", _alpha_beta),
        _route_record("I-03d", "S(alpha,beta) from the integrated ln^2(1-z) generating function",
                      "log_squared", _alpha_beta),
        Identity("I-03e", "int_0^w ln(1-z)/(sqrt(z)(1-z)) dz in dilogarithms of (1 -+ sqrt w)/2", "",
                 lambda p: _q(sqrt_log_integral(p["w"])), lambda p: sqrt_log_integral_closed(p["w"]).real,
                 Sampler(({"w": 0.5},), lambda rng: {"w": uniform(rng, 0.0, 1.0)}), QUAD_TOL),
        _route_record("I-03f", "S(alpha,beta) through the free-parameter representation at t = 2",
                      "free_parameter", _alpha_beta),
        Identity("I-03g", "Nielsen's harmonic-sum integral for sum H_n x^n/(n+1/2)", "",
                 lambda p: nielsen_direct(p["x"]).value, lambda p: _q(nielsen_integral(p["x"])),
                 Sampler(({"x": -0.125},), lambda rng: {"x": uniform(rng, -0.9, 0.9)}), QUAD_TOL),
        Identity("I-03h", "closed antiderivative of Nielsen's f", "",
                 lambda p: _q(quad(nielsen_f, 0.0, p["x"], 1e-12)), lambda p: nielsen_f_antiderivative(p["x"]),
                 Sampler(({"x": -0.125},), lambda rng: {"x": uniform(rng, -0.9, 0.9)}), QUAD_TOL),
        Identity("I-03i", "(1-z) sum H_n z^n = -ln(1-z)", "",
                 lambda p: (1 - p["z"]) * harmonic_gf(p["z"]).value, lambda p: -math.log1p(-p["z"]),
                 Sampler(({"z": 0.5},), lambda rng: {"z": uniform(rng, -0.9, 0.9)})),
        Identity("I-03j", "sum H_n z^(n+1)/(n+1) = ln^2(1-z)/2", "",
                 lambda p: harmonic_gf_integrated(p["z"]).value, lambda p: 0.5 * math.log1p(-p["z"]) ** 2,
                 Sampler(({"z": 0.5},), lambda rng: {"z": uniform(rng, -0.9, 0.9)})),
    ]


# ---------------------------------------------------------------------------
# I-04: Phi(-r^2, 2, 1/2), chi2 and Li2 of imaginary argument

def _phi_clausen(r: float) -> float:
    w = math.atan(r)
    return 4 / r * (w * math.log(r) + 0.5 * (_cl2(2 * w) - _cl2(2 * w + PI)))


def _phi_dilog_form(p: Params) -> float:
    r = p["r"]
    z = 1j * r
    if p["form"] == "chi2":
        return (4 / z * chi2(z)).real
    return (2 / z * (li2(z) - li2(-z))).real


def _log_over_root_integral(y: float) -> float:
    r = quad(lambda s: math.log(s) / ((1 + s) * math.sqrt(s)) if s else 0.0, 0.0, y, 1e-12, singular=True)
    return _q(r)


def _log_over_root_series(y: float) -> float:
    return math.sqrt(y) * (-lerch_phi(-y, 2, 0.5).real + math.log(y) * lerch_phi(-y, 1, 0.5).real)


R_TAN_OMEGA = 1 / (2 * SQRT2)


def _group_04() -> list[Identity]:
    r_draw = lambda rng: {"r": uniform(rng, 0.0, 1.0)}
    return [
        Identity("I-04a", "Phi(-r^2, 2, 1/2) in Clausen form with omega = atan r", "",
                 lambda p: lerch_phi(-p["r"] ** 2, 2, 0.5).real, lambda p: _phi_clausen(p["r"]),
                 Sampler(({"r": R_TAN_OMEGA},), r_draw)),
        Identity("I-04b", "Phi(-r^2, 2, 1/2) = (4/z) chi2(z) = (2/z)[Li2(z) - Li2(-z)] at z = i r", "",
                 lambda p: lerch_phi(-p["r"] ** 2, 2, 0.5).real, _phi_dilog_form,
                 Sampler(({"r": R_TAN_OMEGA, "form": "chi2"}, {"r": R_TAN_OMEGA, "form": "li2"}),
                         lambda rng: {**r_draw(rng), "form": rng.choice(("chi2", "li2"))})),
        Identity("I-04c", "Im Li2(r e^(i theta)) in Clausen form", "",
                 lambda p: li2(p["r"] * cmath.exp(1j * p["theta"])).imag,
                 lambda p: li2_im_polar((p["r"], p["theta"])),
                 Sampler(({"r": R_TAN_OMEGA, "theta": PI / 2}, {"r": R_TAN_OMEGA, "theta": -PI / 2}),
                         lambda rng: {"r": uniform(rng, 0.0, 3.0), "theta": uniform(rng, -PI, PI)})),
        Identity("I-04d", "chi2(x) as the integral of atanh(t)/t", "",
                 lambda p: chi2(p["x"]).real,
                 lambda p: _q(quad(lambda t: math.atanh(t) / t if t else 1.0, 0.0, p["x"], 1e-12, singular=True)),
                 Sampler(({"x": 0.5},), lambda rng: {"x": uniform(rng, -1.0, 1.0)}), QUAD_TOL),
        Identity("I-04e", "chi2(x) as half the integral of atanh(sqrt u)/u over [0, x^2]", "",
                 lambda p: chi2(p["x"]).real,
                 lambda p: 0.5 * _q(quad(lambda u: math.atanh(math.sqrt(u)) / u if u else 1.0, 0.0, p["x"] ** 2,
                                         1e-12, singular=True)),
                 Sampler(({"x": 0.5},), lambda rng: {"x": uniform(rng, 0.0, 1.0)}), QUAD_TOL),
        Identity("I-04f", "int_0^y ln s/((1+s) sqrt s) ds by termwise power integration", "",
                 lambda p: _log_over_root_integral(p["y"]), lambda p: _log_over_root_series(p["y"]),
                 Sampler(({"y": 0.125},), lambda rng: {"y": uniform(rng, 0.0, 1.0)}), QUAD_TOL),
    ]


# ---------------------------------------------------------------------------
# I-05: the simple subsum (discrepancy) and the assembly of C(1,1)

def _subsum(p: Params) -> float:
    method = p["method"]
    if method == "lerch":
        return lerch_phi(-0.125, 1, 0.5).real
    if method == "direct":
        return _series(lambda n: (-0.125) ** n / (n + 0.5))
    if method == "accelerated":
        return alternating_sum(lambda n: 0.125 ** n / (n + 0.5), 30)
    if method == "quadrature":
        return 2 * _q(gauss_kronrod(lambda t: 1 / (1 + t * t / 8), 0.0, 1.0, 1e-13))
    return 2 * pfq_series([1.0, 0.5], [1.5], -0.125).value


def _group_05() -> list[Identity]:
    om = constants().omega
    printed = lambda p: 2 * (2 * SQRT2 * om - 1)
    derived = lambda p: 4 * SQRT2 * om
    return [
        Identity("I-05a", "sum (-1/8)^n/(n+1/2): printed value against the summed value", "",
                 _subsum, printed,
                 Sampler(tuple({"method": m} for m in ("lerch", "direct", "accelerated", "quadrature",
                                                       "hypergeometric"))),
                 SERIES_TOL, Policy.DISCREPANCY, (("printed", printed), ("four_root2_omega", derived))),
        Identity("I-05b", "Cl2(2w) + 2 Cl2(2w + pi) = Cl2(4w) - Cl2(2w)", "",
                 lambda p: _cl2(2 * p["w"]) + 2 * _cl2(2 * p["w"] + PI),
                 lambda p: _cl2(4 * p["w"]) - _cl2(2 * p["w"]),
                 Sampler(({"w": om},), lambda rng: {"w": uniform(rng, -PI, PI)})),
        Identity("I-05c", "duplication: Cl2(2 theta)/2 = Cl2(theta) - Cl2(pi - theta)", "",
                 lambda p: 0.5 * _cl2(2 * p["theta"]), lambda p: _cl2(p["theta"]) - _cl2(PI - p["theta"]),
                 _theta_sampler(-2 * PI, 2 * PI)),
    ]


# ---------------------------------------------------------------------------
# I-06: generalized S-sums

def _gf_draw(rng):
    r = rng.randint(1, 3)
    # the order-3 polylogarithm is only evaluated for |z| <= 1/2
    lim = 0.5 if r == 3 else 0.9
    return {"z": uniform(rng, -lim, lim), "r": r}


def _group_06() -> list[Identity]:
    def pq_draw(rng):
        return {**_alpha_beta(rng), "p": rng.randint(1, 3), "q": rng.randint(0, 2)}

    def jr_draw(rng):
        return {**_alpha_beta(rng), "j": rng.randint(1, 3), "r": rng.randint(1, 3)}

    def r_draw(rng):
        return {**_alpha_beta(rng), "r": rng.randint(1, 3)}

    return [
        _route_record("I-06a", "sum over H_(pn+q) as a 2F1-difference integral", "hypergeometric_kernel",
                      pq_draw, ({"alpha": 2.0, "beta": 2.0, "p": 2, "q": 1},)),
        Identity("I-06b", "generalized harmonic numbers through polygamma differences", "",
                 lambda p: float(harm_exact(p["n"], p["r"])), lambda p: harm_polygamma(p["n"], p["r"]),
                 Sampler(({"n": 10, "r": 3},), lambda rng: {"n": rng.randint(1, 500), "r": rng.randint(1, 5)})),
        _route_record("I-06c", "S_j(alpha,beta,r) as a Lerch-difference integral with ln^(r-1) t", "lerch_kernel",
                      jr_draw, ({"alpha": 2.0, "beta": 2.0, "j": 2, "r": 2},)),
        Identity("I-06d", "sum H_n^(r) z^n = Li_r(z)/(1-z)", "",
                 lambda p: harmonic_gf(p["z"], p["r"]).value, lambda p: harmonic_gf_closed(p["z"], p["r"]),
                 Sampler(({"z": 0.5, "r": 2},), _gf_draw)),
        _route_record("I-06e", "S_1(alpha,beta,r) as the integral of z^(1/alpha-1) Li_r(z)/(1-z)",
                      "polylog_kernel", r_draw, ({"alpha": 2.0, "beta": 2.0, "r": 2},)),
    ]


# ---------------------------------------------------------------------------
# I-07: s(x) and t(x)

def _group_07() -> list[Identity]:
    x_draw = lambda rng: {"x": uniform(rng, 0.0, 1.0)}
    fixed = ({"x": 0.125},)
    return [
        Identity("I-07a", "s(x) = sum (-x)^(n+1/2) H_2n/(n+1/2) in closed form", "",
                 lambda p: st_series(p["x"])[0].imag, lambda p: st_closed(p["x"])[0].imag,
                 Sampler(fixed, x_draw)),
        Identity("I-07b", "t(x) = sum (-x)^(n+1/2) H_(2n+1)/(n+1/2) in closed form", "",
                 lambda p: st_series(p["x"])[1].imag, lambda p: st_closed(p["x"])[1].imag,
                 Sampler(fixed, x_draw)),
        Identity("I-07c", "-i[Li2(i sqrt x) - Li2(-i sqrt x)] in Clausen form", "",
                 lambda p: (-1j * (li2(1j * math.sqrt(p["x"])) - li2(-1j * math.sqrt(p["x"])))).real,
                 lambda p: st_clausen_part(p["x"]),
                 Sampler(fixed, x_draw)),
    ]


# ---------------------------------------------------------------------------
# I-08: Legendre-polynomial series

def _legendre_chebyshev_moment(m: int) -> float:
    # int_{-1}^{1} P_2m(x)/sqrt(1-x^2) dx = int_0^pi P_2m(cos t) dt
    return _q(gauss_kronrod(lambda t: legendre_p(2 * m, math.cos(t)), 0.0, PI, 1e-13))


_LEGENDRE_CONSTANTS = {
    "even_odd_ratio_sum": (lambda: even_legendre_ratio_sum().value, lambda: 2 * LN2 - 1),
    "even_odd_ratio_hypergeometric": (lambda: pochhammer_square_sum_hyper(0.5, 1.0).value, lambda: 2 * LN2 - 1),
    "even_half": (lambda: catalan_split_sums()[0].value, lambda: PI * LN2 - 2 * _g()),
    "odd_half": (lambda: catalan_split_sums()[1].value, lambda: 2 * _g() - PI / 2),
    "central_value_sum": (lambda: legendre_zero_sum_limit().value, lambda: LN2 - 1),
}

_ELLIPTIC_CONSTANTS = {
    "even_half": (lambda: _q(catalan_split_elliptic(1e-12)[0]), lambda: PI * LN2 - 2 * _g()),
    "odd_half": (lambda: _q(catalan_split_elliptic(1e-12)[1]), lambda: 2 * _g() - PI / 2),
    "k_unit_integral": (lambda: _q(elliptic_k_unit_integral(1e-12)), lambda: 2.0),
    "even_half_coarse": (lambda: _q(catalan_split_elliptic(1e-10)[0]), lambda: PI * LN2 - 2 * _g()),
    "odd_half_coarse": (lambda: _q(catalan_split_elliptic(1e-10)[1]), lambda: 2 * _g() - PI / 2),
}


def _constant_record(id_, description, table, tol=SERIES_TOL) -> Identity:
    return Identity(id_, description, "", lambda p: table[p["case"]][0](), lambda p: table[p["case"]][1](),
                    _cases(*table), tol)


def _k_weighted_sum(x: float, a: float, b: float) -> float:
    def term(k):
        c = central_binomial_ratio(k)
        return c * x ** k / (k * a + b)
    return _series(term)


def _k_weighted_integral(x: float, a: float, b: float) -> float:
    e = b / a
    r = quad(lambda t: t ** (e - 1) * elliptic_k_agm(math.sqrt(t)) if t else (0.0 if e > 1 else math.inf),
             0.0, x, 1e-12, singular=True)
    return 2 / (PI * a) * x ** -e * _q(r)


def _group_08() -> list[Identity]:
    return [
        # at N = 200 the truncation error measures under 6e-6 on [0.5, pi - 0.1]; it grows toward 0
        Identity("I-08a", "Cl2 from 200 terms of the Legendre series", "",
                 lambda p: cl2_legendre_series(p["theta"], 200).value, lambda p: _cl2(p["theta"]),
                 _theta_sampler(0.5, PI - 0.1, (PI / 2, 1.0)), 1e-5),
        Identity("I-08b", "int_0^theta P_n(cos t) dt by quadrature and by its Fourier form", "",
                 lambda p: legendre_cos_integrals(p["theta"], p["n"])[p["n"]],
                 lambda p: legendre_cos_integral_fourier(p["n"], p["theta"]),
                 Sampler(({"theta": PI / 2, "n": 4},),
                         lambda rng: {"theta": uniform(rng, 0.0, PI), "n": rng.randint(1, 30)}), QUAD_TOL),
        Identity("I-08c", "int P_2m(x)/sqrt(1-x^2) over [-1, 1] = (Gamma(m+1/2)/m!)^2", "",
                 lambda p: _legendre_chebyshev_moment(p["m"]),
                 lambda p: (math.gamma(p["m"] + 0.5) / math.factorial(p["m"])) ** 2,
                 Sampler(({"m": 1},), lambda rng: {"m": rng.randint(0, 20)}), QUAD_TOL),
        Identity("I-08d", "sum (1/(2m) + 1/(2m+1))((a)_m/(b)_m)^2 as two unit-argument 4F3 values", "",
                 lambda p: pochhammer_square_sum_direct(p["a"], p["b"]).value,
                 lambda p: pochhammer_square_sum_hyper(p["a"], p["b"]).value,
                 Sampler(({"a": 0.5, "b": 1.0},),
                         lambda rng: (lambda a: {"a": a, "b": a + uniform(rng, 0.5, 2.0)})(uniform(rng, 0.1, 1.5))),
                 1e-10),
        _constant_record("I-08e", "unit-argument Legendre and Pochhammer sums in closed form", _LEGENDRE_CONSTANTS),
        _constant_record("I-08f", "the same sums from elliptic-K integrals", _ELLIPTIC_CONSTANTS, QUAD_TOL),
        Identity("I-08g", "sum ((1/2)_k/k!)^2 x^k/(ka+b) as an integral of K", "",
                 lambda p: _k_weighted_sum(p["x"], p["a"], p["b"]),
                 lambda p: _k_weighted_integral(p["x"], p["a"], p["b"]),
                 Sampler((), lambda rng: {"x": uniform(rng, 0.0, 0.9), "a": uniform(rng, 0.5, 2.0),
                                          "b": uniform(rng, 0.5, 2.0)}), QUAD_TOL),
        Identity("I-08h", "(2/pi) K(k) = 2F1(1/2, 1/2; 1; k^2)", "",
                 lambda p: 2 / PI * elliptic_k_agm(p["k"]),
                 lambda p: pfq_series([0.5, 0.5], [1.0], p["k"] ** 2).value,
                 Sampler(({"k": 1 / SQRT2},), lambda rng: {"k": uniform(rng, 0.0, 0.95)})),
        Identity("I-08i", "Li2 from 150 terms of the Legendre series (period-averaged, bound 1/N^2)", "",
                 lambda p: li2_legendre_series(p["z"], 150).value, lambda p: li2(p["z"]).real,
                 Sampler(({"z": -1.0}, {"z": 0.5}), lambda rng: {"z": uniform(rng, -1.0, 1.0)}), 5e-5),
        Identity("I-08j", "P_2n(0) = (-1)^n (2n-1)!!/(2^n n!)", "",
                 lambda p: legendre_p(2 * p["n"], 0.0), lambda p: float(legendre_p0(2 * p["n"])),
                 Sampler(({"n": 3},), lambda rng: {"n": rng.randint(0, 40)})),
    ]


# ---------------------------------------------------------------------------
# I-09: Legendre moment series and the exact moment layer

def _atanh_legendre(x: float) -> float:
    n = 600
    ps = legendre_all(n, x)
    acc = Accumulator()
    xp = x
    for k in range(n + 1):
        acc.add(xp * ps[k] / (k + 1))
        xp *= x
    return acc.value


_INITIAL_VALUES = {
    "I0_0": ((0, 0), lambda: PI / 4),
    "I1_0": ((0, 1), lambda: 1 - PI / 4),
    "I0_1": ((1, 0), lambda: 0.5 * LN2),
    "I1_1": ((1, 1), lambda: 0.5 * (1 - LN2)),
}


def _initial_value(p: Params) -> tuple[float, float]:
    if p["case"] == "unit_moment":
        k = p["k"]
        return float(legendre_moment(k, k + 1) * 2 ** (k + 1)), 1.0
    (j, k), rhs = _INITIAL_VALUES[p["case"]]
    return ik_exact(j, k).to_float(), rhs()


def _group_09() -> list[Identity]:
    a_fixed = ({"a": 1.0}, {"a": 2 * SQRT2})
    iv_l, iv_r = _paired(_initial_value)
    return [
        Identity("I-09a", "Cl2(theta(a)) from Legendre moments of v^(k+1)/(1+v^2)", "",
                 lambda p: cl2_legendre_moment_series(p["a"], 80).value, lambda p: _cl2(theta_of_a(p["a"])),
                 Sampler(a_fixed, lambda rng: {"a": uniform(rng, 0.2, 3.0)})),
        Identity("I-09b", "Cl2(theta(a)) = int_a^inf ln((u+a)/(u-a)) du/(1+u^2)", "",
                 lambda p: _q(log_ratio_angle_integral(p["a"], p["a"], 1e-10)), lambda p: _cl2(theta_of_a(p["a"])),
                 Sampler(a_fixed, lambda rng: {"a": uniform(rng, 0.2, 3.0)}), QUAD_TOL),
        Identity("I-09c", "sum x^(k+1) P_k(x)/(k+1) = atanh x", "",
                 lambda p: _atanh_legendre(p["x"]), lambda p: math.atanh(p["x"]),
                 Sampler(({"x": 0.5},), lambda rng: {"x": uniform(rng, -0.9, 0.9)})),
        Identity("I-09d", "exact moments I_k^(j) = a + b pi or a + b ln2 against quadrature", "",
                 lambda p: ik_exact(p["j"], p["k"]).to_float(), lambda p: ik_quad(p["j"], p["k"]),
                 Sampler(({"j": 0, "k": 12}, {"j": 1, "k": 12}),
                         lambda rng: {"j": rng.randint(0, 1), "k": rng.randint(0, 12)})),
        Identity("I-09e", "the four initial moments and int_0^1 v^(k+1) P_k = 2^-(k+1)", "",
                 iv_l, iv_r,
                 Sampler(tuple({"case": c} for c in _INITIAL_VALUES),
                         lambda rng: {"case": "unit_moment", "k": rng.randint(0, 12)})),
        Identity("I-09f", "odd and even moments as 3F2 values at -1", "",
                 lambda p: ik_exact(1, p["k"]).to_float(), lambda p: ik_hypergeometric(p["k"]).value,
                 Sampler(({"k": 4}, {"k": 5}), lambda rng: {"k": rng.randint(0, 12)})),
    ]


# ---------------------------------------------------------------------------
# I-10: the log-sine generating function I(x, u)

def _rational_angle(p: Params) -> tuple[float, float]:
    case = p["case"]
    t13 = (polygamma(1, 1 / 3) - 2 * PI * PI / 3) / (2 * SQRT3)
    if case == "catalan_trigamma":
        return _g(), (polygamma(1, 0.25) - PI * PI) / 8
    if case == "pi_third_trigamma":
        return _cl2(PI / 3), t13
    if case == "two_pi_third_trigamma":
        return _cl2(2 * PI / 3), 2 * t13 / 3
    if case == "catalan_cos_half":
        return cl2_cos_half_series(PI / 2).value, _g()
    return cl2_cos_half_series(PI / 3).value, t13


def _log_sine_expansion(x: float, u: float) -> float:
    acc = Accumulator()
    for n in range(6):
        acc.add(x ** n / math.factorial(n) * lsn(n + 1, u).value)
    return -acc.value


def _odd_reciprocal(p: Params) -> tuple[float, float]:
    j = p["j"]
    lhs = float(odd_reciprocal_sum(j))
    if p["form"] == "harmonic":
        return lhs, float(odd_reciprocal_harmonic(j))
    return lhs, polygamma(0, j + 0.5) - polygamma(0, 0.5)


def _group_10() -> list[Identity]:
    u_draw = lambda rng: {"u": uniform(rng, 0.0, 2 * PI)}
    u_fixed = ({"u": PI / 2}, {"u": PI / 3})
    ra_l, ra_r = _paired(_rational_angle)
    od_l, od_r = _paired(_odd_reciprocal)
    h = 1e-4
    return [
        # 300 terms leave a c^600 tail, c = cos(u/2), so stay where |c| <= cos(1/2)
        Identity("I-10a", "Cl2(u) from 300 terms of the cos(u/2) power series with odd reciprocal sums", "",
                 lambda p: cl2_cos_half_series(p["u"]).value, lambda p: _cl2(p["u"]),
                 Sampler(u_fixed, lambda rng: {"u": uniform(rng, 1.0, 2 * PI - 1.0)})),
        Identity("I-10b", "Clausen values at rational angles through trigamma", "", ra_l, ra_r,
                 _cases("catalan_trigamma", "pi_third_trigamma", "two_pi_third_trigamma", "catalan_cos_half",
                        "pi_third_cos_half")),
        Identity("I-10c", "I(x,u) = int_0^u (2 sin(t/2))^x dt in Gamma and 2F1 form", "",
                 lambda p: i_xu(p["x"], p["u"]), lambda p: _q(i_xu_quad(p["x"], p["u"])),
                 Sampler(({"x": 0.5, "u": PI / 2},),
                         lambda rng: {"x": uniform(rng, -0.5, 1.0), "u": uniform(rng, 0.0, 2 * PI)}), QUAD_TOL),
        Identity("I-10d", "I(x,u) as -sum x^n Ls_(n+1)(u)/n! for small x (six terms)", "",
                 lambda p: i_xu(p["x"], p["u"]), lambda p: _log_sine_expansion(p["x"], p["u"]),
                 Sampler(({"x": 0.01, "u": PI / 2},),
                         lambda rng: {"x": uniform(rng, -0.02, 0.02), "u": uniform(rng, 0.0, 2 * PI)}), QUAD_TOL),
        Identity("I-10e", "central difference of I(x,u) at x = 0 equals -Cl2(u)", "",
                 lambda p: (i_xu(h, p["u"]) - i_xu(-h, p["u"])) / (2 * h), lambda p: -_cl2(p["u"]),
                 Sampler(u_fixed, lambda rng: {"u": uniform(rng, 0.1, 2 * PI - 0.1)}, count=10), 1e-6),
        Identity("I-10f", "2 sum_(k<j) 1/(2k+1) = psi(j+1/2) - psi(1/2) = 2H_(2j-1) - H_(j-1)", "", od_l, od_r,
                 Sampler(({"j": 5, "form": "harmonic"}, {"j": 5, "form": "digamma"}),
                         lambda rng: {"j": rng.randint(1, 200), "form": rng.choice(("harmonic", "digamma"))})),
        Identity("I-10g", "z 2F1(1/2, 1/2; 3/2; z^2) = asin z", "",
                 lambda p: p["z"] * pfq_series([0.5, 0.5], [1.5], p["z"] ** 2).value, lambda p: math.asin(p["z"]),
                 Sampler(({"z": 0.5},), lambda rng: {"z": uniform(rng, -0.95, 0.95)})),
        Identity("I-10h", "Cl2(u) as an integral over [0, 1] with asin terms", "",
                 lambda p: cl2_cos_half_integral(p["u"]).value, lambda p: _cl2(p["u"]),
                 Sampler(u_fixed, u_draw), QUAD_TOL),
        Identity("I-10i", "psi(j+1/2) - psi(1/2) = int_0^1 (t^(j-1/2) - t^(-1/2))/(t-1) dt", "",
                 lambda p: polygamma(0, p["j"] + 0.5) - polygamma(0, 0.5),
                 lambda p: _q(quad(lambda t: (t ** (p["j"] - 0.5) - t ** -0.5) / (t - 1) if 0 < t < 1 else 0.0,
                                   0.0, 1.0, 1e-12, singular=True)),
                 Sampler(({"j": 3},), lambda rng: {"j": rng.randint(1, 30)}), QUAD_TOL),
        Identity("I-10j", "digamma duplication 2 psi(2x) = 2 ln2 + psi(x) + psi(x+1/2)", "",
                 lambda p: 2 * polygamma(0, 2 * p["x"]),
                 lambda p: 2 * LN2 + polygamma(0, p["x"]) + polygamma(0, p["x"] + 0.5),
                 Sampler(({"x": 0.25},), lambda rng: {"x": uniform(rng, 0.1, 20.0)})),
    ]


# ---------------------------------------------------------------------------
# I-11: integrals of logarithms of trigonometric functions

def _sin_shift_draw(rng):
    alpha = uniform(rng, 0.05, PI / 2 - 0.05)
    kappa = uniform(rng, 0.3, 3.0)
    lo = max(-alpha, -alpha / kappa)
    return {"kappa": kappa, "u": uniform(rng, lo, alpha), "alpha": alpha}


def _sin_plus_a_draw(rng):
    a = uniform(rng, -0.9, 0.9)
    phi = math.asin(a)
    limit = PI + phi if a >= 0 else -phi
    return {"b": min(limit, 3.0) * rng.uniform(0.02, 0.98), "a": a}


def _tan_plus_a_draw(rng):
    a = uniform(rng, -2.0, 2.0)
    psi = math.atan(a)
    limit = PI - psi if a >= 0 else -psi
    return {"b": limit * rng.uniform(0.02, 0.98), "a": a}


def _shifted_sin_draw(rng):
    a = uniform(rng, 0.0, PI - 0.2)
    return {"b": uniform(rng, 0.0, PI - a), "a": a}


def _trig_weight_kind(rng):
    return {"b": uniform(rng, 0.0, 0.75 * PI), "kind": rng.choice(TRIG_WEIGHT_KINDS)}


_SPECIAL_TRIG = {
    "x_over_sin_half_pi": (lambda: _q(trig_integral_quad(PI / 2, "sin", 1e-10)), lambda: 2 * _g()),
    "x_over_tan_half_pi": (lambda: _q(trig_integral_quad(PI / 2, "tan", 1e-10)), lambda: PI / 2 * LN2),
    "x2_over_sin2_quarter_pi": (lambda: _q(trig_weight_integral(PI / 4, "x2/sin2", 1e-10).lhs),
                                lambda: _g() - PI / 16 * (PI - 4 * LN2)),
    "x2_over_tan2_quarter_pi": (lambda: _q(trig_weight_integral(PI / 4, "x2/tan2", 1e-10).lhs),
                                lambda: _g() - PI / 16 * (PI - 4 * LN2) - PI ** 3 / 192),
    "x_over_tan_clausen": (lambda: tan_integral_clausen(PI / 2), lambda: PI / 2 * LN2),
}


def _zeta_series(t: float) -> float:
    # 2 sum_k zeta(2k)/((2k+1)(2 pi)^(2k)) t^(2k+1), with zeta(2k)/(2pi)^(2k) = |B_2k|/(2 (2k)!)
    def term(k):
        ratio = abs(bernoulli_fraction(2 * k)) / (2 * math.factorial(2 * k))
        return float(ratio) * t ** (2 * k + 1) / (2 * k + 1)
    return 2 * _series(term, start=1)


def _tan_plus_a_lhs(p: Params) -> float:
    return _q(x_over_tan_plus_a(p["b"], p["a"]).lhs)


def _tan_candidate(name: str) -> Evaluator:
    return lambda p: x_over_tan_plus_a_candidates(p["b"], p["a"])[name]


def _group_11() -> list[Identity]:
    return [
        Identity("I-11a", "kappa int_0^u ln(sin(kappa x) + sin alpha) dx in Clausen form", "",
                 *_checked(lambda p: sin_shift_log_integral(p["kappa"], p["u"], p["alpha"])),
                 Sampler(({"kappa": 1.0, "u": 0.5, "alpha": 1.0},), _sin_shift_draw), QUAD_TOL),
        Identity("I-11b", "int_0^x ln|cos A - cos(kt)| dt in Clausen form", "",
                 *_checked(lambda p: cos_difference_log_integral(p["A"], p["k"], p["x"])),
                 Sampler(({"A": 1.0, "k": 2.0, "x": 1.5},),
                         lambda rng: {"A": uniform(rng, 0.1, 3.0), "k": uniform(rng, 0.5, 3.0),
                                      "x": uniform(rng, 0.1, 4.0)}), QUAD_TOL),
        Identity("I-11c", "int_0^x ln|sin(kt) - cosh A| dt in Clausen form", "",
                 *_checked(lambda p: sin_cosh_log_integral(p["A"], p["k"], p["x"])),
                 Sampler(({"A": 0.5 * math.log(3.0), "k": 1.0, "x": PI / 3},),
                         lambda rng: {"A": uniform(rng, 0.1, 3.0), "k": rng.choice((-1, 1)) * uniform(rng, 0.3, 3.0),
                                      "x": uniform(rng, 0.1, 4.0)}), QUAD_TOL),
        Identity("I-11d", "int_0^b of x/sin, x/tan, x^2/sin^2, x^2/tan^2 in Clausen form", "",
                 *_checked(lambda p: trig_weight_integral(p["b"], p["kind"])),
                 Sampler(tuple({"b": 1.0, "kind": k} for k in TRIG_WEIGHT_KINDS), _trig_weight_kind), QUAD_TOL),
        Identity("I-11e", "int_0^b x/(sin x + a) dx in Clausen form", "",
                 *_checked(lambda p: x_over_sin_plus_a(p["b"], p["a"])),
                 Sampler(({"b": 1.0, "a": 0.3},), _sin_plus_a_draw), QUAD_TOL),
        Identity("I-11f", "int_0^b x/(tan x + a) dx: two printed readings against a derived form", "",
                 _tan_plus_a_lhs, _tan_candidate("sum"),
                 Sampler(({"b": 0.5, "a": 0.3},), _tan_plus_a_draw), QUAD_TOL, Policy.DISCREPANCY,
                 (("sum", _tan_candidate("sum")), ("product", _tan_candidate("product")),
                  ("derived", lambda p: x_over_tan_plus_a_closed(p["b"], p["a"])))),
        Identity("I-11g", "int_0^u ln|sin^2 x - sin^2 alpha| dx in Clausen form", "",
                 *_checked(lambda p: sin_square_difference_log_integral(p["u"], p["alpha"])),
                 Sampler(({"u": 0.3, "alpha": 0.8},),
                         lambda rng: (lambda al: {"u": uniform(rng, -al, al), "alpha": al})(
                             uniform(rng, 0.05, PI / 2 - 0.05))), QUAD_TOL),
        Identity("I-11h", "int_0^b x/sin(x + a) dx in Clausen form", "",
                 *_checked(lambda p: x_over_shifted_sin(p["b"], p["a"])),
                 Sampler(({"b": 1.0, "a": 0.5},), _shifted_sin_draw), QUAD_TOL),
        Identity("I-11i", "int_0^b a/sin a da as a Bernoulli-number series", "",
                 lambda p: bernoulli_trig_sums(p["b"])[0].value, lambda p: _q(trig_integral_quad(p["b"], "sin")),
                 Sampler(({"b": PI / 2},), lambda rng: {"b": uniform(rng, 0.0, 3.0)}), QUAD_TOL),
        Identity("I-11j", "int_0^b a/tan a da: Bernoulli series against b ln(2 sin b) + Cl2(2b)/2", "",
                 lambda p: bernoulli_trig_sums(p["b"])[1].value, lambda p: tan_integral_clausen(p["b"]),
                 Sampler(({"b": PI / 2},), lambda rng: {"b": uniform(rng, 0.0, 3.0)})),
        Identity("I-11k", "int_0^b a/tan a da by quadrature against its Clausen form", "",
                 lambda p: _q(trig_integral_quad(p["b"], "tan")), lambda p: tan_integral_clausen(p["b"]),
                 Sampler(({"b": PI / 2},), lambda rng: {"b": uniform(rng, 0.0, 3.0)}), QUAD_TOL),
        _constant_record("I-11l", "the quarter- and half-pi integrals (quadrature at 1e-10, agreement 1e-12)",
                         _SPECIAL_TRIG),
        Identity("I-11m", "2 sum zeta(2k) t^(2k+1)/((2k+1)(2pi)^(2k)) = t - t ln(2 sin(t/2)) - Cl2(t)", "",
                 lambda p: _zeta_series(p["t"]),
                 lambda p: p["t"] - p["t"] * math.log(2 * math.sin(p["t"] / 2)) - _cl2(p["t"]),
                 Sampler(({"t": 1.0},), lambda rng: {"t": uniform(rng, 0.1, 5.0)})),
        Identity("I-11n", "Li2 reflection: Li2(1-z) = -Li2(z) + pi^2/6 - ln z ln(1-z)", "",
                 lambda p: li2(1 - p["z"]).real,
                 lambda p: -li2(p["z"]).real + PI * PI / 6 - math.log(p["z"]) * math.log1p(-p["z"]),
                 Sampler(({"z": 0.5},), lambda rng: {"z": uniform(rng, 0.0, 1.0)})),
        Identity("I-11o", "Re Li2(e^(ib)) = pi^2/6 - b(2pi - b)/4 on [0, 2pi]", "",
                 lambda p: li2(cmath.exp(1j * p["b"])).real,
                 lambda p: PI * PI / 6 - p["b"] * (2 * PI - p["b"]) / 4,
                 Sampler(({"b": 1.0},), lambda rng: {"b": uniform(rng, 0.0, 2 * PI)})),
    ]


# ---------------------------------------------------------------------------
# I-12: Lobachevsky's function

def _lobachevsky_via_cl2(x: float) -> float:
    return 0.25 * (_cl2(4 * x) - 2 * _cl2(2 * x)) + x * LN2


def _lobachevsky_constants(p: Params) -> tuple[float, float]:
    case = p["case"]
    l6 = lobachevsky(PI / 6)
    if case == "trigamma":
        return l6, lobachevsky_pi_sixth_trigamma()
    if case == "sine_series":
        # sum sin(pi k/3)/k^2 summed by residue class mod 6; its weight is 1/3, not 1/2
        tri = sum(sgn * polygamma(1, j / 6) for j, sgn in ((1, 1), (2, 1), (4, -1), (5, -1)))
        return l6, PI / 6 * LN2 - SQRT3 / 72 * tri / 3
    if case == "trigamma_reflection":
        return ((polygamma(1, 1 / 3) - polygamma(1, 2 / 3)) / (12 * SQRT3),
                (polygamma(1, 1 / 3) - 2 * PI * PI / 3) / (6 * SQRT3))
    if case == "entropy":
        return triangular_entropy()
    return PI / 6 * LN2 - l6, _cl2(PI / 3) / 3


def _limit_integral(t: float) -> float:
    c2t = math.cos(2 * t)

    def f(x):
        if x > 300:
            return 2 * x * math.exp(-x)
        return x * math.cosh(x) / (math.cosh(2 * x) - c2t)
    return _q(gauss_kronrod(f, 0.0, 1.0, 1e-12)) + _tail_integral(f, 1.0)


def _group_12() -> list[Identity]:
    lc_l, lc_r = _paired(_lobachevsky_constants)
    return [
        Identity("I-12a", "L(x) = -int_0^x ln|cos t| dt equals (Cl2(4x) - 2 Cl2(2x))/4 + x ln2", "",
                 lambda p: _q(lobachevsky_quad(p["x"], 1e-10)), lambda p: _lobachevsky_via_cl2(p["x"]),
                 Sampler(({"x": PI / 6}, {"x": PI / 2}), lambda rng: {"x": uniform(rng, -3.0, 3.0)}), QUAD_TOL),
        Identity("I-12b", "L(pi/2 +- theta) = (pi/2 +- theta) ln2 +- Cl2(2 theta)/2", "",
                 *_paired(lambda p: lobachevsky_shifted(p["theta"], p["sign"])),
                 Sampler(({"theta": 0.3, "sign": 1}, {"theta": 0.3, "sign": -1}),
                         lambda rng: {"theta": uniform(rng, -PI, PI), "sign": rng.choice((1, -1))})),
        Identity("I-12c", "int_0^inf x cosh x/(cosh 2x - cos 2t) dx = csc t [Cl2(t) - Cl2(2t)/4]", "",
                 lambda p: _limit_integral(p["t"]), lambda p: hyperbolic_limit(p["t"]),
                 Sampler(({"t": PI / 3},), lambda rng: {"t": uniform(rng, 0.05, PI - 0.05)}), QUAD_TOL),
        Identity("I-12d", "L(pi/6), its trigamma forms and the triangular-lattice entropy", "", lc_l, lc_r,
                 _cases("trigamma", "sine_series", "trigamma_reflection", "entropy", "cl2_pi_third")),
    ]


# ---------------------------------------------------------------------------
# I-13: the log-ratio tail integral

def _tail_141(a: float, b: float) -> float:
    th = math.acos((1 - a * a) / (1 + a * a))
    r = (b + a) / (b - a)
    om = math.atan2(r * math.sin(th), 1 - r * math.cos(th))
    chi = PI - th - om
    return -0.5 * (_cl2(2 * th) + _cl2(2 * om) + _cl2(2 * chi)) + _cl2(th)


def _ab_draw(rng):
    a = uniform(rng, 0.1, 2.0)
    return {"a": a, "b": a + uniform(rng, 0.05, 3.0)}


def _angle_form_rhs(p: Params) -> float:
    if p["b"] == 0.0:
        return 2 * _g()
    return log_ratio_tail_closed(p["a"], p["b"])


def _cos_series(x: float, y: float) -> float:
    return _series(lambda n: math.cos(2 * n * x) * y ** n / n, start=1)


def _group_13() -> list[Identity]:
    return [
        Identity("I-13a", "int_b^inf ln((u+a)/(u-a)) du/(1+u^2) in Clausen form", "",
                 *_checked(lambda p: log_ratio_tail_integral(p["a"], p["b"])),
                 Sampler(({"a": 1.0, "b": 2.0},), _ab_draw), QUAD_TOL),
        Identity("I-13b", "the tail integral over the angle atan b .. pi/2; b = 0, a = 1 gives 2G", "",
                 lambda p: _q(log_ratio_angle_integral(p["a"], p["b"], 1e-10)), _angle_form_rhs,
                 Sampler(({"a": 1.0, "b": 0.0}, {"a": 1.0, "b": 2.0}), _ab_draw), QUAD_TOL),
        Identity("I-13c", "[Cl2(2 theta) + Cl2(2 omega) + Cl2(2 chi)]/2 as a log-kernel integral", "",
                 *_checked(lambda p: log_kernel_check(p["theta"], p["r"])),
                 Sampler(({"theta": 1.0, "r": 3.0},),
                         lambda rng: {"theta": uniform(rng, 0.0, PI), "r": uniform(rng, 0.1, 5.0)}), QUAD_TOL),
        Identity("I-13d", "sum z^n (n ln z - 1) sin(nx)/n^2 = sin x int_0^z ln y/(1 - 2y cos x + y^2) dy", "",
                 lambda p: log_kernel_series(p["x"], p["z"]), lambda p: _q(log_kernel_integral(p["x"], p["z"])),
                 Sampler(({"x": 1.0, "z": 0.5},),
                         lambda rng: {"x": uniform(rng, 0.1, 2 * PI - 0.1), "z": uniform(rng, 0.0, 1.0)}), QUAD_TOL),
        Identity("I-13e", "the tail closed form rewritten with Cl2(2 theta) and Cl2(theta)", "",
                 lambda p: log_ratio_tail_closed(p["a"], p["b"]), lambda p: _tail_141(p["a"], p["b"]),
                 Sampler(({"a": 1.0, "b": 2.0},), _ab_draw)),
        Identity("I-13f", "sum cos(2nx) y^n/n = -ln(1 - 2y cos 2x + y^2)/2", "",
                 lambda p: _cos_series(p["x"], p["y"]),
                 lambda p: -0.5 * math.log(1 - 2 * p["y"] * math.cos(2 * p["x"]) + p["y"] ** 2),
                 Sampler(({"x": 0.5, "y": 0.5},),
                         lambda rng: {"x": uniform(rng, 0.0, PI), "y": uniform(rng, -0.9, 0.9)})),
    ]


# ---------------------------------------------------------------------------
# I-14: 3F2(1/2,1/2,1/2; 3/2,3/2; z) and Psi

_HALF_PFQ_CONSTANTS = {
    "catalan": (catalan_from_half_pfq, _g),
    "unit_series": (lambda: _pfq_half(2, 1.0), lambda: PI / 2 * LN2),
    "unit_closed": (lambda: half_pfq_closed(1.0), lambda: PI / 2 * LN2),
    "unit_lobachevsky": (lambda: lobachevsky(PI / 2), lambda: PI / 2 * LN2),
    "unit_integral": (lambda: _tail_integral(_x_over_root(1.0), 0.0), lambda: PI / 2 * LN2),
}


def _cl2_exp_form(theta: float) -> float:
    lo = -math.log(math.sin(theta / 2))
    return -theta * LN2 + 2 * _tail_integral(_x_over_root(1.0), lo)


def _shifted_exp_form(z: float) -> float:
    lz = 0.5 * math.log(z)
    f = _x_over_root(1.0, 0)
    return _tail_integral(lambda y: (y + lz) * f(y), -lz) / math.sqrt(z)


def _power_exp_form(k: int, z: float) -> float:
    return _tail_integral(_x_over_root(z, k - 1), 0.0) / math.factorial(k - 1)


def _group_14() -> list[Identity]:
    z_draw = lambda rng: {"z": uniform(rng, 0.0, 0.95)}
    x_fixed = ({"x": 1 / 3}, {"x": 4 * SQRT2 / 9})
    return [
        Identity("I-14a", "3F2(1/2,1/2,1/2; 3/2,3/2; z) in Clausen form", "",
                 lambda p: _pfq_half(2, p["z"]), lambda p: half_pfq_closed(p["z"]),
                 Sampler(({"z": 0.5},), z_draw)),
        _constant_record("I-14b", "G and (pi/2) ln2 = L(pi/2) from the 3F2 at z = 1/2 and z = 1",
                         _HALF_PFQ_CONSTANTS, QUAD_TOL),
        Identity("I-14c", "Psi(x) = int_0^x asin(t)/t dt: hypergeometric series against Clausen form", "",
                 lambda p: psi_hypergeometric(p["x"]).value, lambda p: psi_closed(p["x"]),
                 Sampler(x_fixed, lambda rng: {"x": uniform(rng, 0.0, 0.97)})),
        Identity("I-14d", "Psi(x) as int_0^asin(x) t cot t dt", "",
                 lambda p: _q(psi_quad(p["x"])), lambda p: psi_closed(p["x"]),
                 Sampler(x_fixed, lambda rng: {"x": uniform(rng, 0.0, 1.0)}), QUAD_TOL),
        Identity("I-14e", "Cl2(theta) = -theta ln2 - 2 int_0^(theta/2) ln sin", "",
                 lambda p: _cl2(p["theta"]),
                 lambda p: -p["theta"] * LN2 - 2 * _q(log_sine_power_integral(1, p["theta"] / 2)),
                 _theta_sampler(0.0, PI), QUAD_TOL),
        Identity("I-14f", "Cl2(theta) through int x/sqrt(e^(2x) - 1) from -ln sin(theta/2)", "",
                 lambda p: _cl2(p["theta"]), lambda p: _cl2_exp_form(p["theta"]),
                 _theta_sampler(0.0, PI), QUAD_TOL),
        Identity("I-14g", "3F2(1/2,1/2,1/2; 3/2,3/2; z) = int_0^inf x/sqrt(e^(2x) - z) dx", "",
                 lambda p: _pfq_half(2, p["z"]), lambda p: _tail_integral(_x_over_root(p["z"]), 0.0),
                 Sampler(({"z": 0.5},), z_draw), QUAD_TOL),
        Identity("I-14h", "the same 3F2 after the shift y = x - (ln z)/2", "",
                 lambda p: _pfq_half(2, p["z"]), lambda p: _shifted_exp_form(p["z"]),
                 Sampler(({"z": 0.5},), z_draw), QUAD_TOL),
        Identity("I-14i", "(k+1)F(k) with parameters 1/2, 3/2 as a binomial sum of ln^l sin integrals", "",
                 *_paired(lambda p: (lambda s, q: (s.value, _q(q)))(*half_pfq_log_sine_sum(p["k"], p["z"]))),
                 Sampler(({"k": 2, "z": 0.5}, {"k": 3, "z": 0.5}),
                         lambda rng: {"k": rng.randint(1, 4), "z": uniform(rng, 0.0, 1.0)}), QUAD_TOL),
        Identity("I-14j", "(k+1)F(k) = int_0^inf x^(k-1)/sqrt(e^(2x) - z) dx/(k-1)!", "",
                 lambda p: _pfq_half(p["k"], p["z"]), lambda p: _power_exp_form(p["k"], p["z"]),
                 Sampler(({"k": 3, "z": 0.5},),
                         lambda rng: {"k": rng.randint(1, 4), "z": uniform(rng, 0.0, 0.95)}), QUAD_TOL),
    ]


# ---------------------------------------------------------------------------
# I-15: Rajantie's integral and J(c, d)

def _elementary_case(p: Params) -> tuple[float, float]:
    q, atans, theta_form = _ctet.rajantie_elementary_piece(p["tol"])
    if p["case"] == "quad_vs_atan":
        return _q(q), atans
    if p["case"] == "quad_vs_theta":
        return _q(q), theta_form
    return atans, theta_form


def _cor9_case(p: Params) -> tuple[float, float]:
    case = p["case"]
    if case.startswith("decomposition"):
        tol = 1e-13 if case == "decomposition" else 1e-10
        return 4 * SQRT2 * _ctet.rajantie_decomposition(tol)["total"], _ctet.ctet_clausen().value
    if case == "A_two":
        return j_parameters(2.0, SQRT3)[0], 0.5 * math.log(3.0)
    if case == "A_three":
        return j_parameters(3.0, SQRT3)[0], math.log(SQRT2 + SQRT3)
    if case == "r1_two":
        return j_parameters(2.0, SQRT3)[1], 1 / SQRT3
    return j_parameters(2.0, SQRT3)[2], -math.atan(1 / (2 * SQRT2))


def _jcd_draw(rng):
    d = uniform(rng, 1.05, 3.0)
    return {"c": d * uniform(rng, 1.05, 3.0), "d": d}


def _group_15() -> list[Identity]:
    el_l, el_r = _paired(_elementary_case)
    c9_l, c9_r = _paired(_cor9_case)
    return [
        Identity("I-15a", "Rajantie's integrand equals its partial-fraction form pointwise", "",
                 lambda p: _ctet.rajantie_integrand(p["x"]), lambda p: _ctet.rajantie_partial_fraction_integrand(p["x"]),
                 Sampler(({"x": 0.5},), lambda rng: {"x": uniform(rng, 0.0, 1.0)})),
        Identity("I-15b", "the elementary piece equals ln4 [atan(1/sqrt2) - atan(5/sqrt2)] = theta_+ ln4", "",
                 el_l, el_r,
                 Sampler(({"case": "quad_vs_atan", "tol": 1e-13}, {"case": "quad_vs_theta", "tol": 1e-13},
                          {"case": "atan_vs_theta", "tol": 1e-13}, {"case": "quad_vs_atan", "tol": 1e-10},
                          {"case": "quad_vs_theta", "tol": 1e-10})), QUAD_TOL),
        Identity("I-15c", "J(c,d) = int_0^1 ln(x+c)/sqrt(d^2 - x^2) dx in Clausen form", "",
                 *_checked(lambda p: j_integral_check(p["c"], p["d"])),
                 Sampler(({"c": 2.0, "d": SQRT3}, {"c": 3.0, "d": SQRT3}), _jcd_draw), QUAD_TOL),
        Identity("I-15d", "Rajantie's integral assembled from J pieces; the (c, d) parameters", "", c9_l, c9_r,
                 _cases("decomposition", "decomposition_coarse", "A_two", "A_three", "r1_two", "omega1_two"),
                 QUAD_TOL),
    ]


# ---------------------------------------------------------------------------
# I-16: the SRP route and Harris's vbar

_SRP_COMPARE = {
    "series": lambda: _ctet.ctet_series().value,
    "clausen": lambda: _ctet.ctet_clausen().value,
    "clausen_omega": lambda: _ctet.ctet_clausen_omega().value,
    "clausen_shifted": lambda: _ctet.ctet_clausen_shifted().value,
    "srp_consolidated": lambda: _ctet.ctet_srp_consolidated().value,
}


def _log_square_series(z: float) -> float:
    z2 = z * z

    def term(n):
        return (float(harm_exact(2 * n)) + LN2) * z ** (2 * n + 1) / (2 * n + 1) if n <= 200 else 0.0
    acc = Accumulator()
    for n in range(400):
        t = term(n) if n <= 200 else 0.0
        acc.add(t)
        if n > 5 and abs(z2) ** n < 1e-19:
            break
    return acc.value


def _group_16() -> list[Identity]:
    z_draw = lambda rng: {"z": uniform(rng, -0.7, 0.7)}
    return [
        Identity("I-16a", "the three-electron reference-point integral over 8 pi^3 equals C(1,1)", "",
                 lambda p: _ctet.srp_integral().value / (8 * PI ** 3), lambda p: _SRP_COMPARE[p["route"]](),
                 Sampler(tuple({"route": r} for r in _SRP_COMPARE))),
        Identity("I-16b", "vbar(z) = v(z) + 2z ln2 against its odd power series", "",
                 lambda p: harris_vbar(p["z"])[0].value, lambda p: harris_vbar_direct(p["z"]),
                 Sampler(({"z": 0.5},), z_draw)),
        Identity("I-16c", "[ln^2((1-z)/2) - ln^2((1+z)/2)]/4 = sum (H_2n + ln2) z^(2n+1)/(2n+1)", "",
                 lambda p: 0.25 * (math.log((1 - p["z"]) / 2) ** 2 - math.log((1 + p["z"]) / 2) ** 2),
                 lambda p: _log_square_series(p["z"]),
                 Sampler(({"z": 0.5},), lambda rng: {"z": uniform(rng, -0.8, 0.8)})),
        Identity("I-16d", "Li2((1 +- z)/2) from binomial sums of H_n^(2)/2^n", "",
                 lambda p: li2((1 + p["sign"] * p["z"]) / 2).real,
                 lambda p: li2_half_shift_series(p["z"], p["sign"]).value,
                 Sampler(({"z": 0.5, "sign": 1}, {"z": 0.5, "sign": -1}),
                         lambda rng: {**z_draw(rng), "sign": rng.choice((1, -1))})),
    ]


# ---------------------------------------------------------------------------
# I-17: Ramanujan's H

def _even_sum_direct(x: float) -> float:
    acc = Accumulator()
    h = 0.0
    x2 = x * x
    p = 1.0
    for k in range(1, 5000):
        h += 1.0 / k
        p *= x2
        t = h * p / (k + 0.5)
        acc.add(t)
        if t < 1e-19 * abs(acc.value):
            break
    return acc.value


def _dilog_unit(p: Params) -> tuple[float, float]:
    s = p["s"]
    x = 1j * s
    tp = -2 * math.atan(s)
    if p["part"] == "dilog":
        return li2((x - 1) / (x + 1)).real, PI * PI / 6 - 0.25 * (PI * PI - tp * tp)
    if p["part"] == "clausen":
        return li2((x - 1) / (x + 1)).imag, _cl2(tp + PI)
    return cmath.log((1 - x) / (1 + x)).imag, -2 * math.atan(s)


def _group_17() -> list[Identity]:
    x_draw = lambda rng: {"x": uniform(rng, 0.0, 0.9)}
    du_l, du_r = _paired(_dilog_unit)
    return [
        Identity("I-17a", "H(x) = sum H_k x^(2k-1)/(2k-1) in closed form", "",
                 lambda p: ramanujan_h_series(p["x"], 3000), lambda p: ramanujan_h(p["x"]),
                 Sampler(({"x": 0.5},), x_draw)),
        Identity("I-17b", "Ramanujan's H((1-x)/(1+x)) formula", "",
                 lambda p: ramanujan_h((1 - p["x"]) / (1 + p["x"])), lambda p: ramanujan_h_reflected(p["x"]),
                 Sampler(({"x": 0.5},), lambda rng: {"x": uniform(rng, 0.05, 1.0)})),
        Identity("I-17c", "H(x) - 2 atanh x - ln(1-x^2)/x = sum_(k>=0) H_k x^(2k+1)/(2k+1)", "",
                 lambda p: ramanujan_shift_series(p["x"], 3000), lambda p: ramanujan_shift_closed(p["x"]),
                 Sampler(({"x": 0.5},), x_draw)),
        Identity("I-17d", "sum H_k x^(2k)/(k+1/2) in closed form, real x", "",
                 lambda p: _even_sum_direct(p["x"]), lambda p: ramanujan_even_sum(p["x"]).real,
                 Sampler(({"x": 0.5},), lambda rng: {"x": rng.choice((1, -1)) * uniform(rng, 0.0, 0.9)})),
        Identity("I-17e", "S(2, beta) from the same closed form at x = i beta^(-3/2)", "",
                 lambda p: s_family(SumSpec(2.0, p["beta"])).value, lambda p: s2_ramanujan(p["beta"]),
                 Sampler(({"beta": 2.0},), lambda rng: {"beta": uniform(rng, 1.1, 4.0)})),
        Identity("I-17f", "Li2 and ln of (x-1)/(x+1) on the unit circle for x = i s", "", du_l, du_r,
                 Sampler(tuple({"s": R_TAN_OMEGA, "part": q} for q in ("dilog", "clausen", "log")),
                         lambda rng: {"s": uniform(rng, 0.0, 3.0), "part": rng.choice(("dilog", "clausen", "log"))})),
    ]


# ---------------------------------------------------------------------------
# I-18: the Lerch function and its hypergeometric forms

def _lerch_integral(z: float, s: int, a: float) -> float:
    def f(u):
        if u == 0.0:
            return 0.0 if a > 1 else (math.inf if s > 1 or a < 1 else 1.0)
        return u ** (a - 1) * math.log(u) ** (s - 1) / (1 - z * u)
    r = quad(f, 0.0, 1.0, 1e-12, singular=True)
    return (-1) ** (s - 1) / math.gamma(s) * _q(r)


def _lerch_pfq(z: float, k: int, a: float) -> float:
    return a ** -k * pfq_series([1.0] + [a] * k, [a + 1.0] * k, z).value


def _rainville(c: float, t: float) -> float:
    sc = math.sqrt(c)
    r = quad(lambda x: math.atanh(math.sqrt(c * x)) / x if x else sc, 0.0, t, 1e-12, singular=True)
    return _q(r) / (2 * sc * math.sqrt(t))


def _chain_form(p: Params) -> float:
    z, form = p["z"], p["form"]
    rz = math.sqrt(z)
    if form == "odd_squares":
        return _series(lambda j: z ** j / (2 * j + 1) ** 2)
    if form == "chi2":
        return chi2(rz).real / rz
    if form == "lerch":
        return 0.25 * lerch_phi(z, 2, 0.5).real
    if form == "dilog":
        return ((li2(rz) - li2(-rz)) / (2 * rz)).real
    return 0.5 * (pfq_series([1, 1, 1], [2, 2], rz).value + pfq_series([1, 1, 1], [2, 2], -rz).value)


def _b10_closed(z: float) -> float:
    if z > 0:
        at = math.atanh(math.sqrt(z)) / math.sqrt(z)
    else:
        at = math.atan(math.sqrt(-z)) / math.sqrt(-z)
    phi32 = (lerch_phi(z, 2, 0.5).real - 4) / z
    return 2 - 2 * at - 0.5 * z * phi32 - math.log1p(-z)


def _b10_integral(z: float) -> float:
    r = quad(lambda x: math.log(x) * math.log1p(-z * x * x) if x else 0.0, 0.0, 1.0, 1e-12, singular=True)
    return _q(r)


_CHAIN_FORMS = ("odd_squares", "chi2", "lerch", "dilog", "pfq_pair")


def _group_18() -> list[Identity]:
    lerch_fixed = ({"z": -0.125, "s": 2, "a": 0.5},)
    return [
        Identity("I-18a", "Phi(z,s,a) as an integral of u^(a-1) ln^(s-1) u/(1 - zu)", "",
                 lambda p: lerch_phi(p["z"], p["s"], p["a"]).real, lambda p: _lerch_integral(p["z"], p["s"], p["a"]),
                 Sampler(lerch_fixed, lambda rng: {"z": uniform(rng, -1.0, 0.9), "s": rng.randint(2, 3),
                                                   "a": uniform(rng, 0.2, 2.0)}), QUAD_TOL),
        Identity("I-18b", "Phi(z,k,a) = a^-k (k+1)F(k)(1, a, ..; a+1, ..; z)", "",
                 lambda p: lerch_phi(p["z"], p["k"], p["a"]).real, lambda p: _lerch_pfq(p["z"], p["k"], p["a"]),
                 Sampler(({"z": -0.125, "k": 2, "a": 0.5},),
                         lambda rng: {"z": uniform(rng, -0.9, 0.9), "k": rng.randint(1, 3),
                                      "a": uniform(rng, 0.2, 2.0)})),
        Identity("I-18c", "Rainville's Euler transform: 3F2(1,1/2,1/2; 3/2,3/2; ct) as an atanh integral", "",
                 lambda p: pfq_series([1.0, 0.5, 0.5], [1.5, 1.5], p["c"] * p["t"]).value,
                 lambda p: _rainville(p["c"], p["t"]),
                 Sampler(({"c": 0.5, "t": 1.0}, {"c": 0.25, "t": 0.5}),
                         lambda rng: {"c": uniform(rng, 0.05, 1.0), "t": uniform(rng, 0.05, 0.95)}), QUAD_TOL),
        Identity("I-18d", "3F2(1,1/2,1/2; 3/2,3/2; w) = [4 Li2(sqrt w) - Li2(w)]/(4 sqrt w)", "",
                 lambda p: pfq_series([1.0, 0.5, 0.5], [1.5, 1.5], p["w"]).value,
                 lambda p: ((4 * li2(math.sqrt(p["w"])) - li2(p["w"])) / (4 * math.sqrt(p["w"]))).real,
                 Sampler(({"w": 0.5},), lambda rng: {"w": uniform(rng, 0.0, 0.95)})),
        Identity("I-18e", "Ti2(x) = int_0^x atan(t)/t dt", "",
                 lambda p: ti2(p["x"]), lambda p: _q(quad(lambda t: math.atan(t) / t if t else 1.0, 0.0, p["x"], 1e-12)),
                 Sampler(({"x": 1.0},), lambda rng: {"x": uniform(rng, -4.0, 4.0)}), QUAD_TOL),
        Identity("I-18f", "Ti2(y) = -i chi2(iy) for real y", "",
                 lambda p: ti2(p["y"]), lambda p: (-1j * chi2(1j * p["y"])).real,
                 Sampler(({"y": R_TAN_OMEGA},), lambda rng: {"y": uniform(rng, -1.0, 1.0)})),
        Identity("I-18g", "3F2(1/2,1/2,1; 3/2,3/2; z) through chi2, Phi, Li2 and 3F2(1,1,1; 2,2)", "",
                 lambda p: pfq_series([0.5, 0.5, 1.0], [1.5, 1.5], p["z"]).value, _chain_form,
                 Sampler(tuple({"z": 0.5, "form": f} for f in _CHAIN_FORMS),
                         lambda rng: {"z": uniform(rng, 0.0, 0.95), "form": rng.choice(_CHAIN_FORMS)})),
        Identity("I-18h", "3F2(1/2,1/2,1; 3/2,3/2; z) = -(1/4) int u^(-1/2) ln u/(1 - zu)", "",
                 lambda p: pfq_series([0.5, 0.5, 1.0], [1.5, 1.5], p["z"]).value,
                 lambda p: 0.25 * _lerch_integral(p["z"], 2, 0.5),
                 Sampler(({"z": -0.125},), lambda rng: {"z": uniform(rng, -1.0, 0.95)}), QUAD_TOL),
        Identity("I-18i", "int_0^1 ln x ln(1 - z x^2) dx through Phi(z, 2, 3/2)", "",
                 lambda p: _b10_integral(p["z"]), lambda p: _b10_closed(p["z"]),
                 Sampler(({"z": 0.5}, {"z": -0.125}),
                         lambda rng: {"z": rng.choice((1, -1)) * uniform(rng, 0.01, 0.95)}), QUAD_TOL),
    ]


# ---------------------------------------------------------------------------
# I-19: S(2, beta) for general beta

def _c8_corrected(beta: float) -> float:
    # (1 + beta^-3)^-1 int_0^1 atanh(sqrt(1-t))/sqrt(1-t) / (1 - t/(1+beta^3)) dt, with v = sqrt(1-t)
    b3 = beta ** 3
    r = quad(lambda v: 2 * math.atanh(v) / (1 - (1 - v * v) / (1 + b3)) if v < 1 else 0.0,
             0.0, 1.0, 1e-12, singular=True)
    return _q(r) / (1 + 1 / b3)


def _harmonic_integral(n: int) -> float:
    r = quad(lambda x: x ** (n - 1) * math.log1p(-x) if x < 1 else 0.0, 0.0, 1.0, 1e-12, singular=True)
    return -n * _q(r)


def _group_19() -> list[Identity]:
    beta_draw = lambda rng: {"beta": uniform(rng, 1.05, 5.0)}
    fixed = ({"beta": 2.0},)
    b32_cl2 = lambda p: p["beta"] ** 1.5 * _cl2(s2beta_theta(p["beta"]))
    return [
        Identity("I-19a", "S(2, beta) = 2 beta^(3/2)[Cl2(theta) - 2 arccot(beta^(3/2)) ln2]", "",
                 lambda p: s_family(SumSpec(2.0, p["beta"])).value, lambda p: s2beta_closed(p["beta"]),
                 Sampler(fixed, beta_draw)),
        Identity("I-19b", "beta^(3/2) Cl2(theta) = sum 2F1(1, k; k+1; -beta^-3)/(k(2k-1))", "",
                 lambda p: clausen_hypergeometric_series(p["beta"]).value, b32_cl2, Sampler(fixed, beta_draw)),
        Identity("I-19c", "S(alpha, beta) as a sum over 2F1 values", "",
                 lambda p: s_alpha_hypergeometric_series(p["alpha"], p["beta"]).value,
                 lambda p: s_family(SumSpec(p["alpha"], p["beta"])).value,
                 Sampler(({"alpha": 3.0, "beta": 2.0},),
                         lambda rng: {"alpha": uniform(rng, 1.2, 4.0), "beta": uniform(rng, 1.3, 4.0)})),
        Identity("I-19d", "S(2, beta) = -4 beta^(3/2) ln2 arccot(beta^(3/2)) + 2 sum 2F1(..)/(k(2k-1))", "",
                 lambda p: s2_hypergeometric_form(p["beta"]).value, lambda p: s2beta_closed(p["beta"]),
                 Sampler(fixed, beta_draw)),
        Identity("I-19e", "beta^(3/2) Cl2(theta) = 2 beta^3 int_0^1 atanh v/(v^2 + beta^3) dv", "",
                 lambda p: _q(clausen_atanh_integrals(p["beta"])[0]), b32_cl2, Sampler(fixed, beta_draw), QUAD_TOL),
        Identity("I-19f", "2 beta^3 int v^2 atanh v/(v^2+beta^3) = 2 beta^3 [ln2 - beta^3 int atanh v/(v^2+beta^3)]", "",
                 lambda p: _q(clausen_atanh_integrals(p["beta"])[1]),
                 lambda p: _q(clausen_atanh_integrals(p["beta"])[2]), Sampler(fixed, beta_draw), QUAD_TOL),
        Identity("I-19g", "the 2F1 sum through its Euler integral with (1-t)^(k-1)", "",
                 lambda p: _c8_corrected(p["beta"]), b32_cl2, Sampler(fixed, beta_draw), QUAD_TOL),
        Identity("I-19h", "H_n = -n int_0^1 x^(n-1) ln(1-x) dx", "",
                 lambda p: float(harm_exact(p["n"])), lambda p: _harmonic_integral(p["n"]),
                 Sampler(({"n": 10},), lambda rng: {"n": rng.randint(1, 60)}), QUAD_TOL),
        _route_record("I-19i", "S(2, beta) as -int ln(1-t)[1/(t(1+xt)) - atan(sqrt(xt))/(sqrt(x) t^(3/2))]",
                      "harmonic_log_kernel", lambda rng: {"alpha": 2.0, "beta": uniform(rng, 1.1, 4.0)}),
        Identity("I-19j", "S(2, beta) through the dilogarithm difference at x = beta^-3", "",
                 lambda p: s_family(SumSpec(2.0, p["beta"])).value,
                 lambda p: (-4 * p["beta"] ** 1.5 * LN2 * math.atan(p["beta"] ** -1.5)
                            - s2_dilog_difference(p["beta"])),
                 Sampler(fixed, beta_draw)),
    ]


# ---------------------------------------------------------------------------
# I-20: the two-parameter hyperbolic integrals

def _yt_draw(rng):
    return {"y": uniform(rng, 0.05, 8.0), "t": uniform(rng, 0.05, PI - 0.05)}


def _hyperbolic_part(name: str) -> Callable[[Params], tuple[float, float]]:
    def run(p):
        return _check(getattr(hyperbolic_integrals(p["y"], p["t"]), name))
    return run


def _log_z_form(p: Params) -> tuple[float, float]:
    y, t, sign = p["y"], p["t"], p["sign"]
    ct = math.cos(t)
    r = quad(lambda z: math.log(z) / (z * z + 2 * sign * z * ct + 1), 1.0, math.exp(y), 1e-12)
    closed = hyperbolic_closed(y, t)[1 if sign > 0 else 2]
    return 2 * _q(r), closed


def _dilog_form(p: Params) -> tuple[float, float]:
    y, t, sign = p["y"], p["t"], p["sign"]
    if sign > 0:
        zp, zm = -cmath.exp(-1j * t), -cmath.exp(1j * t)
    else:
        zp, zm = cmath.exp(1j * t), cmath.exp(-1j * t)
    ey = math.exp(y)
    v = -2 / (zp - zm) * (y * (cmath.log(1 - ey / zm) - cmath.log(1 - ey / zp)) + li2(1 / zp) - li2(1 / zm)
                          + li2(ey / zm) - li2(ey / zp))
    if abs(v.imag) > IMAG_RESIDUE_MAX * max(1.0, abs(v.real)):
        raise ArithmeticError(f"dilogarithm form left imaginary part {v.imag:.3g}")
    return v.real, hyperbolic_closed(y, t)[1 if sign > 0 else 2]


def _dilog_imag_parts(p: Params) -> tuple[float, float]:
    y, t, sign = p["y"], p["t"], p["sign"]
    ey = math.exp(y)
    if sign > 0:
        zp, zm = -cmath.exp(-1j * t), -cmath.exp(1j * t)
        w1 = math.atan2(ey * math.sin(t), 1 + ey * math.cos(t))
        rhs = 2 * w1 * y + _cl2(2 * w1) - _cl2(2 * (w1 - t)) - _cl2(2 * t)
    else:
        zp, zm = cmath.exp(1j * t), cmath.exp(-1j * t)
        w3 = math.atan2(ey * math.sin(t), 1 - ey * math.cos(t))
        rhs = 2 * w3 * y + _cl2(2 * w3) - _cl2(2 * (w3 + t)) + _cl2(2 * t)
    return (li2(ey / zm) - li2(ey / zp)).imag, rhs


def _group_20() -> list[Identity]:
    yt_fixed = ({"y": 1.0, "t": PI / 3},)
    signed_draw = lambda rng: {**_yt_draw(rng), "sign": rng.choice((1, -1))}
    signed_fixed = ({"y": 1.0, "t": PI / 3, "sign": 1}, {"y": 1.0, "t": PI / 3, "sign": -1})
    return [
        Identity("I-20a", "int_0^y x cosh x/(cosh 2x - cos 2t) dx in Clausen form", "",
                 *_paired(_hyperbolic_part("full")), Sampler(yt_fixed, _yt_draw), QUAD_TOL),
        Identity("I-20b", "int_0^y x/(cosh x + cos t) dx in Clausen form", "",
                 *_paired(_hyperbolic_part("plus")), Sampler(yt_fixed, _yt_draw), QUAD_TOL),
        Identity("I-20c", "int_0^y x/(cosh x - cos t) dx in Clausen form", "",
                 *_paired(_hyperbolic_part("minus")), Sampler(yt_fixed, _yt_draw), QUAD_TOL),
        Identity("I-20d", "the full integral is a quarter of the plus and minus integrals", "",
                 lambda p: hyperbolic_closed(p["y"], p["t"])[0],
                 lambda p: 0.25 * sum(hyperbolic_closed(p["y"], p["t"])[1:]), Sampler(yt_fixed, _yt_draw)),
        Identity("I-20e", "I+- = 2 int_1^(e^y) ln z/(z^2 +- 2z cos t + 1) dz", "",
                 *_paired(_log_z_form), Sampler(signed_fixed, signed_draw), QUAD_TOL),
        Identity("I-20f", "I+- through dilogarithms at 1/z_+-, e^y/z_+-", "",
                 *_paired(_dilog_form), Sampler(signed_fixed, signed_draw)),
        Identity("I-20g", "imaginary parts of the e^y dilogarithm pair in Clausen form", "",
                 *_paired(_dilog_imag_parts), Sampler(signed_fixed, signed_draw)),
        Identity("I-20h", "at y = 40 the full integral reaches its y -> infinity value", "",
                 lambda p: _q(hyperbolic_integrals(40.0, p["t"]).full.lhs), lambda p: hyperbolic_limit(p["t"]),
                 Sampler(({"t": PI / 3},), lambda rng: {"t": uniform(rng, 0.05, PI - 0.05)}), QUAD_TOL),
        Identity("I-20i", "I+ -> 2 csc t Cl2(pi - t) and I- -> 2 csc t Cl2(t) as y -> infinity", "",
                 lambda p: hyperbolic_closed(40.0, p["t"])[1 if p["sign"] > 0 else 2],
                 lambda p: 2 / math.sin(p["t"]) * _cl2(PI - p["t"] if p["sign"] > 0 else p["t"]),
                 Sampler(({"t": PI / 3, "sign": 1}, {"t": PI / 3, "sign": -1}),
                         lambda rng: {"t": uniform(rng, 0.05, PI - 0.05), "sign": rng.choice((1, -1))}), QUAD_TOL),
        Identity("I-20j", "I+ as an integral over v = sech x", "",
                 lambda p: _q(hyperbolic_plus_algebraic(p["y"], p["t"])),
                 lambda p: hyperbolic_closed(p["y"], p["t"])[1], Sampler(yt_fixed, _yt_draw), QUAD_TOL),
        Identity("I-20k", "I- as an integral over the angle acos(sech x)", "",
                 lambda p: _q(hyperbolic_minus_angular(p["y"], p["t"])),
                 lambda p: hyperbolic_closed(p["y"], p["t"])[2], Sampler(yt_fixed, _yt_draw), QUAD_TOL),
    ]


# ---------------------------------------------------------------------------
# Catalog

_GROUPS = (_group_01, _group_02, _group_03, _group_04, _group_05, _group_06, _group_07, _group_08, _group_09,
           _group_10, _group_11, _group_12, _group_13, _group_14, _group_15, _group_16, _group_17, _group_18,
           _group_19, _group_20)


@lru_cache(maxsize=1)
def _catalog() -> tuple[Identity, ...]:
    refs = _refs()["identities"]
    out = []
    for build in _GROUPS:
        for ident in build():
            if ident.id not in refs:
                raise KeyError(f"no reference string for {ident.id}")
            out.append(Identity(ident.id, ident.description, refs[ident.id], ident.lhs, ident.rhs,
                                ident.sampler, ident.tolerance, ident.policy, ident.candidates))
    ids = [i.id for i in out]
    if len(set(ids)) != len(ids):
        raise ValueError("duplicate identity ids")
    return tuple(out)


def catalog() -> list[Identity]:
    """Every registered identity, in id order."""
    return list(_catalog())


def select(pattern: str | None) -> list[Identity]:
    """Identities whose id, or id without its letter suffix, matches the glob."""
    if not pattern:
        return catalog()
    return [i for i in _catalog() if fnmatch.fnmatchcase(i.id, pattern) or fnmatch.fnmatchcase(i.group, pattern)]


# ---------------------------------------------------------------------------
# Runner

def _sample(ident: Identity, p: dict, tol: float) -> tuple[SampleCheck, dict]:
    lhs = float(ident.lhs(p))
    cand = {}
    if ident.policy is Policy.DISCREPANCY:
        for name, fn in ident.candidates:
            cand[name] = abs(lhs - complex(fn(p)))
        rhs_c = complex(ident.rhs(p))
        rhs = rhs_c.real
        abs_err = abs(lhs - rhs_c)
    else:
        rhs = float(ident.rhs(p))
        abs_err = abs(lhs - rhs)
    rel_err = abs_err / max(1.0, abs(rhs))
    ok = rel_err <= tol and math.isfinite(abs_err)
    return SampleCheck(p, lhs, rhs, abs_err, rel_err, ok), cand


def run_identity(ident: Identity, seed: int, tol_scale: float = 1.0) -> IdentityResult:
    """Evaluate one identity at its sample points; evaluator errors become a failed result."""
    start = time.perf_counter()
    rng = random.Random(f"{seed}/{ident.id}")
    tol = ident.tolerance * tol_scale
    samples: list[SampleCheck] = []
    worst: dict[str, float] = {name: 0.0 for name, _ in ident.candidates}
    message = ""
    try:
        points = ident.sampler.points(rng)
    except Exception as exc:  # noqa: BLE001 - a broken sampler is reported like any evaluator failure
        points = []
        message = f"sampler: {type(exc).__name__}: {exc}"
    for p in points:
        try:
            check, cand = _sample(ident, p, tol)
        except Exception as exc:  # noqa: BLE001
            check, cand = SampleCheck(p, None, None, math.inf, math.inf, False), {}
            message = message or f"{type(exc).__name__}: {exc}"
            for name in worst:
                worst[name] = math.inf
        samples.append(check)
        for name, err in cand.items():
            worst[name] = max(worst[name], err)
    resolution = None
    if message or not samples:
        status = "fail"
    elif ident.policy is Policy.DISCREPANCY:
        matched = [name for name, err in worst.items() if err / max(1.0, 1.0) <= tol]
        resolution = {"candidates": worst, "matched": matched}
        status = "discrepancy-resolved"
    else:
        status = "pass" if all(s.within_tol for s in samples) else "fail"
    wall = int(round((time.perf_counter() - start) * 1000))
    return IdentityResult(ident.id, ident.description, ident.paper_ref, ident.policy, status, ident.tolerance,
                          tuple(samples), message, resolution, wall)


def _run_index(args: tuple[int, int, float]) -> IdentityResult:
    index, seed, tol_scale = args
    return run_identity(_catalog()[index], seed, tol_scale)


def run_suite(filter: str | None = None, seed: int = 0, tol_scale: float = 1.0, jobs: int = 1) -> Report:
    """Run every selected identity; results keep catalog order whatever `jobs` is."""
    if not tol_scale > 0:
        raise ValueError("tol_scale must be positive")
    start = time.perf_counter()
    chosen = {i.id for i in select(filter)}
    indices = [k for k, ident in enumerate(_catalog()) if ident.id in chosen]
    tasks = [(k, seed, tol_scale) for k in indices]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs, mp_context=get_context("fork")) as pool:
            results = list(pool.map(_run_index, tasks))
    else:
        results = [_run_index(t) for t in tasks]
    wall = int(round((time.perf_counter() - start) * 1000))
    return Report(seed, tol_scale, tuple(results), wall)


def default_jobs() -> int:
    return max(1, len(os.sched_getaffinity(0)) if hasattr(os, "sched_getaffinity") else (os.cpu_count() or 1))


# ---------------------------------------------------------------------------
# Rendering

def _num(x: float) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, int):
        return str(x)
    if x is None or not math.isfinite(x):
        return "null"
    return format(x, ".17g")


def _dump(v: Any, indent: int) -> str:
    pad = "  " * indent
    inner = "  " * (indent + 1)
    if isinstance(v, dict):
        if not v:
            return "{}"
        items = [f"{inner}{json.dumps(str(k))}: {_dump(x, indent + 1)}" for k, x in v.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(v, (list, tuple)):
        if not v:
            return "[]"
        return "[\n" + ",\n".join(inner + _dump(x, indent + 1) for x in v) + "\n" + pad + "]"
    if isinstance(v, str):
        return json.dumps(v)
    if isinstance(v, (bool, int, float)) or v is None:
        return _num(v)
    return json.dumps(str(v))


def report_dict(report: Report, include_timing: bool = False) -> dict:
    out = []
    for r in report.identities:
        entry = {
            "id": r.id,
            "description": r.description,
            "paper_ref": r.paper_ref,
            "status": r.status,
            "tolerance": r.tolerance,
            "samples": [{"inputs": s.inputs, "lhs": s.lhs_value, "rhs": s.rhs_value, "abs_err": s.abs_err,
                         "rel_err": s.rel_err, "within_tol": s.within_tol} for s in r.samples],
        }
        if r.resolution is not None:
            entry["resolution"] = r.resolution
        if r.message:
            entry["message"] = r.message
        out.append(entry)
    return {"seed": report.seed, "tol_scale": report.tol_scale, "identities": out,
            "wall_ms": report.wall_ms if include_timing else 0}


def _markdown(report: Report) -> str:
    lines = [f"# Identity suite (seed {report.seed}, tol_scale {report.tol_scale:g})", "",
             "| id | status | samples | max abs err | tolerance | description |",
             "|---|---|---|---|---|---|"]
    for r in report.identities:
        lines.append(f"| {r.id} | {r.status} | {len(r.samples)} | {r.max_abs_err:.3g} | {r.tolerance:g} "
                     f"| {r.description.replace('|', '/')} |")
    counts = {s: sum(1 for r in report.identities if r.status == s) for s in ("pass", "fail", "discrepancy-resolved")}
    lines += ["", f"{len(report.identities)} identities: {counts['pass']} pass, {counts['fail']} fail, "
                  f"{counts['discrepancy-resolved']} discrepancy-resolved; {report.wall_ms} ms"]
    for r in report.identities:
        if r.resolution is not None:
            errs = ", ".join(f"{k} {v:.3g}" for k, v in r.resolution["candidates"].items())
            matched = ", ".join(r.resolution["matched"]) or "none"
            lines.append(f"- {r.id} resolution: matched {matched} (worst errors: {errs})")
        if r.message:
            lines.append(f"- {r.id} error: {r.message}")
    return "\n".join(lines) + "\n"


def render_report(report: Report, format: str = "json", include_timing: bool = False) -> bytes:
    """Render as JSON (floats with 17 significant digits) or a markdown table."""
    if format == "json":
        return (_dump(report_dict(report, include_timing), 0) + "\n").encode("utf-8")
    if format == "markdown":
        return _markdown(report).encode("utf-8")
    raise ValueError(f"unknown report format {format!r}")
