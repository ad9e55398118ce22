"""Numerical integration.

Two engines: tanh-sinh (double exponential) for integrands with endpoint
singularities, and globally adaptive Gauss-Kronrod 7/15 for smooth ones.
Semi-infinite ranges are mapped onto [0, 1) with u = a + t/(1-t).
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .numkit import EPS, Accumulator

MAX_TS_LEVEL = 12
MAX_GK_DEPTH = 40
MAX_GK_INTERVALS = 4000


class IntegrandUndefined(ValueError):
    def __init__(self, x=None):
        super().__init__("integrand undefined" + ("" if x is None else f" at x={x!r}"))


@dataclass(frozen=True)
class QuadProblem:
    integrand: Callable[[float], float]
    lower: float
    upper: float
    singular_lower: bool = False
    singular_upper: bool = False
    target_tol: float = 1e-12
    breakpoints: tuple = field(default_factory=tuple)

    def __post_init__(self):
        if not self.lower < self.upper:
            raise ValueError("QuadProblem needs lower < upper")
        if not 1e-14 <= self.target_tol <= 1e-3:
            raise ValueError("target_tol must lie in [1e-14, 1e-3]")


@dataclass(frozen=True)
class QuadResult:
    value: float
    err_estimate: float
    evals: int
    converged: bool

    def __float__(self):
        return self.value

    def __add__(self, other: "QuadResult") -> "QuadResult":
        return QuadResult(self.value + other.value, self.err_estimate + other.err_estimate,
                          self.evals + other.evals, self.converged and other.converged)


def _check(y: float, x) -> float:
    if y != y or y in (math.inf, -math.inf):
        raise IntegrandUndefined(x)
    return y


# ---------------------------------------------------------------------------
# tanh-sinh

def tanh_sinh_dist(g, a: float, b: float, tol: float, plain: bool = False) -> QuadResult:
    """tanh-sinh on [a, b] for g(x, dist_to_a, dist_to_b).

    Distances to the endpoints are computed without cancellation so that
    integrands like ln(1-x) or x^-1/2 can be evaluated right up to the ends.
    """
    half = 0.5 * (b - a)
    evals = 0
    # In plain mode the integrand sees the rounded node b - d rather than the
    # distance d. Near a nonzero endpoint that shift is a systematic error the
    # level differences never show, so it is bounded separately: relative
    # position error times the node's contribution, which is honest for
    # endpoint singularities no stronger than 1/distance.
    shift = 0.0

    def pair_sum(t: float, acc: Accumulator) -> tuple[bool, float]:
        # both nodes +-t; returns (useful, magnitude of contribution)
        nonlocal evals, shift
        u = 0.5 * math.pi * math.sinh(t)
        if u > 700.0:
            return False, 0.0
        e = math.exp(-2.0 * u)
        delta = 2.0 * e / (1.0 + e)           # 1 - tanh(u)
        w = 0.5 * math.pi * math.cosh(t) * 4.0 * e / ((1.0 + e) * (1.0 + e))
        d = half * delta
        if d == 0.0 or w == 0.0:
            return False, 0.0
        mag = 0.0
        xr = b - d
        xl = a + d
        if plain and xr >= b and xl <= a:
            return False, 0.0
        if not (plain and xr >= b):
            yr = _check(g(xr, (b - a) - d, d), xr)
            evals += 1
            acc.add(w * yr)
            mag += abs(w * yr)
            if plain:
                shift += abs((b - xr) - d) / d * abs(w * yr)
        if not (plain and xl <= a):
            yl = _check(g(xl, d, (b - a) - d), xl)
            evals += 1
            acc.add(w * yl)
            mag += abs(w * yl)
            if plain:
                shift += abs((xl - a) - d) / d * abs(w * yl)
        return True, mag

    # level 0: step h = 1/2 on t in [0, t_max]
    h = 0.5
    acc = Accumulator()
    y0 = _check(g(0.5 * (a + b), half, half), 0.5 * (a + b))
    evals += 1
    acc.add(0.5 * math.pi * y0)
    k = 1
    tail = 0.0
    while True:
        ok, mag = pair_sum(k * h, acc)
        if not ok:
            break
        tail = mag
        k += 1
        if k * h > 7.0:
            break
    estimate = half * h * acc.value
    prev = estimate
    err = math.inf
    for level in range(1, MAX_TS_LEVEL + 1):
        h *= 0.5
        k = 1
        while True:
            t = k * h
            if t > 7.0:
                break
            ok, mag = pair_sum(t, acc)
            if not ok:
                break
            k += 2
        estimate = half * h * acc.value
        floor = 10.0 * EPS * half * h * acc.abs_sum
        err = max(abs(estimate - prev), floor, half * 0.5 * tail, half * h * shift)
        prev = estimate
        if level >= 3 and err <= tol * max(1.0, abs(estimate)):
            return QuadResult(estimate, err, evals, True)
    return QuadResult(estimate, err, evals, False)


def tanh_sinh(f: Callable[[float], float], a: float, b: float, tol: float = 1e-12) -> QuadResult:
    return tanh_sinh_dist(lambda x, dl, dh: f(x), a, b, tol, plain=True)


# ---------------------------------------------------------------------------
# Gauss-Kronrod 7/15

_XGK = (0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
        0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
        0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
        0.207784955007898467600689403773245, 0.0)
_WGK = (0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
        0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
        0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
        0.204432940075298892414161999234649, 0.209482141084727828012999174891714)
_WG = (0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
       0.381830050505118944950369775488975, 0.417959183673469387755102040816327)


def _gk15(f, a: float, b: float) -> tuple[float, float, float]:
    c = 0.5 * (a + b)
    h = 0.5 * (b - a)
    fc = _check(f(c), c)
    k = _WGK[7] * fc
    g = _WG[3] * fc
    resabs = abs(k)
    for i in range(7):
        dx = h * _XGK[i]
        f1 = _check(f(c - dx), c - dx)
        f2 = _check(f(c + dx), c + dx)
        k += _WGK[i] * (f1 + f2)
        resabs += _WGK[i] * (abs(f1) + abs(f2))
        if i % 2 == 1:
            g += _WG[i // 2] * (f1 + f2)
    kv = k * h
    err = abs(kv - g * h)
    floor = 50.0 * EPS * abs(h) * resabs
    return kv, max(err, floor), floor


def gauss_kronrod(f: Callable[[float], float], a: float, b: float, tol: float = 1e-12) -> QuadResult:
    """Globally adaptive GK 7/15 with bisection of the worst interval."""
    v, e, fl = _gk15(f, a, b)
    evals = 15
    heap = [(-e, a, b, v, e, fl, 0)]
    total_v = Accumulator()
    total_v.add(v)
    total_e = e
    done_v = 0.0
    done_e = 0.0
    done = Accumulator()
    intervals = 1
    while heap:
        scale = max(1.0, abs(total_v.value))
        if total_e <= tol * scale:
            break
        if intervals >= MAX_GK_INTERVALS:
            break
        _, lo, hi, iv, ie, ifl, depth = heapq.heappop(heap)
        if depth >= MAX_GK_DEPTH or ie <= ifl:
            # cannot improve this piece; park it
            done.add(iv)
            done_e += ie
            continue
        mid = 0.5 * (lo + hi)
        v1, e1, f1 = _gk15(f, lo, mid)
        v2, e2, f2 = _gk15(f, mid, hi)
        evals += 30
        intervals += 1
        total_v.add(v1 + v2 - iv)
        total_e += e1 + e2 - ie
        heapq.heappush(heap, (-e1, lo, mid, v1, e1, f1, depth + 1))
        heapq.heappush(heap, (-e2, mid, hi, v2, e2, f2, depth + 1))
    acc = Accumulator()
    err = done_e
    for item in heap:
        acc.add(item[3])
        err += item[4]
    acc.add(done.value)
    value = acc.value
    err = max(err, total_e if not heap else err)
    return QuadResult(value, err, evals, err <= tol * max(1.0, abs(value)))


def gauss_kronrod_vector(f: Callable[[float], Sequence[float]], a: float, b: float,
                         tol: float = 1e-12) -> tuple[list[float], float, bool]:
    """Adaptive GK 7/15 for a vector-valued integrand.

    Every component shares the same subdivision; the error used for
    refinement is the largest component error. Returns (values, max_err, converged).
    """
    def rule(lo, hi):
        c = 0.5 * (lo + hi)
        h = 0.5 * (hi - lo)
        fc = list(f(c))
        k = [_WGK[7] * y for y in fc]
        g = [_WG[3] * y for y in fc]
        mag = [abs(y) * _WGK[7] for y in fc]
        for i in range(7):
            dx = h * _XGK[i]
            f1 = f(c - dx)
            f2 = f(c + dx)
            for j, (y1, y2) in enumerate(zip(f1, f2)):
                k[j] += _WGK[i] * (y1 + y2)
                mag[j] += _WGK[i] * (abs(y1) + abs(y2))
                if i % 2 == 1:
                    g[j] += _WG[i // 2] * (y1 + y2)
        vals = [h * kk for kk in k]
        errs = [max(abs(h * (kk - gg)), 50.0 * EPS * abs(h) * m) for kk, gg, m in zip(k, g, mag)]
        return vals, errs

    pieces = []
    vals, errs = rule(a, b)
    heap = [(-max(errs), 0, a, b, vals, errs, 0)]
    counter = 1
    converged = False
    while True:
        total_err = sum(-item[0] for item in heap)
        if total_err <= tol:
            converged = True
            break
        if counter >= MAX_GK_INTERVALS:
            break
        negerr, _, lo, hi, v, e, depth = heapq.heappop(heap)
        if depth >= MAX_GK_DEPTH:
            pieces.append((v, e))
            continue
        mid = 0.5 * (lo + hi)
        for (l2, h2) in ((lo, mid), (mid, hi)):
            v2, e2 = rule(l2, h2)
            heapq.heappush(heap, (-max(e2), counter, l2, h2, v2, e2, depth + 1))
            counter += 1
    pieces.extend((item[4], item[5]) for item in heap)
    n = len(pieces[0][0])
    out = []
    for j in range(n):
        acc = Accumulator()
        for v, _ in pieces:
            acc.add(v[j])
        out.append(acc.value)
    max_err = max(sum(e[j] for _, e in pieces) for j in range(n))
    return out, max_err, converged and max_err <= tol


# ---------------------------------------------------------------------------
# Front ends

def integrate(problem: QuadProblem) -> QuadResult:
    """Integrate a QuadProblem.

    Infinite limits are mapped to finite ones; tanh-sinh is used when an
    endpoint is flagged singular (or breakpoints are given, each piece then
    being singular at its ends), Gauss-Kronrod otherwise.
    """
    f = problem.integrand
    a, b, tol = problem.lower, problem.upper, problem.target_tol
    if math.isinf(a) and math.isinf(b):
        left = integrate_semi_infinite(lambda u: f(-u), 0.0, tol)
        right = integrate_semi_infinite(f, 0.0, tol)
        return left + right
    if math.isinf(b):
        return integrate_semi_infinite(f, a, tol)
    if math.isinf(a):
        return integrate_semi_infinite(lambda u: f(-u), -b, tol)
    if problem.breakpoints:
        pts = [a] + sorted(p for p in problem.breakpoints if a < p < b) + [b]
        res = None
        for lo, hi in zip(pts[:-1], pts[1:]):
            r = tanh_sinh(f, lo, hi, tol)
            res = r if res is None else res + r
        return res
    if problem.singular_lower or problem.singular_upper:
        return tanh_sinh(f, a, b, tol)
    return gauss_kronrod(f, a, b, tol)


def integrate_semi_infinite(integrand: Callable[[float], float], a: float,
                            tol: float = 1e-12) -> QuadResult:
    """Integral of `integrand` over [a, inf) via u = a + t/(1-t)."""

    def g(t, dlo, dhi):
        # dhi is 1 - t computed without cancellation
        if t > 1e150 * dhi:
            return 0.0  # beyond this the 1/u^2 decay makes the contribution vanish
        u = a + t / dhi
        return integrand(u) / (dhi * dhi)

    return tanh_sinh_dist(g, 0.0, 1.0, tol)


def quad(f: Callable[[float], float], a: float, b: float, tol: float = 1e-12,
         singular: bool = False, points: Sequence[float] = ()) -> QuadResult:
    """Convenience wrapper: quad(f, a, b) with optional singular ends or breakpoints."""
    if a == b:
        return QuadResult(0.0, 0.0, 0, True)
    if a > b:
        r = quad(f, b, a, tol, singular, points)
        return QuadResult(-r.value, r.err_estimate, r.evals, r.converged)
    tol = min(max(tol, 1e-14), 1e-3)
    return integrate(QuadProblem(f, a, b, singular, singular, tol, tuple(points)))
