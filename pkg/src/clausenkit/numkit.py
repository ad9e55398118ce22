"""Foundation arithmetic: compensated sums, double-double pairs, exact
Bernoulli numbers, series acceleration and the named constants."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Sequence

EPS = 2.0 ** -52
UNIT_ROUNDOFF = 2.0 ** -53


class DomainError(ValueError):
    """Raised when an argument lies outside an operation's domain."""


@dataclass(frozen=True)
class ExtReal:
    """A binary64 approximation paired with an absolute error bound."""

    value: float
    bound: float = 0.0

    def __post_init__(self):
        if not math.isfinite(self.value):
            raise ValueError(f"ExtReal value must be finite, got {self.value!r}")
        if not (self.bound >= 0.0 and math.isfinite(self.bound)):
            raise ValueError(f"ExtReal bound must be finite and >= 0, got {self.bound!r}")

    def __float__(self):
        return self.value

    def __add__(self, other):
        if isinstance(other, ExtReal):
            v = self.value + other.value
            return ExtReal(v, self.bound + other.bound + UNIT_ROUNDOFF * abs(v))
        v = self.value + float(other)
        return ExtReal(v, self.bound + UNIT_ROUNDOFF * abs(v))

    __radd__ = __add__

    def __neg__(self):
        return ExtReal(-self.value, self.bound)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: float) -> "ExtReal":
        v = self.value * c
        return ExtReal(v, self.bound * abs(c) + UNIT_ROUNDOFF * abs(v))

    def contains(self, x: float, slack: float = 0.0) -> bool:
        return abs(self.value - x) <= self.bound + slack


class Accumulator:
    """Neumaier's improved Kahan-Babuska running sum.

    Tracks the compensation term and the sum of magnitudes, so the rounding
    error of the final value is bounded by 2*eps*sum|t| for any term order.
    """

    __slots__ = ("_s", "_c", "_abs", "_n")

    def __init__(self):
        self._s = 0.0
        self._c = 0.0
        self._abs = 0.0
        self._n = 0

    def add(self, x: float) -> None:
        if not math.isfinite(x):
            raise ValueError("non-finite input")
        s = self._s
        t = s + x
        if abs(s) >= abs(x):
            self._c += (s - t) + x
        else:
            self._c += (x - t) + s
        self._s = t
        self._abs += abs(x)
        self._n += 1

    def extend(self, xs: Iterable[float]) -> None:
        for x in xs:
            self.add(x)

    @property
    def value(self) -> float:
        return self._s + self._c

    @property
    def abs_sum(self) -> float:
        return self._abs

    @property
    def count(self) -> int:
        return self._n

    def result(self, truncation: float = 0.0) -> ExtReal:
        return ExtReal(self.value, 2.0 * EPS * self._abs + truncation)


def comp_sum(terms: Iterable[float], truncation: float = 0.0) -> ExtReal:
    """Compensated sum of `terms`; `truncation` is added to the bound."""
    acc = Accumulator()
    acc.extend(float(t) for t in terms)
    return acc.result(truncation)


# ---------------------------------------------------------------------------
# Double-double pairs (error-free transformations)

_SPLITTER = 134217729.0  # 2**27 + 1


def two_sum(a: float, b: float) -> tuple[float, float]:
    s = a + b
    bb = s - a
    err = (a - (s - bb)) + (b - bb)
    return s, err


def _split(a: float) -> tuple[float, float]:
    t = _SPLITTER * a
    hi = t - (t - a)
    return hi, a - hi


def two_prod(a: float, b: float) -> tuple[float, float]:
    p = a * b
    ah, al = _split(a)
    bh, bl = _split(b)
    err = ((ah * bh - p) + ah * bl + al * bh) + al * bl
    return p, err


@dataclass(frozen=True)
class DD:
    """Unevaluated sum hi + lo carrying roughly 106 bits."""

    hi: float
    lo: float = 0.0

    @staticmethod
    def of(x) -> "DD":
        if isinstance(x, DD):
            return x
        if isinstance(x, Fraction):
            hi = float(x)
            return DD(hi, float(x - Fraction(hi)))
        return DD(float(x), 0.0)

    def __float__(self):
        return self.hi + self.lo

    def __add__(self, other) -> "DD":
        o = DD.of(other)
        s, e = two_sum(self.hi, o.hi)
        e += self.lo + o.lo
        hi, lo = two_sum(s, e)
        return DD(hi, lo)

    __radd__ = __add__

    def __neg__(self) -> "DD":
        return DD(-self.hi, -self.lo)

    def __sub__(self, other) -> "DD":
        return self + (-DD.of(other))

    def __mul__(self, other) -> "DD":
        o = DD.of(other)
        p, e = two_prod(self.hi, o.hi)
        e += self.hi * o.lo + self.lo * o.hi
        hi, lo = two_sum(p, e)
        return DD(hi, lo)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "DD":
        o = DD.of(other)
        q1 = self.hi / o.hi
        r = self - o * q1
        q2 = r.hi / o.hi
        r = r - o * q2
        q3 = r.hi / o.hi
        hi, lo = two_sum(q1, q2)
        return DD(hi, lo) + q3


# ---------------------------------------------------------------------------
# Bernoulli numbers

@lru_cache(maxsize=None)
def _bernoulli_table(nmax: int) -> tuple[Fraction, ...]:
    # Akiyama-Tanigawa, B_1 = +1/2 convention (irrelevant: only even indices used)
    a = [Fraction(0)] * (nmax + 1)
    out = []
    for m in range(nmax + 1):
        a[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
        out.append(a[0])
    return tuple(out)


def bernoulli_fraction(n: int) -> Fraction:
    """Exact B_n for n >= 0."""
    if n < 0:
        raise DomainError("Bernoulli index must be >= 0")
    size = max(64, 1 << (n.bit_length()))
    return _bernoulli_table(size)[n]


def bernoulli_abs(two_k: int) -> float:
    """|B_{2k}| for even 2 <= two_k <= 60."""
    if isinstance(two_k, bool) or not isinstance(two_k, int):
        raise DomainError("index must be an integer")
    if two_k % 2 or not 2 <= two_k <= 60:
        raise DomainError(f"index must be even and in [2, 60], got {two_k}")
    return float(abs(bernoulli_fraction(two_k)))


# ---------------------------------------------------------------------------
# Series acceleration

def alternating_sum(a: Callable[[int], float], n: int = 30) -> float:
    """sum_{k>=0} (-1)^k a(k) by the Cohen-Rodriguez Villegas-Zagier scheme.

    Error is about 5.8^-n times the size of a(0) for totally monotone a.
    """
    d = (3.0 + math.sqrt(8.0)) ** n
    d = 0.5 * (d + 1.0 / d)
    b = -1.0
    c = -d
    acc = Accumulator()
    for k in range(n):
        c = b - c
        acc.add(c * a(k))
        b = (k + n) * (k - n) * b / ((k + 0.5) * (k + 1.0))
    return acc.value / d


def richardson_limit(values: Sequence[float], exponents: Sequence[float]) -> tuple[float, float]:
    """Extrapolate S(h) values taken at N, 2N, 4N, ... to N -> infinity.

    The error model is sum_j c_j N^-exponents[j]. Returns the extrapolated
    limit and the magnitude of the last correction as an error estimate.
    """
    table = [list(values)]
    m = len(values)
    for j in range(min(m - 1, len(exponents))):
        f = 2.0 ** exponents[j]
        prev = table[-1]
        row = [(f * prev[i + 1] - prev[i]) / (f - 1.0) for i in range(len(prev) - 1)]
        table.append(row)
    best = table[-1][-1]
    if len(table) >= 2:
        err = abs(table[-1][-1] - table[-2][-1])
    else:
        err = abs(values[-1] - values[-2]) if m > 1 else float("inf")
    return best, err


# ---------------------------------------------------------------------------
# Named constants

@dataclass(frozen=True)
class ConstantTable:
    omega: float
    alpha: float
    theta_plus: float
    catalan: float
    ln2: float
    pi: float
    zeta2: float


def catalan_alternating() -> float:
    """Catalan's constant from sum (-1)^n/(2n+1)^2 with CVZ acceleration."""
    return alternating_sum(lambda k: 1.0 / ((2 * k + 1) * (2 * k + 1)), 28)


@lru_cache(maxsize=1)
def constants() -> ConstantTable:
    table = ConstantTable(
        omega=math.atan(1.0 / (2.0 * math.sqrt(2.0))),
        alpha=math.asin(1.0 / 3.0),
        theta_plus=-math.atan(4.0 * math.sqrt(2.0) / 7.0),
        catalan=catalan_alternating(),
        ln2=math.log(2.0),
        pi=math.pi,
        zeta2=math.pi * math.pi / 6.0,
    )
    if abs(table.omega - table.alpha) >= 1e-15:
        raise AssertionError("omega and alpha disagree")
    if abs(table.theta_plus + 2.0 * table.omega) >= 1e-15:
        raise AssertionError("theta_plus != -2 omega")
    return table
