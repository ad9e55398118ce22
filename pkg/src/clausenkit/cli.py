"""Command-line front end: eval, verify, ctet and bench.

Exit codes: 0 success, 1 mathematical failure (domain error, failed identity,
route disagreement), 2 usage error.
"""

from __future__ import annotations

import argparse
import math
import sys
import time
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

from . import ctet as _ctet
from . import identities
from .logtrig import psi_closed, psi_hypergeometric
from .numkit import DomainError, ExtReal
from .quad import QuadResult, quad
from .specfun import (
    chi2, cl2, cl2_integral, elliptic_k_agm, i_xu, legendre_p, lerch_phi, li2, lobachevsky, lsn, pfq_series,
    polygamma, ti2,
)

EXIT_OK = 0
EXIT_MATH = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def fmt(x: float) -> str:
    """17 significant digits, '.' separator, independent of locale."""
    if math.isnan(x):
        return "nan"
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return format(x, ".17g")


# ---------------------------------------------------------------------------
# eval

@dataclass(frozen=True)
class Entry:
    arity: tuple[int, ...] | None  # None: variable, checked by the evaluator
    usage: str
    run: Callable[[Sequence[float], float | None], object]


def _int_arg(x: float, name: str) -> int:
    if not float(x).is_integer():
        raise UsageError(f"{name} must be an integer, got {fmt(x)}")
    return int(x)


def _complex_arg(args: Sequence[float]) -> complex:
    return complex(args[0], args[1] if len(args) > 1 else 0.0)


def _pfq(args: Sequence[float], tol: float | None) -> ExtReal:
    if len(args) < 3:
        raise UsageError("pfq needs p q a_1..a_p b_1..b_q z")
    p, q = _int_arg(args[0], "p"), _int_arg(args[1], "q")
    if p < 0 or q < 0 or len(args) != 3 + p + q:
        raise UsageError(f"pfq with p={p}, q={q} needs {3 + max(p, 0) + max(q, 0)} arguments")
    num, den, z = list(args[2:2 + p]), list(args[2 + p:2 + p + q]), args[-1]
    return pfq_series(num, den, z, tol if tol is not None else 1e-15)


def _with_tol(fn: Callable, default: float):
    return lambda tol: fn(tol if tol is not None else default)


REGISTRY: dict[str, Entry] = {
    "cl2": Entry((1,), "cl2 THETA", lambda a, tol: cl2(a[0])),
    "li2": Entry((1, 2), "li2 RE [IM]", lambda a, tol: li2(_complex_arg(a))),
    "chi2": Entry((1, 2), "chi2 RE [IM]", lambda a, tol: chi2(_complex_arg(a))),
    "ti2": Entry((1,), "ti2 X", lambda a, tol: ti2(a[0])),
    "lerch_phi": Entry((3, 4), "lerch_phi Z S A  or  lerch_phi RE IM S A",
                       lambda a, tol: lerch_phi(_complex_arg(a[:-2]), _int_arg(a[-2], "s"), a[-1],
                                                tol if tol is not None else 1e-14)),
    "lobachevsky": Entry((1,), "lobachevsky X", lambda a, tol: lobachevsky(a[0])),
    "lsn": Entry((2,), "lsn N THETA",
                 lambda a, tol: lsn(_int_arg(a[0], "n"), a[1], tol if tol is not None else 1e-12)),
    "psi": Entry((1,), "psi X   (int_0^x asin(t)/t dt)", lambda a, tol: psi_hypergeometric(a[0])),
    "psi_closed": Entry((1,), "psi_closed X", lambda a, tol: psi_closed(a[0])),
    "polygamma": Entry((2,), "polygamma ORDER X", lambda a, tol: polygamma(_int_arg(a[0], "order"), a[1])),
    "pfq": Entry(None, "pfq P Q A_1..A_P B_1..B_Q Z", _pfq),
    "legendre_p": Entry((2,), "legendre_p N X", lambda a, tol: legendre_p(_int_arg(a[0], "n"), a[1])),
    "elliptic_k": Entry((1,), "elliptic_k K   (modulus)", lambda a, tol: elliptic_k_agm(a[0])),
    "i_xu": Entry((2,), "i_xu X U", lambda a, tol: i_xu(a[0], a[1])),
    "ctet_series": Entry((0,), "ctet_series", lambda a, tol: _ctet.ctet_series(tol if tol is not None else 1e-14)),
    "ctet_clausen": Entry((0,), "ctet_clausen", lambda a, tol: _ctet.ctet_clausen()),
    "ctet_rajantie": Entry((0,), "ctet_rajantie",
                           lambda a, tol: _ctet.ctet_rajantie(tol if tol is not None else 1e-12)),
    "ctet_srp": Entry((0,), "ctet_srp", lambda a, tol: _ctet.ctet_srp()),
}


def _parse_reals(raw: Sequence[str]) -> list[float]:
    out = []
    for s in raw:
        try:
            out.append(float(s))
        except ValueError:
            raise UsageError(f"not a number: {s!r}") from None
    return out


def _print_value(name: str, args: Sequence[float], result: object, out) -> None:
    print(f"fn = {name}", file=out)
    print("args = " + " ".join(fmt(a) for a in args), file=out)
    if isinstance(result, ExtReal):
        print(f"value = {fmt(result.value)}", file=out)
        print(f"bound = {fmt(result.bound)}", file=out)
    elif isinstance(result, QuadResult):
        print(f"value = {fmt(result.value)}", file=out)
        print(f"bound = {fmt(result.err_estimate)}", file=out)
        print(f"converged = {str(result.converged).lower()}", file=out)
    elif isinstance(result, complex):
        print(f"value = {fmt(result.real)}", file=out)
        print(f"imag = {fmt(result.imag)}", file=out)
        print("bound = unavailable", file=out)
    else:
        print(f"value = {fmt(float(result))}", file=out)
        print("bound = unavailable", file=out)


def cmd_eval(ns, out) -> int:
    entry = REGISTRY.get(ns.fn)
    if entry is None:
        raise UsageError(f"unknown function {ns.fn!r}; known: {', '.join(sorted(REGISTRY))}")
    args = _parse_reals(ns.args)
    if entry.arity is not None and len(args) not in entry.arity:
        raise UsageError(f"{ns.fn} takes {' or '.join(map(str, entry.arity))} argument(s): {entry.usage}")
    if ns.tol is not None and not ns.tol > 0:
        raise UsageError("--tol must be positive")
    try:
        result = entry.run(args, ns.tol)
    except UsageError:
        raise
    except (DomainError, ArithmeticError, ValueError) as exc:
        print(f"error: {ns.fn}: {exc}", file=sys.stderr)
        return EXIT_MATH
    _print_value(ns.fn, args, result, out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify

def cmd_verify(ns, out) -> int:
    if not ns.tol_scale > 0:
        raise UsageError("--tol-scale must be positive")
    jobs = ns.jobs if ns.jobs is not None else identities.default_jobs()
    if jobs < 1:
        raise UsageError("--jobs must be at least 1")
    if ns.filter and not identities.select(ns.filter):
        raise UsageError(f"no identity matches {ns.filter!r}")
    report = identities.run_suite(ns.filter, ns.seed, ns.tol_scale, jobs)
    out.write(identities.render_report(report, "markdown").decode("utf-8"))
    if ns.json:
        with open(ns.json, "wb") as fh:
            fh.write(identities.render_report(report, "json", include_timing=ns.timing))
    return EXIT_OK if report.ok else EXIT_MATH


# ---------------------------------------------------------------------------
# ctet

def _dd_digits(value: _ctet.DD, digits: int) -> str:
    with localcontext() as ctx:
        ctx.prec = digits
        d = +(Decimal(value.hi) + Decimal(value.lo))
    return format(d, "f") if abs(d) >= Decimal("1e-5") else format(d, "e")


def cmd_ctet(ns, out) -> int:
    digits = ns.digits
    if not 1 <= digits <= 25:
        raise UsageError("--digits must lie in 1..25 (above 15 only the series route carries the extra digits)")
    routes = list(_ctet.Route) if ns.route == "all" else [_ctet.Route(ns.route)]
    values = _ctet.ctet_routes(routes)
    shown = min(digits, 17)
    for rv in values:
        if digits > 15 and rv.route is _ctet.Route.SERIES:
            text = _dd_digits(_ctet.ctet_series_reference(), digits)
            note = "double-double"
        else:
            text = format(rv.value.value, f".{shown}g")
            note = "binary64" if digits <= 15 else "binary64, digits beyond 17 unavailable"
        print(f"{rv.route.value:<9} {text}  bound {fmt(rv.value.bound)}  ({note})", file=out)
    deltas = _ctet.pairwise_deltas(values)
    for d in deltas:
        verdict = "ok" if d.ok else "DISAGREE"
        print(f"|{d.a.value} - {d.b.value}| = {format(d.delta, '.3e')}  tolerance {format(d.tolerance, '.0e')}  "
              f"{verdict}", file=out)
    return EXIT_OK if all(d.ok for d in deltas) else EXIT_MATH


# ---------------------------------------------------------------------------
# bench

# The quadrature strategies are slow, so accuracy (and the timing of the
# quadrature strategies) uses an evenly strided subsample of the grid.
BENCH_SUBSAMPLE = 1000
_PI_40 = Decimal("3.141592653589793238462643383279502884197")
_PREC = 40


@lru_cache(maxsize=1)
def _bernoulli_even(count: int = 80) -> list[Fraction]:
    """B_2, B_4, ... from the Akiyama-Tanigawa recurrence."""
    out, a = [], []
    for m in range(2 * count + 1):
        a.append(Fraction(1, m + 1))
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
        if m >= 2 and m % 2 == 0:
            out.append(a[0])
    return out


def _decimal_cl2(theta: float) -> float:
    """Bernoulli series for Cl2 in 40-digit decimal arithmetic, after reduction to [-pi, pi]."""
    with localcontext() as ctx:
        ctx.prec = _PREC
        t = Decimal(theta) % (2 * _PI_40)
        if t > _PI_40:
            t -= 2 * _PI_40
        if t == 0:
            return 0.0
        total = t - t * abs(t).ln()
        fact = Decimal(1)
        power = t
        eps = Decimal(10) ** -(_PREC - 2)
        for k, b in enumerate(_bernoulli_even(), start=1):
            fact *= (2 * k - 1) * (2 * k)
            power *= t * t
            term = abs(Decimal(b.numerator) / b.denominator) * power / (2 * k * (2 * k + 1) * fact)
            total += term
            if abs(term) < eps:
                break
        return float(total)


def _decimal_li2_small(z: Decimal) -> Decimal:
    total, power, k = Decimal(0), z, 1
    eps = Decimal(10) ** -(_PREC - 2)
    while abs(power) > eps:
        total += power / (k * k)
        k += 1
        power *= z
    return total


def _decimal_li2(x: float) -> float:
    """Li2 on [-1, 1) in 40-digit decimal arithmetic via reflection and Landen's map."""
    with localcontext() as ctx:
        ctx.prec = _PREC
        z = Decimal(x)
        if z > Decimal("0.5"):
            w = 1 - z
            v = _PI_40 ** 2 / 6 - z.ln() * w.ln() - _decimal_li2_small(w)
        elif z < Decimal("-0.5"):
            lw = (1 - z).ln()
            v = -_decimal_li2_small(z / (z - 1)) - lw * lw / 2
        else:
            v = _decimal_li2_small(z)
        return float(v)


def _li2_quad(z: float) -> float:
    return quad(lambda t: -math.log1p(-t) / t if t else 1.0, 0.0, z, 1e-12).value


BENCH: dict[str, tuple[Callable[[int], list[float]], Callable[[float], float], dict[str, tuple[Callable, bool]]]] = {
    "cl2": (
        lambda n: [2 * math.pi * (i + 0.5) / n for i in range(n)],
        _decimal_cl2,
        {"series": (lambda t: cl2(t).value, True),
         "quadrature": (lambda t: cl2_integral(t, 1e-12).value, False)},
    ),
    "li2": (
        lambda n: [-1.0 + 1.99 * (i + 0.5) / n for i in range(n)],
        _decimal_li2,
        {"series": (lambda z: li2(z).real, True),
         "quadrature": (_li2_quad, False)},
    ),
}


def cmd_bench(ns, out) -> int:
    if not 1 <= ns.points <= 1_000_000:
        raise UsageError("--points must lie in 1..1000000")
    grid_fn, oracle, strategies = BENCH[ns.fn]
    grid = grid_fn(ns.points)
    stride = max(1, len(grid) // BENCH_SUBSAMPLE)
    sub = grid[::stride]
    reference = [oracle(x) for x in sub]
    print("strategy,mean_ns,max_abs_err", file=out)
    for name, (fn, fast) in strategies.items():
        pts = grid if fast else sub
        start = time.perf_counter_ns()
        for x in pts:
            fn(x)
        mean_ns = (time.perf_counter_ns() - start) / len(pts)
        err = max(abs(fn(x) - r) for x, r in zip(sub, reference))
        print(f"{name},{mean_ns:.0f},{format(err, '.3e')}", file=out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# entry point

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="clausenkit", description="Clausen-function numerics and identity verification")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    e = sub.add_parser("eval", help="evaluate a registered function")
    e.add_argument("fn")
    e.add_argument("args", nargs="*")
    e.add_argument("--tol", type=float, default=None)
    e.set_defaults(handler=cmd_eval)

    v = sub.add_parser("verify", help="run the identity suite")
    v.add_argument("--filter", default=None, help="glob over identity ids, e.g. 'I-0*' or 'I-02'")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--tol-scale", type=float, default=1.0)
    v.add_argument("--json", default=None, metavar="PATH")
    v.add_argument("--jobs", type=int, default=None)
    v.add_argument("--timing", action="store_true", help="record wall-clock times in the JSON report")
    v.set_defaults(handler=cmd_verify)

    c = sub.add_parser("ctet", help="C(1,1) by one or all routes")
    c.add_argument("--route", default="all", choices=["all"] + [r.value for r in _ctet.Route])
    c.add_argument("--digits", type=int, default=15)
    c.set_defaults(handler=cmd_ctet)

    b = sub.add_parser("bench", help="time and check evaluation strategies")
    b.add_argument("--fn", default="cl2", choices=sorted(BENCH))
    b.add_argument("--points", type=int, default=1000)
    b.set_defaults(handler=cmd_bench)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    try:
        ns = build_parser().parse_args(argv)
        return ns.handler(ns, sys.stdout)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
