import math
import time
from decimal import Decimal, localcontext

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from clausenkit.ctet import (
    RAJANTIE_TOLERANCE, CtetRoute, Route, SrpParameters, ctet_clausen, ctet_clausen_omega, ctet_clausen_shifted,
    ctet_rajantie, ctet_routes, ctet_series, ctet_series_reference, ctet_srp, ctet_srp_consolidated,
    pairwise_deltas, rajantie_decomposition, rajantie_elementary_piece, rajantie_integrand,
    rajantie_partial_fraction_integrand, route_tolerance, srp_gamma_terms, srp_integral,
)
from clausenkit.numkit import DomainError, ExtReal, constants
from clausenkit.specfun import cl2

# mpmath, 40 digits, identical by series, Clausen and quadrature
C11 = 0.17390061066200274273
C11_TEXT = "0.1739006106620027427265060171156659676138"


def test_series():
    r = ctet_series()
    assert abs(r.value - C11) < 1e-15
    assert abs(r.value - C11) <= r.bound + 1e-17


def test_series_reference_double_double():
    ref = ctet_series_reference()
    with localcontext() as ctx:
        ctx.prec = 50
        err = abs(Decimal(ref.hi) + Decimal(ref.lo) - Decimal(C11_TEXT))
    assert err < Decimal("1e-28")


def test_clausen_forms():
    for f in (ctet_clausen, ctet_clausen_omega, ctet_clausen_shifted):
        r = f()
        assert abs(r.value - C11) <= r.bound, f.__name__
        assert r.bound < 1e-13, f.__name__


def test_omega_alpha_coincide():
    k = constants()
    assert math.asin(1 / 3) == pytest.approx(k.alpha, abs=1e-16)
    assert abs(k.omega - k.alpha) < 1e-15


def test_rajantie():
    r = ctet_rajantie()
    assert abs(r.value - C11) < 1e-12
    assert abs(r.value - C11) <= 10 * r.bound + 1e-15
    with pytest.raises(DomainError):
        ctet_rajantie(1e-14)


@pytest.mark.parametrize("x", [0.0, 0.25, 0.5, 0.9, 1.0])
def test_rajantie_partial_fractions(x):
    assert rajantie_partial_fraction_integrand(x) == pytest.approx(rajantie_integrand(x), abs=1e-14)


def test_rajantie_elementary_piece():
    q, atans, closed = rajantie_elementary_piece()
    assert abs(q.value - atans) < 1e-13
    assert abs(atans - closed) < 1e-14


def test_rajantie_decomposition_total():
    pieces = rajantie_decomposition()
    assert abs(pieces["total"] * 4 * math.sqrt(2) - C11) < 1e-11


def test_srp():
    assert abs(ctet_srp().value - C11) < 1e-14
    assert abs(ctet_srp_consolidated().value - C11) < 1e-14
    assert abs(srp_integral().value - 8 * math.pi ** 3 * C11) < 1e-11


def test_srp_gamma_terms():
    # all three Gamma_j equal, so their Clausen terms coincide
    terms = srp_gamma_terms()
    assert len(terms) == 3 and terms[0] == terms[1] == terms[2]
    assert terms[0] == cl2(math.pi - 2 * math.atan(-1.75 / math.sqrt(2))).value


def test_srp_parameter_validation():
    with pytest.raises(DomainError):
        SrpParameters(Gamma=(1.0, 2.0))


def test_route_tolerances():
    assert route_tolerance(Route.SERIES, Route.CLAUSEN) == 1e-12
    assert route_tolerance(Route.SRP, Route.SERIES) == 1e-11
    assert route_tolerance(Route.RAJANTIE, Route.SRP) == RAJANTIE_TOLERANCE == 1e-9


def test_all_routes_agree_quickly():
    start = time.perf_counter()
    values = ctet_routes()
    elapsed = time.perf_counter() - start
    assert [v.route for v in values] == list(Route)
    deltas = pairwise_deltas(values)
    assert len(deltas) == 6
    assert all(d.ok for d in deltas), [(d.a, d.b, d.delta) for d in deltas if not d.ok]
    assert elapsed < 5.0


def test_disagreement_is_flagged():
    bad = [CtetRoute(Route.SERIES, ExtReal(C11)), CtetRoute(Route.CLAUSEN, ExtReal(C11 + 1e-10))]
    (d,) = pairwise_deltas(bad)
    assert not d.ok


def test_routes_accept_strings():
    (v,) = ctet_routes(["clausen"])
    assert v.route is Route.CLAUSEN


# --- properties ---

@settings(max_examples=20, deadline=None)
@given(st.floats(0.5, 5.0))
def test_srp_scales_with_sigma(s):
    # rescaling sigma and every Gamma, gamma by the same factor leaves the Clausen arguments fixed
    base = SrpParameters()
    scaled = SrpParameters(sigma_abs=base.sigma_abs * s, Gamma=tuple(g * s for g in base.Gamma),
                           gamma=tuple(tuple(g * s for g in row) for row in base.gamma))
    assert srp_integral(scaled).value * s == pytest.approx(srp_integral(base).value, rel=1e-13)
