import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from clausenkit.harmonic import (
    Basis, SumSpec, bernoulli_trig_sums, catalan_split_elliptic, catalan_split_sums, cl2_cos_half_integral,
    cl2_cos_half_series, cl2_legendre_moment_series, cl2_legendre_raw, cl2_legendre_series,
    clausen_hypergeometric_series, elliptic_k_unit_integral, even_legendre_ratio_sum, harm, harm_polygamma,
    harmonic_gf, harmonic_gf_closed, harmonic_gf_integrated, harmonic_gf_partial, harris_coefficients, harris_v,
    harris_vbar, ik_exact, ik_hypergeometric, ik_quad, legendre_moment, legendre_zero_sum,
    legendre_zero_sum_limit, li2_legendre_series, nielsen_direct, nielsen_integral, odd_reciprocal_harmonic,
    odd_reciprocal_sum, pochhammer_square_sum_direct, pochhammer_square_sum_hyper, ramanujan_h,
    ramanujan_h_series, ramanujan_shift_closed, ramanujan_shift_series, s22_closed_forms, s2_ramanujan,
    s2beta_closed, s2beta_theta, s_family, s_integral_reps, sqrt_log_integral, sqrt_log_integral_closed,
    st_closed, st_series, tan_integral_clausen, theta_of_a, trig_integral_quad,
)
from clausenkit.numkit import DomainError, constants
from clausenkit.specfun import cl2, li2

PI = math.pi
LN2 = math.log(2.0)
SQRT2 = math.sqrt(2.0)

# mpmath reference values, 20 digits
G = 0.91596559417721901505
S22 = -0.074879750090946744833      # sum (-1/8)^n H_n/(n+1/2)
S23 = -0.023894081883225381151      # sum (-1/27)^n H_n/(n+1/2)
S_EIGHTH = -0.11321351707707679004  # sum (-1/8)^n H_2n/(n+1/2)
T_EIGHTH = 1.860184550779022524     # sum (-1/8)^n H_(2n+1)/(n+1/2)
RAM_H_01 = 0.10050369668452253293
SPLIT_A = 0.34565490194916410039    # (pi/2) sum ((1/2)_m/m!)^2/(2m)
SPLIT_B = 0.26113486155954141088    # (pi/2) sum ((1/2)_m/m!)^2/(2m+1)
POCH_THIRD = 0.14215601347906100972  # (a, b) = (1/3, 1)


# --- harmonic numbers ---

@pytest.mark.parametrize("n, r, exact", [(0, 1, Fraction(0)), (3, 1, Fraction(11, 6)), (4, 2, Fraction(205, 144))])
def test_harm_small(n, r, exact):
    assert harm(n, r) == float(exact)


def test_harm_polygamma_cross_check():
    for n, r in itertools.product((1, 10, 64, 65, 500), (1, 2, 3, 4)):
        assert harm(n, r) == pytest.approx(harm_polygamma(n, r), rel=1e-13)


def test_harm_domain():
    with pytest.raises(DomainError):
        harm(-1)
    with pytest.raises(DomainError):
        harm(3, 5)


# --- the S-family ---

def test_sumspec_validation():
    with pytest.raises(DomainError):
        SumSpec(2, 1)
    with pytest.raises(DomainError):
        SumSpec(0, 2)


def test_s22_direct_sum():
    r = s_family(SumSpec(2, 2))
    assert abs(r.value - S22) < 1e-15 and r.bound < 1e-15
    assert abs(s_family(SumSpec(2, 3)).value - S23) < 1e-15


def test_s22_clausen_value():
    tp = constants().theta_plus
    assert abs(4 * SQRT2 * (cl2(tp + PI).value + tp * LN2) - S22) < 1e-14


def test_s22_closed_forms_agree():
    forms = s22_closed_forms()
    assert len(forms) == 4
    assert all(abs(f - S22) < 1e-12 for f in forms)


def test_large_beta_leaves_leading_term():
    # H_0 = 0, so the n = 1 term -1/(1.5 beta^3) dominates
    assert s_family(SumSpec(2, 1e3)).value == pytest.approx(-1 / 1.5e9, rel=1e-6)


@pytest.mark.parametrize("beta", [2.0, 3.0, 4.0])
def test_s2beta_closed(beta):
    assert abs(s2beta_closed(beta) - s_family(SumSpec(2, beta)).value) < 1e-12


def test_s2beta_domain():
    with pytest.raises(DomainError):
        s2beta_closed(0.5)


def test_clausen_hypergeometric_series():
    r = clausen_hypergeometric_series(2.0)
    assert abs(r.value - 2 ** 1.5 * cl2(s2beta_theta(2.0)).value) < 1e-12


def test_ramanujan_route():
    assert abs(s2_ramanujan(2.0) - S22) < 1e-13


GRID = [SumSpec(a, b, j, r) for a, b, j, r in itertools.product((2, 3), (2, 3), (1, 2), (1, 2))]


@pytest.mark.parametrize("spec", GRID, ids=lambda s: f"a{s.alpha}-b{s.beta}-j{s.j}-r{s.r}")
def test_integral_representations_agree(spec):
    direct = s_family(spec)
    reps = s_integral_reps(spec)
    assert reps, "every grid member has at least the Lerch-kernel route"
    for rv in reps:
        assert rv.converged, rv.name
        assert abs(rv.value.value - direct.value) <= 10 * rv.value.bound + direct.bound + 1e-12, rv.name


def test_all_routes_present_at_two_two():
    names = {rv.name for rv in s_integral_reps(SumSpec(2, 2))}
    assert {"hypergeometric_kernel", "incomplete_beta", "laplace", "log_squared", "free_parameter",
            "harmonic_log_kernel", "nielsen", "lerch_kernel", "polylog_kernel"} <= names


@pytest.mark.parametrize("spec", [SumSpec(2, -2), SumSpec(2, -2, 2), SumSpec(2, 2, 1, 1, 2, 1), SumSpec(3, 2, 1, 2, 2, 0)])
def test_integral_representations_other_specs(spec):
    direct = s_family(spec)
    for rv in s_integral_reps(spec):
        assert abs(rv.value.value - direct.value) <= 10 * rv.value.bound + 1e-12, rv.name


def test_unknown_route_rejected():
    with pytest.raises(DomainError):
        s_integral_reps(SumSpec(2, 2), only=["nope"])


# --- generating functions ---

@pytest.mark.parametrize("z", [0.5, -0.5, 0.9, -0.9])
def test_harmonic_gf_partial_tends_to_zero(z):
    assert abs(harmonic_gf_partial(z, 400)) < 1e-10


@pytest.mark.parametrize("z", [0.5, -0.5, 0.9, -0.9])
def test_harmonic_gf_integrated(z):
    assert abs(harmonic_gf_integrated(z).value - 0.5 * math.log1p(-z) ** 2) < 1e-10


@pytest.mark.parametrize("z", [0.5, -0.5, 0.9, -0.9])
def test_harmonic_gf_order_two(z):
    assert abs(harmonic_gf(z, 2).value - li2(z).real / (1 - z)) < 1e-10
    assert abs(harmonic_gf_closed(z, 2) - li2(z).real / (1 - z)) < 1e-14


def test_nielsen_route():
    x = -0.125
    assert abs(nielsen_integral(x).value - S22) < 1e-12
    assert abs(nielsen_direct(x).value - S22) < 1e-14


def test_sqrt_log_integral_closed():
    for w in (0.1, 0.3, 0.8):
        q = sqrt_log_integral(w)
        c = sqrt_log_integral_closed(w)
        assert abs(c.imag) < 1e-11
        assert abs(q.value - c.real) < 1e-12


# --- s(x), t(x), Ramanujan, Harris ---

def test_st_closed_forms():
    s, t = st_closed(0.125)
    root = math.sqrt(0.125)
    assert abs(s - 1j * root * S_EIGHTH) < 1e-14
    assert abs(t - 1j * root * T_EIGHTH) < 1e-14
    ss, ts = st_series(0.125)
    assert abs(s - ss) < 1e-14 and abs(t - ts) < 1e-14
    assert math.atan(root) == pytest.approx(constants().omega, abs=1e-16)


def test_st_near_zero():
    s, t = st_closed(1e-12)
    assert abs(s) < 1e-10 and abs(t) < 1e-5


def test_ramanujan_h():
    assert abs(ramanujan_h(0.1) - RAM_H_01) < 1e-15
    assert abs(ramanujan_h_series(0.1, 200) - ramanujan_h(0.1)) < 1e-12


def test_ramanujan_shift():
    assert abs(ramanujan_shift_series(0.3, 300) - ramanujan_shift_closed(0.3)) < 1e-12


def test_harris_vbar():
    v, coeffs = harris_vbar(0.0)
    assert v.value == 0.0
    assert abs(harris_vbar(-0.4)[0].value + harris_vbar(0.4)[0].value) < 1e-15
    v, coeffs = harris_vbar(0.5, 60)
    assert abs(v.value - (harris_v(0.5) + 2 * 0.5 * LN2)) < 1e-10
    assert coeffs[0] == pytest.approx(2 * LN2, abs=1e-15)
    assert harris_coefficients(5) == pytest.approx(coeffs[:5], abs=1e-15)


# --- Legendre series ---

def test_cl2_legendre_catalan():
    r = cl2_legendre_series(PI / 2, 200)
    assert abs(r.value - G) <= r.bound


def test_cl2_legendre_at_one():
    r = cl2_legendre_series(1.0, 100)
    assert abs(r.value - cl2(1.0).value) <= r.bound
    assert abs(r.value - cl2(1.0).value) < 1e-6


def test_cl2_legendre_raw_converges_slowly():
    # without tail corrections the error is about -1/N
    raw = cl2_legendre_raw(1.0, 100)
    assert 5e-3 < abs(raw - cl2(1.0).value) < 2e-2


def test_even_legendre_sum_gives_zero_at_pi():
    r = even_legendre_ratio_sum()
    assert abs(r.value - (2 * LN2 - 1)) < 1e-12
    # Cl2(pi) = (1/2 - ln2) pi + (pi/2) * sum = 0
    assert abs((0.5 - LN2) * PI + PI / 2 * r.value) < 1e-12


def test_legendre_zero_sum():
    assert abs(legendre_zero_sum_limit().value - (LN2 - 1)) < 1e-12
    assert abs(legendre_zero_sum(4000) - (LN2 - 1)) < 1e-4


def test_li2_legendre_series():
    r = li2_legendre_series(0.5, 150)
    assert abs(r.value - li2(0.5).real) < 1e-5
    assert abs(li2_legendre_series(-1.0, 150).value + PI ** 2 / 12) < 1e-5


def test_pochhammer_square_sums():
    for a, b in ((0.5, 1.0), (1 / 3, 1.0)):
        d = pochhammer_square_sum_direct(a, b)
        h = pochhammer_square_sum_hyper(a, b)
        assert abs(d.value - h.value) < 1e-10
    assert abs(pochhammer_square_sum_direct(1 / 3, 1.0).value - POCH_THIRD) < 1e-12


def test_catalan_split():
    a, b = catalan_split_sums()
    assert abs(a.value - SPLIT_A) < 1e-12
    assert abs(b.value - SPLIT_B) < 1e-12
    qa, qb = catalan_split_elliptic()
    assert abs(qa.value - SPLIT_A) < 1e-12 and abs(qb.value - SPLIT_B) < 1e-12
    assert abs(elliptic_k_unit_integral().value - 2.0) < 1e-12


def test_legendre_moment_series():
    assert abs(cl2_legendre_moment_series(1.0, 60).value - G) < 1e-10
    a = 2 * SQRT2
    assert theta_of_a(a) == pytest.approx(math.acos(-7 / 9), abs=1e-15)
    assert abs(cl2_legendre_moment_series(a, 60).value - cl2(math.acos(-7 / 9)).value) < 1e-10


def test_legendre_moment_first_term():
    # k = 0 at a = 1: 2 int_0^1 v/(1+v^2) dv = ln 2
    assert 2 * float(ik_exact(1, 0)) == pytest.approx(LN2, abs=1e-16)


# --- exact Legendre integrals ---

def test_initial_conditions_exact():
    assert ik_exact(0, 0) == type(ik_exact(0, 0))(Fraction(0), Fraction(1, 4), Basis.PI)
    assert (ik_exact(0, 1).a, ik_exact(0, 1).b) == (Fraction(1), Fraction(-1, 4))
    assert (ik_exact(1, 0).a, ik_exact(1, 0).b, ik_exact(1, 0).basis) == (Fraction(0), Fraction(1, 2), Basis.LN2)
    assert (ik_exact(1, 1).a, ik_exact(1, 1).b) == (Fraction(1, 2), Fraction(-1, 2))


@pytest.mark.parametrize("j", [0, 1])
@pytest.mark.parametrize("k", range(13))
def test_ik_exact_against_quadrature(j, k):
    assert abs(float(ik_exact(j, k)) - ik_quad(j, k)) < 1e-12


@pytest.mark.parametrize("k", [4, 5])
def test_ik_hypergeometric(k):
    assert abs(ik_hypergeometric(k).value - float(ik_exact(1, k))) < 1e-12


def test_half_power_moments():
    for k in range(13):
        assert legendre_moment(k, k + 1) == Fraction(1, 2 ** (k + 1))


def test_ik_domain():
    with pytest.raises(DomainError):
        ik_exact(2, 1)
    with pytest.raises(DomainError):
        ik_exact(0, 65)


# --- cos(u/2) series and Bernoulli sums ---

def test_cos_half_series():
    assert abs(cl2_cos_half_series(PI / 2).value - G) < 1e-14
    cl2_third = cl2(PI / 3).value
    assert abs(cl2_cos_half_series(PI / 3).value - cl2_third) < 1e-12
    assert abs(cl2_cos_half_series(2.0, 300).value - cl2(2.0).value) < 1e-8


@pytest.mark.parametrize("u", [0.3, 1.0, 2.0, PI, 4.0, 5.5])
def test_cos_half_integral(u):
    assert abs(cl2_cos_half_integral(u).value - cl2(u).value) < 1e-10


def test_odd_reciprocal_sums():
    for j in range(1, 30):
        assert odd_reciprocal_sum(j) == odd_reciprocal_harmonic(j)


def test_bernoulli_trig_sums():
    s, t = bernoulli_trig_sums(1e-8)
    assert s.value == pytest.approx(1e-8, rel=1e-15) and t.value == pytest.approx(1e-8, rel=1e-15)
    s, t = bernoulli_trig_sums(PI / 2)
    assert abs(t.value - PI / 2 * LN2) < 1e-12
    assert abs(s.value - 2 * G) < 1e-12
    s, t = bernoulli_trig_sums(1.0)
    assert abs(s.value - trig_integral_quad(1.0, "sin").value) < 1e-10
    assert abs(t.value - trig_integral_quad(1.0, "tan").value) < 1e-10
    assert abs(t.value - tan_integral_clausen(1.0)) < 1e-13
    with pytest.raises(DomainError):
        bernoulli_trig_sums(PI)


# --- properties ---

@settings(max_examples=25, deadline=None)
@given(st.floats(1.01, 20.0))
def test_s2beta_closed_matches_sum(beta):
    assert abs(s2beta_closed(beta) - s_family(SumSpec(2, beta)).value) < 1e-12


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 12), st.integers(0, 1))
def test_ik_pair_is_exact(k, j):
    r = ik_exact(j, k)
    assert r.a.denominator > 0 and math.gcd(r.a.numerator, r.a.denominator) == 1


@settings(max_examples=30, deadline=None)
@given(st.floats(-0.95, 0.95))
def test_gf_identities(z):
    assert abs(harmonic_gf(z, 1).value + math.log1p(-z) / (1 - z)) < 1e-10
    assert abs(harmonic_gf_integrated(z).value - 0.5 * math.log1p(-z) ** 2) < 1e-10
