import cmath
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from clausenkit.numkit import DomainError
from clausenkit.quad import gauss_kronrod, quad
from clausenkit.specfun import (
    PolarPoint, chi2, cl2, cl2_integral, cl2_sine_series, elliptic_k_agm, i_xu, i_xu_quad, legendre_all,
    legendre_p, legendre_p_at_zero, lerch_phi, li2, li2_im_polar, lobachevsky, lobachevsky_quad, lsn,
    pfq_series, polygamma, reduce_angle, ti2,
)

PI = math.pi
LN2 = math.log(2.0)
SQRT2 = math.sqrt(2.0)
OMEGA = math.atan(1 / (2 * SQRT2))

# mpmath reference values, 20 digits
G = 0.91596559417721901505
CL2_1 = 1.0139591323607685043
CL2_2 = 0.72714605086327924743
CL2_5 = -0.99282013254695671871
LI2_HALF = 0.5822405264650125059
LI2_Z = complex(0.26659686674274041589, 0.46136289181910899428)  # Li2(0.3 + 0.4i)
LS3_PI = -2.5838563900249850146
TI2_HALF = 0.48722235829452235711
LERCH = 3.9467961357121986281  # Phi(-1/8, 2, 1/2)
K06 = 1.7507538029157525204
EULER_GAMMA = 0.57721566490153286061
TRIGAMMA_THIRD = 10.095597125427094082
I_XU_HALF_2 = 1.8186153824727247766  # int_0^2 (2 sin(t/2))^(1/2)


# --- angles and Cl2 ---

def test_reduce_angle():
    assert reduce_angle(0.0) == 0.0
    assert reduce_angle(2 * PI) == pytest.approx(0.0, abs=1e-15)
    assert reduce_angle(-1.0) == pytest.approx(2 * PI - 1.0, abs=1e-15)
    with pytest.raises(DomainError):
        reduce_angle(math.inf)


@pytest.mark.parametrize("theta, expect", [(0.0, 0.0), (PI, 0.0), (PI / 2, G), (1.0, CL2_1), (2.0, CL2_2),
                                           (5.0, CL2_5)])
def test_cl2_values(theta, expect):
    r = cl2(theta)
    assert abs(r.value - expect) < 1e-15
    assert r.bound < 1e-14


def test_cl2_pi_third_trigamma():
    expect = (TRIGAMMA_THIRD - 2 * PI ** 2 / 3) / (2 * math.sqrt(3))
    assert abs(cl2(PI / 3).value - expect) < 1e-14


def test_cl2_near_multiple_of_two_pi():
    # small-angle expansion: Cl2(t) ~ t - t ln t for tiny t
    t = 1e-8
    assert cl2(t).value == pytest.approx(t - t * math.log(t), rel=1e-12)
    assert cl2(2 * PI - t).value == pytest.approx(-(t - t * math.log(t)), rel=1e-6)


def test_cl2_non_finite():
    with pytest.raises(DomainError):
        cl2(math.nan)


def test_cl2_sine_series_converges_slowly():
    r = cl2_sine_series(1.0, 2000)
    assert abs(r.value - CL2_1) <= r.bound
    assert r.bound > 1e-8


def test_cl2_integral_path():
    r = cl2_integral(1.0, 1e-13)
    assert r.converged and abs(r.value - CL2_1) < 1e-13


# --- log-sine ---

def test_lsn_order_one():
    assert lsn(1, 1.25).value == -1.25


def test_lsn_order_two_is_clausen():
    assert abs(lsn(2, PI / 2).value - G) < 1e-12


def test_lsn_order_three_at_pi():
    r = lsn(3, PI, 1e-12)
    tight = lsn(3, PI, 1e-14)
    assert abs(r.value - LS3_PI) < 1e-12
    assert abs(r.value - tight.value) <= 10 * (r.bound + tight.bound) + 1e-15


@pytest.mark.parametrize("n, theta", [(0, 1.0), (7, 1.0), (2, -0.1), (2, 7.0)])
def test_lsn_domain(n, theta):
    with pytest.raises(DomainError):
        lsn(n, theta)


# --- dilogarithm family ---

def test_li2_special_values():
    assert li2(0) == 0
    assert li2(1) == pytest.approx(PI ** 2 / 6, abs=1e-16)
    assert abs(li2(0.5).real - LI2_HALF) < 1e-15
    assert abs(li2(complex(0.3, 0.4)) - LI2_Z) < 1e-15


@pytest.mark.parametrize("b", [0.0, 0.3, 1.0, PI / 2, 2.5, PI, 4.0, 6.0])
def test_li2_unit_circle(b):
    v = li2(cmath.exp(1j * b))
    assert abs(v.real - (PI ** 2 / 6 - b * (2 * PI - b) / 4)) < 1e-14
    assert abs(v.imag - cl2(b).value) < 1e-14


def test_li2_schwarz_reflection():
    z = complex(0.3, 0.4)
    assert li2(z.conjugate()) == li2(z).conjugate()


def test_li2_cut_from_above():
    # Li2(2) = pi^2/4 + i pi ln 2 on the principal branch, approached from above
    v = li2(2.0)
    assert abs(v.real - PI ** 2 / 4) < 1e-14
    assert abs(v.imag - PI * LN2) < 1e-14


def test_li2_outside_unit_disk():
    z = complex(-3.0, 2.0)
    series = -sum(1 / z ** n / n ** 2 for n in range(1, 400))  # Li2(1/z) part
    lm = cmath.log(-z)
    assert abs(li2(z) - (series - PI ** 2 / 6 - 0.5 * lm * lm)) < 1e-13


def test_li2_non_finite():
    with pytest.raises(DomainError):
        li2(complex(math.inf, 0))


def test_li2_im_polar_examples():
    assert li2_im_polar((0.0, 1.0)) == 0.0
    z = 1j / (2 * SQRT2)
    direct = sum(z ** n / n ** 2 for n in range(1, 80))
    assert abs(li2_im_polar(PolarPoint(1 / (2 * SQRT2), PI / 2)) - direct.imag) < 1e-15
    r, th = math.exp(-0.5 * math.log(3)), PI / 3 - PI / 2
    direct = sum((r * cmath.exp(1j * th)) ** n / n ** 2 for n in range(1, 200))
    assert abs(li2_im_polar((r, th)) - direct.imag) < 1e-14


def test_chi2_values():
    assert chi2(0) == 0
    assert abs(chi2(1).real - PI ** 2 / 8) < 1e-14
    z = 1j / (2 * SQRT2)
    assert abs(chi2(z) - 0.25 * z * LERCH) < 1e-15
    with pytest.raises(DomainError):
        chi2(1.5)


def test_ti2_values():
    assert ti2(0.0) == 0.0
    assert abs(ti2(1.0) - G) < 1e-15
    assert abs(ti2(0.5) - TI2_HALF) < 1e-15
    q = quad(lambda t: math.atan(t) / t if t else 1.0, 0.0, 3.0, 1e-13)
    assert abs(ti2(3.0) - q.value) < 1e-12
    assert ti2(-3.0) == -ti2(3.0)


def test_lerch_values():
    assert lerch_phi(0, 2, 0.5) == 4
    assert abs(lerch_phi(-0.125, 2, 0.5).real - LERCH) < 1e-15
    hyp = pfq_series([1, 0.5, 0.5], [1.5, 1.5], -0.125).value
    assert abs(lerch_phi(-0.125, 2, 0.5).real - 4 * hyp) < 1e-14
    clausen = 4 * SQRT2 * (2 * OMEGA * math.log(1 / (2 * SQRT2)) + cl2(2 * OMEGA).value - cl2(2 * OMEGA + PI).value)
    assert abs(LERCH - clausen) < 1e-14


def test_lerch_paths_agree_on_overlap():
    # |z| = 0.5 uses the series; just above uses the integral
    lo = lerch_phi(0.5, 2, 0.75)
    hi = lerch_phi(0.5000001, 2, 0.75)
    assert abs(lo - hi) < 1e-6
    series = sum(0.7 ** n / (n + 0.75) ** 2 for n in range(200))
    assert abs(lerch_phi(0.7, 2, 0.75).real - series) < 1e-13


@pytest.mark.parametrize("z, s, a", [(1.0, 1, 0.5), (1.5, 2, 0.5), (0.5, 0, 0.5), (0.5, 2, 0.0)])
def test_lerch_domain(z, s, a):
    with pytest.raises(DomainError):
        lerch_phi(z, s, a)


def test_lobachevsky_values():
    assert lobachevsky(0.0) == 0.0
    assert abs(lobachevsky(PI / 2) - PI / 2 * LN2) < 1e-15
    expect = PI / 6 * LN2 - (TRIGAMMA_THIRD - 2 * PI ** 2 / 3) / (6 * math.sqrt(3))
    assert abs(lobachevsky(PI / 6) - expect) < 1e-15
    for x in (0.4, 1.2, 2.0, -0.7):
        q = lobachevsky_quad(x, 1e-10)
        assert q.converged and abs(lobachevsky(x) - q.value) < 1e-10


# --- polygamma, Legendre, pFq, K, I(x, u) ---

def test_polygamma_values():
    assert abs(polygamma(0, 1.0) + EULER_GAMMA) < 1e-15
    assert abs(polygamma(1, 1.0) - PI ** 2 / 6) < 1e-14
    reflection = polygamma(1, 1 / 3) + polygamma(1, 2 / 3)
    assert abs(reflection - PI ** 2 / math.sin(PI / 3) ** 2) < 1e-13
    assert abs(polygamma(1, 1 / 3) - TRIGAMMA_THIRD) < 1e-13
    with pytest.raises(DomainError):
        polygamma(0, 0.0)
    with pytest.raises(DomainError):
        polygamma(5, 1.0)


def test_legendre_values():
    assert legendre_p(0, 0.3) == 1.0
    assert legendre_p(5, 1.0) == pytest.approx(1.0, abs=1e-15)
    for m in range(8):
        dfact = math.prod(range(1, 2 * m, 2))
        expect = Fraction((-1) ** m * dfact, 2 ** m * math.factorial(m))
        assert legendre_p_at_zero(2 * m) == expect
        assert legendre_p(2 * m, 0.0) == pytest.approx(float(expect), abs=1e-16)
    assert legendre_all(6, 0.4)[6] == pytest.approx(legendre_p(6, 0.4), abs=1e-16)


def test_pfq_values():
    assert abs(pfq_series([0.5, 1], [1.5], -1.0).value - PI / 4) < 1e-14
    r = pfq_series([0.5, 0.5, 0.5], [1.5, 1.5], 1.0)
    assert abs(r.value - PI / 2 * LN2) < 1e-12
    assert pfq_series([0.5, 0.5], [1.0], 0.0).value == 1.0
    assert abs(2 / PI * elliptic_k_agm(0.0) - 1.0) < 1e-16


def test_pfq_domain():
    with pytest.raises(DomainError):
        pfq_series([1.0], [1.0], 1.5)
    with pytest.raises(DomainError):
        pfq_series([1.0, 1.0], [1.0], 1.0)  # sum(den) - sum(num) = -1
    with pytest.raises(DomainError):
        pfq_series([1.0], [-2.0], 0.5)


def test_pfq_terminating():
    # 2F1(-3, 1; 1; z) = (1 - z)^3
    assert pfq_series([-3, 1], [1], 2.5).value == pytest.approx((1 - 2.5) ** 3, abs=1e-13)


def test_elliptic_k():
    assert elliptic_k_agm(0.0) == PI / 2
    assert abs(elliptic_k_agm(0.6) - K06) < 1e-15
    assert abs(elliptic_k_agm(0.6) - PI / 2 * pfq_series([0.5, 0.5], [1.0], 0.36).value) < 1e-14
    with pytest.raises(DomainError):
        elliptic_k_agm(1.0)


def test_elliptic_k_integrals():
    # in the parameter m = k^2 the unit integral is 2; in the modulus k it is 2G
    par = quad(lambda m: elliptic_k_agm(math.sqrt(m)), 0.0, 1.0, 1e-12, singular=True)
    mod = quad(lambda k: elliptic_k_agm(k), 0.0, 1.0, 1e-12, singular=True)
    assert abs(par.value - 2.0) < 1e-10
    assert abs(mod.value - 2 * G) < 1e-10


def test_i_xu_values():
    assert i_xu(0.0, 1.3) == pytest.approx(1.3, abs=1e-15)
    assert i_xu(1.0, PI) == pytest.approx(4.0, abs=1e-14)
    assert abs(i_xu(0.5, 2.0) - I_XU_HALF_2) < 1e-14
    with pytest.raises(DomainError):
        i_xu(0.5, 0.0)


@pytest.mark.parametrize("u", [0.5, 1.0, PI / 2, 2.0, 3.0, 4.0, 5.5])
def test_i_xu_derivative_at_zero(u):
    h = 1e-5
    d = (i_xu(h, u) - i_xu(-h, u)) / (2 * h)
    assert abs(d + cl2(u).value) < 1e-6


# --- properties ---

angles = st.floats(0.001, PI - 0.001)


@settings(max_examples=50)
@given(angles)
def test_duplication(theta):
    assert abs(0.5 * cl2(2 * theta).value - (cl2(theta).value - cl2(PI - theta).value)) < 1e-12


@settings(max_examples=50)
@given(st.floats(-50, 50))
def test_odd_and_periodic(theta):
    c = cl2(theta).value
    assert abs(cl2(-theta).value + c) < 1e-13
    assert abs(cl2(theta + 2 * PI).value - c) < 1e-13


@settings(max_examples=20, deadline=None)
@given(st.floats(0.05, 2 * PI - 0.05))
def test_lsn_derivative(theta):
    h = 1e-4
    d = (lsn(2, theta + h, 1e-13).value - lsn(2, theta - h, 1e-13).value) / (2 * h)
    assert abs(d + math.log(abs(2 * math.sin(theta / 2)))) < 1e-6


@settings(max_examples=20, deadline=None)
@given(st.floats(0.01, 2 * PI - 0.01))
def test_series_matches_quadrature(theta):
    s = cl2(theta)
    q = lsn(2, theta, 1e-12)
    assert abs(s.value - q.value) <= s.bound + 10 * q.bound + 1e-14


@settings(max_examples=50)
@given(st.floats(0.0, 0.999), st.floats(-PI, PI))
def test_im_polar_matches_li2(r, theta):
    z = r * cmath.exp(1j * theta)
    assert abs(li2_im_polar((r, theta)) - li2(z).imag) < 1e-12


@settings(max_examples=20)
@given(st.floats(-0.999, 0.999))
def test_chi2_from_li2(x):
    assert abs(chi2(x).real - (li2(x) - 0.25 * li2(x * x)).real) < 1e-13


@settings(max_examples=20, deadline=None)
@given(st.floats(0.001, 0.999))
def test_lerch_chi2_chain(z):
    assert abs(lerch_phi(z, 2, 0.5).real * math.sqrt(z) / 4 - chi2(math.sqrt(z)).real) < 1e-12


@settings(max_examples=15, deadline=None)
@given(st.floats(-0.9, 0.9), st.floats(0.05, 2 * PI - 0.05))
def test_i_xu_closed_form_matches_quadrature(x, u):
    q = i_xu_quad(x, u)
    assert abs(i_xu(x, u) - q.value) < 1e-10
