import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from clausenkit.numkit import (
    DD, EPS, Accumulator, DomainError, ExtReal, alternating_sum, bernoulli_abs, bernoulli_fraction,
    catalan_alternating, comp_sum, constants, richardson_limit, two_prod, two_sum,
)

G = 0.91596559417721901505  # mpmath, 30 digits


def test_empty_sum_is_exact_zero():
    assert comp_sum([]) == ExtReal(0.0, 0.0)


def test_cancellation_bound():
    r = comp_sum([1.0, -1.0])
    assert r.value == 0.0
    assert r.bound <= 2 * EPS * 2


def test_compensation_recovers_tiny_term():
    r = comp_sum([1.0, 1e-20, -1.0])
    exact = Fraction(1) + Fraction(1e-20) - Fraction(1)
    assert r.contains(float(exact))
    assert r.value == 1e-20


def test_non_finite_term_rejected():
    with pytest.raises(ValueError, match="non-finite input"):
        comp_sum([1.0, math.inf])
    with pytest.raises(ValueError):
        comp_sum([math.nan])


def test_truncation_added_to_bound():
    assert comp_sum([0.5, 0.25], truncation=1e-3).bound >= 1e-3


def test_extreal_rejects_bad_fields():
    with pytest.raises(ValueError):
        ExtReal(math.nan)
    with pytest.raises(ValueError):
        ExtReal(1.0, -1.0)
    with pytest.raises(ValueError):
        ExtReal(1.0, math.inf)


def test_extreal_arithmetic_propagates_bounds():
    a, b = ExtReal(1.0, 1e-10), ExtReal(2.0, 2e-10)
    s = a + b
    assert s.value == 3.0 and s.bound >= 3e-10
    d = a - b
    assert d.value == -1.0 and d.bound >= 3e-10
    assert a.scale(-2.0).bound >= 2e-10


@pytest.mark.parametrize("two_k, exact", [(2, Fraction(1, 6)), (4, Fraction(1, 30)), (12, Fraction(691, 2730))])
def test_bernoulli_abs(two_k, exact):
    assert bernoulli_abs(two_k) == float(exact)


def test_bernoulli_against_zeta_relation():
    # |B_2k| = 2 (2k)! zeta(2k) / (2 pi)^2k, with zeta summed directly
    for two_k in (6, 10, 20):
        zeta = math.fsum(n ** -float(two_k) for n in range(1, 200))
        expect = 2 * math.factorial(two_k) * zeta / (2 * math.pi) ** two_k
        assert bernoulli_abs(two_k) == pytest.approx(expect, rel=1e-14)


@pytest.mark.parametrize("bad", [0, 3, 62, -2, 2.0, True])
def test_bernoulli_abs_rejects(bad):
    with pytest.raises(DomainError):
        bernoulli_abs(bad)


def test_bernoulli_fraction_odd_indices():
    # the Akiyama-Tanigawa table gives the B_1 = +1/2 convention
    assert bernoulli_fraction(1) == Fraction(1, 2)
    assert all(bernoulli_fraction(n) == 0 for n in range(3, 40, 2))


def test_constants_cross_relations():
    k = constants()
    assert abs(k.omega - k.alpha) < 1e-15
    assert abs(k.theta_plus + 2 * k.omega) < 1e-15
    assert k.omega == pytest.approx(math.atan(0.35355339059327373), abs=1e-16)
    assert k.zeta2 == pytest.approx(math.pi ** 2 / 6, abs=1e-16)


def test_catalan_acceleration():
    assert abs(catalan_alternating() - G) < 1e-15
    assert abs(constants().catalan - G) < 1e-15


def test_catalan_matches_clausen_hook():
    from clausenkit.specfun import cl2
    assert abs(cl2(math.pi / 2).value - constants().catalan) < 1e-15


def test_alternating_sum_log2():
    assert alternating_sum(lambda k: 1.0 / (k + 1)) == pytest.approx(math.log(2), abs=1e-15)


def test_richardson_removes_leading_power():
    # S(N) = 1 + 3/N^2 + 5/N^4 sampled at N, 2N, 4N
    vals = [1 + 3 / n ** 2 + 5 / n ** 4 for n in (10, 20, 40)]
    est, err = richardson_limit(vals, [2, 4])
    assert abs(est - 1.0) < 1e-13
    assert err < 1e-2


def test_two_sum_and_two_prod_are_error_free():
    a, b = 0.1, 0.7
    s, e = two_sum(a, b)
    assert Fraction(s) + Fraction(e) == Fraction(a) + Fraction(b)
    p, e = two_prod(a, b)
    assert Fraction(p) + Fraction(e) == Fraction(a) * Fraction(b)


def test_double_double_third():
    third = DD.of(Fraction(1, 3))
    err = Fraction(third.hi) + Fraction(third.lo) - Fraction(1, 3)
    assert abs(err) < Fraction(1, 10 ** 31)
    r = DD.of(1.0) / DD.of(3.0)
    assert abs(Fraction(r.hi) + Fraction(r.lo) - Fraction(1, 3)) < Fraction(1, 10 ** 31)


# --- properties ---

@settings(max_examples=50, deadline=None)
@given(st.integers(min_value=0, max_value=2 ** 32))
def test_sum_is_permutation_stable(seed):
    rng = random.Random(seed)
    terms = [rng.uniform(-1, 1) * 10 ** rng.randint(-8, 8) for _ in range(1000)]
    a = comp_sum(terms)
    rng.shuffle(terms)
    b = comp_sum(terms)
    assert abs(a.value - b.value) <= max(a.bound, b.bound)
    exact = float(sum(Fraction(t) for t in terms))
    assert a.contains(exact)


@given(st.fractions(), st.fractions(max_denominator=10 ** 12))
def test_rational_arithmetic_exact(x, y):
    assert (x + y) - y == x


@given(st.lists(st.floats(-1e6, 1e6, allow_nan=False), max_size=50))
def test_accumulator_bound_holds(terms):
    acc = Accumulator()
    acc.extend(terms)
    exact = float(sum((Fraction(t) for t in terms), Fraction(0)))
    assert abs(acc.value - exact) <= 2 * EPS * acc.abs_sum + 1e-300
