"""Gauss-Legendre machinery and the half-line integral identity.

The float quadrature is cross-checked here against a fully symbolic
oracle: every integrand in scope is a rational function whose canonical
denominator is a power of (1 + t), so the half-line integral has an
exact closed form obtained by rewriting the numerator in the basis
(1 + t)^j.  That gives the identity an arithmetic-only second route that
never touches floating point.
"""

from fractions import Fraction

import pytest

from bernlab.bernoulli import bernoulli_recurrence, bernoulli_split
from bernlab.combinatorics import stirling2
from bernlab.exact_arith import beta_integer, factorial
from bernlab.polylog import (
    ONE_PLUS_T,
    P_T,
    Polynomial,
    RationalFunction,
    polylog_neg_rf,
    rf_compose_reciprocal,
)
from bernlab.quadrature import (
    DEFAULT_NODES,
    DEFAULT_PANELS,
    MAX_BETA_SUM,
    MAX_IDENTITY_SUM,
    QuadratureReport,
    beta_quadrature_check,
    expected_integral_value,
    gauss_legendre,
    integrand,
    integrate_halfline,
    verify_integral,
)


def identity_integrand_rf(m: int, n: int) -> RationalFunction:
    """The identity integrand for orders (m, n) as an exact rational function."""
    left = rf_compose_reciprocal(polylog_neg_rf(m))
    right = polylog_neg_rf(n)
    return left * right / RationalFunction(P_T)


def exact_halfline_integral(f: RationalFunction) -> Fraction:
    """Integrate num(t)/(1+t)^d exactly over (0, infinity).

    Requires the canonical denominator to be a power of (1 + t) and the
    numerator degree to sit at least two below it (decay like 1/t^2).
    Writing num = sum c_j (1+t)^j via repeated division by (1 + t) and
    using integral_0^inf (1+t)^(j-d) dt = 1/(d - j - 1) gives the value.
    """
    num = f.numerator
    d = f.denominator.degree
    if f.denominator != ONE_PLUS_T**d:
        raise ValueError("denominator is not a power of 1 + t")
    if num.degree > d - 2:
        raise ValueError("integrand does not decay fast enough to converge")
    total = Fraction(0)
    j = 0
    while not num.is_zero():
        num, rem = divmod(num, ONE_PLUS_T)
        constant = rem.coeffs[0] if rem.coeffs else Fraction(0)
        total += Fraction(constant, d - j - 1)
        j += 1
    return total


class TestExactOracleIsSelfConsistent:
    def test_simple_closed_forms(self):
        assert exact_halfline_integral(
            RationalFunction(Polynomial([1]), ONE_PLUS_T**2)
        ) == 1
        assert exact_halfline_integral(
            RationalFunction(Polynomial([1]), ONE_PLUS_T**3)
        ) == Fraction(1, 2)
        # t/(1+t)^4 = (1+t)^1*... -> 1/2 - 1/3
        assert exact_halfline_integral(
            RationalFunction(P_T, ONE_PLUS_T**4)
        ) == Fraction(1, 6)

    def test_divergent_integrand_rejected(self):
        with pytest.raises(ValueError):
            exact_halfline_integral(RationalFunction(Polynomial([1]), ONE_PLUS_T))

    def test_non_power_denominator_rejected(self):
        with pytest.raises(ValueError):
            exact_halfline_integral(
                RationalFunction(Polynomial([1]), Polynomial([2, 0, 1]) * ONE_PLUS_T)
            )


class TestIdentityHoldsExactly:
    """The integral identity verified in pure rational arithmetic."""

    def test_full_grid_matches_expected_values(self):
        for m in range(9):
            for n in range(9 - m):
                value = exact_halfline_integral(identity_integrand_rf(m, n))
                assert value == expected_integral_value(m, n), (m, n)

    def test_edge_orders_have_their_own_values(self):
        assert exact_halfline_integral(identity_integrand_rf(0, 0)) == 1
        assert exact_halfline_integral(identity_integrand_rf(0, 1)) == Fraction(1, 2)
        assert exact_halfline_integral(identity_integrand_rf(1, 0)) == Fraction(1, 2)
        # ... which is NOT the B_1 = -1/2 that the order-sum pattern suggests.
        assert exact_halfline_integral(identity_integrand_rf(1, 0)) != bernoulli_recurrence(1)

    def test_termwise_beta_expansion_reproduces_the_split_sum(self):
        # Expanding both factors in their Stirling forms turns the
        # integral into a double sum of Beta values; that sum must equal
        # the split evaluation exactly, term structure and all.
        for m in range(1, 10):
            for n in range(1, 10 - m + 1):
                total = Fraction(0)
                for k in range(1, m + 1):
                    for l in range(1, n + 1):
                        coeff = (
                            (-1) ** (k + l)
                            * factorial(k)
                            * factorial(l)
                            * stirling2(m, k)
                            * stirling2(n, l)
                        )
                        total += coeff * beta_integer(l + 1, k + 1)
                assert total == bernoulli_split(m, n), (m, n)
                assert total == bernoulli_recurrence(m + n), (m, n)


class TestGaussLegendre:
    def test_rule_shape(self):
        xs, ws = gauss_legendre(7)
        assert len(xs) == len(ws) == 7
        assert list(xs) == sorted(xs)
        assert all(w > 0 for w in ws)
        assert sum(ws) == pytest.approx(2.0, abs=1e-14)

    def test_symmetry(self):
        xs, ws = gauss_legendre(10)
        for i in range(10):
            assert xs[i] == pytest.approx(-xs[9 - i], abs=1e-15)
            assert ws[i] == pytest.approx(ws[9 - i], abs=1e-15)
        assert gauss_legendre(5)[0][2] == 0.0

    def test_two_point_rule_is_the_textbook_one(self):
        xs, ws = gauss_legendre(2)
        assert xs[1] == pytest.approx(3 ** -0.5, abs=1e-15)
        assert ws == pytest.approx((1.0, 1.0), abs=1e-15)

    def test_exact_through_degree_2n_minus_1(self):
        for nodes in (3, 8, 32):
            xs, ws = gauss_legendre(nodes)
            for degree in range(2 * nodes):
                estimate = sum(w * x**degree for x, w in zip(xs, ws))
                exact = 0.0 if degree % 2 else 2.0 / (degree + 1)
                assert estimate == pytest.approx(exact, abs=5e-14), (nodes, degree)

    def test_degree_bound_is_sharp(self):
        xs, ws = gauss_legendre(2)
        estimate = sum(w * x**4 for x, w in zip(xs, ws))
        assert abs(estimate - 2.0 / 5.0) > 0.1

    def test_cached_and_immutable(self):
        assert gauss_legendre(32) is gauss_legendre(32)
        assert isinstance(gauss_legendre(32)[0], tuple)

    def test_bad_node_count_rejected(self):
        with pytest.raises(ValueError):
            gauss_legendre(0)


class TestIntegrateHalfline:
    def test_examples(self):
        assert integrate_halfline(lambda t: (1 + t) ** -2) == pytest.approx(1.0, abs=1e-12)
        assert integrate_halfline(lambda t: (1 + t) ** -3) == pytest.approx(0.5, abs=1e-12)
        assert integrate_halfline(lambda t: t * (1 + t) ** -4, panels=8) == pytest.approx(
            1 / 6, abs=1e-10
        )

    def test_exponential_decay(self):
        import math

        assert integrate_halfline(lambda t: math.exp(-t)) == pytest.approx(1.0, abs=1e-9)

    def test_bad_panel_count_rejected(self):
        with pytest.raises(ValueError):
            integrate_halfline(lambda t: 0.0, panels=0)


class TestIntegrand:
    def test_point_values(self):
        assert integrand(0, 0, 1.0) == pytest.approx(0.25, abs=1e-15)
        assert integrand(0, 1, 1.0) == pytest.approx(0.125, abs=1e-15)
        assert integrand(1, 1, 2.0) == pytest.approx(2 / 81, abs=1e-15)

    def test_matches_the_exact_rational_function(self):
        from bernlab.polylog import rf_eval_exact

        for m, n in ((0, 2), (2, 3), (4, 1)):
            rf = identity_integrand_rf(m, n)
            for t in (0.5, 1.0, 3.0):
                assert integrand(m, n, t) == pytest.approx(
                    float(rf_eval_exact(rf, Fraction(t))), rel=1e-13
                ), (m, n, t)

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            integrand(1, 1, 0.0)
        with pytest.raises(ValueError):
            integrand(1, 1, -2.0)
        with pytest.raises(ValueError):
            integrand(-1, 1, 1.0)


class TestExpectedIntegralValue:
    def test_edge_orders(self):
        assert expected_integral_value(0, 0) == 1
        assert expected_integral_value(0, 1) == Fraction(1, 2)
        assert expected_integral_value(1, 0) == Fraction(1, 2)

    def test_general_orders_give_bernoulli_numbers(self):
        assert expected_integral_value(1, 1) == Fraction(1, 6)
        assert expected_integral_value(2, 1) == 0
        assert expected_integral_value(6, 6) == bernoulli_recurrence(12)

    def test_negative_orders_rejected(self):
        with pytest.raises(ValueError):
            expected_integral_value(-1, 0)


class TestVerifyIntegral:
    def test_report_contents(self):
        report = verify_integral(1, 1)
        assert isinstance(report, QuadratureReport)
        assert (report.m, report.n) == (1, 1)
        assert report.expected == Fraction(1, 6)
        assert (report.panels, report.nodes) == (DEFAULT_PANELS, DEFAULT_NODES)
        assert report.estimate == pytest.approx(1 / 6, abs=1e-12)
        assert report.abs_error <= 1e-12

    def test_rel_error_definition(self):
        for report in (verify_integral(2, 1), verify_integral(0, 0), verify_integral(3, 3)):
            assert report.rel_error == report.abs_error / max(
                1.0, abs(float(report.expected))
            )

    def test_zero_target_uses_absolute_error(self):
        report = verify_integral(2, 1)  # B_3 = 0
        assert report.expected == 0
        assert report.rel_error == report.abs_error
        assert report.abs_error <= 1e-12

    def test_grid_reaches_quadrature_precision(self):
        for m in range(7):
            for n in range(7 - m):
                report = verify_integral(m, n)
                assert report.rel_error <= 1e-10, (m, n, report.rel_error)

    def test_symmetric_orders_agree(self):
        for m, n in ((0, 3), (1, 4), (2, 5)):
            assert verify_integral(m, n).estimate == pytest.approx(
                verify_integral(n, m).estimate, abs=1e-10
            )

    def test_doubling_panels_stays_at_the_noise_floor(self):
        base = verify_integral(3, 3, panels=DEFAULT_PANELS)
        fine = verify_integral(3, 3, panels=2 * DEFAULT_PANELS)
        assert base.abs_error <= 1e-12
        assert fine.abs_error <= base.abs_error + 1e-12

    def test_scope_cap(self):
        with pytest.raises(ValueError):
            verify_integral(7, MAX_IDENTITY_SUM - 7 + 1)
        verify_integral(6, MAX_IDENTITY_SUM - 6)  # boundary is in scope

    def test_negative_orders_rejected(self):
        with pytest.raises(ValueError):
            verify_integral(0, -2)


class TestBetaQuadratureCheck:
    def test_report_contents(self):
        report = beta_quadrature_check(1, 1)
        assert report.expected == Fraction(1, 6)
        assert report.expected == beta_integer(2, 2)
        assert report.rel_error <= 1e-12

    def test_grid_reaches_quadrature_precision(self):
        for k in range(9):
            for l in range(9 - k):
                report = beta_quadrature_check(k, l)
                assert report.expected == beta_integer(k + 1, l + 1)
                assert report.rel_error <= 1e-10, (k, l, report.rel_error)

    def test_scope_cap(self):
        with pytest.raises(ValueError):
            beta_quadrature_check(11, MAX_BETA_SUM - 11 + 1)
        beta_quadrature_check(10, MAX_BETA_SUM - 10)  # boundary is in scope

    def test_negative_exponents_rejected(self):
        with pytest.raises(ValueError):
            beta_quadrature_check(-1, 3)
