from django.test import SimpleTestCase
from hypothesis import given, settings
from hypothesis import strategies as st

from core.exceptions import ConstantTermError
from core.polynomials import L, ONE, BiPoly
from core.series import Series
from core.testing import bipolys, constants, eff_series, effective_bipolys, log_series as log_series_st
from plethystic.exponential import ExpRoute, exp_series, log_series
from plethystic.lambda_ring import adams, adams_series, geometric_pow, mobius, sigma_n
from plethystic.power import pow_series, pow_stanley


def mk_poly(text) -> BiPoly:
    return BiPoly.coerce(text)


def mk_series(*coeffs, order=None) -> Series:
    return Series.from_coeffs(coeffs, order=order)


def punctual_surface(order) -> Series:
    result = Series.one(order)
    for n in range(1, order + 1):
        result = result * Series.linear_power(L ** (n - 1), -1, n, order)
    return result


class LambdaRingTests(SimpleTestCase):
    def test_adams(self):
        self.assertEqual(adams("1-2*u-2*v+u*v", 2), mk_poly("1-2*u^2-2*v^2+u^2*v^2"))
        self.assertEqual(adams(L, 3), mk_poly("u^3*v^3"))
        self.assertEqual(adams("7+u", 1), mk_poly("7+u"))
        self.assertEqual(
            adams_series(mk_series(1, 1, 1, 1, 1), 2), mk_series(1, 0, 1, 0, 1)
        )

    def test_adams_rejects_zero(self):
        with self.assertRaises(ValueError):
            adams(L, 0)

    def test_mobius(self):
        self.assertEqual(
            [mobius(k) for k in range(1, 11)], [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]
        )

    def test_geometric_pow(self):
        self.assertEqual(geometric_pow(1, 1, 3), mk_series(1, 1, 1, 1))
        self.assertEqual(geometric_pow(L, 2, 4), mk_series(1, 0, "u*v", 0, "u^2*v^2"))
        self.assertEqual(
            geometric_pow("1-u-v+u*v", 1, 1), mk_series(1, "1-u-v+u*v")
        )
        self.assertEqual(geometric_pow(-1, 1, 3), mk_series(1, -1, 0, 0))

    def test_sigma_n(self):
        self.assertEqual(sigma_n("1+u*v", 2), mk_poly("1+u*v+u^2*v^2"))
        self.assertEqual(sigma_n(L, 2), mk_poly("u^2*v^2"))
        self.assertEqual(sigma_n(L, 0), ONE)
        for n in range(6):
            with self.subTest(n=n):
                self.assertEqual(sigma_n(1, n), ONE)

    @settings(max_examples=30, deadline=None)
    @given(bipolys(), bipolys(), st.integers(0, 6))
    def test_lambda_relation(self, x, y, n):
        total = sum(
            (sigma_n(x - y, i) * sigma_n(y, n - i) for i in range(n + 1)),
            BiPoly.constant(0),
        )
        self.assertEqual(total, sigma_n(x, n))

    @settings(max_examples=30, deadline=None)
    @given(bipolys(), st.integers(0, 2))
    def test_zeta_shifted(self, f, s):
        shifted = geometric_pow(f, 1, 6).rescale(L**s)
        self.assertEqual(shifted, geometric_pow(L**s * f, 1, 6))


class ExponentialTests(SimpleTestCase):
    def test_exp_of_zero(self):
        self.assertEqual(exp_series(Series.zero(5)), Series.one(5))

    def test_exp_linear(self):
        curve = mk_poly("1-3*u-3*v+u*v")
        self.assertEqual(exp_series(mk_series(0, curve, order=3))[1], curve)
        self.assertEqual(
            exp_series(mk_series(0, "1+u*v", order=2))[2], mk_poly("1+u*v+u^2*v^2")
        )

    def test_exp_needs_zero_constant(self):
        with self.assertRaises(ConstantTermError):
            exp_series(mk_series(1, 1))
        with self.assertRaises(ValueError):
            exp_series(mk_series(0, 1), route="sideways")

    def test_log_of_geometric_series(self):
        self.assertEqual(log_series(mk_series(1, 1, 1, 1, 1)), mk_series(0, 1, 0, 0, 0))

    def test_log_of_punctual_curve_series(self):
        p3 = geometric_pow("1+u*v+u^2*v^2", 1, 8)
        self.assertEqual(log_series(p3), mk_series(0, "1+u*v+u^2*v^2", order=8))

    def test_log_of_punctual_surface_series(self):
        omega = log_series(punctual_surface(8))
        self.assertEqual(omega, Series.from_coeffs([0] + [L**k for k in range(8)]))

    def test_log_needs_unit_constant(self):
        with self.assertRaises(ConstantTermError):
            log_series(mk_series(0, 1))
        with self.assertRaises(ConstantTermError):
            log_series(mk_series(-1, 1))

    def test_log_with_order(self):
        self.assertEqual(log_series(mk_series(1, 1, 1, 1), order=2).order, 2)

    @settings(max_examples=25, deadline=None)
    @given(log_series_st(6, coefficients=bipolys(max_degree=1)))
    def test_routes_agree(self, a):
        self.assertEqual(
            exp_series(a, route=ExpRoute.ADAMS), exp_series(a, route=ExpRoute.PRODUCT)
        )

    @settings(max_examples=25, deadline=None)
    @given(log_series_st(6, coefficients=bipolys(max_degree=1)))
    def test_log_inverts_exp(self, a):
        self.assertEqual(log_series(exp_series(a)), a)

    @settings(max_examples=25, deadline=None)
    @given(eff_series(6, coefficients=bipolys(max_degree=1)))
    def test_exp_inverts_log(self, b):
        self.assertEqual(exp_series(log_series(b)), b)

    @settings(max_examples=20, deadline=None)
    @given(
        log_series_st(5, coefficients=effective_bipolys(max_degree=1)),
        effective_bipolys(max_degree=1),
    )
    def test_pushforward(self, a, m):
        self.assertEqual(exp_series(a * m), pow_series(exp_series(a), m))


class PowerStructureTests(SimpleTestCase):
    def test_integer_square(self):
        self.assertEqual(pow_series(mk_series(1, 1), 2), mk_series(1, 2))
        self.assertEqual(pow_series(mk_series(1, 1, 0), 2), mk_series(1, 2, 1))

    def test_symmetric_square_of_plane(self):
        self.assertEqual(
            pow_series(mk_series(1, 1, 1), "u^2*v^2")[2], mk_poly("u^4*v^4")
        )

    def test_hilbert_square_of_plane(self):
        self.assertEqual(
            pow_series(punctual_surface(2), "u^2*v^2")[2],
            mk_poly("u^4*v^4+u^3*v^3"),
        )

    def test_pow_zero_and_one(self):
        a = mk_series(1, "u", "v-2", 3)
        self.assertEqual(pow_series(a, 0), Series.one(3))
        self.assertEqual(pow_series(a, 1), a)

    def test_pow_stanley(self):
        self.assertEqual(pow_stanley(mk_series(1, 1, 0, 0, 0), -1), mk_series(1, -1, 1, -1, 1))
        self.assertEqual(pow_stanley(mk_series(1, 1, 1), 2), mk_series(1, 2, 3))
        cube = mk_series(1, 3, 3, 1)
        self.assertEqual(pow_stanley(cube, 1), cube)

    def test_pow_stanley_needs_constants(self):
        with self.assertRaises(ValueError):
            pow_stanley(mk_series(1, "u"), 2)

    @settings(max_examples=20, deadline=None)
    @given(
        eff_series(4, coefficients=bipolys(max_terms=2, max_degree=1)),
        eff_series(4, coefficients=bipolys(max_terms=2, max_degree=1)),
        bipolys(max_terms=2, max_degree=1),
        bipolys(max_terms=2, max_degree=1),
    )
    def test_axioms(self, a, b, m, n):
        self.assertEqual(pow_series(a, 0), Series.one(4))
        self.assertEqual(pow_series(a, 1), a)
        self.assertEqual(pow_series(a * b, m), pow_series(a, m) * pow_series(b, m))
        self.assertEqual(pow_series(a, m + n), pow_series(a, m) * pow_series(a, n))
        self.assertEqual(pow_series(a, m * n), pow_series(pow_series(a, m), n))
        self.assertEqual(pow_series(mk_series(1, 1, 0, 0, 0), m)[1], m)
        self.assertEqual(
            pow_series(a.substitute_t_power(2), m), pow_series(a, m).substitute_t_power(2)
        )

    @settings(max_examples=25, deadline=None)
    @given(eff_series(6, coefficients=constants()), st.integers(-5, 5))
    def test_stanley_matches_specialization(self, a, m):
        specialized = pow_series(a, m).map(lambda c: c.evaluate(1, 1))
        self.assertEqual(specialized, pow_stanley(a, m))
