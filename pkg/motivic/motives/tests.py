from django.test import SimpleTestCase
from hypothesis import given, settings
from hypothesis import strategies as st

from core.exceptions import MotiveSyntaxError
from core.polynomials import L, ONE, BiPoly
from core.series import Series
from core.testing import constants, eff_series
from motives.classes import (
    Kind,
    MotiveClass,
    Specialization,
    e_poly,
    euler_characteristic,
    parse_motive,
    specialize,
    zeta,
)
from plethystic.power import pow_series, pow_stanley


def mk_poly(text) -> BiPoly:
    return BiPoly.coerce(text)


class MotiveClassTests(SimpleTestCase):
    def test_catalog(self):
        self.assertEqual(e_poly(MotiveClass.point()), ONE)
        self.assertEqual(e_poly(MotiveClass.affine(2)), mk_poly("u^2*v^2"))
        self.assertEqual(e_poly(MotiveClass.projective(1)), mk_poly("1+u*v"))
        self.assertEqual(e_poly(MotiveClass.projective(2)), mk_poly("1+u*v+u^2*v^2"))
        self.assertEqual(e_poly(MotiveClass.curve(0)), e_poly(MotiveClass.projective(1)))
        self.assertEqual(e_poly(MotiveClass.curve(3)), mk_poly("1-3*u-3*v+u*v"))
        self.assertEqual(e_poly(MotiveClass.lefschetz(3)), L**3)

    def test_product(self):
        motive = MotiveClass.product(MotiveClass.curve(2), MotiveClass.projective(1))
        self.assertEqual(e_poly(motive), mk_poly("(1-2*u-2*v+u*v)*(1+u*v)"))
        self.assertEqual(motive.dimension, 2)
        self.assertEqual(motive.name, "curve(2)*P^1")

    def test_dimension(self):
        self.assertEqual(MotiveClass.affine(2).dimension, 2)
        self.assertEqual(MotiveClass.point().dimension, 0)
        self.assertIsNone(MotiveClass.from_poly("1+u").dimension)
        self.assertIsNone(
            MotiveClass.product(MotiveClass.curve(1), MotiveClass.from_poly("u")).dimension
        )

    def test_negative_parameter(self):
        with self.assertRaises(ValueError):
            MotiveClass.affine(-1)

    # -------------------------
    # Descriptor grammar
    # -------------------------

    def test_parse(self):
        self.assertEqual(parse_motive("point"), MotiveClass.point())
        self.assertEqual(parse_motive("A^2"), MotiveClass.affine(2))
        self.assertEqual(parse_motive(" P^3 "), MotiveClass.projective(3))
        self.assertEqual(parse_motive("curve(2)"), MotiveClass.curve(2))
        self.assertEqual(parse_motive("L"), MotiveClass.lefschetz(1))
        self.assertEqual(parse_motive("L^4").epoly, L**4)
        self.assertEqual(parse_motive("A^1*P^1").epoly, mk_poly("u*v+u^2*v^2"))

    def test_parse_raw(self):
        motive = parse_motive("raw(1 + 2*u*v)*P^1")
        self.assertEqual(motive.kind, Kind.PRODUCT)
        self.assertEqual(motive.factors[0].kind, Kind.RAW)
        self.assertEqual(motive.epoly, mk_poly("(1+2*u*v)*(1+u*v)"))

    def test_parse_errors(self):
        for text in ("", "circle", "P^", "curve(-1)", "raw(x)", "raw(1", "A^2*"):
            with self.subTest(text=text), self.assertRaises(MotiveSyntaxError):
                parse_motive(text)

    def test_name_parses_back(self):
        for text in ("point", "A^3", "P^2*curve(1)", "L^2"):
            with self.subTest(text=text):
                self.assertEqual(parse_motive(parse_motive(text).name), parse_motive(text))

    # -------------------------
    # Zeta functions
    # -------------------------

    def test_zeta(self):
        self.assertEqual(zeta(MotiveClass.point(), 3), Series.from_coeffs([1, 1, 1, 1]))
        self.assertEqual(zeta(MotiveClass.projective(1), 2)[2], mk_poly("1+u*v+u^2*v^2"))
        self.assertEqual(zeta(MotiveClass.curve(2), 3)[1], mk_poly("1-2*u-2*v+u*v"))

    def test_zeta_of_affine_product_is_shifted(self):
        for y in (MotiveClass.curve(1), MotiveClass.projective(2)):
            for s in range(3):
                with self.subTest(y=y.name, s=s):
                    shifted = MotiveClass.product(MotiveClass.affine(s), y)
                    self.assertEqual(zeta(shifted, 5), zeta(y, 5).rescale(L**s))
                    self.assertEqual(zeta(shifted, 5).constant, ONE)


class SpecializationTests(SimpleTestCase):
    def test_uv_equal(self):
        self.assertEqual(
            specialize(mk_poly("1-2*u-2*v+u*v"), Specialization.UV_EQUAL),
            mk_poly("1-4*u+u^2"),
        )

    def test_euler(self):
        for g in range(4):
            with self.subTest(g=g):
                self.assertEqual(euler_characteristic(MotiveClass.curve(g).epoly), 2 - 2 * g)
        for r in range(1, 5):
            with self.subTest(r=r):
                self.assertEqual(
                    specialize(MotiveClass.projective(r - 1).epoly, Specialization.EULER),
                    BiPoly.constant(r),
                )

    def test_series(self):
        series = zeta(MotiveClass.projective(1), 3)
        self.assertEqual(
            specialize(series, Specialization.EULER), Series.from_coeffs([1, 2, 3, 4])
        )

    def test_unknown_mode(self):
        with self.assertRaises(ValueError):
            specialize(ONE, "complex")

    @settings(max_examples=20, deadline=None)
    @given(eff_series(5, coefficients=constants()), st.integers(-4, 4))
    def test_euler_commutes_with_power(self, a, m):
        self.assertEqual(
            specialize(pow_series(a, m), Specialization.EULER),
            pow_stanley(specialize(a, Specialization.EULER), m),
        )
