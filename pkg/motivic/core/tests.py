import json
import os
from io import StringIO
from unittest import mock

from django.core.exceptions import ImproperlyConfigured
from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase
from hypothesis import given, settings
from hypothesis import strategies as st

from core.exceptions import NonIntegralResult, NonUnitConstantTerm, PolynomialSyntaxError
from core.polynomials import L, ONE, ZERO, BiPoly
from core.rendering import OutputFormat, render_series
from core.schemas import SeriesSchema
from core.series import Series
from core.testing import bipolys, eff_series
from motivic.settings import env_int
from quot.management.commands.series import Command as SeriesCommand


def mk_poly(text: str) -> BiPoly:
    return BiPoly.parse(text)


def mk_series(*coeffs, order=None) -> Series:
    return Series.from_coeffs(coeffs, order=order)


class BiPolyTests(SimpleTestCase):
    # -------------------------
    # Parsing / rendering
    # -------------------------

    def test_parse_lefschetz_alias(self):
        self.assertEqual(mk_poly("(1+L)^2"), mk_poly("1 + 2*u*v + u^2*v^2"))
        self.assertEqual(L, BiPoly.monomial(1, 1))

    def test_parse_is_whitespace_insensitive(self):
        self.assertEqual(mk_poly(" 1-2 *u - 2*v+ u * v "), mk_poly("1-2*u-2*v+u*v"))

    def test_str_canonical_order(self):
        self.assertEqual(str(mk_poly("u*v - 2*u + 1 - 2*v")), "1 - 2*u - 2*v + u*v")
        self.assertEqual(str(mk_poly("u^2*v^2 - u*v")), "-u*v + u^2*v^2")
        self.assertEqual(str(ZERO), "0")

    def test_str_parses_back(self):
        p = mk_poly("3*s1*u^2 - 7*v + s2^3 - 1")
        self.assertEqual(mk_poly(str(p)), p)

    def test_parse_rejects_text_outside_grammar(self):
        for text in ("x + 1", "u**", "s10", "", "u^-1", "1/2", "__import__"):
            with self.subTest(text=text), self.assertRaises(PolynomialSyntaxError):
                mk_poly(text)

    def test_mixed_integral_and_rational(self):
        half = mk_poly("u") / 2
        self.assertEqual(half + half, mk_poly("u"))
        self.assertEqual(half * 2, mk_poly("u"))
        self.assertEqual(ONE + half, mk_poly("1 + u") - half)
        self.assertNotEqual(half, mk_poly("u"))

    def test_equality_with_foreign_text(self):
        self.assertFalse(mk_poly("u") == "foo")
        self.assertNotEqual(mk_poly("u"), "x + 1")
        self.assertEqual(mk_poly("u*v"), "L")

    # -------------------------
    # Arithmetic
    # -------------------------

    def test_products(self):
        self.assertEqual(L * L, mk_poly("u^2*v^2"))
        self.assertEqual(mk_poly("1+u*v") * mk_poly("1+u*v"), mk_poly("1+2*u*v+u^2*v^2"))
        self.assertEqual(mk_poly("1-2*u-2*v+u*v") + 0, mk_poly("1-2*u-2*v+u*v"))

    def test_rational_and_integral(self):
        half = mk_poly("2*u") / 2
        self.assertFalse(half.is_integral)
        self.assertEqual(half, mk_poly("u"))
        self.assertTrue(half.integral().is_integral)

        with self.assertRaises(NonIntegralResult):
            (mk_poly("u") / 2).integral()

    def test_exact_div(self):
        self.assertEqual(
            mk_poly("1+2*u*v+u^2*v^2").exact_div(mk_poly("1+u*v")), mk_poly("1+u*v")
        )
        with self.assertRaises(NonIntegralResult):
            mk_poly("u").exact_div(mk_poly("v"))
        with self.assertRaises(ZeroDivisionError):
            ONE.exact_div(ZERO)

    def test_units(self):
        self.assertTrue(ONE.is_unit)
        self.assertTrue((-ONE).is_unit)
        self.assertFalse(BiPoly.constant(2).is_unit)
        self.assertFalse(L.is_unit)

    # -------------------------
    # Substitutions
    # -------------------------

    def test_adams(self):
        self.assertEqual(mk_poly("1-2*u-2*v+u*v").adams(2), mk_poly("1-2*u^2-2*v^2+u^2*v^2"))
        self.assertEqual(L.adams(3), mk_poly("u^3*v^3"))
        self.assertEqual(mk_poly("s1*u").adams(2), mk_poly("s1^2*u^2"))

    def test_specializations(self):
        curve = mk_poly("1-3*u-3*v+u*v")
        self.assertEqual(curve.uv_equal(), mk_poly("1-6*u+u^2"))
        self.assertEqual(curve.evaluate(1, 1), BiPoly.constant(-4))

    def test_markers(self):
        p = mk_poly("u*s1 + v*s1^2 + 3")
        self.assertTrue(p.has_markers)
        self.assertEqual(p.marker_component((1,)), mk_poly("u"))
        self.assertEqual(p.marker_component(()), BiPoly.constant(3))
        self.assertEqual(p.forget_markers(), mk_poly("u+v+3"))

    # -------------------------
    # JSON
    # -------------------------

    def test_schema(self):
        dumped = json.loads(mk_poly("1+L").to_schema().model_dump_json())
        self.assertEqual(
            dumped,
            {
                "terms": [
                    {"u": 0, "v": 0, "coef": "1"},
                    {"u": 1, "v": 1, "coef": "1"},
                ]
            },
        )

    def test_schema_keeps_markers(self):
        p = mk_poly("2*s2*u")
        schema = p.to_schema()
        self.assertEqual(schema.terms[0].s, [0, 1, 0, 0, 0, 0, 0, 0, 0])
        self.assertEqual(BiPoly.from_schema(schema), p)

    # -------------------------
    # Ring axioms
    # -------------------------

    @settings(max_examples=50, deadline=None)
    @given(bipolys(), bipolys(), bipolys())
    def test_ring_axioms(self, a, b, c):
        self.assertEqual((a * b) * c, a * (b * c))
        self.assertEqual(a * b, b * a)
        self.assertEqual(a * (b + c), a * b + a * c)
        self.assertEqual(a + (-a), ZERO)


class SeriesTests(SimpleTestCase):
    def test_order_must_match_coefficients(self):
        with self.assertRaises(ValueError):
            Series(2, (ONE,))
        with self.assertRaises(ValueError):
            Series.zero(-1)

    def test_mul(self):
        self.assertEqual(
            mk_series(1, 1, order=3) * mk_series(1, -1, order=3), mk_series(1, 0, -1, order=3)
        )
        self.assertEqual(
            mk_series(1, 1, 1) * mk_series(1, -1, 0), mk_series(1, order=2)
        )
        self.assertEqual(
            mk_series(1, "u*v", order=2) ** 2, mk_series(1, "2*u*v", "u^2*v^2")
        )

    def test_mixed_orders_truncate(self):
        product = mk_series(1, 1, 1, 1) * mk_series(1, 1)
        self.assertEqual(product.order, 1)
        self.assertEqual((mk_series(1, 2, 3) + mk_series(1)).order, 0)

    def test_inverse(self):
        self.assertEqual(mk_series(1, -1, order=3).inverse(), mk_series(1, 1, 1, 1))
        self.assertEqual(
            mk_series(1, "-u*v", order=3).inverse(),
            mk_series(1, "u*v", "u^2*v^2", "u^3*v^3"),
        )
        self.assertEqual(mk_series(1, 1, 1, order=4).inverse(), mk_series(1, -1, 0, 1, -1))
        self.assertEqual(
            mk_series(-1, 1, order=2).inverse(), mk_series(-1, -1, -1)
        )

    def test_inverse_needs_unit(self):
        with self.assertRaises(NonUnitConstantTerm):
            mk_series(2, 1).inverse()
        with self.assertRaises(NonUnitConstantTerm):
            mk_series("u*v", 1).inverse()

    def test_substitute_t_power(self):
        self.assertEqual(mk_series(1, 1, order=2).substitute_t_power(2), mk_series(1, 0, 1))
        self.assertEqual(
            mk_series(1, 1, 1, order=6).substitute_t_power(3),
            mk_series(1, 0, 0, 1, 0, 0, 1),
        )
        self.assertEqual(
            mk_series(1, 1, 1, 1, 1).substitute_t_power(2), mk_series(1, 0, 1, 0, 1)
        )

    def test_adams_and_rescale(self):
        self.assertEqual(mk_series(1, 1, 1, 1, 1).adams(2), mk_series(1, 0, 1, 0, 1))
        self.assertEqual(mk_series(1, 1, 1).rescale(L), mk_series(1, "u*v", "u^2*v^2"))

    def test_linear_power(self):
        self.assertEqual(
            Series.linear_power(L, -1, 2, 4), mk_series(1, 0, "u*v", 0, "u^2*v^2")
        )
        self.assertEqual(Series.linear_power(ONE, 2, 1, 3), mk_series(1, -2, 1, 0))

    def test_truncate(self):
        self.assertEqual(mk_series(1, 2, 3).truncate(1), mk_series(1, 2))
        with self.assertRaises(ValueError):
            mk_series(1, 2).truncate(3)
        with self.assertRaises(IndexError):
            mk_series(1, 2)[2]

    def test_first_mismatch(self):
        self.assertIsNone(mk_series(1, 2, 3).first_mismatch(mk_series(1, 2)))
        self.assertEqual(mk_series(1, 2, 3).first_mismatch(mk_series(1, 2, 4)), 2)

    def test_integral_reports_index(self):
        with self.assertRaises(NonIntegralResult) as ctx:
            (mk_series(2, 2, 1) / 2).integral()
        self.assertEqual(ctx.exception.index, 2)

    def test_schema(self):
        s = mk_series(1, "1-2*u-2*v+u*v")
        schema = SeriesSchema.model_validate_json(s.to_schema().model_dump_json())
        self.assertEqual(Series.from_schema(schema), s)
        self.assertEqual(schema.order, 1)

    def test_render(self):
        s = mk_series(1, 1, "1+L")
        self.assertEqual(render_series(s, OutputFormat.TEXT), "[1, 1, 1 + u*v]")
        self.assertEqual(
            render_series(s, OutputFormat.CSV).splitlines(),
            ["n,coefficient", "0,1", "1,1", "2,1 + u*v"],
        )
        self.assertEqual(json.loads(render_series(s, OutputFormat.JSON))["order"], 2)

    @settings(max_examples=25, deadline=None)
    @given(eff_series(5))
    def test_inverse_is_involution(self, a):
        self.assertEqual(a.inverse().inverse(), a)
        self.assertEqual(a * a.inverse(), Series.one(5))

    @settings(max_examples=25, deadline=None)
    @given(eff_series(6), st.integers(1, 3), st.integers(1, 3))
    def test_substitute_t_power_composes(self, a, e, f):
        self.assertEqual(a.substitute_t_power(1), a)
        self.assertEqual(
            a.substitute_t_power(e).substitute_t_power(f), a.substitute_t_power(e * f)
        )


class EnvIntTests(SimpleTestCase):
    def test_default_when_unset_or_blank(self):
        with mock.patch.dict(os.environ, {"MOTIVIC_ORDER": "  "}):
            self.assertEqual(env_int("MOTIVIC_ORDER", 10), 10)
        with mock.patch.dict(os.environ, {}, clear=True):
            self.assertEqual(env_int("MOTIVIC_SEED", 42), 42)

    def test_reads_environment(self):
        with mock.patch.dict(os.environ, {"MOTIVIC_ORDER": " 6 ", "MOTIVIC_SEED": "-3"}):
            self.assertEqual(env_int("MOTIVIC_ORDER", 10), 6)
            self.assertEqual(env_int("MOTIVIC_SEED", 42, minimum=-100), -3)

    def test_malformed_or_too_small(self):
        with mock.patch.dict(os.environ, {"MOTIVIC_ORDER": "ten", "MOTIVIC_WORKERS": "0"}):
            with self.assertRaises(ImproperlyConfigured):
                env_int("MOTIVIC_ORDER", 10)
            with self.assertRaises(ImproperlyConfigured):
                env_int("MOTIVIC_WORKERS", 1, minimum=1)


class CommandExitCodeTests(SimpleTestCase):
    def test_non_integral_result_exits_three(self):
        failure = NonIntegralResult("coefficient 1/2 is not an integer", index=2)
        with mock.patch.object(SeriesCommand, "compute", side_effect=failure):
            with self.assertRaises(CommandError) as ctx:
                call_command("series", "punctual-surface", "--order", "2", stdout=StringIO())
        self.assertEqual(ctx.exception.returncode, 3)

    def test_syntax_error_exits_two(self):
        with self.assertRaises(CommandError) as ctx:
            call_command("series", "zeta", "--class", "raw(x+1)", stdout=StringIO())
        self.assertEqual(ctx.exception.returncode, 2)
