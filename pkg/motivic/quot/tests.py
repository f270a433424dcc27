import json
from io import StringIO

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, override_settings

from core.exceptions import NonIntegralResult
from core.polynomials import L, ONE, ZERO, BiPoly
from core.series import Series
from motives.classes import MotiveClass, Specialization, parse_motive, specialize, zeta
from partitions.enumeration import Partition
from plethystic.lambda_ring import sigma_n
from plethystic.power import pow_series
from quot.checks import (
    CheckStatus,
    curve_omega_check,
    surface_omega_check,
    sym_punctual_check,
    theorem_a_check,
)
from quot.generating import (
    bfp_sum,
    effective_sign_check,
    goettsche,
    hodge_product,
    poincare_product,
    punctual_curve,
    punctual_surface,
    quot_curve,
    quot_curve_exp,
)
from quot.omega import omega_extract, omega_from_quot
from quot.strata import strata
from quot.tables import betti_frame, euler_frame, hodge_frame

GENERA = (0, 1, 2, 3)
RANKS = (1, 2, 3)


def mk_poly(text) -> BiPoly:
    return BiPoly.coerce(text)


def curve_class(g) -> BiPoly:
    return MotiveClass.curve(g).epoly


def projective_class(n) -> BiPoly:
    return MotiveClass.projective(n).epoly


def run(*args) -> str:
    out = StringIO()
    call_command(*args, stdout=out)
    return out.getvalue().strip()


class CurveSeriesTests(SimpleTestCase):
    def test_punctual_curve(self):
        self.assertEqual(punctual_curve(1, 4), Series.from_coeffs([1] * 5))
        for r in range(1, 5):
            with self.subTest(r=r):
                self.assertEqual(punctual_curve(r, 2)[1], projective_class(r - 1))
        self.assertEqual(punctual_curve(2, 2)[2], mk_poly("1+u*v+u^2*v^2"))

    def test_rank_and_genus_validated(self):
        with self.assertRaises(ValueError):
            punctual_curve(0, 3)
        with self.assertRaises(ValueError):
            quot_curve(-1, 1, 3)

    def test_quot_curve(self):
        for g in GENERA:
            with self.subTest(g=g):
                self.assertEqual(quot_curve(g, 1, 5), zeta(MotiveClass.curve(g), 5))
        self.assertEqual(quot_curve(0, 2, 3)[1], mk_poly("1+2*u*v+u^2*v^2"))

    def test_linear_coefficient(self):
        for g in GENERA:
            for r in RANKS:
                with self.subTest(g=g, r=r):
                    self.assertEqual(
                        quot_curve(g, r, 1)[1], curve_class(g) * projective_class(r - 1)
                    )

    def test_quot_curve_exp(self):
        self.assertEqual(quot_curve_exp(0, 1, 4), zeta(MotiveClass.projective(1), 4))
        self.assertEqual(quot_curve_exp(1, 1, 2)[2], sigma_n(curve_class(1), 2))

    def test_three_routes_agree(self):
        for g in GENERA:
            for r in RANKS:
                with self.subTest(g=g, r=r):
                    z = quot_curve(g, r, 6)
                    self.assertEqual(quot_curve_exp(g, r, 6), z)
                    self.assertEqual(hodge_product(g, r, 6), z)

    def test_bfp_sum(self):
        self.assertEqual(bfp_sum(2, 3, 0), ONE)
        self.assertEqual(bfp_sum(0, 2, 1), mk_poly("(1+u*v) + u*v*(1+u*v)"))
        for n in range(5):
            with self.subTest(n=n):
                self.assertEqual(bfp_sum(1, 1, n), sigma_n(curve_class(1), n))

    def test_bfp_sum_matches_series(self):
        for g in (0, 2):
            for r in RANKS:
                z = quot_curve(g, r, 5)
                for n in range(6):
                    with self.subTest(g=g, r=r, n=n):
                        self.assertEqual(bfp_sum(g, r, n), z[n])

    def test_hodge_product(self):
        self.assertEqual(hodge_product(0, 1, 5), zeta(MotiveClass.projective(1), 5))
        self.assertEqual(hodge_product(2, 1, 1)[1], mk_poly("1-2*u-2*v+u*v"))
        self.assertEqual(hodge_product(1, 2, 1)[1], mk_poly("(1-u-v+u*v)*(1+u*v)"))

    def test_poincare_product(self):
        expected = Series.linear_power(ONE, -1, 1, 4) * Series.linear_power(
            mk_poly("u^2"), -1, 1, 4
        )
        self.assertEqual(poincare_product(0, 1, 4), expected)
        self.assertEqual(poincare_product(1, 1, 1)[1], mk_poly("1-2*u+u^2"))

    def test_poincare_is_uv_specialization(self):
        for g in GENERA:
            for r in RANKS:
                with self.subTest(g=g, r=r):
                    self.assertEqual(
                        specialize(hodge_product(g, r, 5), Specialization.UV_EQUAL),
                        poincare_product(g, r, 5),
                    )

    def test_effective_signs(self):
        self.assertTrue(effective_sign_check(punctual_curve(3, 6)))
        self.assertTrue(effective_sign_check(punctual_surface(6)))
        self.assertTrue(effective_sign_check(quot_curve(0, 2, 5)))
        self.assertFalse(effective_sign_check(Series.from_coeffs([1, -1])))


class SurfaceSeriesTests(SimpleTestCase):
    def test_punctual_surface(self):
        p = punctual_surface(3)
        self.assertEqual(p[1], ONE)
        self.assertEqual(p[2], mk_poly("1+u*v"))
        self.assertEqual(p[3], mk_poly("1+u*v+u^2*v^2"))

    def test_goettsche(self):
        plane = goettsche(MotiveClass.affine(2), 3)
        self.assertEqual(plane[1], mk_poly("u^2*v^2"))
        self.assertEqual(plane[2], mk_poly("u^4*v^4+u^3*v^3"))
        self.assertEqual(goettsche(MotiveClass.projective(2), 1)[1], mk_poly("1+u*v+u^2*v^2"))

    def test_goettsche_accepts_raw_classes(self):
        self.assertEqual(goettsche(L**2, 3), goettsche(MotiveClass.affine(2), 3))
        self.assertEqual(
            goettsche(parse_motive("raw(u^2*v^2)"), 3), goettsche(MotiveClass.affine(2), 3)
        )

    def test_goettsche_rejects_curves(self):
        with self.assertRaises(ValueError):
            goettsche(MotiveClass.curve(1), 3)

    def test_goettsche_is_power_of_punctual(self):
        for text in ("A^2", "P^2", "P^1*P^1"):
            surface = parse_motive(text)
            with self.subTest(surface=text):
                self.assertEqual(
                    goettsche(surface, 6), pow_series(punctual_surface(6), surface.epoly)
                )


class OmegaTests(SimpleTestCase):
    def test_punctual_curve(self):
        for r in range(1, 5):
            with self.subTest(r=r):
                omega = omega_extract(punctual_curve(r, 8))
                self.assertEqual(omega[1], projective_class(r - 1))
                self.assertTrue(all(omega[n] == ZERO for n in range(2, 9)))

    def test_punctual_surface(self):
        omega = omega_extract(punctual_surface(10))
        self.assertEqual(list(omega.classes), [L**k for k in range(10)])

    def test_trivial_series(self):
        omega = omega_extract(Series.one(4))
        self.assertEqual(omega.order, 4)
        self.assertTrue(all(c == ZERO for c in omega.classes))

    def test_round_trip(self):
        p = punctual_curve(3, 6)
        self.assertEqual(omega_extract(p).to_series(), p)

    def test_omega_from_quot(self):
        omega = omega_from_quot(quot_curve(2, 3, 6), MotiveClass.curve(2))
        self.assertEqual(omega.as_log_series(), Series.monomial(projective_class(2), 1, 6))
        omega = omega_from_quot(goettsche(MotiveClass.projective(2), 6), MotiveClass.projective(2))
        self.assertEqual(list(omega.classes), [L**k for k in range(6)])

    def test_omega_from_quot_errors(self):
        with self.assertRaises(ValueError):
            omega_from_quot(punctual_surface(3), ZERO)
        with self.assertRaises(NonIntegralResult) as ctx:
            omega_from_quot(punctual_surface(3), mk_poly("1+u"))
        self.assertEqual(ctx.exception.index, 1)

    def test_index_is_one_based(self):
        omega = omega_extract(punctual_surface(2))
        with self.assertRaises(IndexError):
            omega[0]


class StrataTests(SimpleTestCase):
    def test_symmetric_square_of_line(self):
        table = strata(punctual_curve(1, 4), L, 2)
        self.assertEqual(table[Partition.from_parts([1, 1])], mk_poly("u^2*v^2 - u*v"))
        self.assertEqual(table[Partition.from_parts([2])], L)
        self.assertEqual(table.total, L**2)

    def test_single_point(self):
        m = mk_poly("1-2*u-2*v+u*v")
        table = strata(punctual_curve(2, 1), m, 1)
        self.assertEqual(len(table.rows), 1)
        self.assertEqual(table.rows[0].value, m * projective_class(1))

    def test_hilbert_square_of_plane(self):
        table = strata(punctual_surface(2), L**2, 2)
        self.assertEqual(table[Partition.from_parts([2])], mk_poly("u^2*v^2*(1+u*v)"))
        self.assertEqual(table[Partition.from_parts([1, 1])], mk_poly("u^4*v^4-u^2*v^2"))

    def test_row_sums_and_deepest_stratum(self):
        cases = (
            (punctual_curve(1, 6), L),
            (punctual_curve(2, 6), curve_class(1)),
            (punctual_surface(6), L**2),
        )
        for base, m in cases:
            power = pow_series(base, m)
            for n in range(1, 6):
                with self.subTest(m=str(m), n=n):
                    table = strata(base, m, n)
                    self.assertEqual(table.total, power[n])
                    self.assertEqual(table[Partition.from_parts([n])], m * base[n])

    def test_rows_follow_partition_order(self):
        table = strata(punctual_surface(4), L, 4)
        self.assertEqual(
            [str(row.partition) for row in table.rows],
            ["(4)", "(3,1)", "(2^2)", "(2,1^2)", "(1^4)"],
        )

    def test_limits(self):
        with self.assertRaises(ValueError):
            strata(punctual_surface(10), L, 10)
        with self.assertRaises(ValueError):
            strata(punctual_surface(2), L, -1)

    def test_schema(self):
        dumped = json.loads(
            strata(punctual_curve(1, 2), L, 2).to_schema().model_dump_json(by_alias=True)
        )
        self.assertEqual(dumped["n"], 2)
        self.assertEqual(dumped["rows"][0]["partition"], {"mult": [0, 1]})
        self.assertEqual(dumped["rows"][0]["class"], {"terms": [{"u": 1, "v": 1, "coef": "1"}]})


class CheckTests(SimpleTestCase):
    def test_theorem_a_on_curves(self):
        for g in (0, 1, 3):
            for r in RANKS:
                with self.subTest(g=g, r=r):
                    report = theorem_a_check(
                        MotiveClass.curve(g), punctual_curve(r, 5), quot_curve(g, r, 5)
                    )
                    self.assertTrue(report.passed)
                    self.assertIsNone(report.first_mismatch)

    def test_theorem_a_on_plane(self):
        plane = MotiveClass.affine(2)
        report = theorem_a_check(plane, punctual_surface(6), goettsche(plane, 6))
        self.assertEqual(report.status, CheckStatus.PASS)

    def test_theorem_a_for_point(self):
        p = Series.from_coeffs([1, "u", "2+v", 7])
        self.assertTrue(theorem_a_check(MotiveClass.point(), p, p).passed)

    def test_mismatch_is_reported(self):
        report = theorem_a_check(
            MotiveClass.curve(1), punctual_curve(2, 4), quot_curve(1, 3, 4)
        )
        self.assertEqual(report.status, CheckStatus.FAIL)
        self.assertEqual(report.first_mismatch, 1)
        self.assertEqual(
            json.loads(report.model_dump_json()),
            {"check": "theorem_a[curve(1)]", "status": "fail", "first_mismatch": 1},
        )

    def test_sym_punctual(self):
        for r in range(1, 5):
            with self.subTest(r=r):
                self.assertTrue(sym_punctual_check(r, 8).passed)

    def test_omega_checks(self):
        self.assertTrue(curve_omega_check(2, 3, 6).passed)
        self.assertTrue(surface_omega_check(MotiveClass.projective(2), 6).passed)
        self.assertTrue(surface_omega_check(parse_motive("A^1*P^1"), 6).passed)


class TableTests(SimpleTestCase):
    def test_projective_line_diamond(self):
        frame = hodge_frame(0, 1, 1)
        row = frame[frame["n"] == 1]
        self.assertEqual(
            list(zip(row["p"], row["q"], row["h"])), [(0, 0, 1), (1, 1, 1)]
        )

    def test_elliptic_curve_diamond(self):
        frame = hodge_frame(1, 1, 1)
        row = frame[frame["n"] == 1]
        self.assertEqual(
            sorted(zip(row["p"], row["q"], row["h"])),
            [(0, 0, 1), (0, 1, 1), (1, 0, 1), (1, 1, 1)],
        )

    def test_euler_characteristics(self):
        frame = euler_frame(2, 2, 1)
        # chi(C x P^1) = (2 - 2g) * 2
        self.assertEqual(list(frame["euler"]), [1, -4])

    def test_betti_numbers(self):
        frame = betti_frame(1, 1, 1)
        row = frame[frame["n"] == 1]
        self.assertEqual(list(zip(row["k"], row["b"])), [(0, 1), (1, 2), (2, 1)])


@override_settings(MOTIVIC_ORDER=3)
class CommandTests(SimpleTestCase):
    def test_series_text(self):
        self.assertEqual(run("series", "punctual-surface", "--order", "2"), "[1, 1, 1 + u*v]")
        self.assertEqual(
            run("series", "hodge-product", "--g", "2", "--r", "1", "--order", "1"),
            "[1, 1 - 2*u - 2*v + u*v]",
        )
        self.assertEqual(run("series", "zeta", "--class", "point"), "[1, 1, 1, 1]")

    def test_series_json(self):
        dumped = json.loads(run("series", "quot-curve", "--g", "1", "--r", "2", "--format", "json"))
        self.assertEqual(dumped["order"], 3)
        self.assertEqual(len(dumped["coeffs"]), 4)

    def test_series_is_deterministic(self):
        args = ("series", "goettsche", "--class", "P^2", "--format", "csv")
        self.assertEqual(run(*args), run(*args))

    def test_series_specialize(self):
        self.assertEqual(
            run("series", "zeta", "--class", "P^1", "--specialize", "euler"), "[1, 2, 3, 4]"
        )

    def test_invalid_parameters_exit_2(self):
        for args in (
            ("series", "punctual-curve", "--r", "0"),
            ("series", "zeta"),
            ("series", "zeta", "--class", "circle"),
            ("series", "punctual-surface", "--order", "-1"),
            ("strata", "punctual-surface", "--class", "A^2", "--n", "12"),
        ):
            with self.subTest(args=args), self.assertRaises(CommandError) as ctx:
                run(*args)
            self.assertEqual(ctx.exception.returncode, 2)

    def test_table(self):
        lines = run("table", "--g", "1", "--r", "1", "--n", "1", "--format", "csv").splitlines()
        self.assertEqual(lines, ["n,p,q,h", "1,0,0,1", "1,0,1,1", "1,1,0,1", "1,1,1,1"])

    def test_table_betti(self):
        lines = run("table", "--g", "1", "--n", "1", "--betti", "--format", "csv").splitlines()
        self.assertEqual(lines, ["n,k,b", "1,0,1", "1,1,2", "1,2,1"])

    def test_omega(self):
        lines = run("omega", "punctual-surface", "--format", "csv").splitlines()
        self.assertEqual(lines, ["n,omega", "1,1", "2,u*v", "3,u^2*v^2"])
        dumped = json.loads(run("omega", "goettsche", "--class", "A^1*P^1", "--format", "json"))
        self.assertEqual(len(dumped["omega"]), 3)

    def test_strata(self):
        dumped = json.loads(
            run("strata", "punctual-curve", "--class", "A^1", "--n", "2", "--format", "json")
        )
        self.assertEqual([row["partition"]["mult"] for row in dumped["rows"]], [[0, 1], [2]])
        self.assertEqual(
            dumped["rows"][1]["class"],
            {"terms": [{"u": 1, "v": 1, "coef": "-1"}, {"u": 2, "v": 2, "coef": "1"}]},
        )
