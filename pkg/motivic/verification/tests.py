import json
from io import StringIO
from unittest import mock

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, override_settings

from quot.checks import CheckReport, CheckStatus
from verification.sampling import Sampler
from verification.suites import Suite, SuiteReport, VerifyOptions, checks_for, run_suite


def mk_options(**kwargs) -> VerifyOptions:
    defaults = {"order": 4, "seed": 7, "samples": 3, "genera": (0, 1), "ranks": (1, 2)}
    defaults.update(kwargs)
    return VerifyOptions(**defaults)


def run(*args, **kwargs) -> str:
    out = StringIO()
    call_command(*args, stdout=out, **kwargs)
    return out.getvalue().strip()


class SamplerTests(SimpleTestCase):
    def test_same_seed_and_name_repeat(self):
        first, second = Sampler(3, "check"), Sampler(3, "check")
        self.assertEqual(first.series(4), second.series(4))
        self.assertEqual(first.poly(), second.poly())

    def test_name_separates_streams(self):
        draws = {str(Sampler(3, name).series(6, max_terms=4)) for name in ("a", "b", "c")}
        self.assertGreater(len(draws), 1)

    def test_series_shape(self):
        series = Sampler(1).series(5, constant=0, effective=True)
        self.assertEqual(series.order, 5)
        self.assertTrue(series.constant.is_zero)
        for coefficient in series:
            for _, coef in coefficient.terms():
                self.assertGreaterEqual(coef, 0)

    def test_constant_series(self):
        series = Sampler(1).constant_series(6)
        self.assertEqual(series[0], 1)
        self.assertTrue(all(c.is_constant for c in series))


class SuiteTests(SimpleTestCase):
    def test_suites_pass(self):
        for suite in (Suite.AXIOMS, Suite.ORACLE, Suite.CURVE, Suite.SURFACE):
            with self.subTest(suite=suite):
                report = run_suite(suite, mk_options())
                self.assertTrue(report.passed, [c.check for c in report.failed])
                self.assertTrue(report.checks)

    def test_report_sorted_by_name(self):
        report = run_suite(Suite.CURVE, mk_options())
        names = [c.check for c in report.checks]
        self.assertEqual(names, sorted(names))
        self.assertEqual(len(names), len(set(names)))

    def test_all_is_union(self):
        options = mk_options()
        total = sum(len(checks_for(s, options)) for s in (Suite.AXIOMS, Suite.ORACLE, Suite.CURVE, Suite.SURFACE))
        self.assertEqual(len(checks_for(Suite.ALL, options)), total)

    def test_curve_grid(self):
        names = {name for name, _ in checks_for(Suite.CURVE, mk_options())}
        self.assertIn("theorem_a[g=1,r=2]", names)
        self.assertIn("sym_punctual[r=2]", names)
        self.assertNotIn("theorem_a[g=2,r=1]", names)

    def test_workers_do_not_change_report(self):
        options = mk_options()
        self.assertEqual(
            run_suite(Suite.ORACLE, options, workers=1),
            run_suite(Suite.ORACLE, options, workers=3),
        )

    def test_invalid_options(self):
        with self.assertRaises(ValueError):
            run_suite(Suite.AXIOMS, mk_options(samples=0))
        with self.assertRaises(ValueError):
            run_suite("nonsense", mk_options())

    def test_frame(self):
        report = SuiteReport(
            suite="oracle",
            order=2,
            seed=1,
            checks=[
                CheckReport(check="a", status=CheckStatus.PASS),
                CheckReport(check="b", status=CheckStatus.FAIL, first_mismatch=2),
            ],
        )
        self.assertFalse(report.passed)
        self.assertEqual(list(report.to_frame()["first_mismatch"]), ["-", "2"])


@override_settings(MOTIVIC_ORDER=3, MOTIVIC_SAMPLES=2, MOTIVIC_GENERA=(0, 1), MOTIVIC_RANKS=(1, 2))
class VerifyCommandTests(SimpleTestCase):
    def test_json_report(self):
        report = json.loads(run("verify", "--suite", "oracle", "--seed", "5"))
        self.assertEqual(report["suite"], "oracle")
        self.assertEqual(report["order"], 3)
        self.assertEqual(report["seed"], 5)
        self.assertTrue(all(c["status"] == "pass" for c in report["checks"]))

    def test_text_report(self):
        output = run("verify", "--suite", "surface", "--format", "text")
        self.assertIn("omega_surface", output)
        self.assertIn("pass", output)

    def test_failed_check_exits_one(self):
        failing = SuiteReport(
            suite="curve",
            order=3,
            seed=42,
            checks=[CheckReport(check="bfp_sum[g=0,r=1]", status=CheckStatus.FAIL, first_mismatch=1)],
        )
        out = StringIO()
        with mock.patch("verification.management.commands.verify.run_suite", return_value=failing):
            with self.assertRaises(CommandError) as ctx:
                call_command("verify", "--suite", "curve", stdout=out)
        self.assertEqual(ctx.exception.returncode, 1)
        self.assertIn("bfp_sum[g=0,r=1]", out.getvalue())

    def test_negative_order(self):
        with self.assertRaises(CommandError) as ctx:
            run("verify", "--order", "-1")
        self.assertEqual(ctx.exception.returncode, 2)

    def test_bad_samples(self):
        with self.assertRaises(CommandError) as ctx:
            run("verify", "--suite", "axioms", "--samples", "0")
        self.assertEqual(ctx.exception.returncode, 2)
