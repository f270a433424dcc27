"""
Verification suites.

A suite is a list of named checks, each returning a `CheckReport`.
Randomized checks loop over seeded instances and stop at the first failing
one. Reports are sorted by check name, whatever the worker count.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable

import pandas as pd
from django.db import models
from pydantic import BaseModel, ConfigDict

from core.polynomials import L, ONE, BiPoly
from core.series import Series
from motives.classes import (
    MotiveClass,
    Specialization,
    euler_characteristic,
    parse_motive,
    specialize,
)
from partitions.enumeration import Partition
from plethystic.exponential import ExpRoute, exp_series, log_series
from plethystic.lambda_ring import geometric_pow
from plethystic.power import pow_series, pow_stanley
from quot.checks import (
    CheckReport,
    CheckStatus,
    compare,
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
from quot.omega import omega_extract
from quot.strata import strata

from .sampling import Sampler

logger = logging.getLogger(__name__)

Check = tuple[str, Callable[[], CheckReport]]

SURFACES = ("A^2", "P^2", "P^1*P^1")
OMEGA_SURFACES = ("P^2", "A^1*P^1")
STRATA_MAX_N = 6


class Suite(models.TextChoices):
    AXIOMS = "axioms", "Power structure axioms"
    ORACLE = "oracle", "Independent oracles and lambda-ring identities"
    CURVE = "curve", "Quot schemes of curves"
    SURFACE = "surface", "Hilbert schemes of points of surfaces"
    ALL = "all", "Every suite"


@dataclass(frozen=True)
class VerifyOptions:
    order: int = 10
    seed: int = 42
    samples: int = 200
    genera: tuple[int, ...] = (0, 1, 2, 3)
    ranks: tuple[int, ...] = (1, 2, 3, 4)


class SuiteReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    suite: str
    order: int
    seed: int
    checks: list[CheckReport]

    @property
    def failed(self) -> list[CheckReport]:
        return [c for c in self.checks if not c.passed]

    @property
    def passed(self) -> bool:
        return not self.failed

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            {
                "check": [c.check for c in self.checks],
                "status": [str(c.status) for c in self.checks],
                "first_mismatch": [
                    "-" if c.first_mismatch is None else str(c.first_mismatch)
                    for c in self.checks
                ],
            }
        )


def _passed(name: str) -> CheckReport:
    return CheckReport(check=name, status=CheckStatus.PASS)


def _sampled(name: str, options: VerifyOptions, instance) -> Check:
    """`instance(sampler)` returns the two series that must agree."""

    def run() -> CheckReport:
        sampler = Sampler(options.seed, name)
        for i in range(options.samples):
            left, right = instance(sampler)
            report = compare(name, left, right)
            if not report.passed:
                logger.warning("%s failed on sample %s (seed %s)", name, i, options.seed)
                return report
        return _passed(name)

    return name, run


def _series_of(values: list[BiPoly]) -> Series:
    return Series.from_coeffs(values, len(values) - 1)


# ----------------------------------------------------------------------
# Power structure axioms
# ----------------------------------------------------------------------
def axioms_checks(options: VerifyOptions) -> list[Check]:
    n = options.order
    shape = {"max_terms": 2, "max_degree": 2, "coef": 2}

    def exponent(sampler):
        return sampler.poly(max_terms=2, max_degree=2, coef=2)

    def power_zero(s):
        return pow_series(s.series(n, **shape), 0), Series.one(n)

    def power_one(s):
        a = s.series(n, **shape)
        return pow_series(a, 1), a

    def product_base(s):
        a, b, m = s.series(n, **shape), s.series(n, **shape), exponent(s)
        return pow_series(a * b, m), pow_series(a, m) * pow_series(b, m)

    def sum_exponent(s):
        a, m, k = s.series(n, **shape), exponent(s), exponent(s)
        return pow_series(a, m + k), pow_series(a, m) * pow_series(a, k)

    def product_exponent(s):
        a, m, k = s.series(n, **shape), exponent(s), exponent(s)
        return pow_series(a, m * k), pow_series(pow_series(a, m), k)

    def linear_term(s):
        m = exponent(s)
        power = pow_series(Series.from_coeffs([1, 1], n), m)
        return power.truncate(min(n, 1)), Series.from_coeffs([ONE, m], min(n, 1))

    def substitution(s):
        a, m, e = s.series(n, **shape), exponent(s), s.integer(2, 3)
        return pow_series(a.substitute_t_power(e), m), pow_series(a, m).substitute_t_power(e)

    return [
        _sampled("axiom_power_zero", options, power_zero),
        _sampled("axiom_power_one", options, power_one),
        _sampled("axiom_product_base", options, product_base),
        _sampled("axiom_sum_exponent", options, sum_exponent),
        _sampled("axiom_product_exponent", options, product_exponent),
        _sampled("axiom_linear_term", options, linear_term),
        _sampled("axiom_substitution", options, substitution),
    ]


# ----------------------------------------------------------------------
# Oracles and lambda-ring identities
# ----------------------------------------------------------------------
def oracle_checks(options: VerifyOptions) -> list[Check]:
    n = options.order
    effective = {"max_terms": 3, "max_degree": 2, "coef": 3, "effective": True}

    def stanley(s):
        a, m = s.constant_series(n), s.integer(-5, 5)
        return specialize(pow_series(a, m), Specialization.EULER), pow_stanley(a, m)

    def round_trip(s):
        a = s.series(n, constant=0, **effective)
        return log_series(exp_series(a)), a

    def dual_route(s):
        a = s.series(n, constant=0, max_terms=3, max_degree=2, coef=3)
        return exp_series(a, route=ExpRoute.ADAMS), exp_series(a, route=ExpRoute.PRODUCT)

    def lambda_relation(s):
        # sigma from the Exp route on the left, from the geometric rule on the right
        x, y = s.poly(), s.poly()
        top = min(n, 6)
        left = exp_series(Series.monomial(x - y, 1, top)) * exp_series(Series.monomial(y, 1, top))
        return left, geometric_pow(x, 1, top)

    def zeta_shifted(s):
        f, shift = s.poly(), s.integer(0, 2)
        return geometric_pow(f, 1, n).rescale(L**shift), geometric_pow(L**shift * f, 1, n)

    def pushforward(s):
        a = s.series(n, constant=0, **effective)
        m = s.poly(effective=True)
        return exp_series(a * m), pow_series(exp_series(a), m)

    return [
        _sampled("stanley_oracle", options, stanley),
        _sampled("exp_log_round_trip", options, round_trip),
        _sampled("exp_dual_route", options, dual_route),
        _sampled("lambda_relation", options, lambda_relation),
        _sampled("zeta_shifted", options, zeta_shifted),
        _sampled("pushforward", options, pushforward),
    ]


# ----------------------------------------------------------------------
# Curves
# ----------------------------------------------------------------------
def _strata_check(name: str, base: Series, m: BiPoly, order: int) -> Check:
    """Row sums give the t^n coefficient; the stratum (n) is m * B_n."""

    def run() -> CheckReport:
        top = min(order, STRATA_MAX_N)
        power = pow_series(base.truncate(top), m)
        totals, deepest, expected = [ONE], [ONE], [ONE]
        for n in range(1, top + 1):
            table = strata(base, m, n)
            totals.append(table.total)
            deepest.append(table[Partition.from_parts([n])])
            expected.append(m * base[n])
        report = compare(name, _series_of(totals), power)
        if not report.passed:
            return report
        return compare(name, _series_of(deepest), _series_of(expected))

    return name, run


def curve_checks(options: VerifyOptions) -> list[Check]:
    n = options.order
    checks: list[Check] = []
    for g in options.genera:
        for r in options.ranks:
            tag = f"g={g},r={r}"
            checks += [
                (
                    f"quot_curve_exp[{tag}]",
                    lambda g=g, r=r, tag=tag: compare(
                        f"quot_curve_exp[{tag}]", quot_curve_exp(g, r, n), quot_curve(g, r, n)
                    ),
                ),
                (
                    f"hodge_product[{tag}]",
                    lambda g=g, r=r, tag=tag: compare(
                        f"hodge_product[{tag}]", hodge_product(g, r, n), quot_curve(g, r, n)
                    ),
                ),
                (
                    f"bfp_sum[{tag}]",
                    lambda g=g, r=r, tag=tag: compare(
                        f"bfp_sum[{tag}]",
                        _series_of([bfp_sum(g, r, k) for k in range(n + 1)]),
                        quot_curve(g, r, n),
                    ),
                ),
                (
                    f"theorem_a[{tag}]",
                    lambda g=g, r=r, tag=tag: theorem_a_check(
                        MotiveClass.curve(g),
                        punctual_curve(r, n),
                        quot_curve(g, r, n),
                        check=f"theorem_a[{tag}]",
                    ),
                ),
                (
                    f"poincare[{tag}]",
                    lambda g=g, r=r, tag=tag: compare(
                        f"poincare[{tag}]",
                        specialize(hodge_product(g, r, n), Specialization.UV_EQUAL),
                        poincare_product(g, r, n),
                    ),
                ),
                (
                    f"curve_omega[{tag}]",
                    lambda g=g, r=r: curve_omega_check(g, r, n),
                ),
            ]

    for r in options.ranks:
        checks += [
            (f"sym_punctual[r={r}]", lambda r=r: sym_punctual_check(r, n)),
            (
                f"omega_vanishing[r={r}]",
                lambda r=r: compare(
                    f"omega_vanishing[r={r}]",
                    omega_extract(punctual_curve(r, n)).as_log_series(),
                    Series.monomial(MotiveClass.projective(r - 1).epoly, 1, n),
                ),
            ),
        ]

    checks.append(_strata_check("strata[curve,m=L]", punctual_curve(1, STRATA_MAX_N), L, n))
    return checks


# ----------------------------------------------------------------------
# Surfaces
# ----------------------------------------------------------------------
def surface_checks(options: VerifyOptions) -> list[Check]:
    n = options.order
    checks: list[Check] = []
    for text in SURFACES:
        surface = parse_motive(text)
        checks.append(
            (
                f"theorem_a[{surface.name}]",
                lambda surface=surface: theorem_a_check(
                    surface, punctual_surface(n), goettsche(surface, n)
                ),
            )
        )
    for text in OMEGA_SURFACES:
        surface = parse_motive(text)
        checks.append(
            (f"surface_omega[{surface.name}]", lambda surface=surface: surface_omega_check(surface, n))
        )

    def omega_surface() -> CheckReport:
        found = omega_extract(punctual_surface(n)).as_log_series()
        expected = _series_of([BiPoly.constant(0)] + [L**k for k in range(n)])
        return compare("omega_surface", found, expected)

    def hilbert_square() -> CheckReport:
        top = max(n, 2)
        found = goettsche(MotiveClass.affine(2), top).truncate(2)
        # Sym^2 A^2 off the diagonal, plus a P^1-bundle over the diagonal
        expected = _series_of([ONE, L**2, L**4 + L**3])
        return compare("hilbert_square_plane", found, expected)

    def effective_signs() -> CheckReport:
        series = (punctual_surface(n), goettsche(MotiveClass.affine(2), n))
        if all(effective_sign_check(s) for s in series):
            return _passed("effective_signs")
        return CheckReport(check="effective_signs", status=CheckStatus.FAIL)

    def euler_goettsche() -> CheckReport:
        # Euler characteristics of Hilb^n(P^2) from the integer power structure
        plane = MotiveClass.projective(2)
        punctual = specialize(punctual_surface(n), Specialization.EULER)
        return compare(
            "euler_goettsche[P^2]",
            specialize(goettsche(plane, n), Specialization.EULER),
            pow_stanley(punctual, euler_characteristic(plane.epoly)),
        )

    checks += [
        ("omega_surface", omega_surface),
        ("hilbert_square_plane", hilbert_square),
        ("effective_signs", effective_signs),
        ("euler_goettsche[P^2]", euler_goettsche),
        _strata_check("strata[surface,m=L^2]", punctual_surface(STRATA_MAX_N), L**2, n),
    ]
    return checks


SUITES = {
    Suite.AXIOMS: axioms_checks,
    Suite.ORACLE: oracle_checks,
    Suite.CURVE: curve_checks,
    Suite.SURFACE: surface_checks,
}


def checks_for(suite: str, options: VerifyOptions) -> list[Check]:
    if suite == Suite.ALL:
        return [check for build in SUITES.values() for check in build(options)]
    try:
        return SUITES[Suite(suite)](options)
    except ValueError as exc:
        raise ValueError(f"Unknown suite {suite!r}.") from exc


def run_suite(suite: str, options: VerifyOptions, workers: int = 1) -> SuiteReport:
    if options.order < 0 or options.samples < 1 or workers < 1:
        raise ValueError("order must be >= 0, samples and workers >= 1.")
    checks = checks_for(suite, options)
    logger.info("Running %s checks of suite %s with %s worker(s)", len(checks), suite, workers)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        reports = list(pool.map(lambda check: check[1](), checks))
    for report in reports:
        logger.info("%s: %s", report.check, report.status)
    return SuiteReport(
        suite=str(suite),
        order=options.order,
        seed=options.seed,
        checks=sorted(reports, key=lambda report: report.check),
    )
