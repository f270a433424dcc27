"""
Identity checks. A mismatch is a report, never an exception.
"""

import logging

from django.db import models
from pydantic import BaseModel, ConfigDict

from core.polynomials import BiPoly
from core.series import Series
from motives.classes import MotiveClass, e_poly, zeta
from plethystic.power import pow_series

from .generating import goettsche, punctual_curve, quot_curve
from .omega import OmegaList, omega_from_quot

logger = logging.getLogger(__name__)


class CheckStatus(models.TextChoices):
    PASS = "pass", "Pass"
    FAIL = "fail", "Fail"


class CheckReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    check: str
    status: CheckStatus
    first_mismatch: int | None = None

    @property
    def passed(self) -> bool:
        return self.status == CheckStatus.PASS


def compare(check: str, left: Series, right: Series) -> CheckReport:
    mismatch = left.first_mismatch(right)
    if mismatch is None:
        return CheckReport(check=check, status=CheckStatus.PASS)
    logger.warning(
        "%s: mismatch at t^%s: %s != %s", check, mismatch, left[mismatch], right[mismatch]
    )
    return CheckReport(check=check, status=CheckStatus.FAIL, first_mismatch=mismatch)


def theorem_a_check(
    x: MotiveClass, p: Series, z: Series, order: int | None = None, *, check: str | None = None
) -> CheckReport:
    """Z = P^[X] coefficientwise."""
    if order is None:
        order = min(p.order, z.order)
    name = check or f"theorem_a[{x.name}]"
    return compare(name, pow_series(p, e_poly(x), order), z.truncate(order))


def sym_punctual_check(r: int, order: int) -> CheckReport:
    return compare(
        f"sym_punctual[r={r}]",
        punctual_curve(r, order),
        zeta(MotiveClass.projective(r - 1), order),
    )


def _omega_report(check: str, found: OmegaList, expected: list[BiPoly]) -> CheckReport:
    return compare(check, found.as_log_series(), OmegaList(tuple(expected)).as_log_series())


def curve_omega_check(g: int, r: int, order: int) -> CheckReport:
    """Omega recovered from the curve series: [P^(r-1)], 0, 0, ..."""
    curve = MotiveClass.curve(g)
    found = omega_from_quot(quot_curve(g, r, order), curve)
    expected = [MotiveClass.projective(r - 1).epoly] + [BiPoly.constant(0)] * (order - 1)
    return _omega_report(f"curve_omega[g={g},r={r}]", found, expected[:order])


def surface_omega_check(surface: MotiveClass, order: int) -> CheckReport:
    """Omega recovered from Goettsche's series: L^(n-1)."""
    found = omega_from_quot(goettsche(surface, order), surface)
    expected = [BiPoly.lefschetz(n - 1) for n in range(1, order + 1)]
    return _omega_report(f"surface_omega[{surface.name}]", found, expected)
