"""
Motivic exponential and logarithm.

    Exp(sum A_n t^n) = prod_n (1 - t^n)^(-A_n)
                     = exp(sum_k psi_k(A) / k)

Both forms are implemented; the second one goes through QQ and asserts
integrality at the end. Log inverts the second form with Mobius inversion:

    Log(B) = sum_k mu(k)/k * psi_k(log B)
"""

import logging
from typing import NewType

from django.db import models

from core.exceptions import ConstantTermError
from core.polynomials import ONE, ZERO
from core.series import Series

from .lambda_ring import adams_series, geometric_pow, mobius

logger = logging.getLogger(__name__)

# c_0 = 1, the domain of the power map
EffSeries = NewType("EffSeries", Series)
# c_0 = 0, the domain of Exp
LogSeries = NewType("LogSeries", Series)


class ExpRoute(models.TextChoices):
    ADAMS = "adams", "Adams operations and classical exp"
    PRODUCT = "product", "Product of geometric factors"


def as_eff_series(a: Series) -> EffSeries:
    if a.constant != ONE:
        raise ConstantTermError(1, a.constant)
    return EffSeries(a)


def as_log_series(a: Series) -> LogSeries:
    if a.constant != ZERO:
        raise ConstantTermError(0, a.constant)
    return LogSeries(a)


def _with_order(a: Series, order: int | None) -> Series:
    return a if order is None else a.truncate(order)


def classical_exp(a: Series) -> Series:
    """exp(a) for c_0 = 0, over QQ: n e_n = sum_k k a_k e_{n-k}."""
    a = a.rational()
    out = [ONE.rational()]
    for n in range(1, a.order + 1):
        total = ZERO.rational()
        for k in range(1, n + 1):
            if not a[k].is_zero:
                total = total + a[k] * out[n - k] * k
        out.append(total / n)
    return Series(a.order, tuple(out))


def classical_log(b: Series) -> Series:
    """log(b) for c_0 = 1, over QQ: n l_n = n b_n - sum_{k<n} k l_k b_{n-k}."""
    b = b.rational()
    out = [ZERO.rational()]
    for n in range(1, b.order + 1):
        total = ZERO.rational()
        for k in range(1, n):
            if not b[n - k].is_zero:
                total = total + out[k] * b[n - k] * k
        out.append(b[n] - total / n)
    return Series(b.order, tuple(out))


def exp_series(a: Series, order: int | None = None, route: str = ExpRoute.ADAMS) -> EffSeries:
    a = as_log_series(_with_order(a, order))
    if route == ExpRoute.PRODUCT:
        result = Series.one(a.order)
        for n in range(1, a.order + 1):
            if not a[n].is_zero:
                result = result * geometric_pow(a[n], n, a.order)
        return EffSeries(result)
    if route != ExpRoute.ADAMS:
        raise ValueError(f"Unknown Exp route {route!r}.")

    twisted = Series.zero(a.order).rational()
    for k in range(1, a.order + 1):
        twisted = twisted + adams_series(a, k) / k
    return EffSeries(classical_exp(twisted).integral())


def log_series(b: Series, order: int | None = None) -> LogSeries:
    b = as_eff_series(_with_order(b, order))
    plain = classical_log(b)
    result = Series.zero(b.order).rational()
    for k in range(1, b.order + 1):
        mu = mobius(k)
        if mu:
            result = result + adams_series(plain, k) * mu / k
    logger.debug("Log computed to order %s", b.order)
    return LogSeries(result.integral())
