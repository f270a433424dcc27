"""The power map (A(t), m) -> A(t)^m on 1 + t R[[t]]."""

from fractions import Fraction
from math import prod

from core.exceptions import NonIntegralResult
from core.polynomials import BiPoly
from core.series import Series
from partitions.enumeration import falling_factorial, partitions_of

from .exponential import EffSeries, as_eff_series, exp_series, log_series


def pow_series(a: Series, m, order: int | None = None) -> EffSeries:
    """A(t)^m = Exp(m * Log A(t)) for any m in ZZ[u, v, s]."""
    a = as_eff_series(a if order is None else a.truncate(order))
    m = BiPoly.coerce(m)
    if m.is_zero:
        return EffSeries(Series.one(a.order))
    return exp_series(log_series(a) * m)


def pow_stanley(a: Series, m: int, order: int | None = None) -> EffSeries:
    """
    A(t)^m over ZZ from the partition formula

        1 + sum_n sum_{alpha |- n} m(m-1)...(m-||alpha||+1) prod A_i^alpha_i / prod alpha_i!

    Independent of Exp/Log; used as an oracle.
    """
    a = as_eff_series(a if order is None else a.truncate(order))
    if not all(c.is_constant for c in a.coeffs):
        raise ValueError("pow_stanley needs a series with constant coefficients.")
    values = [int(c.constant_term) for c in a.coeffs]

    out = [1]
    for n in range(1, a.order + 1):
        total = Fraction(0)
        for alpha in partitions_of(n):
            falling = falling_factorial(m, alpha.norm).constant_term
            if not falling:
                continue
            term = prod(values[i] ** k for i, k in enumerate(alpha.mult, start=1))
            total += Fraction(falling * term, alpha.aut_order())
        if total.denominator != 1:
            raise NonIntegralResult(f"Partition sum {total} is not an integer", index=n)
        out.append(int(total))
    return EffSeries(Series.from_coeffs(out, a.order))
