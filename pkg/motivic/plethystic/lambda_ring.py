"""
Lambda-ring operations on ZZ[u, v, s1..s9].

The power structure is determined by the geometric rule

    (1 - t)^(-f) = prod over terms c*x of f of (1 - x t)^(-c)

for monomials x, so sigma^n(f) is the t^n coefficient of (1 - t)^(-f) and
psi_k (Adams) raises every variable to its k-th power.
"""

from sympy import factorint

from core.polynomials import BiPoly
from core.series import Series


def adams(f, k: int) -> BiPoly:
    return BiPoly.coerce(f).adams(k)


def adams_series(a: Series, k: int) -> Series:
    return a.adams(k)


def mobius(k: int) -> int:
    if k < 1:
        raise ValueError(f"The Mobius function is defined for k >= 1, got {k}.")
    exponents = factorint(k).values()
    if any(e > 1 for e in exponents):
        return 0
    return -1 if len(exponents) % 2 else 1


def geometric_pow(f, k: int, order: int) -> Series:
    """(1 - t^k)^(-f), expanded exactly to `order`."""
    f = BiPoly.coerce(f).integral()
    result = Series.one(order)
    for monom, coef in f.terms():
        factor = Series.linear_power(BiPoly.from_terms({monom: 1}), -coef, k, order)
        result = result * factor
    return result


def sigma_n(m, n: int) -> BiPoly:
    """sigma^n(m), the class of the n-th symmetric power."""
    if n < 0:
        raise ValueError(f"sigma^n needs n >= 0, got {n}.")
    return geometric_pow(m, 1, n)[n]
