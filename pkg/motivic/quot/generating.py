"""
Generating functions of Quot schemes at the level of E-polynomials.

For a smooth curve C of genus g and a locally free sheaf E of rank r,
Z(t) = sum_n E(Quot_C(E, n)) t^n is computed four ways:

    quot_curve       prod_{i=1..r} zeta_C(L^(i-1) t)
    quot_curve_exp   Exp(E(C) E(P^(r-1)) t)
    bfp_sum          sum over compositions n_1 + ... + n_r = n
    hodge_product    the explicit product in u, v

Surfaces (rank 1) go through Goettsche's Exp(E(S) t / (1 - L t)).
"""

from core.polynomials import BiPoly
from core.series import Series
from motives.classes import MotiveClass, zeta
from partitions.enumeration import compositions
from plethystic.exponential import EffSeries, exp_series


def _check_rank(r: int) -> None:
    if r < 1:
        raise ValueError(f"Rank must be >= 1, got {r}.")


def _check_genus(g: int) -> None:
    if g < 0:
        raise ValueError(f"Genus must be >= 0, got {g}.")


def _mono(u: int, v: int) -> BiPoly:
    return BiPoly.monomial(u, v)


def punctual_curve(r: int, order: int) -> EffSeries:
    """Punctual Quot scheme of a curve point: prod_{i<r} 1 / (1 - L^i t)."""
    _check_rank(r)
    result = Series.one(order)
    for i in range(r):
        result = result * Series.linear_power(BiPoly.lefschetz(i), -1, 1, order)
    return EffSeries(result)


def quot_curve(g: int, r: int, order: int) -> EffSeries:
    _check_genus(g)
    _check_rank(r)
    zeta_c = zeta(MotiveClass.curve(g), order)
    result = Series.one(order)
    for i in range(1, r + 1):
        result = result * zeta_c.rescale(BiPoly.lefschetz(i - 1))
    return EffSeries(result)


def quot_curve_exp(g: int, r: int, order: int) -> EffSeries:
    _check_genus(g)
    _check_rank(r)
    linear = MotiveClass.curve(g).epoly * MotiveClass.projective(r - 1).epoly
    return exp_series(Series.monomial(linear, 1, order))


def bfp_sum(g: int, r: int, n: int) -> BiPoly:
    """
    sum_{n_1 + ... + n_r = n} prod_i E(Sym^{n_i} C) * L^{sum_i (i-1) n_i}
    """
    _check_genus(g)
    _check_rank(r)
    if n < 0:
        raise ValueError(f"Length must be >= 0, got {n}.")
    sym = zeta(MotiveClass.curve(g), n)
    total = BiPoly.constant(0)
    for parts in compositions(n, r):
        term = BiPoly.lefschetz(sum(i * k for i, k in enumerate(parts)))
        for k in parts:
            term = term * sym[k]
        total = total + term
    return total


def hodge_product(g: int, r: int, order: int) -> EffSeries:
    """
    prod_{i<r} (1 - u^i v^(i+1) t)^g (1 - u^(i+1) v^i t)^g
               / ((1 - u^i v^i t) (1 - u^(i+1) v^(i+1) t))
    """
    _check_genus(g)
    _check_rank(r)
    result = Series.one(order)
    for i in range(r):
        for mono, exponent in (
            (_mono(i, i + 1), g),
            (_mono(i + 1, i), g),
            (_mono(i, i), -1),
            (_mono(i + 1, i + 1), -1),
        ):
            result = result * Series.linear_power(mono, exponent, 1, order)
    return EffSeries(result)


def poincare_product(g: int, r: int, order: int) -> Series:
    """prod_{i<r} (1 - u^(2i+1) t)^(2g) / ((1 - u^(2i) t)(1 - u^(2i+2) t))"""
    _check_genus(g)
    _check_rank(r)
    result = Series.one(order)
    for i in range(r):
        for degree, exponent in ((2 * i + 1, 2 * g), (2 * i, -1), (2 * i + 2, -1)):
            result = result * Series.linear_power(_mono(degree, 0), exponent, 1, order)
    return result


def surface_class(surface) -> BiPoly:
    if isinstance(surface, MotiveClass):
        if surface.dimension not in (2, None):
            raise ValueError(f"{surface.name} is not a surface (dimension {surface.dimension}).")
        return surface.epoly
    return BiPoly.coerce(surface)


def goettsche(surface, order: int) -> EffSeries:
    """Exp(E(S) sum_{n>=1} L^(n-1) t^n) for the Hilbert schemes of points on S."""
    e_s = surface_class(surface)
    coeffs = [BiPoly.constant(0)] + [e_s * BiPoly.lefschetz(n - 1) for n in range(1, order + 1)]
    return exp_series(Series.from_coeffs(coeffs, order))


def punctual_surface(order: int) -> EffSeries:
    """Punctual Hilbert schemes of a surface point: prod_{n>=1} 1 / (1 - L^(n-1) t^n)."""
    result = Series.one(order)
    for n in range(1, order + 1):
        result = result * Series.linear_power(BiPoly.lefschetz(n - 1), -1, n, order)
    return EffSeries(result)


def effective_sign_check(series: Series, q: int = 2) -> bool:
    """True when every coefficient is non-negative after u = v = q."""
    for c in series.coeffs:
        value = c.evaluate(q, q).constant_term
        if value < 0:
            return False
    return True
