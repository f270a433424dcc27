"""hypothesis strategies shared by the app test modules."""

from hypothesis import strategies as st

from .polynomials import BiPoly
from .series import Series


@st.composite
def bipolys(draw, *, max_terms=3, max_degree=2, min_coef=-3, max_coef=3):
    terms = draw(
        st.dictionaries(
            st.tuples(
                st.integers(0, max_degree),
                st.integers(0, max_degree),
            ),
            st.integers(min_coef, max_coef),
            max_size=max_terms,
        )
    )
    return BiPoly.from_terms(terms)


def effective_bipolys(**kwargs):
    return bipolys(min_coef=0, **kwargs)


def constants(min_value=-3, max_value=3):
    return st.integers(min_value, max_value).map(BiPoly.constant)


@st.composite
def series(draw, order, *, constant=None, coefficients=None):
    if coefficients is None:
        coefficients = bipolys()
    coeffs = [draw(coefficients) for _ in range(order + 1)]
    if constant is not None:
        coeffs[0] = BiPoly.constant(constant)
    return Series.from_coeffs(coeffs, order)


def eff_series(order, **kwargs):
    """Series with constant term 1."""
    return series(order, constant=1, **kwargs)


def log_series(order, **kwargs):
    """Series with constant term 0."""
    return series(order, constant=0, **kwargs)
