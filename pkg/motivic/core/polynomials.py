"""
Sparse exact polynomials in u, v and the stratum markers s1..s9.

A `BiPoly` wraps an element of the sympy ring ZZ[u, v, s1, ..., s9], or of
QQ[...] while a rational intermediate is being computed. Values never change
after construction; every operation returns a new polynomial.

E-polynomials of varieties live here, with the Lefschetz class L = uv.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from sympy import Symbol
from sympy.parsing.sympy_parser import (
    convert_xor,
    parse_expr,
    standard_transformations,
)
from sympy.polys.domains import QQ, ZZ
from sympy.polys.polyerrors import ExactQuotientFailed
from sympy.polys.rings import PolyElement, ring

from .exceptions import NonIntegralResult, PolynomialSyntaxError
from .schemas import PolySchema, TermSchema

MARKERS = tuple(f"s{i}" for i in range(1, 10))
GENERATORS = ("u", "v", *MARKERS)

INTEGER_RING = ring(",".join(GENERATORS), ZZ)[0]
RATIONAL_RING = INTEGER_RING.clone(domain=QQ)

ZERO_MONOM = (0,) * len(GENERATORS)

# grammar: integers, u, v, L (= u*v), s1..s9, + - * ^ and parentheses
_GRAMMAR = re.compile(r"[0-9uvLs+\-*^()\s]+")
_SYMBOLS = {name: Symbol(name) for name in GENERATORS}
_NAMESPACE = {**_SYMBOLS, "L": _SYMBOLS["u"] * _SYMBOLS["v"]}
_TRANSFORMATIONS = standard_transformations + (convert_xor,)


def _number(coeff) -> int | Fraction:
    denominator = int(getattr(coeff, "denominator", 1))
    numerator = int(getattr(coeff, "numerator", coeff))
    if denominator == 1:
        return numerator
    return Fraction(numerator, denominator)


def _monomial_text(monom: tuple[int, ...]) -> str:
    factors = []
    for name, exp in zip(GENERATORS, monom):
        if exp == 1:
            factors.append(name)
        elif exp > 1:
            factors.append(f"{name}^{exp}")
    return "*".join(factors)


def _term_key(item):
    # total degree first, then u before v before markers
    monom = item[0]
    return sum(monom), tuple(-e for e in monom)


def _pad(exponents, size: int) -> tuple[int, ...]:
    exponents = tuple(int(e) for e in exponents)
    if len(exponents) > size:
        raise ValueError(f"At most {size} exponents allowed, got {len(exponents)}.")
    if any(e < 0 for e in exponents):
        raise ValueError(f"Negative exponents are not allowed: {exponents}.")
    return exponents + (0,) * (size - len(exponents))


@dataclass(frozen=True, eq=False)
class BiPoly:
    element: PolyElement

    # ------------------------------------------------------------------
    # Construction
    # ------------------------------------------------------------------
    @classmethod
    def constant(cls, value: int) -> BiPoly:
        return cls(INTEGER_RING.ground_new(value))

    @classmethod
    def monomial(
        cls, u: int = 0, v: int = 0, *, coef: int = 1, markers: tuple[int, ...] = ()
    ) -> BiPoly:
        monom = _pad((u, v), 2) + _pad(markers, len(MARKERS))
        return cls(INTEGER_RING.term_new(monom, coef))

    @classmethod
    def lefschetz(cls, power: int = 1) -> BiPoly:
        """The class L^power = (uv)^power."""
        return cls.monomial(power, power)

    @classmethod
    def marker(cls, index: int, power: int = 1) -> BiPoly:
        if not 1 <= index <= len(MARKERS):
            raise ValueError(f"Marker index must lie in 1..{len(MARKERS)}, got {index}.")
        markers = [0] * len(MARKERS)
        markers[index - 1] = power
        return cls.monomial(markers=tuple(markers))

    @classmethod
    def from_terms(cls, terms: dict[tuple[int, ...], int]) -> BiPoly:
        total = INTEGER_RING.zero
        for exponents, coef in terms.items():
            total += INTEGER_RING.term_new(_pad(exponents, len(GENERATORS)), coef)
        return cls(total)

    @classmethod
    def parse(cls, text: str) -> BiPoly:
        if not isinstance(text, str) or not text.strip() or not _GRAMMAR.fullmatch(text):
            raise PolynomialSyntaxError(f"Not a polynomial in u, v, L, s1..s9: {text!r}")
        try:
            expr = parse_expr(
                text, local_dict=dict(_NAMESPACE), transformations=_TRANSFORMATIONS
            )
            element = INTEGER_RING.from_expr(expr)
        except Exception as exc:  # noqa
            raise PolynomialSyntaxError(f"Can not parse polynomial {text!r}: {exc}") from exc
        return cls(element)

    @classmethod
    def coerce(cls, value) -> BiPoly:
        if isinstance(value, BiPoly):
            return value
        if isinstance(value, int) and not isinstance(value, bool):
            return cls.constant(value)
        if isinstance(value, str):
            return cls.parse(value)
        raise TypeError(f"Can not interpret {value!r} as a polynomial.")

    @classmethod
    def from_schema(cls, schema: PolySchema) -> BiPoly:
        terms = {}
        for term in schema.terms:
            exponents = (term.u, term.v, *(term.s or ()))
            terms[exponents] = terms.get(exponents, 0) + int(term.coef)
        return cls.from_terms(terms)

    def to_schema(self) -> PolySchema:
        terms = []
        for monom, coef in self.terms():
            markers = list(monom[2:])
            terms.append(
                TermSchema(
                    u=monom[0],
                    v=monom[1],
                    s=markers if any(markers) else None,
                    coef=str(coef),
                )
            )
        return PolySchema(terms=terms)

    # ------------------------------------------------------------------
    # Inspection
    # ------------------------------------------------------------------
    @property
    def is_integral(self) -> bool:
        return self.element.ring.domain == ZZ

    @property
    def is_zero(self) -> bool:
        return not self.element

    @property
    def is_constant(self) -> bool:
        return self.element.is_ground

    @property
    def is_unit(self) -> bool:
        return self.is_constant and self.constant_term in (1, -1)

    @property
    def has_markers(self) -> bool:
        return any(any(monom[2:]) for monom in self.element.keys())

    @property
    def constant_term(self) -> int | Fraction:
        return _number(self.element.get(ZERO_MONOM, 0))

    def coefficient(self, u: int = 0, v: int = 0, markers: tuple[int, ...] = ()) -> int | Fraction:
        monom = _pad((u, v), 2) + _pad(markers, len(MARKERS))
        return _number(self.element.get(monom, 0))

    def terms(self) -> Iterator[tuple[tuple[int, ...], int | Fraction]]:
        """Non-zero terms in canonical order (by total degree, u before v)."""
        for monom, coef in sorted(self.element.items(), key=_term_key):
            yield monom, _number(coef)

    def degree(self) -> int:
        return max((sum(monom) for monom in self.element.keys()), default=-1)

    # ------------------------------------------------------------------
    # Ring operations
    # ------------------------------------------------------------------
    def _pair(self, other) -> tuple[PolyElement, PolyElement]:
        other = BiPoly.coerce(other)
        a, b = self.element, other.element
        if a.ring != b.ring:
            a, b = a.set_ring(RATIONAL_RING), b.set_ring(RATIONAL_RING)
        return a, b

    def __add__(self, other):
        try:
            a, b = self._pair(other)
        except TypeError:
            return NotImplemented
        return BiPoly(a + b)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            a, b = self._pair(other)
        except TypeError:
            return NotImplemented
        return BiPoly(a - b)

    def __rsub__(self, other):
        try:
            a, b = self._pair(other)
        except TypeError:
            return NotImplemented
        return BiPoly(b - a)

    def __neg__(self):
        return BiPoly(-self.element)

    def __mul__(self, other):
        try:
            a, b = self._pair(other)
        except TypeError:
            return NotImplemented
        return BiPoly(a * b)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"Only non-negative integer powers exist, got {exponent!r}.")
        return BiPoly(self.element**exponent)

    def __truediv__(self, divisor: int):
        """Division by a non-zero integer; the result is rational."""
        if not isinstance(divisor, int) or isinstance(divisor, bool):
            return NotImplemented
        if divisor == 0:
            raise ZeroDivisionError("Division of a polynomial by zero.")
        return BiPoly(self.element.set_ring(RATIONAL_RING).quo_ground(QQ(divisor)))

    def exact_div(self, other: BiPoly) -> BiPoly:
        """Exact quotient in ZZ[u, v, s]; raises NonIntegralResult when it leaves the ring."""
        other = BiPoly.coerce(other)
        if other.is_zero:
            raise ZeroDivisionError("Division of a polynomial by zero.")
        a, b = self.integral().element, other.integral().element
        try:
            return BiPoly(a.exquo(b))
        except ExactQuotientFailed as exc:
            raise NonIntegralResult(f"{self} is not divisible by {other}") from exc

    def __eq__(self, other):
        try:
            a, b = self._pair(other)
        except TypeError:
            return NotImplemented
        except PolynomialSyntaxError:
            return False
        return a == b

    def __hash__(self):
        return hash(frozenset(self.element.items()))

    # ------------------------------------------------------------------
    # Domains
    # ------------------------------------------------------------------
    def rational(self) -> BiPoly:
        if not self.is_integral:
            return self
        return BiPoly(self.element.set_ring(RATIONAL_RING))

    def integral(self) -> BiPoly:
        if self.is_integral:
            return self
        terms = {}
        for monom, coef in self.element.items():
            if int(coef.denominator) != 1:
                raise NonIntegralResult(f"Coefficient {coef} of {self} is not an integer")
            terms[monom] = int(coef.numerator)
        return BiPoly(INTEGER_RING.from_dict(terms))

    # ------------------------------------------------------------------
    # Substitutions
    # ------------------------------------------------------------------
    def adams(self, k: int) -> BiPoly:
        """Adams operation: every variable x (markers included) goes to x^k."""
        if k < 1:
            raise ValueError(f"Adams operations are indexed by k >= 1, got {k}.")
        if k == 1:
            return self
        ring_ = self.element.ring
        return BiPoly(
            ring_.from_dict(
                {tuple(e * k for e in monom): c for monom, c in self.element.items()}
            )
        )

    def uv_equal(self) -> BiPoly:
        """Substitute v := u."""
        u, v = self.element.ring.gens[:2]
        return BiPoly(self.element.compose(v, u))

    def evaluate(self, u: int | None = None, v: int | None = None) -> BiPoly:
        gens = self.element.ring.gens
        pairs = [(gen, value) for gen, value in zip(gens[:2], (u, v)) if value is not None]
        return BiPoly(self.element.subs(pairs)) if pairs else self

    def forget_markers(self) -> BiPoly:
        """Set every marker s_i := 1."""
        if not self.has_markers:
            return self
        gens = self.element.ring.gens[2:]
        return BiPoly(self.element.subs([(gen, 1) for gen in gens]))

    def marker_component(self, markers: tuple[int, ...]) -> BiPoly:
        """The u, v polynomial multiplying s1^m1 ... s9^m9."""
        wanted = _pad(markers, len(MARKERS))
        ring_ = self.element.ring
        return BiPoly(
            ring_.from_dict(
                {
                    monom[:2] + (0,) * len(MARKERS): c
                    for monom, c in self.element.items()
                    if monom[2:] == wanted
                }
            )
        )

    # ------------------------------------------------------------------
    # Text
    # ------------------------------------------------------------------
    def __str__(self):
        pieces = []
        for monom, coef in self.terms():
            mono = _monomial_text(monom)
            if not mono:
                text = str(coef)
            elif coef == 1:
                text = mono
            elif coef == -1:
                text = f"-{mono}"
            else:
                text = f"{coef}*{mono}"
            if not pieces:
                pieces.append(text)
            elif text.startswith("-"):
                pieces.append(f"- {text[1:]}")
            else:
                pieces.append(f"+ {text}")
        return " ".join(pieces) if pieces else "0"

    def __repr__(self):
        return f"BiPoly({str(self)!r})"


ZERO = BiPoly.constant(0)
ONE = BiPoly.constant(1)
L = BiPoly.lefschetz(1)
