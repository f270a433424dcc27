"""
E-polynomials of the standard varieties.

E-polynomials are compactly supported, so they are additive on strata and
multiplicative on products; in particular E(A^d) = (uv)^d = L^d.

Descriptor grammar (CLI):  point | A^d | P^n | curve(g) | L^s | L | raw(<poly>)
joined by "*" for products, e.g. "A^1*P^1".
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property

from django.db import models

from core.exceptions import MotiveSyntaxError, PolynomialSyntaxError
from core.polynomials import ONE, BiPoly
from core.series import Series
from plethystic.lambda_ring import geometric_pow


class Kind(models.TextChoices):
    POINT = "point", "Point"
    AFFINE = "affine", "Affine space"
    PROJECTIVE = "projective", "Projective space"
    CURVE = "curve", "Smooth projective curve"
    LEFSCHETZ = "lefschetz", "Lefschetz power"
    PRODUCT = "product", "Product"
    RAW = "raw", "Raw class"


class Specialization(models.TextChoices):
    UV_EQUAL = "uv_equal", "v := u (signed Poincare polynomial)"
    EULER = "euler", "u := 1, v := 1 (Euler characteristic)"


@dataclass(frozen=True)
class MotiveClass:
    kind: Kind
    parameter: int | None = None
    factors: tuple[MotiveClass, ...] = ()
    raw: BiPoly | None = None

    def __post_init__(self):
        if self.parameter is not None and self.parameter < 0:
            raise ValueError(f"{self.kind.label} needs a non-negative parameter.")

    @classmethod
    def point(cls) -> MotiveClass:
        return cls(Kind.POINT)

    @classmethod
    def affine(cls, d: int) -> MotiveClass:
        return cls(Kind.AFFINE, d)

    @classmethod
    def projective(cls, n: int) -> MotiveClass:
        return cls(Kind.PROJECTIVE, n)

    @classmethod
    def curve(cls, g: int) -> MotiveClass:
        return cls(Kind.CURVE, g)

    @classmethod
    def lefschetz(cls, s: int = 1) -> MotiveClass:
        return cls(Kind.LEFSCHETZ, s)

    @classmethod
    def product(cls, *factors: MotiveClass) -> MotiveClass:
        if len(factors) == 1:
            return factors[0]
        return cls(Kind.PRODUCT, factors=tuple(factors))

    @classmethod
    def from_poly(cls, poly) -> MotiveClass:
        return cls(Kind.RAW, raw=BiPoly.coerce(poly))

    @cached_property
    def epoly(self) -> BiPoly:
        match self.kind:
            case Kind.POINT:
                return ONE
            case Kind.AFFINE | Kind.LEFSCHETZ:
                return BiPoly.lefschetz(self.parameter)
            case Kind.PROJECTIVE:
                return sum(
                    (BiPoly.lefschetz(i) for i in range(self.parameter + 1)),
                    BiPoly.constant(0),
                )
            case Kind.CURVE:
                g = self.parameter
                return BiPoly.parse(f"1 - {g}*u - {g}*v + u*v")
            case Kind.PRODUCT:
                result = ONE
                for factor in self.factors:
                    result = result * factor.epoly
                return result
            case Kind.RAW:
                return self.raw
        raise ValueError(f"Unknown motive kind {self.kind!r}.")

    @property
    def dimension(self) -> int | None:
        """Dimension of the variety; None for raw classes."""
        match self.kind:
            case Kind.POINT:
                return 0
            case Kind.CURVE:
                return 1
            case Kind.AFFINE | Kind.PROJECTIVE | Kind.LEFSCHETZ:
                return self.parameter
            case Kind.PRODUCT:
                dims = [f.dimension for f in self.factors]
                return None if None in dims else sum(dims)
        return None

    @property
    def name(self) -> str:
        match self.kind:
            case Kind.POINT:
                return "point"
            case Kind.AFFINE:
                return f"A^{self.parameter}"
            case Kind.PROJECTIVE:
                return f"P^{self.parameter}"
            case Kind.CURVE:
                return f"curve({self.parameter})"
            case Kind.LEFSCHETZ:
                return f"L^{self.parameter}"
            case Kind.PRODUCT:
                return "*".join(f.name for f in self.factors)
        return f"raw({self.raw})"

    def __str__(self):
        return self.name


_ATOMS = (
    (re.compile(r"point"), lambda m: MotiveClass.point()),
    (re.compile(r"A\^(\d+)"), lambda m: MotiveClass.affine(int(m[1]))),
    (re.compile(r"P\^(\d+)"), lambda m: MotiveClass.projective(int(m[1]))),
    (re.compile(r"curve\((\d+)\)"), lambda m: MotiveClass.curve(int(m[1]))),
    (re.compile(r"L(?:\^(\d+))?"), lambda m: MotiveClass.lefschetz(int(m[1] or 1))),
)
_RAW = re.compile(r"raw\((.*)\)", re.DOTALL)


def _split_product(text: str) -> list[str]:
    pieces, depth, start = [], 0, 0
    for i, char in enumerate(text):
        if char == "(":
            depth += 1
        elif char == ")":
            depth -= 1
            if depth < 0:
                raise MotiveSyntaxError(f"Unbalanced parentheses in {text!r}")
        elif char == "*" and depth == 0:
            pieces.append(text[start:i])
            start = i + 1
    if depth:
        raise MotiveSyntaxError(f"Unbalanced parentheses in {text!r}")
    pieces.append(text[start:])
    return pieces


def _parse_atom(text: str) -> MotiveClass:
    raw = _RAW.fullmatch(text)
    if raw:
        try:
            return MotiveClass.from_poly(BiPoly.parse(raw[1]))
        except PolynomialSyntaxError as exc:
            raise MotiveSyntaxError(f"Bad raw class {text!r}: {exc}") from exc
    for pattern, build in _ATOMS:
        match = pattern.fullmatch(text)
        if match:
            return build(match)
    raise MotiveSyntaxError(
        f"Unknown class {text!r}; expected point, A^d, P^n, curve(g), L^s or raw(<poly>)"
    )


def parse_motive(text: str) -> MotiveClass:
    text = "".join(str(text).split())
    if not text:
        raise MotiveSyntaxError("Empty class descriptor")
    return MotiveClass.product(*(_parse_atom(piece) for piece in _split_product(text)))


def e_poly(motive: MotiveClass) -> BiPoly:
    return motive.epoly


def zeta(motive: MotiveClass, order: int) -> Series:
    """Kapranov zeta function sum E(Sym^n Y) t^n = (1 - t)^(-E(Y))."""
    return geometric_pow(e_poly(motive), 1, order)


def specialize(value, mode: str):
    """Specialize a polynomial or, coefficientwise, a series."""
    if isinstance(value, Series):
        return value.map(lambda c: specialize(c, mode))
    value = BiPoly.coerce(value)
    if mode == Specialization.UV_EQUAL:
        return value.uv_equal()
    if mode == Specialization.EULER:
        return value.evaluate(1, 1)
    raise ValueError(f"Unknown specialization {mode!r}.")


def euler_characteristic(value) -> int:
    return int(specialize(value, Specialization.EULER).constant_term)
