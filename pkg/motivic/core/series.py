"""
Truncated power series in t with `BiPoly` coefficients.

A `Series` knows its truncation order N and stores the dense list
c_0..c_N. Arithmetic between series of different orders truncates to the
smaller one; nothing beyond a known coefficient is ever reported.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Callable, Iterable

from .exceptions import NonIntegralResult, NonUnitConstantTerm
from .polynomials import ONE, ZERO, BiPoly
from .schemas import SeriesSchema


def _check_order(order: int) -> int:
    if not isinstance(order, int) or order < 0:
        raise ValueError(f"Truncation order must be a non-negative integer, got {order!r}.")
    return order


@dataclass(frozen=True)
class Series:
    order: int
    coeffs: tuple[BiPoly, ...]

    def __post_init__(self):
        _check_order(self.order)
        if len(self.coeffs) != self.order + 1:
            raise ValueError(
                f"A series of order {self.order} needs {self.order + 1} coefficients, "
                f"got {len(self.coeffs)}."
            )

    # ------------------------------------------------------------------
    # Construction
    # ------------------------------------------------------------------
    @classmethod
    def from_coeffs(cls, coeffs: Iterable, order: int | None = None) -> Series:
        """Coefficients may be BiPoly, int or polynomial text; missing ones are zero."""
        values = [BiPoly.coerce(c) for c in coeffs]
        if order is None:
            order = len(values) - 1
        _check_order(order)
        values = values[: order + 1]
        values += [ZERO] * (order + 1 - len(values))
        return cls(order, tuple(values))

    @classmethod
    def zero(cls, order: int) -> Series:
        return cls(_check_order(order), (ZERO,) * (order + 1))

    @classmethod
    def one(cls, order: int) -> Series:
        return cls.monomial(ONE, 0, order)

    @classmethod
    def monomial(cls, coef, power: int, order: int) -> Series:
        """coef * t^power."""
        _check_order(order)
        values = [ZERO] * (order + 1)
        if power <= order:
            values[power] = BiPoly.coerce(coef)
        return cls(order, tuple(values))

    @classmethod
    def linear_power(cls, mono, exponent: int, k: int, order: int) -> Series:
        """(1 - mono * t^k)^exponent for an integer exponent of either sign."""
        if k < 1:
            raise ValueError(f"Power of t must be >= 1, got {k}.")
        mono = BiPoly.coerce(mono)
        values = [ZERO] * (order + 1)
        for j in range(order // k + 1):
            if exponent >= 0:
                if j > exponent:
                    break
                values[j * k] = mono**j * (comb(exponent, j) * (-1) ** j)
            else:
                values[j * k] = mono**j * comb(-exponent + j - 1, j)
        return cls(_check_order(order), tuple(values))

    @classmethod
    def from_schema(cls, schema: SeriesSchema) -> Series:
        return cls.from_coeffs(
            [BiPoly.from_schema(c) for c in schema.coeffs], order=schema.order
        )

    def to_schema(self) -> SeriesSchema:
        return SeriesSchema(
            order=self.order, coeffs=[c.integral().to_schema() for c in self.coeffs]
        )

    # ------------------------------------------------------------------
    # Inspection
    # ------------------------------------------------------------------
    def __getitem__(self, n: int) -> BiPoly:
        if not 0 <= n <= self.order:
            raise IndexError(f"Coefficient t^{n} is beyond truncation order {self.order}.")
        return self.coeffs[n]

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    @property
    def constant(self) -> BiPoly:
        return self.coeffs[0]

    @property
    def is_integral(self) -> bool:
        return all(c.is_integral for c in self.coeffs)

    def first_mismatch(self, other: Series) -> int | None:
        """Smallest index below both orders where the coefficients differ."""
        for n in range(min(self.order, other.order) + 1):
            if self.coeffs[n] != other.coeffs[n]:
                return n
        return None

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------
    def truncate(self, order: int) -> Series:
        if _check_order(order) > self.order:
            raise ValueError(
                f"Can not extend a series of order {self.order} to order {order}."
            )
        return Series(order, self.coeffs[: order + 1])

    def map(self, fn: Callable[[BiPoly], BiPoly]) -> Series:
        return Series(self.order, tuple(fn(c) for c in self.coeffs))

    def __add__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        order = min(self.order, other.order)
        return Series(
            order, tuple(self.coeffs[n] + other.coeffs[n] for n in range(order + 1))
        )

    def __sub__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return self.map(lambda c: -c)

    def __mul__(self, other):
        if isinstance(other, Series):
            order = min(self.order, other.order)
            a, b = self.coeffs, other.coeffs
            out = []
            for n in range(order + 1):
                total = ZERO
                for k in range(n + 1):
                    if a[k].is_zero or b[n - k].is_zero:
                        continue
                    total = total + a[k] * b[n - k]
                out.append(total)
            return Series(order, tuple(out))
        try:
            scalar = BiPoly.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.map(lambda c: c * scalar)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __truediv__(self, divisor: int):
        if not isinstance(divisor, int):
            return NotImplemented
        return self.map(lambda c: c / divisor)

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else self.inverse()
        result = Series.one(self.order)
        for _ in range(abs(exponent)):
            result = result * base
        return result

    def inverse(self) -> Series:
        c0 = self.constant
        if not c0.is_unit:
            raise NonUnitConstantTerm(c0)
        # c0 is +-1, so it is its own inverse
        out = [c0]
        for n in range(1, self.order + 1):
            total = ZERO
            for k in range(1, n + 1):
                if not self.coeffs[k].is_zero:
                    total = total + self.coeffs[k] * out[n - k]
            out.append(-(total * c0))
        return Series(self.order, tuple(out))

    # ------------------------------------------------------------------
    # Substitutions in t
    # ------------------------------------------------------------------
    def substitute_t_power(self, e: int) -> Series:
        """A(t^e), truncated at the same order."""
        if e < 1:
            raise ValueError(f"Exponent of t must be >= 1, got {e}.")
        values = [ZERO] * (self.order + 1)
        for n in range(self.order // e + 1):
            values[n * e] = self.coeffs[n]
        return Series(self.order, tuple(values))

    def rescale(self, factor) -> Series:
        """A(factor * t)."""
        factor = BiPoly.coerce(factor)
        return Series(
            self.order, tuple(c * factor**n for n, c in enumerate(self.coeffs))
        )

    def adams(self, k: int) -> Series:
        """Adams operation on coefficients together with t -> t^k."""
        return self.map(lambda c: c.adams(k)).substitute_t_power(k)

    # ------------------------------------------------------------------
    # Domains
    # ------------------------------------------------------------------
    def rational(self) -> Series:
        return self.map(BiPoly.rational)

    def integral(self) -> Series:
        values = []
        for n, c in enumerate(self.coeffs):
            try:
                values.append(c.integral())
            except NonIntegralResult as exc:
                raise NonIntegralResult(str(exc), index=n) from exc
        return Series(self.order, tuple(values))

    def __str__(self):
        return "[" + ", ".join(str(c) for c in self.coeffs) + "]"
