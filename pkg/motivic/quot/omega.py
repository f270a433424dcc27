"""
Omega-classes of punctual series.

Exp(sum_{n>0} Omega_n t^n) = P(t), so the Omega_n are the Log coefficients
of the punctual series. For a global series Z = P^[X] = Exp(E(X) sum Omega_n t^n)
they are recovered by exact division of Log Z by E(X).
"""

from __future__ import annotations

from dataclasses import dataclass

import pandas as pd

from core.exceptions import NonIntegralResult
from core.polynomials import ZERO, BiPoly
from core.series import Series
from motives.classes import MotiveClass
from plethystic.exponential import exp_series, log_series

from .schemas import OmegaSchema


@dataclass(frozen=True)
class OmegaList:
    classes: tuple[BiPoly, ...]

    @property
    def order(self) -> int:
        return len(self.classes)

    def __getitem__(self, n: int) -> BiPoly:
        """Omega_n, 1-based."""
        if not 1 <= n <= self.order:
            raise IndexError(f"Omega_{n} is outside 1..{self.order}.")
        return self.classes[n - 1]

    def as_log_series(self) -> Series:
        return Series.from_coeffs([ZERO, *self.classes], self.order)

    def to_series(self) -> Series:
        """The punctual series Exp(sum Omega_n t^n)."""
        return exp_series(self.as_log_series())

    def to_schema(self) -> OmegaSchema:
        return OmegaSchema(order=self.order, omega=[c.to_schema() for c in self.classes])

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            {
                "n": list(range(1, self.order + 1)),
                "omega": [str(c) for c in self.classes],
            }
        )


def omega_extract(p: Series, order: int | None = None) -> OmegaList:
    log = log_series(p, order)
    return OmegaList(tuple(log.coeffs[1:]))


def omega_from_quot(z: Series, x, order: int | None = None) -> OmegaList:
    """Omega-classes of Z = P^[X]; needs E(X) != 0."""
    e_x = x.epoly if isinstance(x, MotiveClass) else BiPoly.coerce(x)
    if e_x.is_zero:
        raise ValueError("Can not recover Omega-classes over a class with E(X) = 0.")
    log = log_series(z, order)
    classes = []
    for n in range(1, log.order + 1):
        try:
            classes.append(log[n].exact_div(e_x))
        except NonIntegralResult as exc:
            raise NonIntegralResult(str(exc), index=n) from exc
    return OmegaList(tuple(classes))
