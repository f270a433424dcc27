"""
Quot-to-Chow strata of the t^n coefficient of B(t)^m.

The coefficient B_i is tagged with the marker s_i before taking the power;
the t^n coefficient of the marked power then splits by marker monomial,
s^alpha = prod s_i^alpha_i, into one class per partition alpha of n.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import pandas as pd

from core.polynomials import MARKERS, ONE, BiPoly
from core.series import Series
from partitions.enumeration import Partition, partitions_of
from plethystic.exponential import as_eff_series
from plethystic.power import pow_series

from .schemas import StratumRowSchema, StratumTableSchema

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class StratumRow:
    partition: Partition
    value: BiPoly


@dataclass(frozen=True)
class StratumTable:
    n: int
    rows: tuple[StratumRow, ...]

    @property
    def total(self) -> BiPoly:
        return sum((row.value for row in self.rows), BiPoly.constant(0))

    def __getitem__(self, partition: Partition) -> BiPoly:
        for row in self.rows:
            if row.partition == partition:
                return row.value
        raise KeyError(str(partition))

    def to_schema(self) -> StratumTableSchema:
        return StratumTableSchema(
            n=self.n,
            rows=[
                StratumRowSchema(partition=row.partition.to_schema(), class_=row.value.to_schema())
                for row in self.rows
            ],
        )

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            {
                "partition": [str(row.partition) for row in self.rows],
                "class": [str(row.value) for row in self.rows],
            }
        )


def mark(b: Series) -> Series:
    """1 + sum_i B_i s_i t^i."""
    if b.order > len(MARKERS):
        raise ValueError(f"Markers exist for part sizes up to {len(MARKERS)} only.")
    if any(c.has_markers for c in b.coeffs):
        raise ValueError("Series is already marked.")
    return Series.from_coeffs(
        [ONE] + [b[i] * BiPoly.marker(i) for i in range(1, b.order + 1)], b.order
    )


def strata(b: Series, m, n: int) -> StratumTable:
    if n < 0:
        raise ValueError(f"Length must be >= 0, got {n}.")
    if n > len(MARKERS):
        raise ValueError(f"Strata are available for n <= {len(MARKERS)}, got {n}.")
    b = as_eff_series(b.truncate(n))
    coefficient = pow_series(mark(b), m)[n]
    rows = tuple(
        StratumRow(alpha, coefficient.marker_component(alpha.mult))
        for alpha in partitions_of(n)
    )
    logger.info("Computed %s strata for n=%s", len(rows), n)
    return StratumTable(n, rows)
