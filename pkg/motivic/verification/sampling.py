"""Seeded random polynomials and series for the randomized suites."""

import random

from core.polynomials import BiPoly
from core.series import Series


class Sampler:
    """
    Every check draws from its own generator, seeded by (seed, check name),
    so results do not depend on how checks are scheduled.
    """

    def __init__(self, seed: int, name: str = ""):
        self.rng = random.Random(f"{seed}:{name}")

    def poly(self, *, max_terms=3, max_degree=2, coef=3, effective=False) -> BiPoly:
        terms = {}
        for _ in range(self.rng.randint(0, max_terms)):
            exponents = (
                self.rng.randint(0, max_degree),
                self.rng.randint(0, max_degree),
            )
            low = 0 if effective else -coef
            terms[exponents] = self.rng.randint(low, coef)
        return BiPoly.from_terms(terms)

    def constant(self, low: int, high: int) -> BiPoly:
        return BiPoly.constant(self.rng.randint(low, high))

    def series(self, order: int, *, constant: int = 1, **poly_options) -> Series:
        coeffs = [BiPoly.constant(constant)]
        coeffs += [self.poly(**poly_options) for _ in range(order)]
        return Series.from_coeffs(coeffs, order)

    def constant_series(self, order: int, low=-3, high=3) -> Series:
        return Series.from_coeffs([1] + [self.rng.randint(low, high) for _ in range(order)], order)

    def integer(self, low: int, high: int) -> int:
        return self.rng.randint(low, high)
