import logging

from django.db import models

from core.commands import MotivicCommand
from core.rendering import render_series
from motives.classes import Specialization, specialize, zeta
from quot.generating import (
    goettsche,
    hodge_product,
    poincare_product,
    punctual_curve,
    punctual_surface,
    quot_curve,
    quot_curve_exp,
)

from ._options import add_class_argument, add_curve_arguments, require_motive

logger = logging.getLogger(__name__)


class SeriesKind(models.TextChoices):
    QUOT_CURVE = "quot-curve", "Quot schemes of a curve (shifted zeta product)"
    QUOT_CURVE_EXP = "quot-curve-exp", "Quot schemes of a curve (Exp form)"
    PUNCTUAL_CURVE = "punctual-curve", "Punctual Quot schemes of a curve point"
    GOETTSCHE = "goettsche", "Hilbert schemes of points of a surface"
    PUNCTUAL_SURFACE = "punctual-surface", "Punctual Hilbert schemes of a surface point"
    HODGE_PRODUCT = "hodge-product", "Quot schemes of a curve (explicit u, v product)"
    POINCARE_PRODUCT = "poincare-product", "Signed Poincare polynomials (u = v)"
    ZETA = "zeta", "Kapranov zeta function of a class"


def build_series(kind: str, options, order: int):
    g, r = options["g"], options["r"]
    match kind:
        case SeriesKind.QUOT_CURVE:
            return quot_curve(g, r, order)
        case SeriesKind.QUOT_CURVE_EXP:
            return quot_curve_exp(g, r, order)
        case SeriesKind.PUNCTUAL_CURVE:
            return punctual_curve(r, order)
        case SeriesKind.GOETTSCHE:
            return goettsche(require_motive(options, kind), order)
        case SeriesKind.PUNCTUAL_SURFACE:
            return punctual_surface(order)
        case SeriesKind.HODGE_PRODUCT:
            return hodge_product(g, r, order)
        case SeriesKind.POINCARE_PRODUCT:
            return poincare_product(g, r, order)
        case SeriesKind.ZETA:
            return zeta(require_motive(options, kind), order)
    raise ValueError(f"Unknown series {kind!r}.")


class Command(MotivicCommand):
    help = "Compute a generating function to a given truncation order."

    def add_command_arguments(self, parser):
        parser.add_argument("kind", choices=SeriesKind.values)
        add_curve_arguments(parser)
        add_class_argument(parser, "Variety for zeta / goettsche")
        parser.add_argument(
            "--specialize",
            choices=Specialization.values,
            default=None,
            help="Substitute v := u (uv_equal) or u = v = 1 (euler).",
        )

    def compute(self, **options):
        order = self.get_order(options)
        kind = options["kind"]
        logger.info("Computing %s to order %s", kind, order)
        series = build_series(kind, options, order)
        if options["specialize"]:
            series = specialize(series, options["specialize"])
        return render_series(series, options["format"])
