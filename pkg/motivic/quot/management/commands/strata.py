from django.db import models

from core.commands import MotivicCommand
from core.rendering import OutputFormat, render_frame, render_model
from quot.generating import punctual_curve, punctual_surface
from quot.strata import strata

from ._options import add_class_argument, require_motive


class StrataBase(models.TextChoices):
    PUNCTUAL_CURVE = "punctual-curve", "Punctual series of a curve point, rank r"
    PUNCTUAL_SURFACE = "punctual-surface", "Punctual Hilbert series of a surface point"


class Command(MotivicCommand):
    help = "Quot-to-Chow strata of the t^n coefficient of B(t)^[X]."

    def add_command_arguments(self, parser):
        parser.add_argument("base", choices=StrataBase.values)
        parser.add_argument("--n", type=int, required=True, help="Length n (at most 9).")
        parser.add_argument("--r", type=int, default=1, help="Rank of the punctual curve series.")
        add_class_argument(parser, "Base variety X")

    def compute(self, **options):
        n = options["n"]
        motive = require_motive(options, "strata")
        if options["base"] == StrataBase.PUNCTUAL_CURVE:
            base = punctual_curve(options["r"], max(n, 0))
        else:
            base = punctual_surface(max(n, 0))

        table = strata(base, motive.epoly, n)
        if options["format"] == OutputFormat.JSON:
            return render_model(table.to_schema())
        return render_frame(table.to_frame(), options["format"])
