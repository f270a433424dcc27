from django.db import models

from core.commands import MotivicCommand
from core.rendering import OutputFormat, render_frame, render_model
from motives.classes import MotiveClass
from quot.generating import goettsche, punctual_curve, punctual_surface, quot_curve
from quot.omega import omega_extract, omega_from_quot

from ._options import add_class_argument, add_curve_arguments, require_motive


class OmegaSource(models.TextChoices):
    PUNCTUAL_CURVE = "punctual-curve", "Log of the punctual curve series"
    PUNCTUAL_SURFACE = "punctual-surface", "Log of the punctual surface series"
    QUOT_CURVE = "quot-curve", "Recovered from the Quot series of a curve"
    GOETTSCHE = "goettsche", "Recovered from Goettsche's series of a surface"


class Command(MotivicCommand):
    help = "Omega-classes Omega_1..Omega_N of a punctual series."

    def add_command_arguments(self, parser):
        parser.add_argument("source", choices=OmegaSource.values)
        add_curve_arguments(parser)
        add_class_argument(parser, "Surface for goettsche")

    def compute(self, **options):
        order = self.get_order(options)
        g, r = options["g"], options["r"]
        match options["source"]:
            case OmegaSource.PUNCTUAL_CURVE:
                omega = omega_extract(punctual_curve(r, order))
            case OmegaSource.PUNCTUAL_SURFACE:
                omega = omega_extract(punctual_surface(order))
            case OmegaSource.QUOT_CURVE:
                omega = omega_from_quot(quot_curve(g, r, order), MotiveClass.curve(g))
            case _:
                surface = require_motive(options, "goettsche")
                omega = omega_from_quot(goettsche(surface, order), surface)

        if options["format"] == OutputFormat.JSON:
            return render_model(omega.to_schema())
        return render_frame(omega.to_frame(), options["format"])
