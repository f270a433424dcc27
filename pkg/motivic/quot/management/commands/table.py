from core.commands import MotivicCommand
from core.rendering import render_frame
from quot.tables import betti_frame, euler_frame, hodge_frame

from ._options import add_curve_arguments


class Command(MotivicCommand):
    help = "Hodge numbers h^{p,q} (or Betti numbers, Euler characteristics) of Quot_C(E, n) for n <= order."

    def add_command_arguments(self, parser):
        add_curve_arguments(parser)
        parser.add_argument(
            "--n", type=int, default=None, help="Only report this length n."
        )
        kind = parser.add_mutually_exclusive_group()
        kind.add_argument("--betti", action="store_true", help="Betti numbers b_k.")
        kind.add_argument("--euler", action="store_true", help="Euler characteristics.")

    def compute(self, **options):
        g, r = options["g"], options["r"]
        nmax = self.get_order(options)
        n = options["n"]
        if n is not None:
            if n < 0:
                raise ValueError(f"--n must be >= 0, got {n}.")
            nmax = n

        if options["betti"]:
            frame = betti_frame(g, r, nmax)
        elif options["euler"]:
            frame = euler_frame(g, r, nmax)
        else:
            frame = hodge_frame(g, r, nmax)

        if n is not None:
            frame = frame[frame["n"] == n].reset_index(drop=True)
        return render_frame(frame, options["format"])
