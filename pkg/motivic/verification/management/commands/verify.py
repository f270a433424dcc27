from django.conf import settings
from django.core.management.base import CommandError

from core.commands import EXIT_FAILED_CHECK, MotivicCommand
from core.rendering import OutputFormat, render_frame, render_model
from verification.suites import Suite, VerifyOptions, run_suite


class Command(MotivicCommand):
    help = "Run the identity checks and print a report. Exits 1 if a check fails."

    report = None

    def add_command_arguments(self, parser):
        parser.add_argument("--suite", choices=Suite.values, default=Suite.ALL)
        parser.add_argument("--seed", type=int, default=None, help="Default: MOTIVIC_SEED")
        parser.add_argument(
            "--samples", type=int, default=None, help="Random instances per check (default: MOTIVIC_SAMPLES)"
        )
        parser.add_argument("--workers", type=int, default=None, help="Default: MOTIVIC_WORKERS")
        parser.set_defaults(format=OutputFormat.JSON)

    def compute(self, **options):
        verify_options = VerifyOptions(
            order=self.get_order(options),
            seed=settings.MOTIVIC_SEED if options["seed"] is None else options["seed"],
            samples=settings.MOTIVIC_SAMPLES if options["samples"] is None else options["samples"],
            genera=tuple(settings.MOTIVIC_GENERA),
            ranks=tuple(settings.MOTIVIC_RANKS),
        )
        workers = settings.MOTIVIC_WORKERS if options["workers"] is None else options["workers"]
        self.report = run_suite(options["suite"], verify_options, workers)

        if options["format"] == OutputFormat.JSON:
            return render_model(self.report)
        return render_frame(self.report.to_frame(), options["format"])

    def handle(self, *args, **options):
        super().handle(*args, **options)
        if not self.report.passed:
            failed = ", ".join(c.check for c in self.report.failed)
            raise CommandError(f"Failed checks: {failed}", returncode=EXIT_FAILED_CHECK)
