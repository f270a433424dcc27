import logging

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from .exceptions import MotivicError, NonIntegralResult
from .rendering import OutputFormat

logger = logging.getLogger(__name__)

EXIT_FAILED_CHECK = 1
EXIT_INVALID_PARAMETERS = 2
EXIT_NON_INTEGRAL = 3


class MotivicCommand(BaseCommand):
    """
    Base of every engine command.

    Subclasses implement `add_command_arguments` and `compute`, which returns
    the rendered text. Library errors become exit codes:
      * NonIntegralResult            -> 3
      * other MotivicError/ValueError -> 2
    """

    def add_arguments(self, parser):
        parser.add_argument(
            "--order",
            type=int,
            default=None,
            help="Truncation order (default: MOTIVIC_ORDER)",
        )
        parser.add_argument(
            "--format",
            choices=OutputFormat.values,
            default=OutputFormat.TEXT,
        )
        self.add_command_arguments(parser)

    def add_command_arguments(self, parser):
        pass

    def compute(self, **options) -> str:
        raise NotImplementedError

    def get_order(self, options) -> int:
        order = options.get("order")
        if order is None:
            order = settings.MOTIVIC_ORDER
        if order < 0:
            raise CommandError(
                f"--order must be >= 0, got {order}", returncode=EXIT_INVALID_PARAMETERS
            )
        return order

    def handle(self, *args, **options):
        try:
            output = self.compute(**options)
        except NonIntegralResult as exc:
            logger.error("Non-integral result: %s", exc)
            raise CommandError(str(exc), returncode=EXIT_NON_INTEGRAL) from exc
        except (MotivicError, ValueError) as exc:
            raise CommandError(str(exc), returncode=EXIT_INVALID_PARAMETERS) from exc
        self.stdout.write(output)
