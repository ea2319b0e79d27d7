"""Print the colon ideal `(I : v)` for a monomial v."""

from __future__ import annotations

from django.core.management.base import CommandParser

from algebra.formats import parse_monomial
from algebra.monomials import colon
from core.management.base import IdealCommand, command_errors


class Command(IdealCommand):
    """Compute `(I : v)`."""

    help = "Print the colon ideal (I : v); v is given as text such as x1^2*x3."

    def add_arguments(self, parser: CommandParser) -> None:
        """Add command arguments."""

        super().add_arguments(parser)
        parser.add_argument("--v", required=True, help="Monomial, e.g. x1^2*x3.")

    def handle(self, *args, **options) -> str | None:
        """Run the command."""

        with command_errors():
            ideal = self.load_ideal(options)
            ideal = colon(ideal, parse_monomial(options["v"], ideal.ring))
        self.write_ideal(ideal, options)
        return None
