"""Print the ordinary k-th power of a monomial ideal."""

from __future__ import annotations

from django.core.management.base import CommandParser

from algebra.monomials import product_power
from core.management.base import IdealCommand, command_errors


class Command(IdealCommand):
    """Compute `I^k` by repeated products."""

    help = "Print the ordinary k-th power of an ideal."

    def add_arguments(self, parser: CommandParser) -> None:
        """Add command arguments."""

        super().add_arguments(parser)
        parser.add_argument("--k", type=int, required=True, help="Exponent (>= 1).")

    def handle(self, *args, **options) -> str | None:
        """Run the command."""

        with command_errors():
            ideal = product_power(self.load_ideal(options), options["k"])
        self.write_ideal(ideal, options)
        return None
