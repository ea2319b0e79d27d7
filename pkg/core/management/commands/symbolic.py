"""Print the k-th symbolic power of a squarefree monomial ideal."""

from __future__ import annotations

from django.core.management.base import CommandParser

from algebra.symbolic import symbolic_power
from core.management.base import IdealCommand, command_errors


class Command(IdealCommand):
    """Compute `I^(k)` as the intersection of the k-th powers of the minimal primes."""

    help = "Print the k-th symbolic power of a squarefree ideal."

    def add_arguments(self, parser: CommandParser) -> None:
        """Add command arguments."""

        super().add_arguments(parser)
        parser.add_argument("--k", type=int, required=True, help="Symbolic exponent (>= 1).")

    def handle(self, *args, **options) -> str | None:
        """Run the command."""

        with command_errors():
            ideal = symbolic_power(self.load_ideal(options), options["k"])
        self.write_ideal(ideal, options)
        return None
