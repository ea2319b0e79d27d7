"""Print the minimal primes of a squarefree monomial ideal."""

from __future__ import annotations

from algebra.formats import dumps, primary_decomposition_to_list
from algebra.symbolic import minimal_primes
from core.management.base import IdealCommand, command_errors
from core.services import enumeration_limit


class Command(IdealCommand):
    """Print the irredundant primary decomposition as a JSON list of variable-index lists."""

    help = "Print the minimal primes of a squarefree ideal as JSON, e.g. [[1, 2], [3]]."

    def handle(self, *args, **options) -> str | None:
        """Run the command."""

        with command_errors():
            decomposition = minimal_primes(self.load_ideal(options), max_variables=enumeration_limit())
        self.stdout.write(dumps(primary_decomposition_to_list(decomposition)), ending="")
        return None
