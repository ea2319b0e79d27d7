"""Print the radical of a monomial ideal."""

from __future__ import annotations

from algebra.monomials import radical
from core.management.base import IdealCommand, command_errors


class Command(IdealCommand):
    """Compute `√I` from the squarefree parts of the generators."""

    help = "Print the radical of an ideal."

    def handle(self, *args, **options) -> str | None:
        """Run the command."""

        with command_errors():
            ideal = radical(self.load_ideal(options))
        self.write_ideal(ideal, options)
        return None
