"""Parse, minimalize and print a monomial ideal."""

from __future__ import annotations

from core.management.base import IdealCommand, command_errors


class Command(IdealCommand):
    """Print the minimal generators of an ideal in canonical form."""

    help = "Parse an ideal file and print its minimal generators (text or --json)."

    def handle(self, *args, **options) -> str | None:
        """Run the command."""

        with command_errors():
            ideal = self.load_ideal(options)
        self.write_ideal(ideal, options)
        return None
