"""Print the cover ideal of a graph."""

from __future__ import annotations

from django.core.management.base import BaseCommand, CommandParser

from algebra.formats import dumps, format_ideal_text, ideal_to_dict
from algebra.graphs import cover_ideal, is_bipartite
from core.management.base import command_errors
from core.services import load_graph_file


class Command(BaseCommand):
    """Print `J_G`, generated by the products over minimal vertex covers."""

    help = "Print the cover ideal of a graph given as an edge list (first line n) or JSON {n, edges}."

    def add_arguments(self, parser: CommandParser) -> None:
        """Add command arguments."""

        parser.add_argument("graph_file", help="Graph file.")
        parser.add_argument("--json", action="store_true", help="Print JSON; includes the bipartition when one exists.")

    def handle(self, *args, **options) -> str | None:
        """Run the command."""

        with command_errors():
            graph = load_graph_file(options["graph_file"])
            ideal = cover_ideal(graph)
        if not options["json"]:
            self.stdout.write(format_ideal_text(ideal), ending="")
            return None

        sides = is_bipartite(graph)
        payload = {
            **ideal_to_dict(ideal),
            "bipartition": None if sides is None else [sorted(sides[0]), sorted(sides[1])],
        }
        self.stdout.write(dumps(payload), ending="")
        return None
