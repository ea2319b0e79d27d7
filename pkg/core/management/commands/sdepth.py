"""Compute the exact Stanley depth of an ideal or quotient."""

from __future__ import annotations

from pathlib import Path

from django.core.management.base import CommandError, CommandParser

from algebra.formats import decomposition_to_dict, dumps
from algebra.solver import SolverRefusal, sdepth_exact
from algebra.stanley import QuotientPair
from core.management.base import IdealCommand, command_errors
from core.services import load_ideal_file, solver_limits


class Command(IdealCommand):
    """Print `sdepth(I)`, `sdepth(S/I)` (`--quotient`) or `sdepth(I/J)` (`--denominator`)."""

    help = "Compute the exact Stanley depth of I, S/I (--quotient) or I/J (--denominator J)."

    def add_arguments(self, parser: CommandParser) -> None:
        """Add command arguments."""

        super().add_arguments(parser)
        parser.add_argument("--quotient", action="store_true", help="Compute sdepth(S/I) instead of sdepth(I).")
        parser.add_argument("--denominator", default=None, help="Ideal file for J; computes sdepth(I/J).")
        parser.add_argument("--max-poset-points", type=int, default=None, help="Override SDEPTH_MAX_POSET_POINTS.")
        parser.add_argument("--time-budget-secs", type=float, default=None, help="Override SDEPTH_TIME_BUDGET_SECS.")
        parser.add_argument("--witness", default=None, help="Write the optimal decomposition JSON to this path.")

    def handle(self, *args, **options) -> str | None:
        """Run the command."""

        if options["quotient"] and options["denominator"]:
            raise CommandError("Use either --quotient or --denominator, not both.")
        limits = solver_limits(
            max_poset_points=options["max_poset_points"],
            time_budget_secs=options["time_budget_secs"],
        )
        with command_errors():
            ideal = self.load_ideal(options)
            if options["quotient"]:
                pair = QuotientPair.of_quotient_ring(ideal)
            elif options["denominator"]:
                denominator = load_ideal_file(options["denominator"], n=ideal.ring.n)
                pair = QuotientPair(numerator=ideal, denominator=denominator)
            else:
                pair = QuotientPair.of_ideal(ideal)
            try:
                result = sdepth_exact(pair, limits=limits)
            except SolverRefusal as exc:
                raise CommandError(f"REFUSED: {exc}") from exc
            witness = decomposition_to_dict(result.witness)
            if options["witness"]:
                Path(options["witness"]).write_text(dumps(witness), encoding="utf-8")

        if options["json"]:
            payload = {"sdepth": result.value, "poset_points": result.poset.size, "decomposition": witness}
            self.stdout.write(dumps(payload), ending="")
        else:
            self.stdout.write(str(result.value))
        return None
