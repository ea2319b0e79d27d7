"""Transfer a Stanley decomposition along a catalog monomial map."""

from __future__ import annotations

from pathlib import Path

from django.core.management.base import BaseCommand, CommandParser

from algebra.formats import decomposition_to_dict, dumps
from core.experiments import run_transfer_demo
from core.management.base import command_errors
from core.services import read_json, transfer_limits


class Command(BaseCommand):
    """Turn a decomposition of the source quotient into a verified one of the target."""

    help = (
        "Transfer a Stanley decomposition: --instance JSON ({kind, n, I, J, ...}) and "
        "--decomposition JSON ({spaces: [{root, vars}]}) of the instance's source."
    )

    def add_arguments(self, parser: CommandParser) -> None:
        """Add command arguments."""

        parser.add_argument("--instance", required=True, help="Transfer instance JSON file.")
        parser.add_argument("--decomposition", required=True, help="Source decomposition JSON file.")
        parser.add_argument("--output", default=None, help="Write the result JSON here instead of stdout.")

    def handle(self, *args, **options) -> str | None:
        """Run the command."""

        with command_errors():
            report = run_transfer_demo(
                read_json(options["instance"]),
                read_json(options["decomposition"]),
                limits=transfer_limits(),
            )
        payload = {"decomposition": decomposition_to_dict(report.decomposition), "report": report.as_dict()}
        if options["output"]:
            with command_errors():
                Path(options["output"]).write_text(dumps(payload), encoding="utf-8")
            self.stdout.write(
                self.style.SUCCESS(f"sdepth {report.input_sdepth} -> {report.output_sdepth}; wrote {options['output']}")
            )
        else:
            self.stdout.write(dumps(payload), ending="")
        return None
