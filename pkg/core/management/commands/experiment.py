"""Run an experiment spec and write its CSV report."""

from __future__ import annotations

from pathlib import Path

from django.core.management.base import BaseCommand, CommandError, CommandParser

from algebra.formats import dumps
from core.experiments import run_experiment, spec_from_dict
from core.management.base import command_errors
from core.reports import build_metadata, render_csv, write_witnesses
from core.services import enumeration_limit, read_json, solver_limits, transfer_limits


class Command(BaseCommand):
    """Run experiment suites and emit `ideal,mode,power,sdepth,theorem,verdict` rows."""

    help = "Run the experiment described by a spec JSON file; exits nonzero on any FAIL verdict."

    def add_arguments(self, parser: CommandParser) -> None:
        """Add command arguments."""

        parser.add_argument("spec", help="Experiment spec JSON file.")
        parser.add_argument("--output", default=None, help="Write the CSV here instead of stdout.")
        parser.add_argument("--report", default=None, help="Write metadata JSON (seed, limits, versions) here.")
        parser.add_argument("--witness-dir", default=None, help="Directory for witness decomposition JSON files.")
        parser.add_argument("--max-poset-points", type=int, default=None, help="Override SDEPTH_MAX_POSET_POINTS.")
        parser.add_argument("--time-budget-secs", type=float, default=None, help="Override SDEPTH_TIME_BUDGET_SECS.")

    def handle(self, *args, **options) -> str | None:
        """Run the command."""

        spec_path = Path(options["spec"])
        with command_errors():
            spec = spec_from_dict(
                read_json(spec_path),
                base_dir=spec_path.resolve().parent,
                limits=solver_limits(
                    max_poset_points=options["max_poset_points"],
                    time_budget_secs=options["time_budget_secs"],
                ),
                transfer_limits=transfer_limits(),
                enumeration_limit=enumeration_limit(),
            )
            report = run_experiment(spec)
            csv_text = render_csv(report)
            if options["output"]:
                Path(options["output"]).write_text(csv_text, encoding="utf-8")
            witness_files = None
            if options["witness_dir"]:
                witness_files = write_witnesses(report, Path(options["witness_dir"]))
            if options["report"]:
                Path(options["report"]).write_text(
                    dumps(build_metadata(report, witness_files=witness_files)), encoding="utf-8"
                )

        if not options["output"]:
            self.stdout.write(csv_text, ending="")
        if report.failures:
            failed = ", ".join(f"{row.ideal}/{row.theorem}/{row.power}" for row in report.failures)
            raise CommandError(f"{len(report.failures)} FAIL verdict(s): {failed}")
        if options["output"]:
            self.stdout.write(self.style.SUCCESS(f"{len(report.rows)} rows {report.counts()}; wrote {options['output']}"))
        return None
