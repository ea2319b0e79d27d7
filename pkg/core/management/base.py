"""Shared plumbing for the ideal-manipulation management commands."""

from __future__ import annotations

from collections.abc import Iterator
from contextlib import contextmanager

from django.core.management.base import BaseCommand, CommandError, CommandParser

from algebra.formats import dumps, format_ideal_text, ideal_to_dict
from algebra.monomials import MonomialIdeal
from core.services import INPUT_ERRORS, load_ideal_file


@contextmanager
def command_errors() -> Iterator[None]:
    """Re-raise parse, IO and domain errors as CommandError (nonzero exit)."""

    try:
        yield
    except INPUT_ERRORS as exc:
        raise CommandError(str(exc)) from exc


class IdealCommand(BaseCommand):
    """Base class for commands that read one ideal file and print an ideal."""

    def add_arguments(self, parser: CommandParser) -> None:
        """Add the ideal file, ring size and output format arguments."""

        parser.add_argument("ideal_file", help="Ideal file: one monomial per line, or JSON {n, generators}.")
        parser.add_argument(
            "--n",
            type=int,
            default=None,
            help="Number of variables (text files default to the largest index seen).",
        )
        parser.add_argument("--json", action="store_true", help="Print JSON instead of one monomial per line.")

    def load_ideal(self, options: dict) -> MonomialIdeal:
        return load_ideal_file(options["ideal_file"], n=options["n"])

    def write_ideal(self, ideal: MonomialIdeal, options: dict) -> None:
        if options["json"]:
            self.stdout.write(dumps(ideal_to_dict(ideal)), ending="")
        else:
            self.stdout.write(format_ideal_text(ideal), ending="")
