"""Management package for the core Django app."""

