"""Management command package for the core Django app."""

