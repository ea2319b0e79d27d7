"""Django app hosting the command-line surface and the experiment harness.

Computation lives in the Django-free `algebra` package; this app loads inputs,
applies settings-driven limits, runs experiment suites and writes reports.
"""
