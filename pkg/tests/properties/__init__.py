"""Exhaustive small-grid property suites."""
