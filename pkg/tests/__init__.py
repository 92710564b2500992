"""Test package for shared fixtures/helpers."""
