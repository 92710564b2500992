"""Delay reduction."""

from rentmin.delay.reduction import DelayTrace, simulate_with_delay, strip_delay

__all__ = ["DelayTrace", "simulate_with_delay", "strip_delay"]
