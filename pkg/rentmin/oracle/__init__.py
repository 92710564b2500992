"""Semi-online oracle."""

from rentmin.oracle.semi_online import (
    AUGMENTATION,
    OracleState,
    OracleStrategy,
    oracle_push,
    prefix_growth_breaks,
    reversed_tie_order,
    semi_online,
    semi_online_incremental,
    semi_order,
    semi_rent,
    tau,
    tau_batches,
    tie_break_counterexample,
)

__all__ = [
    "AUGMENTATION",
    "OracleState",
    "OracleStrategy",
    "oracle_push",
    "prefix_growth_breaks",
    "reversed_tie_order",
    "semi_online",
    "semi_online_incremental",
    "semi_order",
    "semi_rent",
    "tau",
    "tau_batches",
    "tie_break_counterexample",
]
