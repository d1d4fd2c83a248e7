"""Minimal-cost upward-monotone paths through a cost matrix."""

from ._core import (
    CostMatrix,
    DerivativeField,
    DimensionMismatch,
    DpTables,
    Error,
    InfeasiblePath,
    InstanceTooLarge,
    InvalidParams,
    PathResult,
    ShapeMismatch,
    SolveOutput,
    SolverParams,
    StartMode,
    StrengthField,
    ValueOutOfRange,
    WindowTooLarge,
    backtrack,
    brute_force_solve,
    count_paths,
    enumerate_paths,
    forward_pass,
    path_cost,
    read_csv,
    read_pgm,
    solve,
    strength,
    windowed_derivative,
)

__all__ = [
    "CostMatrix",
    "DerivativeField",
    "DimensionMismatch",
    "DpTables",
    "Error",
    "InfeasiblePath",
    "InstanceTooLarge",
    "InvalidParams",
    "PathResult",
    "ShapeMismatch",
    "SolveOutput",
    "SolverParams",
    "StartMode",
    "StrengthField",
    "ValueOutOfRange",
    "WindowTooLarge",
    "backtrack",
    "brute_force_solve",
    "count_paths",
    "enumerate_paths",
    "forward_pass",
    "path_cost",
    "read_csv",
    "read_pgm",
    "solve",
    "strength",
    "windowed_derivative",
]
