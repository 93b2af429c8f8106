"""Reconstruction of hv-convex binary images from their row and column sums."""
from .centered import NotCentered, reconstruct_centered
from .formats import parse_grid, parse_instance, render, serialize_instance
from .grid import (
    BinaryGrid,
    Projections,
    is_connected,
    is_h_convex,
    is_hv_convex_polyomino,
    is_realization,
    is_v_convex,
    projections_of,
)
from .hvconvex import full_anchor_plan, pruned_anchor_plan, reconstruct_hv
from .oracle import brute_force_reconstruct, enumerate_hv_polyominoes, generate_instance
from .result import ReconstructionResult, Stats
from .ryser import gale_ryser_feasible, ryser_reconstruct
from .twosat import ClauseSet, Literal, Unsatisfiable, evaluate, solve

__all__ = [
    "BinaryGrid",
    "Projections",
    "ClauseSet",
    "Literal",
    "Unsatisfiable",
    "NotCentered",
    "ReconstructionResult",
    "Stats",
    "solve",
    "evaluate",
    "reconstruct_hv",
    "reconstruct_centered",
    "full_anchor_plan",
    "pruned_anchor_plan",
    "gale_ryser_feasible",
    "ryser_reconstruct",
    "brute_force_reconstruct",
    "enumerate_hv_polyominoes",
    "generate_instance",
    "projections_of",
    "is_realization",
    "is_hv_convex_polyomino",
    "is_connected",
    "is_h_convex",
    "is_v_convex",
    "parse_instance",
    "serialize_instance",
    "parse_grid",
    "render",
]
