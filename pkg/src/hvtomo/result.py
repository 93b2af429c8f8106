from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .grid import BinaryGrid, grid_from_intervals


@dataclass
class Stats:
    formulas_built: int = 0
    clauses_generated: int = 0
    anchors_tried: int = 0
    steps: int = 0
    solver_time: float = 0.0
    elapsed: float = 0.0


class ReconstructionResult:
    """Outcome of a reconstruction; ``grid`` is None on failure.

    The centered algorithm reports the left end of every row in ``starts``;
    its grid is only materialized when first accessed. ``transposed`` marks
    an hv result whose ``anchor`` rows refer to the transposed problem.
    """

    def __init__(self, success: bool, *, grid: BinaryGrid | None = None, anchor=None,
                 starts=None, lengths=None, width: int = 0, stats: Stats | None = None,
                 reason: str = "", transposed: bool = False):
        self.success = success
        self.transposed = transposed
        self.anchor = anchor
        self.starts = None if starts is None else np.asarray(starts, dtype=np.int64)
        self.lengths = None if lengths is None else np.asarray(lengths, dtype=np.int64)
        self.width = width
        self.stats = stats if stats is not None else Stats()
        self.reason = reason
        self._grid = grid

    @property
    def grid(self) -> BinaryGrid | None:
        if self._grid is None and self.success and self.starts is not None:
            self._grid = grid_from_intervals(self.starts, self.lengths, self.width)
        return self._grid

    def __bool__(self) -> bool:
        return self.success

    def __repr__(self) -> str:
        if not self.success:
            return f"ReconstructionResult(failure{', ' + self.reason if self.reason else ''})"
        return f"ReconstructionResult(success, anchor={self.anchor})"
