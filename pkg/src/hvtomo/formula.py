"""The 2SAT encoding of anchored hv-convex polyomino realizations.

The complement of an hv-convex polyomino splits into four corner regions
A (upper-left), B (upper-right), C (lower-left) and D (lower-right). One
boolean variable per region and cell says whether the cell belongs to that
region; a satisfying assignment of :func:`build_formula` describes an
hv-convex polyomino realization anchored at ``(k, 1)`` and ``(l, n)``.

Rows and columns are 1-indexed in this module's public API.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .grid import BinaryGrid, Projections
from .twosat import NO_LITERAL, ClauseSet, Literal

__all__ = [
    "REGIONS",
    "CornerVar",
    "CornerAssignment",
    "variable_index",
    "decode_variable",
    "build_formula",
    "extract_object",
    "corner_assignment_of",
    "corner_decomposition",
    "assignment_of",
    "clause_families",
    "dump_clauses",
]

REGIONS = "ABCD"
_A, _B, _C, _D = range(4)


@dataclass(frozen=True)
class CornerVar:
    region: str
    row: int
    col: int

    def __str__(self) -> str:
        return f"{self.region}[{self.row},{self.col}]"


def variable_index(region: str, i: int, j: int, m: int, n: int) -> int:
    """Flat index of ``region[i, j]`` (1-indexed cell)."""
    if not (1 <= i <= m and 1 <= j <= n):
        raise ValueError(f"cell ({i},{j}) outside the {m}x{n} grid")
    return (REGIONS.index(region) * m + (i - 1)) * n + (j - 1)


def decode_variable(index: int, m: int, n: int) -> CornerVar:
    if not 0 <= index < 4 * m * n:
        raise ValueError(f"variable {index} out of range for a {m}x{n} grid")
    rest, j = divmod(index, n)
    region, i = divmod(rest, m)
    return CornerVar(REGIONS[region], i + 1, j + 1)


@dataclass(frozen=True)
class CornerAssignment:
    """Four m x n boolean matrices, one per corner region."""

    A: np.ndarray
    B: np.ndarray
    C: np.ndarray
    D: np.ndarray

    @property
    def shape(self) -> tuple[int, int]:
        return self.A.shape

    def stacked(self) -> np.ndarray:
        return np.stack([self.A, self.B, self.C, self.D])

    def is_closed(self) -> bool:
        """Each region is closed toward its own corner."""
        A, B, C, D = self.A, self.B, self.C, self.D
        return bool(
            np.all(A[1:] <= A[:-1]) and np.all(A[:, 1:] <= A[:, :-1])
            and np.all(B[1:] <= B[:-1]) and np.all(B[:, :-1] <= B[:, 1:])
            and np.all(C[:-1] <= C[1:]) and np.all(C[:, 1:] <= C[:, :-1])
            and np.all(D[:-1] <= D[1:]) and np.all(D[:, :-1] <= D[:, 1:])
        )

    def is_disjoint(self) -> bool:
        return bool(np.all(self.stacked().sum(axis=0) <= 1))

    def complement(self) -> BinaryGrid:
        return BinaryGrid(~self.stacked().any(axis=0))


def _codes(region, I, J, m, n, positive):
    """Literal codes for 0-indexed cell arrays."""
    idx = (region * m + I) * n + J
    return 2 * idx + (0 if positive else 1)


class _Builder:
    def __init__(self, m: int, n: int, outside: str):
        self.m, self.n = m, n
        self.outside = outside
        self.parts: list[tuple[str, np.ndarray, np.ndarray]] = []
        self._current = ""
        I, J = np.meshgrid(np.arange(m), np.arange(n), indexing="ij")
        self.I, self.J = I.ravel(), J.ravel()

    def family(self, name: str) -> None:
        self._current = name

    def _emit(self, a, b) -> None:
        if len(a):
            self.parts.append((self._current, a, b))

    def implies(self, x_region, x_pos, I, J, y_region, y_pos, I2, J2) -> None:
        """Emit ``X[I,J] => Y[I2,J2]`` as ``(~X or Y)``; antecedent cells lie inside the grid."""
        m, n = self.m, self.n
        inside = (I2 >= 0) & (I2 < m) & (J2 >= 0) & (J2 < n)
        a = _codes(x_region, I, J, m, n, not x_pos)
        b = _codes(y_region, np.where(inside, I2, 0), np.where(inside, J2, 0), m, n, y_pos)
        if self.outside == "drop" or y_pos:
            self._emit(a[inside], b[inside])
        else:
            # an off-grid cell belongs to every corner region, so ~Y is false there
            self._emit(a, np.where(inside, b, NO_LITERAL))

    def units(self, region, I, J, positive=False) -> None:
        I = np.asarray(I)
        self._emit(_codes(region, I, np.asarray(J), self.m, self.n, positive),
                   np.full(len(I), NO_LITERAL))


@lru_cache(maxsize=64)
def _geometry_clauses(m: int, n: int, reduced: bool, outside: str):
    """Cor, Dis and Con depend on the grid shape only."""
    bld = _Builder(m, n, outside)
    I, J = bld.I, bld.J
    bld.family("Cor")
    for region, di, dj in ((_A, -1, 0), (_B, -1, 0), (_C, 1, 0), (_D, 1, 0),
                           (_A, 0, -1), (_B, 0, 1), (_C, 0, -1), (_D, 0, 1)):
        bld.implies(region, True, I, J, region, True, I + di, J + dj)
    bld.family("Dis")
    pairs = ((_A, _B), (_C, _D)) if reduced else (
        (_A, _B), (_A, _C), (_A, _D), (_B, _C), (_B, _D), (_C, _D))
    for x, y in pairs:
        bld.implies(x, True, I, J, y, False, I, J)
    bld.family("Con")
    bld.implies(_A, True, I, J, _D, False, I + 1, J + 1)
    bld.implies(_B, True, I, J, _C, False, I + 1, J - 1)
    for _, a, b in bld.parts:
        a.setflags(write=False)
        b.setflags(write=False)
    return tuple(bld.parts)


def _check_projections(p: Projections) -> None:
    m, n = p.shape
    if np.any(p.rows < 1) or np.any(p.rows > n):
        raise ValueError(f"row sums must lie in [1, {n}]")
    if np.any(p.cols < 1) or np.any(p.cols > m):
        raise ValueError(f"column sums must lie in [1, {m}]")


def build_formula(
    p: Projections,
    k: int,
    l: int,
    *,
    reduced_disjointness: bool = False,
    outside: str = "corner",
    with_families: bool = False,
):
    """Build the clause set whose models are realizations anchored at ``(k, l)``.

    Families are emitted in the order Cor, Dis, Con, Anc, LBC, UBR, and each
    implication ``X => Y`` becomes the clause ``(~X or Y)``. ``outside``
    selects how literals on cells beyond the grid are treated: ``"corner"``
    counts such cells as members of every corner region (a negated off-grid
    literal is false, leaving a unit clause), ``"drop"`` discards any clause
    that mentions an off-grid cell. Only ``"corner"`` is sound; ``"drop"``
    is kept for comparison.
    """
    m, n = p.shape
    if not (1 <= k <= m and 1 <= l <= m):
        raise ValueError(f"anchor rows ({k},{l}) must lie in [1, {m}]")
    if outside not in ("corner", "drop"):
        raise ValueError("outside must be 'corner' or 'drop'")
    _check_projections(p)
    bld = _Builder(m, n, outside)
    bld.parts.extend(_geometry_clauses(m, n, reduced_disjointness, outside))
    I, J = bld.I, bld.J
    k0, l0 = k - 1, l - 1

    bld.family("Anc")
    for row, col in ((k0, 0), (l0, n - 1)):
        bld.units(np.arange(4), [row] * 4, [col] * 4)

    bld.family("LBC")
    shift = p.cols[J]
    for x in (_A, _B):
        for y in (_C, _D):
            bld.implies(x, True, I, J, y, False, I + shift, J)
    cols = np.arange(n)
    for y in (_C, _D):
        bld.units(y, p.cols - 1, cols)

    bld.family("UBR")
    reach = J + p.rows[I]
    lo, hi = min(k0, l0), max(k0, l0)
    for mask, left, right in (
        (I <= lo, _A, _B),
        ((k0 <= I) & (I <= l0), _C, _B),
        ((l0 <= I) & (I <= k0), _A, _D),
        (I >= hi, _C, _D),
    ):
        bld.implies(left, False, I[mask], J[mask], right, True, I[mask], reach[mask])

    f = ClauseSet(4 * m * n)
    f.add_arrays(np.concatenate([a for _, a, _ in bld.parts]),
                 np.concatenate([b for _, _, b in bld.parts]), trusted=True)
    if with_families:
        families: dict[str, int] = {}
        for name, a, _ in bld.parts:
            families[name] = families.get(name, 0) + len(a)
        return f, families
    return f


def clause_families(p: Projections, k: int, l: int, **kw) -> dict[str, int]:
    """Clause count per family, in emission order."""
    return build_formula(p, k, l, with_families=True, **kw)[1]


def _check_size(values, m, n) -> np.ndarray:
    values = np.asarray(values, dtype=bool)
    if values.shape != (4 * m * n,):
        raise ValueError(f"expected {4 * m * n} values for a {m}x{n} grid, got {values.size}")
    return values


def corner_assignment_of(values, m: int, n: int) -> CornerAssignment:
    v = _check_size(values, m, n).reshape(4, m, n)
    return CornerAssignment(*(v[r].copy() for r in range(4)))


def assignment_of(corners: CornerAssignment) -> np.ndarray:
    """Inverse of :func:`corner_assignment_of`."""
    return corners.stacked().astype(bool).ravel()


def extract_object(values, m: int, n: int) -> BinaryGrid:
    """Cells that belong to none of the four corner regions."""
    v = _check_size(values, m, n).reshape(4, m, n)
    return BinaryGrid(~v.any(axis=0))


def corner_decomposition(g: BinaryGrid) -> CornerAssignment:
    """Split the complement of an hv-convex polyomino into its four corner regions.

    Every row and column of ``g`` must be nonempty. A cell outside the
    object goes to the left (A/C) or right (B/D) side of its row interval,
    and to the upper (A/B) or lower (C/D) side of its column interval.
    """
    cells = g.cells
    m, n = cells.shape
    if not (cells.any(axis=1).all() and cells.any(axis=0).all()):
        raise ValueError("every row and column must be nonempty")
    row_first = cells.argmax(axis=1)
    col_first = cells.argmax(axis=0)
    I, J = np.meshgrid(np.arange(m), np.arange(n), indexing="ij")
    outside = ~cells
    left = J < row_first[:, None]
    upper = I < col_first[None, :]
    return CornerAssignment(
        outside & left & upper,
        outside & ~left & upper,
        outside & left & ~upper,
        outside & ~left & ~upper,
    )


def _literal_name(lit: Literal, m: int, n: int) -> str:
    return ("" if lit.positive else "!") + str(decode_variable(lit.variable, m, n))


def dump_clauses(f: ClauseSet, m: int, n: int) -> str:
    """One clause per line, literals written like ``A[2,3]`` or ``!D[1,4]``."""
    return "".join(
        " | ".join(_literal_name(lit, m, n) for lit in clause) + "\n" for clause in f
    )
