"""Instance files and grid renderings.

Instance file::

    # comments run to the end of the line; blank lines are ignored
    m n
    r_1 ... r_m
    c_1 ... c_n

Grids are written either as ASCII (``#`` filled, ``.`` empty) or as plain
PBM (``P1``), where 1 marks a filled cell.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .grid import BinaryGrid, Projections

__all__ = [
    "InstanceError",
    "InstanceFile",
    "parse_instance",
    "serialize_instance",
    "render",
    "parse_grid",
]


class InstanceError(ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line, self.column = line, column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)


@dataclass
class InstanceFile:
    m: int
    n: int
    projections: Projections
    warnings: list[str] = field(default_factory=list)


def _tokens(text: str):
    """Yield ``(line_no, col_no, token)`` per non-comment token, grouped into lines."""
    lines = []
    for line_no, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0]
        toks = []
        pos = 0
        for tok in body.split():
            col = body.index(tok, pos)
            pos = col + len(tok)
            toks.append((line_no, col + 1, tok))
        if toks:
            lines.append((line_no, toks))
    return lines


def _ints(toks):
    out = []
    for line_no, col, tok in toks:
        try:
            out.append(int(tok))
        except ValueError:
            raise InstanceError(f"expected an integer, found {tok!r}", line_no, col) from None
    return out


def parse_instance(text: str, strict: bool = True) -> InstanceFile:
    """Parse an instance file.

    With ``strict`` a row sum outside ``[1, n]`` or a column sum outside
    ``[1, m]`` is an error; otherwise it is recorded in ``warnings``.
    """
    lines = _tokens(text)
    if len(lines) != 3:
        where = lines[3][0] if len(lines) > 3 else None
        raise InstanceError(f"expected 3 non-empty lines (size, row sums, column sums), found {len(lines)}", where)
    (l1, t1), (l2, t2), (l3, t3) = lines
    if len(t1) != 2:
        raise InstanceError(f"expected 2 numbers 'm n', found {len(t1)}", l1)
    m, n = _ints(t1)
    if m < 1 or n < 1:
        raise InstanceError("m and n must be positive", l1)
    if len(t2) != m:
        raise InstanceError(f"expected {m} row sums, found {len(t2)}", l2)
    if len(t3) != n:
        raise InstanceError(f"expected {n} column sums, found {len(t3)}", l3)
    rows, cols = _ints(t2), _ints(t3)
    warnings = []
    for (line_no, col, _), v, bound, what in (
        [(tok, v, n, "row") for tok, v in zip(t2, rows)]
        + [(tok, v, m, "column") for tok, v in zip(t3, cols)]
    ):
        if v < 0:
            raise InstanceError(f"{what} sum {v} is negative", line_no, col)
        if not 1 <= v <= bound:
            msg = f"{what} sum {v} outside [1, {bound}]"
            if strict:
                raise InstanceError(msg, line_no, col)
            warnings.append(f"line {line_no}, column {col}: {msg}")
    return InstanceFile(m, n, Projections(rows, cols), warnings)


def serialize_instance(p: Projections) -> str:
    return (
        f"{p.m} {p.n}\n"
        + " ".join(map(str, p.rows.tolist())) + "\n"
        + " ".join(map(str, p.cols.tolist())) + "\n"
    )


def render(g: BinaryGrid, fmt: str = "ascii") -> str:
    if fmt == "ascii":
        return "".join("".join("#" if c else "." for c in row) + "\n" for row in g.cells)
    if fmt == "pbm":
        body = "".join(" ".join("1" if c else "0" for c in row) + "\n" for row in g.cells)
        return f"P1\n{g.n} {g.m}\n" + body
    raise ValueError(f"unknown format {fmt!r}")


def parse_grid(text: str) -> BinaryGrid:
    """Read a grid written by :func:`render` in either format."""
    stripped = text.lstrip()
    if stripped.startswith("P1"):
        toks = []
        for raw in stripped.splitlines():
            toks.extend(raw.split("#", 1)[0].split())
        if len(toks) < 3:
            raise InstanceError("truncated PBM header")
        try:
            n, m = int(toks[1]), int(toks[2])
        except ValueError:
            raise InstanceError("bad PBM size") from None
        bits = "".join(toks[3:])
        if len(bits) != m * n or set(bits) - {"0", "1"}:
            raise InstanceError(f"expected {m * n} PBM bits, found {len(bits)}")
        return BinaryGrid(np.array([b == "1" for b in bits], dtype=bool).reshape(m, n))
    rows = [line.strip() for line in text.splitlines() if line.strip()]
    if not rows:
        raise InstanceError("empty grid")
    for i, row in enumerate(rows, 1):
        if len(row) != len(rows[0]):
            raise InstanceError(f"row has {len(row)} cells, expected {len(rows[0])}", i)
        bad = set(row) - set("#.")
        if bad:
            raise InstanceError(f"unexpected character {sorted(bad)[0]!r}", i, row.index(sorted(bad)[0]) + 1)
    return BinaryGrid([[ch == "#" for ch in row] for row in rows])
