"""Linear-time 2SAT via the implication graph and Tarjan's SCC algorithm.

Literals are encoded as non-negative integers: variable ``v`` maps to
``2*v`` (positive) and ``2*v + 1`` (negative), so negation is ``code ^ 1``.
A unit clause ``(a)`` contributes the single edge ``~a -> a``.
"""
from __future__ import annotations

from typing import Iterable, Iterator, NamedTuple, Sequence

import numpy as np

__all__ = [
    "Literal",
    "ClauseSet",
    "Unsatisfiable",
    "solve",
    "evaluate",
    "is_satisfiable",
    "implication_edges",
    "dump_implication_graph",
]

NO_LITERAL = -1


class Literal(NamedTuple):
    variable: int
    positive: bool = True

    @property
    def code(self) -> int:
        return 2 * self.variable + (0 if self.positive else 1)

    @classmethod
    def from_code(cls, code: int) -> "Literal":
        return cls(int(code) >> 1, not (int(code) & 1))

    def __invert__(self) -> "Literal":
        return Literal(self.variable, not self.positive)

    def __str__(self) -> str:
        return ("" if self.positive else "!") + f"x{self.variable}"


class Unsatisfiable(Exception):
    """Raised by :func:`solve` when no model exists."""


def _code(lit) -> int:
    if isinstance(lit, Literal):
        return lit.code
    return int(lit)


class ClauseSet:
    """Ordered collection of 1- and 2-literal clauses over ``variable_count`` variables.

    Clauses are kept in insertion order as two parallel code arrays; the
    second literal of a unit clause is ``NO_LITERAL``. Bulk insertion from
    numpy arrays is supported so that large formulas are built without a
    Python-level loop per clause.
    """

    def __init__(self, variable_count: int):
        if variable_count < 0:
            raise ValueError("variable_count must be non-negative")
        self.variable_count = int(variable_count)
        self._chunks: list[tuple[np.ndarray, np.ndarray]] = []
        self._pending_a: list[int] = []
        self._pending_b: list[int] = []
        self._cache: tuple[np.ndarray, np.ndarray] | None = None

    def _check(self, codes: np.ndarray) -> None:
        if codes.size and (codes.min() < 0 or codes.max() >= 2 * self.variable_count):
            bad = codes[(codes < 0) | (codes >= 2 * self.variable_count)][0]
            raise ValueError(
                f"literal on variable {int(bad) >> 1} out of range for "
                f"{self.variable_count} variables"
            )

    def add(self, a, b=None) -> None:
        """Append the clause ``(a)`` or ``(a or b)``."""
        ca = _code(a)
        cb = NO_LITERAL if b is None else _code(b)
        self._check(np.array([ca] if cb == NO_LITERAL else [ca, cb]))
        self._pending_a.append(ca)
        self._pending_b.append(cb)
        self._cache = None

    def add_arrays(self, a: np.ndarray, b: np.ndarray | None = None, trusted: bool = False) -> None:
        """Append many clauses at once; ``b`` may be None (all units) or hold ``NO_LITERAL``.

        ``trusted`` skips the range check for callers that built the codes themselves.
        """
        a = np.asarray(a, dtype=np.int64).ravel()
        if b is None:
            b = np.full(a.shape, NO_LITERAL, dtype=np.int64)
        else:
            b = np.asarray(b, dtype=np.int64).ravel()
            if b.shape != a.shape:
                raise ValueError("clause literal arrays differ in length")
        if not trusted:
            self._check(a)
            self._check(b[b != NO_LITERAL])
        self._flush()
        if a.size:
            self._chunks.append((a, b))
        self._cache = None

    def _flush(self) -> None:
        if self._pending_a:
            self._chunks.append(
                (np.array(self._pending_a, dtype=np.int64), np.array(self._pending_b, dtype=np.int64))
            )
            self._pending_a, self._pending_b = [], []

    def arrays(self) -> tuple[np.ndarray, np.ndarray]:
        """Return ``(first, second)`` code arrays in clause order."""
        if self._cache is None:
            self._flush()
            if self._chunks:
                a = np.concatenate([c[0] for c in self._chunks])
                b = np.concatenate([c[1] for c in self._chunks])
            else:
                a = np.empty(0, dtype=np.int64)
                b = np.empty(0, dtype=np.int64)
            self._chunks = [(a, b)] if a.size else []
            self._cache = (a, b)
        return self._cache

    def __len__(self) -> int:
        return len(self.arrays()[0])

    def __iter__(self) -> Iterator[tuple[Literal, ...]]:
        a, b = self.arrays()
        for x, y in zip(a.tolist(), b.tolist()):
            if y == NO_LITERAL:
                yield (Literal.from_code(x),)
            else:
                yield (Literal.from_code(x), Literal.from_code(y))

    @property
    def unit_count(self) -> int:
        return int(np.count_nonzero(self.arrays()[1] == NO_LITERAL))

    @classmethod
    def from_clauses(cls, variable_count: int, clauses: Iterable[Sequence]) -> "ClauseSet":
        f = cls(variable_count)
        for clause in clauses:
            if not 1 <= len(clause) <= 2:
                raise ValueError("clauses must hold one or two literals")
            f.add(*clause)
        return f


def implication_edges(f: ClauseSet) -> tuple[np.ndarray, np.ndarray]:
    """Edges ``(src, dst)`` of the implication graph, in clause order.

    ``(a or b)`` yields ``~a -> b`` then ``~b -> a``; ``(a)`` yields ``~a -> a``.
    """
    a, b = f.arrays()
    unit = b == NO_LITERAL
    b_eff = np.where(unit, a, b)
    src = np.empty(2 * len(a), dtype=np.int64)
    dst = np.empty(2 * len(a), dtype=np.int64)
    src[0::2] = a ^ 1
    dst[0::2] = b_eff
    src[1::2] = b_eff ^ 1
    dst[1::2] = a
    # a unit clause would otherwise contribute the same edge twice
    keep = np.ones(len(src), dtype=bool)
    keep[1::2] = ~unit
    return src[keep], dst[keep]


def _tarjan(node_count: int, starts: list[int], targets: list[int]) -> list[int]:
    """Iterative Tarjan; component ids come out in reverse topological order."""
    index = [-1] * node_count
    low = [0] * node_count
    comp = [-1] * node_count
    on_stack = [False] * node_count
    stack: list[int] = []
    counter = 0
    ncomp = 0
    for root in range(node_count):
        if index[root] != -1:
            continue
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        work = [(root, starts[root])]
        while work:
            v, pos = work[-1]
            end = starts[v + 1]
            descended = False
            while pos < end:
                w = targets[pos]
                pos += 1
                if index[w] == -1:
                    work[-1] = (v, pos)
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, starts[w]))
                    descended = True
                    break
                if on_stack[w] and index[w] < low[v]:
                    low[v] = index[w]
            if descended:
                continue
            work.pop()
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp[w] = ncomp
                    if w == v:
                        break
                ncomp += 1
            if work:
                u = work[-1][0]
                if low[v] < low[u]:
                    low[u] = low[v]
    return comp


def _components(f: ClauseSet) -> list[int]:
    node_count = 2 * f.variable_count
    src, dst = implication_edges(f)
    order = np.argsort(src, kind="stable")
    starts = np.zeros(node_count + 1, dtype=np.int64)
    np.cumsum(np.bincount(src, minlength=node_count), out=starts[1:])
    return _tarjan(node_count, starts.tolist(), dst[order].tolist())


def solve(f: ClauseSet) -> np.ndarray:
    """Return a satisfying assignment as a boolean array, or raise Unsatisfiable.

    A variable is set true when its positive literal's component comes
    later in topological order than its negation's.
    """
    comp = _components(f)
    pos = comp[0::2]
    neg = comp[1::2]
    values = np.empty(f.variable_count, dtype=bool)
    for v, (cp, cn) in enumerate(zip(pos, neg)):
        if cp == cn:
            raise Unsatisfiable(f"variable {v} and its negation share a component")
        values[v] = cp < cn
    return values


def is_satisfiable(f: ClauseSet) -> bool:
    try:
        solve(f)
    except Unsatisfiable:
        return False
    return True


def evaluate(f: ClauseSet, values) -> bool:
    values = np.asarray(values, dtype=bool)
    if values.shape != (f.variable_count,):
        raise ValueError(
            f"assignment has {values.size} values, formula has {f.variable_count} variables"
        )
    a, b = f.arrays()
    if not len(a):
        return True
    lit_val = np.empty(2 * f.variable_count, dtype=bool)
    lit_val[0::2] = values
    lit_val[1::2] = ~values
    second = np.where(b == NO_LITERAL, False, lit_val[np.where(b == NO_LITERAL, 0, b)])
    return bool(np.all(lit_val[a] | second))


def dump_implication_graph(f: ClauseSet, name=None) -> str:
    """One ``u -> v`` line per implication edge; ``name`` maps a Literal to text."""
    name = name or str
    src, dst = implication_edges(f)
    return "".join(
        f"{name(Literal.from_code(u))} -> {name(Literal.from_code(v))}\n"
        for u, v in zip(src.tolist(), dst.tolist())
    )
