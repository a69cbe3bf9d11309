"""
Permutations, compositions, cells and shape diagrams.

Conventions used throughout the package:

- Permutations are in one-line notation over {1..n}, e.g. ``Permutation((4, 2, 1, 5, 3))``.
- Cells are (row, col) with row 1 at the BOTTOM (French convention); rows of
  virtual objects may be <= 0, columns are always >= 1.
- Weak compositions compare equal up to trailing zeros, and a distinguished
  virtual value (the empty marker) compares equal only to itself.

All values are immutable after construction and every operation is pure.
"""
from __future__ import annotations

import dataclasses
import itertools
import os
from typing import Iterable, NamedTuple, Sequence, Union

MAX_CELLS_ENV = "SCHUBERT_MAX_CELLS"
MAX_CLOSURE_ENV = "SCHUBERT_MAX_CLOSURE"

_DEFAULT_MAX_CELLS = 24
_DEFAULT_MAX_CLOSURE = 10**6


class SizeGuardError(RuntimeError):
    """An enumeration would exceed the configured resource guard."""


def cell_guard() -> int:
    return int(os.environ.get(MAX_CELLS_ENV, _DEFAULT_MAX_CELLS))


def closure_guard() -> int:
    return int(os.environ.get(MAX_CLOSURE_ENV, _DEFAULT_MAX_CLOSURE))


def check_cell_guard(n_cells: int, what: str) -> None:
    if n_cells > cell_guard():
        raise SizeGuardError(
            f"{what} needs {n_cells} cells, above the guard of {cell_guard()} "
            f"(raise {MAX_CELLS_ENV} to override)"
        )


@dataclasses.dataclass(frozen=True)
class Permutation:
    """A permutation of {1..n} in one-line notation.

    >>> Permutation((4, 2, 1, 5, 3))(1)
    4
    >>> Permutation.identity(3)
    Permutation((1, 2, 3))
    """

    values: tuple[int, ...]

    def __post_init__(self):
        vals = tuple(self.values)
        object.__setattr__(self, "values", vals)
        if sorted(vals) != list(range(1, len(vals) + 1)):
            raise ValueError(f"not a permutation of 1..n: {vals}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def longest(cls, n: int) -> Permutation:
        """The longest element w0 of S_n, i.e. n, n-1, ..., 1."""
        return cls(tuple(range(n, 0, -1)))

    @property
    def n(self) -> int:
        return len(self.values)

    def __call__(self, i: int) -> int:
        return self.values[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        """Compose (self * other)(i) = self(other(i)), padding fixed points."""
        n = max(self.n, other.n)
        u, v = self.extended(n), other.extended(n)
        return Permutation(tuple(u(v(i)) for i in range(1, n + 1)))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, x in enumerate(self.values, start=1):
            inv[x - 1] = i
        return Permutation(tuple(inv))

    def extended(self, n: int) -> Permutation:
        """The same permutation viewed in S_n by appending fixed points."""
        if n < self.n:
            raise ValueError(f"cannot shrink a permutation of {self.n} to {n}")
        return Permutation(self.values + tuple(range(self.n + 1, n + 1)))

    def trimmed(self) -> Permutation:
        """Drop trailing fixed points (the normal form used for caching).

        >>> Permutation((2, 1, 3, 4)).trimmed()
        Permutation((2, 1))
        """
        vals = list(self.values)
        while vals and vals[-1] == len(vals):
            vals.pop()
        return Permutation(tuple(vals))

    def __repr__(self) -> str:
        return f"Permutation({self.values!r})"


class _VirtualMarker:
    """Unique marker for the virtual (empty) weak composition."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "VIRTUAL"


class WeakComposition:
    """A weak composition (nonnegative parts), equal up to trailing zeros.

    The distinguished virtual composition ``WeakComposition.virtual()``
    represents the empty marker and compares equal only to itself; it is what
    weak descent compositions collapse to when an anchor falls to row <= 0.

    >>> WeakComposition((3, 1, 0, 1)) == WeakComposition((3, 1, 0, 1, 0, 0))
    True
    >>> WeakComposition.virtual() == WeakComposition(())
    False
    """

    __slots__ = ("_parts",)

    def __init__(self, parts: Union[Iterable[int], _VirtualMarker]):
        if isinstance(parts, _VirtualMarker):
            self._parts = parts
            return
        p = tuple(int(x) for x in parts)
        if any(x < 0 for x in p):
            raise ValueError(f"weak composition parts must be >= 0: {p}")
        while p and p[-1] == 0:
            p = p[:-1]
        self._parts = p

    @classmethod
    def virtual(cls) -> WeakComposition:
        return cls(_VirtualMarker())

    @property
    def is_virtual(self) -> bool:
        return isinstance(self._parts, _VirtualMarker)

    @property
    def parts(self) -> tuple[int, ...]:
        if self.is_virtual:
            raise ValueError("the virtual composition has no parts")
        return self._parts

    def padded(self, n: int) -> tuple[int, ...]:
        """Parts padded with zeros to length n (n may not truncate nonzeros)."""
        p = self.parts
        if n < len(p):
            raise ValueError(f"cannot pad {p} to shorter length {n}")
        return p + (0,) * (n - len(p))

    def size(self) -> int:
        return sum(self.parts)

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeakComposition):
            return NotImplemented
        if self.is_virtual or other.is_virtual:
            return self.is_virtual and other.is_virtual
        return self._parts == other._parts

    def __hash__(self) -> int:
        return hash(("virtual",)) if self.is_virtual else hash(self._parts)

    def __repr__(self) -> str:
        return "WeakComposition(VIRTUAL)" if self.is_virtual else f"WeakComposition({self._parts!r})"


VIRTUAL = WeakComposition.virtual()


@dataclasses.dataclass(frozen=True)
class StrongComposition:
    """A composition with strictly positive parts."""

    parts: tuple[int, ...]

    def __post_init__(self):
        p = tuple(int(x) for x in self.parts)
        object.__setattr__(self, "parts", p)
        if any(x < 1 for x in p):
            raise ValueError(f"strong composition parts must be >= 1: {p}")

    def size(self) -> int:
        return sum(self.parts)


class Cell(NamedTuple):
    """A cell at (row, col); row may be <= 0 for virtual objects, col >= 1."""

    row: int
    col: int


def _check_cell(cell: Cell) -> Cell:
    if cell.col < 1:
        raise ValueError(f"cell column must be >= 1: {cell}")
    return cell


@dataclasses.dataclass(frozen=True)
class Diagram:
    """A finite set of cells. Weight is defined only when all rows are >= 1."""

    cells: frozenset[Cell]

    def __post_init__(self):
        object.__setattr__(
            self, "cells", frozenset(_check_cell(Cell(r, c)) for r, c in self.cells)
        )

    @classmethod
    def empty(cls) -> Diagram:
        return cls(frozenset())

    def __len__(self) -> int:
        return len(self.cells)

    def __contains__(self, cell) -> bool:
        return Cell(*cell) in self.cells

    def sorted_cells(self) -> list[Cell]:
        """Cells in reading order: row descending, then column ascending."""
        return sorted(self.cells, key=lambda c: (-c.row, c.col))

    def rows(self) -> dict[int, list[int]]:
        """Column lists per nonempty row, columns ascending."""
        out: dict[int, list[int]] = {}
        for cell in self.sorted_cells():
            out.setdefault(cell.row, []).append(cell.col)
        return out

    def weight(self) -> WeakComposition:
        """Cells per row, or the virtual composition if any row is <= 0."""
        if any(c.row < 1 for c in self.cells):
            return VIRTUAL
        counts: dict[int, int] = {}
        for c in self.cells:
            counts[c.row] = counts.get(c.row, 0) + 1
        if not counts:
            return WeakComposition(())
        top = max(counts)
        return WeakComposition(tuple(counts.get(r, 0) for r in range(1, top + 1)))


def inversions(w: Permutation) -> int:
    """Number of pairs i < j with w(i) > w(j).

    >>> inversions(Permutation((4, 2, 1, 5, 3)))
    5
    """
    v = w.values
    return sum(1 for i in range(len(v)) for j in range(i + 1, len(v)) if v[i] > v[j])


def rothe_diagram(w: Permutation) -> Diagram:
    """The Rothe diagram {(i, w(j)) : i < j and w(i) > w(j)}.

    Its cell count equals ``inversions(w)`` and row i holds the i-th Lehmer
    code entry many cells.

    >>> sorted(rothe_diagram(Permutation((1, 5, 3, 2, 6, 4))).cells)
    [Cell(row=2, col=2), Cell(row=2, col=3), Cell(row=2, col=4), Cell(row=3, col=2), Cell(row=5, col=4)]
    """
    v = w.values
    cells = {
        Cell(i + 1, v[j])
        for i in range(len(v))
        for j in range(i + 1, len(v))
        if v[i] > v[j]
    }
    return Diagram(frozenset(cells))


def key_diagram(a: WeakComposition) -> Diagram:
    """The left-justified diagram with a_i cells in row i."""
    cells = {
        Cell(i, c)
        for i, part in enumerate(a.parts, start=1)
        for c in range(1, part + 1)
    }
    return Diagram(frozenset(cells))


def shift(x: Union[Permutation, WeakComposition], m: int) -> Union[Permutation, WeakComposition]:
    """Shift by m: 1^m x w for permutations, 0^m x a for weak compositions.

    >>> shift(Permutation((4, 2, 1, 5, 3)), 1)
    Permutation((1, 5, 3, 2, 6, 4))
    """
    if m < 0:
        raise ValueError("shift amount must be >= 0")
    if isinstance(x, Permutation):
        return Permutation(tuple(range(1, m + 1)) + tuple(v + m for v in x.values))
    if isinstance(x, WeakComposition):
        return WeakComposition((0,) * m + x.parts)
    raise TypeError(f"cannot shift {type(x).__name__}")


def flatten(a: WeakComposition) -> StrongComposition:
    """Remove zero parts, keeping the order of the rest.

    >>> flatten(WeakComposition((3, 1, 0, 1))).parts
    (3, 1, 1)
    """
    return StrongComposition(tuple(p for p in a.parts if p > 0))


def refines(fine: Sequence[int], coarse: Sequence[int]) -> bool:
    """True iff summing consecutive blocks of ``fine`` gives ``coarse``.

    Both arguments are strong compositions given as plain part sequences.
    The block decomposition is unique when it exists because parts are
    positive, so a greedy scan decides it.
    """
    i = 0
    for target in coarse:
        acc = 0
        while acc < target:
            if i >= len(fine):
                return False
            acc += fine[i]
            i += 1
        if acc != target:
            return False
    return i == len(fine)


def dominates_refines(b: WeakComposition, a: WeakComposition) -> bool:
    """True iff prefix sums of b dominate those of a and flat(b) refines flat(a).

    This is the summation condition indexing the monomials of a fundamental
    slide polynomial.

    >>> dominates_refines(WeakComposition((3, 1, 1, 0)), WeakComposition((3, 1, 0, 1)))
    True
    >>> dominates_refines(WeakComposition((1, 2, 1, 1)), WeakComposition((3, 1, 0, 1)))
    False
    """
    if a.is_virtual or b.is_virtual:
        raise ValueError("dominance is not defined for the virtual composition")
    n = max(len(a.parts), len(b.parts))
    bp, ap = b.padded(n), a.padded(n)
    total_b = total_a = 0
    for x, y in zip(bp, ap):
        total_b += x
        total_a += y
        if total_b < total_a:
            return False
    if total_b != total_a:
        return False
    return refines(flatten(b).parts, flatten(a).parts)


def sort_decreasing(a: WeakComposition) -> tuple[int, ...]:
    """The partition obtained by sorting the nonzero parts decreasingly."""
    return tuple(sorted((p for p in a.parts if p > 0), reverse=True))


def all_permutations(n: int) -> list[Permutation]:
    """All of S_n, in lexicographic one-line order."""
    return [Permutation(p) for p in itertools.permutations(range(1, n + 1))]


def perm_to_json(w: Permutation) -> list[int]:
    return list(w.values)


def comp_to_json(a: WeakComposition) -> Union[list[int], str]:
    return "virtual" if a.is_virtual else list(a.parts)


def diagram_to_json(d: Diagram) -> list[dict[str, int]]:
    return [{"row": c.row, "col": c.col} for c in d.sorted_cells()]
