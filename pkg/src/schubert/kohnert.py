"""
Kohnert moves and closures on diagrams, and the generating polynomials they
produce for key diagrams and Rothe diagrams.

A move pushes the rightmost cell of a chosen row down, within its column, to
the first open position below it; cells never leave row 1, so closures of
positive-row diagrams are finite and entirely non-virtual.
"""
from __future__ import annotations

from typing import Optional

from .core import Cell, Diagram, SizeGuardError, WeakComposition, closure_guard
from .polynomial import Polynomial

_CellSet = frozenset


def kohnert_move(d: Diagram, r: int) -> Optional[Diagram]:
    """Push the rightmost cell of row r down to the first open position below
    it in its column; None when the move is unavailable.

    >>> kohnert_move(Diagram(frozenset({Cell(1, 1)})), 1) is None
    True
    """
    row_cells = [c for c in d.cells if c.row == r]
    if not row_cells:
        raise ValueError(f"row {r} is empty")
    cell = max(row_cells, key=lambda c: c.col)
    for rr in range(cell.row - 1, 0, -1):
        if Cell(rr, cell.col) not in d.cells:
            return Diagram(d.cells - {cell} | {Cell(rr, cell.col)})
    return None


def _moves(cells: frozenset[tuple[int, int]]):
    rightmost: dict[int, tuple[int, int]] = {}
    for c in cells:
        if c[0] not in rightmost or c[1] > rightmost[c[0]][1]:
            rightmost[c[0]] = c
    occupied = cells
    for c in rightmost.values():
        for rr in range(c[0] - 1, 0, -1):
            if (rr, c[1]) not in occupied:
                yield cells - {c} | {(rr, c[1])}
                break


def kohnert_closure(d: Diagram) -> frozenset[Diagram]:
    """All diagrams reachable by Kohnert moves, the input included.

    >>> len(kohnert_closure(Diagram.empty()))
    1
    """
    if any(c.row < 1 for c in d.cells):
        raise ValueError("Kohnert closures are defined for rows >= 1 only")
    start = frozenset((c.row, c.col) for c in d.cells)
    seen = {start}
    frontier = [start]
    limit = closure_guard()
    while frontier:
        state = frontier.pop()
        for nxt in _moves(state):
            if nxt not in seen:
                if len(seen) >= limit:
                    raise SizeGuardError(
                        f"Kohnert closure exceeded {limit} diagrams"
                    )
                seen.add(nxt)
                frontier.append(nxt)
    return frozenset(
        Diagram(frozenset(Cell(r, c) for r, c in state)) for state in seen
    )


def kohnert_polynomial(d: Diagram) -> Polynomial:
    """Sum of x^weight over the Kohnert closure (all of it is non-virtual).

    >>> from .core import key_diagram
    >>> kohnert_polynomial(key_diagram(WeakComposition((2, 0)))).text()
    'x1^2'
    """
    terms: dict[tuple[int, ...], int] = {}
    for diagram in kohnert_closure(d):
        key = diagram.weight().parts
        terms[key] = terms.get(key, 0) + 1
    return Polynomial(terms)
