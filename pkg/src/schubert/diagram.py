"""
Labeled diagrams for reduced expressions: alignment, the diagram of a word,
classification, de-standardization with its fibers, and diagram-level moves.

Alignment places each group of cells in its own column, numbered 1..k from the
left in group order. Absolute columns carry no combinatorial content (reading
words, weights, row contents and every predicate here depend only on the group
order), so this canonical choice stands in for the gapped columns the source
figures draw.
"""
from __future__ import annotations

import dataclasses
import functools
from typing import Iterable

from .core import (
    VIRTUAL,
    Cell,
    Permutation,
    WeakComposition,
    check_cell_guard,
    inversions,
)
from .polynomial import slide_monomials
from .redword import (
    ReducedWord,
    _descent_composition,
    is_reduced,
    is_super_yamanouchi,
    reduced_word_tuples,
    run_decomposition,
    word_move,
)


@dataclasses.dataclass(frozen=True)
class LabeledDiagram:
    """A finite set of cells with positive integer labels, one per position."""

    cells: frozenset[tuple[Cell, int]]

    def __post_init__(self):
        normalized = frozenset((Cell(r, c), int(v)) for (r, c), v in self.cells)
        object.__setattr__(self, "cells", normalized)
        positions = [cell for cell, _ in normalized]
        if len(set(positions)) != len(positions):
            raise ValueError("duplicate cell positions in labeled diagram")
        if any(v < 1 for _, v in normalized):
            raise ValueError("labels must be positive")

    @classmethod
    def from_rows(cls, rows: dict[int, Iterable[int]]) -> LabeledDiagram:
        """Build from row -> labels, placing labels at columns 1, 2, ...."""
        return cls(
            frozenset(
                (Cell(r, c), v)
                for r, labels in rows.items()
                for c, v in enumerate(labels, start=1)
            )
        )

    def __len__(self) -> int:
        return len(self.cells)

    def reading_cells(self) -> list[tuple[Cell, int]]:
        """Cells left to right within a row, top row first."""
        return sorted(self.cells, key=lambda cv: (-cv[0].row, cv[0].col))

    def rows(self) -> dict[int, list[tuple[int, int]]]:
        """Nonempty rows as row -> [(col, label)] with columns ascending."""
        out: dict[int, list[tuple[int, int]]] = {}
        for cell, v in self.reading_cells():
            out.setdefault(cell.row, []).append((cell.col, v))
        return out

    def row_labels(self) -> dict[int, tuple[int, ...]]:
        return {r: tuple(v for _, v in cols) for r, cols in self.rows().items()}

    def reading_word(self) -> tuple[int, ...]:
        return tuple(v for _, v in self.reading_cells())

    def weight(self) -> WeakComposition:
        if any(cell.row < 1 for cell, _ in self.cells):
            return VIRTUAL
        counts: dict[int, int] = {}
        for cell, _ in self.cells:
            counts[cell.row] = counts.get(cell.row, 0) + 1
        top = max(counts, default=0)
        return WeakComposition(tuple(counts.get(r, 0) for r in range(1, top + 1)))

    def label_at(self, row: int, col: int) -> int | None:
        for cell, v in self.cells:
            if cell == (row, col):
                return v
        return None


def reading_word_and_weight(d: LabeledDiagram) -> tuple[tuple[int, ...], WeakComposition]:
    """The row reading word (left to right, top to bottom) and the weight."""
    return d.reading_word(), d.weight()


def _check_increasing_rows(d: LabeledDiagram) -> dict[int, list[tuple[int, int]]]:
    rows = d.rows()
    for r, cols in rows.items():
        labels = [v for _, v in cols]
        if any(a >= b for a, b in zip(labels, labels[1:])):
            raise ValueError(f"row {r} is not strictly increasing: {labels}")
    return rows


def _group_cells(d: LabeledDiagram) -> list[list[tuple[Cell, int]]]:
    # Start each group at the highest-row (then smallest-label) ungrouped cell
    # and walk downward, taking label-1 to extend, stopping on an equal label.
    # Grouped cells are invisible to later scans.
    ungrouped = set(d.cells)
    row_index: dict[int, dict[int, tuple[Cell, int]]] = {}
    for cell, v in d.cells:
        row_index.setdefault(cell.row, {})[v] = (cell, v)
    all_rows = sorted(row_index, reverse=True)
    groups: list[list[tuple[Cell, int]]] = []
    while ungrouped:
        start = min(ungrouped, key=lambda cv: (-cv[0].row, cv[1]))
        group = [start]
        ungrouped.discard(start)
        value = start[1]
        row = start[0].row
        for r in all_rows:
            if r >= row:
                continue
            here = row_index[r]
            lower = here.get(value - 1)
            if lower is not None and lower in ungrouped:
                group.append(lower)
                ungrouped.discard(lower)
                value -= 1
                continue
            same = here.get(value)
            if same is not None and same in ungrouped:
                break
        groups.append(group)
    return groups


def _order_groups(groups: list[list[tuple[Cell, int]]]) -> list[list[tuple[Cell, int]]]:
    # Within-row order is the hard constraint (it alone carries the reading
    # word); the shared-value and larger-entries comparisons of the grouping
    # rule break the remaining ties. On virtual diagrams those soft rules can
    # contradict the row order, so they cannot drive a bare sort — and deep
    # into negative rows the groups themselves can cross, forcing a split.
    def try_order(groups: list[list[tuple[Cell, int]]]):
        of_cell = {cell: i for i, g in enumerate(groups) for cell, _ in g}
        successors: dict[int, set[int]] = {i: set() for i in range(len(groups))}
        indegree = [0] * len(groups)
        rows: dict[int, list[tuple[int, int]]] = {}
        for g in groups:
            for cell, _ in g:
                rows.setdefault(cell.row, []).append((cell.col, of_cell[cell]))
        for cells in rows.values():
            cells.sort()
            for (_, a), (_, b) in zip(cells, cells[1:]):
                if b not in successors[a]:
                    successors[a].add(b)
                    indegree[b] += 1

        def soft_leftof(a, b) -> int:
            vals_a = {v: cell.row for cell, v in a}
            vals_b = {v: cell.row for cell, v in b}
            common = set(vals_a) & set(vals_b)
            if common:
                v = min(common)
                # A shared value's lower instance belongs to the right group.
                return 1 if vals_a[v] < vals_b[v] else -1
            return -1 if max(vals_a) < max(vals_b) else 1

        def canonical_key(i: int):
            return sorted((-v, cell.row, cell.col) for cell, v in groups[i])

        ordered: list[list[tuple[Cell, int]]] = []
        available = [i for i in range(len(groups)) if indegree[i] == 0]
        while available:
            leftmost = [
                i
                for i in available
                if all(soft_leftof(groups[i], groups[j]) < 0 for j in available if j != i)
            ]
            pick = leftmost[0] if len(leftmost) == 1 else min(available, key=canonical_key)
            available.remove(pick)
            ordered.append(groups[pick])
            for j in successors[pick]:
                indegree[j] -= 1
                if indegree[j] == 0:
                    available.append(j)
        if len(ordered) != len(groups):
            stuck = [i for i in range(len(groups)) if indegree[i] > 0]
            return None, stuck
        return ordered, []

    ordered, stuck = try_order(groups)
    while ordered is None:
        split: list[list[tuple[Cell, int]]] = []
        for i, g in enumerate(groups):
            if i in stuck:
                split.extend([cv] for cv in sorted(g))
            else:
                split.append(g)
        groups = split
        ordered, stuck = try_order(groups)
    return ordered


def align(d: LabeledDiagram) -> LabeledDiagram:
    """Regroup and place each group in its own column (group order from the
    left); idempotent, and preserves rows, within-row order and labels.

    >>> d = LabeledDiagram.from_rows({2: (2, 3), 1: (1, 3)})
    >>> align(align(d)) == align(d)
    True
    """
    _check_increasing_rows(d)
    ordered = _order_groups(_group_cells(d))
    cells = frozenset(
        (Cell(cell.row, k), v)
        for k, group in enumerate(ordered, start=1)
        for cell, v in group
    )
    return LabeledDiagram(cells)


def diagram_of_word(word: ReducedWord) -> LabeledDiagram:
    """The aligned diagram whose row r_i holds the i-th run of the word.

    Its reading word is the word itself and its weight is the weak descent
    composition (virtual words produce rows <= 0).
    """
    decomp = run_decomposition(word)
    rows: dict[int, Iterable[int]] = {
        r: run for run, r in zip(decomp.runs, decomp.anchors)
    }
    return align(LabeledDiagram.from_rows(rows))


def left_justify(d: LabeledDiagram) -> LabeledDiagram:
    """Push every row's cells to columns 1..len, preserving their order."""
    return LabeledDiagram.from_rows(d.row_labels())


@dataclasses.dataclass(frozen=True)
class DiagramFlags:
    reduced: bool
    quasi_yamanouchi: bool
    super_yamanouchi: bool
    yamanouchi: bool
    virtual: bool


def _is_quasi_yamanouchi(rows: dict[int, list[tuple[int, int]]]) -> bool:
    for r, cols in rows.items():
        col0, label0 = cols[0]
        if label0 == r:
            continue
        above = rows.get(r + 1)
        if above is None or all(c < col0 for c, _ in above):
            return False
    return True


def _is_super_yamanouchi_rows(rows: dict[int, list[tuple[int, int]]]) -> bool:
    for r, cols in rows.items():
        labels = [v for _, v in cols]
        if labels[0] != r:
            return False
        if any(b - a != 1 for a, b in zip(labels, labels[1:])):
            return False
    return True


def _dominated_by(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    n = max(len(a), len(b))
    ta = tb = 0
    for i in range(n):
        ta += a[i] if i < len(a) else 0
        tb += b[i] if i < len(b) else 0
        if ta > tb:
            return False
    return True


@functools.lru_cache(maxsize=64)
def yamanouchi_letter_set(w_values: tuple[int, ...]) -> frozenset[tuple[int, ...]]:
    """The reduced words indexing the key expansion: in every fiber of the
    Edelman-Greene insertion tableau, the unique non-virtual word whose weak
    descent composition is dominance-below the fiber's other non-virtual ones.

    (Selecting instead the word fixed by weak insertion picks a
    dominance-larger composition in rare fibers, which breaks the key
    expansion; the first such fiber appears for 25143.)
    """
    from .insertion import eg_insert

    check_cell_guard(
        inversions(Permutation(w_values)), f"selecting Yamanouchi words of {w_values}"
    )
    groups: dict[tuple, list[tuple[tuple[int, ...], tuple[int, ...]]]] = {}
    for ls in reduced_word_tuples(w_values):
        des = _descent_composition(ls)
        if des.is_virtual:
            continue
        p, _ = eg_insert(ls)
        groups.setdefault(p.rows, []).append((des.parts, ls))
    chosen = []
    for members in groups.values():
        minima = [
            (des, ls)
            for des, ls in members
            if all(_dominated_by(des, other) for other, _ in members)
        ]
        if len(minima) != 1:
            raise RuntimeError(
                f"no unique dominance-minimal descent composition in fiber: {members}"
            )
        chosen.append(minima[0][1])
    return frozenset(chosen)


def _is_yamanouchi(d: LabeledDiagram) -> bool:
    word = d.reading_word()
    if not is_reduced(word):
        return False
    from .redword import word_permutation

    w = word_permutation(word).trimmed()
    return word in yamanouchi_letter_set(w.values)


def classify(d: LabeledDiagram) -> DiagramFlags:
    """Consistent reduced / quasi-Yamanouchi / super-Yamanouchi / Yamanouchi /
    virtual flags for a labeled diagram."""
    rows = d.rows()
    virtual = any(r < 1 for r in rows)
    increasing = all(
        all(a < b for (_, a), (_, b) in zip(cols, cols[1:])) for cols in rows.values()
    )
    reduced = (
        increasing
        and all(v >= r for r, cols in rows.items() for _, v in cols)
        and is_reduced(d.reading_word())
        and align(d) == d
    )
    qy = reduced and _is_quasi_yamanouchi(rows)
    super_y = reduced and _is_super_yamanouchi_rows(rows)
    yam = qy and not virtual and _is_yamanouchi(d)
    return DiagramFlags(
        reduced=reduced,
        quasi_yamanouchi=qy,
        super_yamanouchi=super_y,
        yamanouchi=yam,
        virtual=virtual,
    )


def destandardize(d: LabeledDiagram) -> LabeledDiagram:
    """Repeatedly move rows up while every cell exceeds its row index and sits
    strictly right of the row above; quasi-Yamanouchi diagrams are the fixed
    points."""
    cells = {cell: v for cell, v in d.cells}
    while True:
        rows: dict[int, list[Cell]] = {}
        for cell in cells:
            rows.setdefault(cell.row, []).append(cell)
        movable = None
        for r, row_cells in sorted(rows.items()):
            if any(cells[c] <= r for c in row_cells):
                continue
            above = rows.get(r + 1, [])
            if above and min(c.col for c in row_cells) <= max(c.col for c in above):
                continue
            movable = (r, row_cells)
            break
        if movable is None:
            return LabeledDiagram(frozenset((c, v) for c, v in cells.items()))
        r, row_cells = movable
        for c in row_cells:
            cells[Cell(r + 1, c.col)] = cells.pop(c)


def _refinement_blocks(fine: tuple[int, ...], coarse: tuple[int, ...]) -> list[list[int]]:
    # Indices of fine's parts grouped so consecutive blocks sum to coarse;
    # unique when it exists because parts are positive.
    blocks: list[list[int]] = []
    i = 0
    for target in coarse:
        block: list[int] = []
        acc = 0
        while acc < target:
            if i >= len(fine):
                raise ValueError(f"{fine} does not refine {coarse}")
            acc += fine[i]
            block.append(i)
            i += 1
        if acc != target:
            raise ValueError(f"{fine} does not refine {coarse}")
        blocks.append(block)
    if i != len(fine):
        raise ValueError(f"{fine} does not refine {coarse}")
    return blocks


def destandardization_fiber(c: LabeledDiagram, b: WeakComposition) -> LabeledDiagram:
    """The unique reduced diagram with weight b that de-standardizes to the
    quasi-Yamanouchi diagram c.

    Raises ValueError when b does not dominate-and-refine the weight of c.
    """
    from .core import dominates_refines

    wt = c.weight()
    if wt.is_virtual or b.is_virtual:
        raise ValueError("fibers exist only over non-virtual diagrams")
    if not dominates_refines(b, wt):
        raise ValueError(f"{b.parts} does not dominate-and-refine {wt.parts}")
    rows = c.rows()
    source_rows = sorted(rows)
    bp = b.parts
    target_rows = [r for r in range(1, len(bp) + 1) if bp[r - 1] > 0]
    fine = tuple(bp[r - 1] for r in target_rows)
    blocks = _refinement_blocks(fine, tuple(len(rows[r]) for r in source_rows))
    cells: set[tuple[Cell, int]] = set()
    for src, block in zip(source_rows, blocks):
        east_to_west = list(reversed(rows[src]))
        taken = 0
        for idx in block:
            dest = target_rows[idx]
            for col, label in east_to_west[taken : taken + fine[idx]]:
                cells.add((Cell(dest, col), label))
            taken += fine[idx]
    result = LabeledDiagram(frozenset(cells))
    if destandardize(result) != c:
        raise AssertionError("fiber construction failed to de-standardize back")
    return result


def enumerate_diagrams(w: Permutation, kind: str) -> tuple[LabeledDiagram, ...]:
    """Complete diagram sets for a permutation.

    - ``qrd``: quasi-Yamanouchi reduced diagrams, one per reduced word
      (virtual ones included);
    - ``rd``: the non-virtual reduced diagrams, generated as
      de-standardization fibers over the non-virtual quasi-Yamanouchi ones;
    - ``yrd``: the Yamanouchi reduced diagrams (never virtual).
    """
    check_cell_guard(inversions(w), f"enumerating diagrams of {w.values}")
    words = reduced_word_tuples(w.trimmed().values)
    if kind == "qrd":
        out = [diagram_of_word(ReducedWord(ls)) for ls in words]
    elif kind == "rd":
        out = []
        for ls in words:
            if _descent_composition(ls).is_virtual:
                continue
            c = diagram_of_word(ReducedWord(ls))
            for exp in slide_monomials(c.weight()):
                out.append(destandardization_fiber(c, WeakComposition(exp)))
    elif kind == "yrd":
        out = [
            diagram_of_word(ReducedWord(ls))
            for ls in yamanouchi_letter_set(w.trimmed().values)
        ]
    else:
        raise ValueError(f"unknown diagram kind {kind!r}")
    return tuple(sorted(out, key=lambda d: sorted(d.cells)))


def qrd_move(d: LabeledDiagram, kind: str, i: int) -> LabeledDiagram:
    """Swap or braid on a quasi-Yamanouchi reduced diagram, indexed like the
    word move on its reading word (i counts cells in reverse reading order)."""
    word = ReducedWord(d.reading_word())
    return diagram_of_word(word_move(word, kind, i))


def labeled_to_json(d: LabeledDiagram) -> list[dict[str, int]]:
    return [
        {"row": cell.row, "col": cell.col, "label": v}
        for cell, v in d.reading_cells()
    ]


def render_cells(cells: dict[Cell, str]) -> str:
    """ASCII picture, French style: highest row on top, a rule under row 1."""
    if not cells:
        return "| (empty)"
    top = max(c.row for c in cells)
    bottom = min(c.row for c in cells)
    width = max(c.col for c in cells)
    cellw = max(2, max(len(s) for s in cells.values()) + 1)
    lines = []
    for r in range(max(top, 1), min(bottom, 1) - 1, -1):
        row = "".join(
            f"{cells.get(Cell(r, c), '.'):>{cellw}}" for c in range(1, width + 1)
        )
        lines.append("|" + row)
        if r == 1 and bottom < 1:
            lines.append("+" + "-" * (cellw * width))
    return "\n".join(lines)


def render_labeled(d: LabeledDiagram) -> str:
    return render_cells({cell: str(v) for cell, v in d.cells})


def render_diagram(d) -> str:
    return render_cells({cell: "x" for cell in d.cells})
