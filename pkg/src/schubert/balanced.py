"""
Standard and semi-standard balanced tableaux on Rothe diagrams, their
swap/braid moves and statistics, and the ascent bijections from reduced
diagrams.

A balanced tableau is stored as labels on the Rothe cells of its shape
permutation; the shape is recovered from the cell positions via the Lehmer
code whenever a raw filling is given.
"""
from __future__ import annotations

import dataclasses
import functools
import itertools

from .core import (
    Cell,
    Permutation,
    WeakComposition,
    check_cell_guard,
    inversions,
    rothe_diagram,
)
from .diagram import LabeledDiagram, destandardize
from .redword import _pair_words, _super_yamanouchi_letters, reduced_word_tuples


class ShapeMismatchError(ValueError):
    """The cell positions do not form the Rothe diagram of any permutation."""


def _shape_from_cells(positions: frozenset[Cell]) -> Permutation:
    if not positions:
        return Permutation(())
    counts: dict[int, int] = {}
    for cell in positions:
        counts[cell.row] = counts.get(cell.row, 0) + 1
    if any(cell.row < 1 for cell in positions):
        raise ShapeMismatchError("balanced tableaux live on rows >= 1")
    n = max(r + counts[r] for r in counts)
    code = [counts.get(r, 0) for r in range(1, n + 1)]
    remaining = list(range(1, n + 1))
    values = []
    for c in code:
        if c >= len(remaining):
            raise ShapeMismatchError(f"invalid Lehmer code {code}")
        values.append(remaining.pop(c))
    w = Permutation(tuple(values)).trimmed()
    if rothe_diagram(w).cells != positions:
        raise ShapeMismatchError(f"cells are not a Rothe diagram: {sorted(positions)}")
    return w


@dataclasses.dataclass(frozen=True)
class BalancedTableau:
    """A positive labeling of the Rothe diagram of ``shape``."""

    cells: frozenset[tuple[Cell, int]]
    shape: Permutation = None

    def __post_init__(self):
        normalized = frozenset((Cell(r, c), int(v)) for (r, c), v in self.cells)
        object.__setattr__(self, "cells", normalized)
        positions = frozenset(cell for cell, _ in normalized)
        if len(positions) != len(normalized):
            raise ValueError("duplicate cell positions")
        if any(v < 1 for _, v in normalized):
            raise ValueError("labels must be positive")
        shape = self.shape if self.shape is not None else _shape_from_cells(positions)
        object.__setattr__(self, "shape", shape)
        if rothe_diagram(shape).cells != positions:
            raise ShapeMismatchError(
                f"cells do not match the Rothe diagram of {shape.values}"
            )

    def label(self, cell: Cell) -> int:
        for c, v in self.cells:
            if c == cell:
                return v
        raise KeyError(cell)

    def position(self, value: int) -> Cell:
        for c, v in self.cells:
            if v == value:
                return c
        raise KeyError(value)

    def reading_cells(self) -> list[tuple[Cell, int]]:
        return sorted(self.cells, key=lambda cv: (-cv[0].row, cv[0].col))

    def reading_word(self) -> tuple[int, ...]:
        return tuple(v for _, v in self.reading_cells())

    def rows(self) -> dict[int, list[tuple[int, int]]]:
        out: dict[int, list[tuple[int, int]]] = {}
        for cell, v in self.reading_cells():
            out.setdefault(cell.row, []).append((cell.col, v))
        return out

    def row_labels(self) -> dict[int, tuple[int, ...]]:
        return {r: tuple(v for _, v in cols) for r, cols in self.rows().items()}

    def weight(self) -> WeakComposition:
        labels = [v for _, v in self.cells]
        top = max(labels, default=0)
        return WeakComposition(tuple(labels.count(i) for i in range(1, top + 1)))

    def to_labeled_diagram(self) -> LabeledDiagram:
        return LabeledDiagram(self.cells)


def _arm_leg(cells: dict[Cell, int], x: Cell):
    v = cells[x]
    arm = [u for c, u in cells.items() if c.row == x.row and c.col > x.col]
    leg = [u for c, u in cells.items() if c.col == x.col and c.row > x.row]
    bigger_right = sum(1 for u in arm if u > v)
    weakly_bigger_right = sum(1 for u in arm if u >= v)
    smaller_above = sum(1 for u in leg if u < v)
    weakly_smaller_above = sum(1 for u in leg if u <= v)
    return bigger_right, weakly_bigger_right, smaller_above, weakly_smaller_above


def is_standard_balanced(t: BalancedTableau) -> bool:
    """Bijective labels with, at every cell, as many larger entries to the
    right as smaller entries above."""
    cells = dict(t.cells)
    n = len(cells)
    if sorted(cells.values()) != list(range(1, n + 1)):
        return False
    for x in cells:
        bigger_right, _, smaller_above, _ = _arm_leg(cells, x)
        if bigger_right != smaller_above:
            return False
    return True


def is_semistandard_balanced(t: BalancedTableau) -> bool:
    """Entries bounded by their row index, distinct in columns, and the two
    weak balance inequalities at every cell."""
    cells = dict(t.cells)
    if any(v > x.row for x, v in cells.items()):
        return False
    columns: dict[int, list[int]] = {}
    for x, v in cells.items():
        columns.setdefault(x.col, []).append(v)
    if any(len(vs) != len(set(vs)) for vs in columns.values()):
        return False
    for x in cells:
        big_r, wbig_r, small_a, wsmall_a = _arm_leg(cells, x)
        if wbig_r < small_a or wsmall_a < big_r:
            return False
    return True


def sbt_move(t: BalancedTableau, kind: str, i: int) -> BalancedTableau:
    """Swap exchanges the entries i, i+1 when they share no row or column;
    braid exchanges i-1, i+1 when one sits above i in its column and the
    other right of i in its row. Inapplicable moves return the input."""
    n = len(t.cells)
    if kind == "swap":
        if not 1 <= i < n:
            raise ValueError(f"swap label must satisfy 1 <= i < {n}")
        a, b = t.position(i), t.position(i + 1)
        if a.row == b.row or a.col == b.col:
            return t
        exchanged = {i: b, i + 1: a}
    elif kind == "braid":
        if not 1 < i < n:
            raise ValueError(f"braid label must satisfy 1 < i < {n}")
        lo, mid, hi = t.position(i - 1), t.position(i), t.position(i + 1)
        above_right = (
            lo.col == mid.col
            and lo.row > mid.row
            and hi.row == mid.row
            and hi.col > mid.col
        )
        right_above = (
            hi.col == mid.col
            and hi.row > mid.row
            and lo.row == mid.row
            and lo.col > mid.col
        )
        if not (above_right or right_above):
            return t
        exchanged = {i - 1: hi, i + 1: lo}
    else:
        raise ValueError(f"unknown move kind {kind!r}")
    cells = {c: v for c, v in t.cells}
    for value, cell in exchanged.items():
        cells[cell] = value
    return BalancedTableau(frozenset(cells.items()), t.shape)


def sbt_inversions(t: BalancedTableau) -> int:
    """Pairs i < j with i in a strictly higher row and a different column."""
    pos = {v: c for c, v in t.cells}
    n = len(pos)
    return sum(
        1
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
        if pos[i].row > pos[j].row and pos[i].col != pos[j].col
    )


def sbt_permutation(t: BalancedTableau) -> Permutation:
    """Reverse reading word after sorting each row to decreasing order."""
    rows = t.rows()
    word: list[int] = []
    for r in sorted(rows, reverse=True):
        word.extend(sorted((v for _, v in rows[r]), reverse=True))
    return Permutation(tuple(reversed(word)))


def sbt_inversions_via_rowsort(t: BalancedTableau) -> int:
    """The alternative inversion count: inversions of the row-sorted
    permutation minus the co-inversions inside the rows."""
    v = sbt_permutation(t)
    coinv = 0
    for labels in t.row_labels().values():
        coinv += sum(
            1
            for p in range(len(labels))
            for q in range(p + 1, len(labels))
            if labels[p] < labels[q]
        )
    return inversions(v) - coinv


def super_yamanouchi_sbt(w: Permutation) -> BalancedTableau:
    """Labels 1..inv(w) in reverse reading order on the Rothe diagram."""
    cells = sorted(rothe_diagram(w).cells, key=lambda c: (-c.row, c.col))
    n = len(cells)
    return BalancedTableau(
        frozenset((cell, n - idx) for idx, cell in enumerate(cells)), w.trimmed()
    )


def _greedy_moves_to_super(letters: tuple[int, ...]) -> list[tuple[str, int]]:
    """A minimal sequence of swap/braid moves carrying the word to the
    super-Yamanouchi word, greedily taking the smallest-position move that
    lowers the inversion statistic.

    The pairing permutation is updated incrementally: a swap at position i
    relabels the values i, i+1; a lowering braid at i relabels i -> i-1,
    i+1 -> i, i-1 -> i+1 (the inverse of the raising relabeling).
    """
    from .redword import word_permutation

    k = len(letters)
    parent = word_permutation(letters)
    pi = _super_yamanouchi_letters(parent.trimmed().values)
    v = list(_pair_words(pi, letters).values)
    pos = [0] * (k + 2)
    for idx, val in enumerate(v, start=1):
        pos[val] = idx
    inv0 = inversions(Permutation(tuple(v))) - (sum(pi) - sum(letters))
    cur = list(letters)
    moves: list[tuple[str, int]] = []
    for _ in range(inv0):
        best = None
        for i in range(1, k):
            a, b = cur[k - i], cur[k - i - 1]  # positions i, i+1 from the right
            if abs(a - b) > 1 and pos[i] > pos[i + 1]:
                best = ("swap", i)
                break
            if i >= 2:
                outer_low, mid = cur[k - i + 1], cur[k - i]
                if outer_low == b and outer_low == mid - 1:
                    best = ("braid", i)
                    break
        if best is None:
            raise RuntimeError(f"no lowering move from {tuple(cur)}")
        kind, i = best
        if kind == "swap":
            cur[k - i], cur[k - i - 1] = cur[k - i - 1], cur[k - i]
            pi_i, pi_j = pos[i], pos[i + 1]
            v[pi_i - 1], v[pi_j - 1] = i + 1, i
            pos[i], pos[i + 1] = pi_j, pi_i
        else:
            cur[k - i + 1], cur[k - i], cur[k - i - 1] = (
                cur[k - i],
                cur[k - i + 1],
                cur[k - i],
            )
            p_lo, p_mid, p_hi = pos[i - 1], pos[i], pos[i + 1]
            v[p_lo - 1], v[p_mid - 1], v[p_hi - 1] = i + 1, i - 1, i
            pos[i + 1] = p_lo
            pos[i - 1] = p_mid
            pos[i] = p_hi
        moves.append(best)
    if tuple(cur) != pi:
        raise RuntimeError(
            f"greedy descent from {letters} missed the super-Yamanouchi word"
        )
    return moves


def _ascend_standard(letters: tuple[int, ...], w: Permutation) -> BalancedTableau:
    moves = _greedy_moves_to_super(letters)
    t = super_yamanouchi_sbt(w)
    for kind, i in reversed(moves):
        moved = sbt_move(t, kind, i)
        if moved == t:
            raise RuntimeError(f"{kind} at {i} was inapplicable during ascent")
        t = moved
    return t


def ascend(d: LabeledDiagram, level: str) -> BalancedTableau:
    """Ascend a reduced diagram to a balanced tableau.

    ``qrd_to_sbt`` labels the quasi-Yamanouchi diagram 1..n in reverse reading
    order and carries the labels along a minimal swap/braid path to the
    super-Yamanouchi diagram. ``rd_to_ssbt`` instead carries the row indices
    of the reduced diagram through de-standardization and the same path.
    """
    word = d.reading_word()
    from .redword import is_reduced, word_permutation

    if not is_reduced(word):
        raise ValueError("diagram's reading word is not reduced")
    w = word_permutation(word).trimmed()
    if level == "qrd_to_sbt":
        return _ascend_standard(word, w)
    if level == "rd_to_ssbt":
        c = destandardize(d)
        if c.reading_word() != word:
            raise ValueError("de-standardization changed the reading word")
        source_rows = [cell.row for cell, _ in reversed(d.reading_cells())]
        if any(r < 1 for r in source_rows):
            raise ValueError("virtual diagrams do not ascend to tableaux")
        standard = _ascend_standard(word, w)
        return BalancedTableau(
            frozenset((cell, source_rows[t - 1]) for cell, t in standard.cells),
            w,
        )
    raise ValueError(f"unknown ascent level {level!r}")


def _row_value_assignments(row_sizes: list[tuple[int, int]], values: frozenset[int]):
    if not row_sizes:
        yield {}
        return
    (row, size), rest = row_sizes[0], row_sizes[1:]
    for chosen in itertools.combinations(sorted(values), size):
        for sub in _row_value_assignments(rest, values - set(chosen)):
            yield {row: chosen, **sub}


def _balance_row_assignment(
    rows: dict[int, list[Cell]], assignment: dict[int, tuple[int, ...]]
) -> dict[Cell, int] | None:
    filled: dict[Cell, int] = {}
    for r in sorted(rows, reverse=True):
        avail = sorted(assignment[r], reverse=True)
        for cell in sorted(rows[r], key=lambda c: c.col):
            chosen = None
            for idx, val in enumerate(avail):
                smaller_above = sum(
                    1
                    for c, u in filled.items()
                    if c.col == cell.col and c.row > cell.row and u < val
                )
                if smaller_above == idx:
                    chosen = idx
                    break
            if chosen is None:
                return None
            filled[cell] = avail.pop(chosen)
    return filled


def _enumerate_sbt(w: Permutation) -> list[BalancedTableau]:
    rows: dict[int, list[Cell]] = {}
    for cell in rothe_diagram(w).cells:
        rows.setdefault(cell.row, []).append(cell)
    n = inversions(w)
    row_sizes = sorted(((r, len(cs)) for r, cs in rows.items()), reverse=True)
    out = []
    for assignment in _row_value_assignments(row_sizes, frozenset(range(1, n + 1))):
        filled = _balance_row_assignment(rows, assignment)
        if filled is not None:
            out.append(BalancedTableau(frozenset(filled.items()), w.trimmed()))
    return out


def _enumerate_ssbt(w: Permutation) -> list[BalancedTableau]:
    cells = sorted(rothe_diagram(w).cells, key=lambda c: (-c.row, -c.col))
    out: list[BalancedTableau] = []
    filled: dict[Cell, int] = {}

    def place(idx: int) -> None:
        if idx == len(cells):
            out.append(BalancedTableau(frozenset(filled.items()), w.trimmed()))
            return
        x = cells[idx]
        column = [u for c, u in filled.items() if c.col == x.col and c.row > x.row]
        arm = [u for c, u in filled.items() if c.row == x.row and c.col > x.col]
        for v in range(1, x.row + 1):
            if v in column:
                continue
            weakly_bigger_right = sum(1 for u in arm if u >= v)
            smaller_above = sum(1 for u in column if u < v)
            if weakly_bigger_right < smaller_above:
                continue
            weakly_smaller_above = sum(1 for u in column if u <= v)
            bigger_right = sum(1 for u in arm if u > v)
            if weakly_smaller_above < bigger_right:
                continue
            filled[x] = v
            place(idx + 1)
            del filled[x]

    place(0)
    return out


@functools.lru_cache(maxsize=64)
def _qbt_set(w_values: tuple[int, ...]) -> frozenset[BalancedTableau]:
    from .diagram import diagram_of_word
    from .redword import ReducedWord, _descent_composition

    out = []
    for ls in reduced_word_tuples(w_values):
        if _descent_composition(ls).is_virtual:
            continue
        out.append(ascend(diagram_of_word(ReducedWord(ls)), "rd_to_ssbt"))
    return frozenset(out)


def enumerate_balanced(w: Permutation, kind: str) -> tuple[BalancedTableau, ...]:
    """Complete sets of balanced tableaux: standard (``sbt``), semi-standard
    (``ssbt``), or quasi-Yamanouchi (``qbt``, the ascents of the non-virtual
    quasi-Yamanouchi reduced diagrams)."""
    check_cell_guard(inversions(w), f"enumerating balanced tableaux of {w.values}")
    if kind == "sbt":
        out = _enumerate_sbt(w)
    elif kind == "ssbt":
        out = _enumerate_ssbt(w)
    elif kind == "qbt":
        out = list(_qbt_set(w.trimmed().values))
    else:
        raise ValueError(f"unknown balanced tableau kind {kind!r}")
    return tuple(sorted(out, key=lambda t: sorted(t.cells)))


@dataclasses.dataclass(frozen=True)
class BalancedFlags:
    sbt: bool
    ssbt: bool
    quasi_yamanouchi_balanced: bool
    super_yamanouchi: bool


def classify_balanced(t: BalancedTableau) -> BalancedFlags:
    """Flags for a filling of a Rothe diagram; raises ShapeMismatchError when
    the cells are not a Rothe diagram."""
    standard = is_standard_balanced(t)
    reverse_reading_identity = standard and all(
        v == len(t.cells) - idx
        for idx, (_, v) in enumerate(t.reading_cells())
    )
    return BalancedFlags(
        sbt=standard,
        ssbt=is_semistandard_balanced(t),
        quasi_yamanouchi_balanced=t in _qbt_set(t.shape.values),
        super_yamanouchi=reverse_reading_identity,
    )
