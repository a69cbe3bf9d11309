"""
Edelman-Greene insertion, the lift/drop maps, weak insertion with key-shaped
recording tableaux, standard key tableaux, and weak dual equivalence.

Tableau rows are stored bottom-up: ``rows[0]`` is row 1. Young tableaux have
bottom-justified partition shape (longest row at the bottom); key tableaux may
have empty rows interleaved.
"""
from __future__ import annotations

import dataclasses
import functools
from typing import Iterable

from .core import VIRTUAL, WeakComposition, sort_decreasing
from .redword import ReducedWord


@dataclasses.dataclass(frozen=True)
class YoungTableau:
    """Rows of labels, bottom-justified to a partition shape."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        lengths = [len(r) for r in rows]
        if any(a < b for a, b in zip(lengths, lengths[1:])):
            raise ValueError(f"row lengths must weakly decrease upward: {lengths}")
        if lengths and lengths[-1] == 0:
            raise ValueError("trailing empty rows are not stored")

    def shape(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def reading_word(self) -> tuple[int, ...]:
        return tuple(x for row in reversed(self.rows) for x in row)

    def is_increasing(self) -> bool:
        for row in self.rows:
            if any(a >= b for a, b in zip(row, row[1:])):
                return False
        for lower, upper in zip(self.rows, self.rows[1:]):
            if any(lower[c] >= upper[c] for c in range(len(upper))):
                return False
        return True

    def is_standard(self) -> bool:
        labels = sorted(x for row in self.rows for x in row)
        return labels == list(range(1, self.size() + 1)) and self.is_increasing()


@dataclasses.dataclass(frozen=True)
class KeyTableau:
    """Rows of labels at key-diagram positions; rows may be empty."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        while rows and not rows[-1]:
            rows = rows[:-1]
        object.__setattr__(self, "rows", rows)

    def shape(self) -> WeakComposition:
        return WeakComposition(tuple(len(r) for r in self.rows))

    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def entry_positions(self) -> dict[int, tuple[int, int]]:
        """label -> (row, col), rows and columns 1-based."""
        return {
            v: (r, c)
            for r, row in enumerate(self.rows, start=1)
            for c, v in enumerate(row, start=1)
        }

    def columns(self) -> list[list[int]]:
        width = max((len(r) for r in self.rows), default=0)
        return [
            [row[c] for row in self.rows if len(row) > c] for c in range(width)
        ]

    def is_increasing(self) -> bool:
        for row in self.rows:
            if any(a >= b for a, b in zip(row, row[1:])):
                return False
        return all(
            all(a < b for a, b in zip(col, col[1:])) for col in self.columns()
        )


def _insert_once(rows: list[list[int]], x: int) -> tuple[int, int]:
    """Edelman-Greene insert x, mutating rows; returns the new cell (row, col)
    1-based. A bump whose replacement is suppressed still carries upward."""
    i = 0
    while True:
        if i == len(rows):
            rows.append([x])
            return i + 1, 1
        row = rows[i]
        if not row or x >= row[-1]:
            row.append(x)
            return i + 1, len(row)
        j = next(k for k, z in enumerate(row) if z > x)
        bumped = row[j]
        if bumped != x + 1 or x not in row:
            row[j] = x
        x = bumped
        i += 1


def eg_insert(word: ReducedWord | Iterable[int]) -> tuple[YoungTableau, YoungTableau]:
    """Edelman-Greene insertion and recording tableaux of a word, inserting
    the printed letters left to right.

    >>> p, q = eg_insert((1, 2, 1))
    >>> p.rows, q.rows
    (((1, 2), (2,)), ((1, 2), (3,)))
    """
    letters = word.letters if isinstance(word, ReducedWord) else tuple(word)
    p_rows: list[list[int]] = []
    q_rows: list[list[int]] = []
    for step, x in enumerate(letters, start=1):
        r, c = _insert_once(p_rows, x)
        while len(q_rows) < r:
            q_rows.append([])
        assert len(q_rows[r - 1]) == c - 1
        q_rows[r - 1].append(step)
    return YoungTableau(tuple(map(tuple, p_rows))), YoungTableau(tuple(map(tuple, q_rows)))


def lift(p: YoungTableau) -> KeyTableau:
    """Raise first-column entries to their own value's row, then each later
    column top to bottom into the highest free row whose left neighbor is
    strictly smaller."""
    placed: dict[tuple[int, int], int] = {}
    columns = [
        [p.rows[r][c] for r in range(len(p.rows)) if len(p.rows[r]) > c]
        for c in range(len(p.rows[0]) if p.rows else 0)
    ]
    for c, column in enumerate(columns, start=1):
        if c == 1:
            for v in column:
                placed[(v, 1)] = v
            continue
        used: set[int] = set()
        for v in reversed(column):  # top to bottom = largest first
            candidates = [
                r
                for (r, cc), left in placed.items()
                if cc == c - 1 and left < v and r not in used
            ]
            if not candidates:
                raise ValueError(f"cannot lift {v} in column {c}")
            r = max(candidates)
            used.add(r)
            placed[(r, c)] = v
    top = max((r for r, _ in placed), default=0)
    rows = []
    for r in range(1, top + 1):
        cols = sorted(c for (rr, c) in placed if rr == r)
        assert cols == list(range(1, len(cols) + 1))
        rows.append(tuple(placed[(r, c)] for c in cols))
    return KeyTableau(tuple(rows))


def drop(k: KeyTableau) -> YoungTableau:
    """Let entries fall in their columns, keeping their relative order."""
    columns = k.columns()
    height = max((len(col) for col in columns), default=0)
    rows = [
        tuple(col[r] for col in columns if len(col) > r) for r in range(height)
    ]
    return YoungTableau(tuple(rows))


def _weak_insert_tableau(letters: tuple[int, ...]) -> KeyTableau:
    k = KeyTableau(())
    for x in letters:
        rows = [list(r) for r in drop(k).rows]
        _insert_once(rows, x)
        k = lift(YoungTableau(tuple(map(tuple, rows))))
    return k


def skt_to_syt(t: KeyTableau) -> YoungTableau:
    """Let cells fall, sort columns, complement entries: the bijection onto
    standard Young tableaux of the sorted shape."""
    n = t.size()
    columns = [sorted(n + 1 - v for v in col) for col in t.columns()]
    height = max((len(col) for col in columns), default=0)
    rows = [
        tuple(col[r] for col in columns if len(col) > r) for r in range(height)
    ]
    return YoungTableau(tuple(rows))


def standard_key_tableaux(a: WeakComposition) -> tuple[KeyTableau, ...]:
    """All standard key tableaux of shape a.

    Values n..1 are placed into leftmost free cells; a value may enter row r
    exactly when no lower row's filling stops just short of the new column,
    which is the cell-by-cell content of the column condition.

    >>> len(standard_key_tableaux(WeakComposition((0, 3, 0, 2))))
    5
    """
    if a.is_virtual:
        raise ValueError("shape must not be virtual")
    from .core import check_cell_guard

    parts = a.parts
    n = sum(parts)
    check_cell_guard(n, f"enumerating standard key tableaux of {parts}")
    heights = list(parts)
    rows_idx = [r for r in range(len(parts)) if parts[r] > 0]
    out: list[KeyTableau] = []
    fill = [0] * len(parts)
    grid = [[0] * parts[r] for r in range(len(parts))]

    def place(v: int) -> None:
        if v == 0:
            out.append(
                KeyTableau(tuple(tuple(row) for row in grid))
            )
            return
        for r in rows_idx:
            c = fill[r] + 1
            if c > heights[r]:
                continue
            if any(fill[rr] == c for rr in rows_idx if rr < r):
                continue
            grid[r][c - 1] = v
            fill[r] = c
            place(v - 1)
            fill[r] = c - 1
        return

    place(n)
    return tuple(out)


def is_standard_key_tableau(t: KeyTableau) -> bool:
    """Direct check: bijective filling, rows strictly decreasing, and every
    in-column ascent from above is shielded by a larger right neighbor."""
    n = t.size()
    labels = sorted(v for row in t.rows for v in row)
    if labels != list(range(1, n + 1)):
        return False
    for row in t.rows:
        if any(a <= b for a, b in zip(row, row[1:])):
            return False
    rows = t.rows
    for r_hi in range(len(rows)):
        for c in range(len(rows[r_hi])):
            i = rows[r_hi][c]
            for r_lo in range(r_hi):
                if len(rows[r_lo]) <= c:
                    continue
                k = rows[r_lo][c]
                if i < k:
                    if len(rows[r_lo]) <= c + 1 or not i < rows[r_lo][c + 1]:
                        return False
    return True


def skt_descent_composition(t: KeyTableau) -> WeakComposition:
    """Runs of the decreasing word n..1, split when the larger of consecutive
    values sits weakly right of the smaller; run lengths at anchor rows."""
    n = t.size()
    if n == 0:
        return WeakComposition(())
    pos = t.entry_positions()
    runs: list[list[int]] = [[n]]
    for v in range(n - 1, 0, -1):
        if pos[v + 1][1] >= pos[v][1]:
            runs.append([v])
        else:
            runs[-1].append(v)
    anchors: list[int] = []
    for run in runs:
        r = pos[run[0]][0]
        anchors.append(r if not anchors else min(r, anchors[-1] - 1))
    if anchors[-1] <= 0:
        return VIRTUAL
    parts = [0] * anchors[0]
    for run, r in zip(runs, anchors):
        parts[r - 1] = len(run)
    return WeakComposition(parts)


@functools.lru_cache(maxsize=512)
def _skt_by_syt_image(parts: tuple[int, ...]):
    return {
        skt_to_syt(t): t for t in standard_key_tableaux(WeakComposition(parts))
    }


def syt_to_skt(s: YoungTableau, a: WeakComposition) -> KeyTableau:
    """Inverse of skt_to_syt for the given key shape, by memoized search."""
    table = _skt_by_syt_image(a.parts)
    try:
        return table[s]
    except KeyError:
        raise ValueError(f"{s.rows} is not the image of a standard key tableau of shape {a.parts}")


def skt_syt_bijection(t, a: WeakComposition | None = None):
    """Round-trippable bijection: a KeyTableau maps to its standard Young
    tableau, a YoungTableau maps back (the key shape is then required)."""
    if isinstance(t, KeyTableau):
        return skt_to_syt(t)
    if isinstance(t, YoungTableau):
        if a is None:
            raise ValueError("mapping back to key tableaux needs the key shape")
        if sort_decreasing(a) != tuple(sorted(t.shape(), reverse=True)):
            raise ValueError(f"shape {a.parts} does not sort to {t.shape()}")
        return syt_to_skt(t, a)
    raise TypeError(f"cannot map {type(t).__name__}")


def weak_insert(word: ReducedWord | Iterable[int]) -> tuple[KeyTableau, KeyTableau]:
    """Weak insertion: the key-shaped insertion tableau (lift of the
    Edelman-Greene tableau after each step) and the standard key recording
    tableau matching the Edelman-Greene recording tableau under the
    fall-sort-complement bijection."""
    letters = word.letters if isinstance(word, ReducedWord) else tuple(word)
    p_key = _weak_insert_tableau(letters)
    _, q_eg = eg_insert(letters)
    q_key = syt_to_skt(q_eg, p_key.shape())
    return p_key, q_key


def _cell_column_order(pos: dict[int, tuple[int, int]], values: tuple[int, int, int]):
    # Column reading order: columns left to right, bottom to top inside one.
    return sorted(values, key=lambda v: (pos[v][1], pos[v][0]))


def weak_dual_move(t: KeyTableau, i: int) -> KeyTableau:
    """The elementary weak dual equivalence involution on entries i-1, i, i+1
    of a standard key tableau; inapplicable cases return the input."""
    n = t.size()
    if not 1 < i < n:
        raise ValueError(f"index must satisfy 1 < i < {n}, got {i}")
    pos = t.entry_positions()
    b, c, d = _cell_column_order(pos, (i - 1, i, i + 1))
    rows = [list(r) for r in t.rows]

    def put(value: int, where: tuple[int, int]) -> None:
        rows[where[0] - 1][where[1] - 1] = value

    if pos[b][0] == pos[d][0] and pos[c][0] != pos[b][0]:
        mate = i - 1 if pos[i - 1][0] == pos[i][0] else (
            i + 1 if pos[i + 1][0] == pos[i][0] else None
        )
        if mate is None:
            raise RuntimeError(
                "weak dual braid with the middle entry in the odd cell is not pinned"
            )
        target = 2 * i - mate  # the other neighbor
        for cycle in ((b, c, d), (b, d, c)):
            trial = {cycle[0]: pos[cycle[1]], cycle[1]: pos[cycle[2]], cycle[2]: pos[cycle[0]]}
            placed = {**{v: pos[v] for v in (i - 1, i, i + 1)}, **trial}
            if placed[i][0] == placed[target][0]:
                for v, where in trial.items():
                    put(v, where)
                return KeyTableau(tuple(tuple(r) for r in rows))
        raise RuntimeError("no cycle realizes the weak dual braid")
    if c == i + 1:
        put(i - 1, pos[i])
        put(i, pos[i - 1])
    elif c == i - 1:
        put(i, pos[i + 1])
        put(i + 1, pos[i])
    else:
        return t
    return KeyTableau(tuple(tuple(r) for r in rows))
