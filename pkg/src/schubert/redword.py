"""
Reduced expressions: enumeration, runs, descent compositions, compatible
sequences, swap/braid structure, the inversion statistic, and Coxeter-Knuth
relations.

A word prints left to right, e.g. ``(4, 2, 1, 2, 3)``, but position subscripts
count from the RIGHT end of the printed word: position 1 is the last printed
letter. All position parameters in this module follow that convention.

Operationally, the permutation of a word is built by scanning the printed
letters left to right and swapping the VALUES p, p+1 of the one-line notation
at each letter p; the word is reduced when every such swap creates a new
inversion.
"""
from __future__ import annotations

import dataclasses
import functools
from typing import Iterable

from .core import (
    VIRTUAL,
    Permutation,
    StrongComposition,
    WeakComposition,
    check_cell_guard,
    inversions,
)


class PairingError(RuntimeError):
    """The inversion-number pairing failed; signals an implementation bug."""


def word_permutation(letters: Iterable[int]) -> Permutation:
    """The permutation obtained by applying the printed letters left to right.

    >>> word_permutation((4, 2, 1, 2, 3))
    Permutation((4, 2, 1, 5, 3))
    """
    letters = tuple(letters)
    n = max(letters) + 1 if letters else 1
    vals = list(range(1, n + 1))
    pos = list(range(n + 1))  # pos[v] = 1-based position of value v
    for p in letters:
        ip, iq = pos[p], pos[p + 1]
        vals[ip - 1], vals[iq - 1] = p + 1, p
        pos[p], pos[p + 1] = iq, ip
    return Permutation(tuple(vals))


def is_reduced(letters: Iterable[int]) -> bool:
    """True iff every letter adds an inversion (length equals letter count)."""
    letters = tuple(letters)
    if not letters:
        return True
    if min(letters) < 1:
        return False
    n = max(letters) + 1
    pos = list(range(n + 1))
    for p in letters:
        if pos[p] > pos[p + 1]:
            return False
        pos[p], pos[p + 1] = pos[p + 1], pos[p]
    return True


@dataclasses.dataclass(frozen=True)
class ReducedWord:
    """A reduced expression, stored left to right as printed."""

    letters: tuple[int, ...]
    permutation: Permutation = dataclasses.field(compare=False, repr=False, default=None)

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        if self.permutation is None:
            if not is_reduced(self.letters):
                raise ValueError(f"word is not reduced: {self.letters}")
            object.__setattr__(self, "permutation", word_permutation(self.letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.letters)

    def at(self, i: int) -> int:
        """The letter at position i, counted from the right end (1-based)."""
        if not 1 <= i <= len(self.letters):
            raise IndexError(f"position {i} out of range for word of length {len(self.letters)}")
        return self.letters[-i]


@dataclasses.dataclass(frozen=True)
class RunDecomposition:
    """Maximal increasing runs of a word, leftmost printed run first.

    ``runs[0]`` is the highest-indexed run of the decomposition (the paper
    indexes runs from the right, so the rightmost printed run carries index 1).
    ``anchors`` holds the anchor value r of each run, aligned with ``runs``.
    """

    runs: tuple[tuple[int, ...], ...]
    anchors: tuple[int, ...]

    def __str__(self) -> str:
        return "|".join("".join(str(x) for x in run) for run in self.runs)


def _runs_of(letters: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    runs: list[tuple[int, ...]] = []
    current: list[int] = []
    for x in letters:
        if current and x <= current[-1]:
            runs.append(tuple(current))
            current = []
        current.append(x)
    if current:
        runs.append(tuple(current))
    return tuple(runs)


def _anchors_of(runs: tuple[tuple[int, ...], ...]) -> tuple[int, ...]:
    # Leftmost run anchors at its own first letter; each later (lower) run
    # anchors at min(first letter, previous anchor - 1).
    anchors: list[int] = []
    for run in runs:
        if not anchors:
            anchors.append(run[0])
        else:
            anchors.append(min(run[0], anchors[-1] - 1))
    return tuple(anchors)


def run_decomposition(word: ReducedWord) -> RunDecomposition:
    """Split into maximal strictly increasing printed segments.

    >>> str(run_decomposition(ReducedWord((5, 6, 3, 4, 5, 7, 3, 1, 4, 2, 3, 6))))
    '56|3457|3|14|236'
    """
    runs = _runs_of(word.letters)
    return RunDecomposition(runs, _anchors_of(runs))


def _descent_composition(letters: tuple[int, ...]) -> WeakComposition:
    if not letters:
        return WeakComposition(())
    runs = _runs_of(letters)
    anchors = _anchors_of(runs)
    if anchors[-1] <= 0:
        return VIRTUAL
    parts = [0] * anchors[0]
    for run, r in zip(runs, anchors):
        parts[r - 1] = len(run)
    return WeakComposition(parts)


def weak_descent_composition(word: ReducedWord) -> WeakComposition:
    """Run lengths placed at their anchor rows; virtual when an anchor is <= 0.

    >>> weak_descent_composition(ReducedWord((4, 2, 1, 2, 3))).parts
    (3, 1, 0, 1)
    >>> weak_descent_composition(ReducedWord((5, 6, 3, 4, 5, 7, 3, 1, 4, 2, 3, 6))).is_virtual
    True
    """
    return _descent_composition(word.letters)


def _compatible_flags(letters: tuple[int, ...]) -> list[tuple[int, ...]]:
    # Flags beta pair with the printed letters: weakly decreasing left to
    # right, strictly decreasing across a printed descent, and beta_t <= q_t.
    # (Reversing a flag sequence gives the weakly increasing compatible
    # sequence in the right-to-left indexing of the definition.)
    out: list[tuple[int, ...]] = []
    k = len(letters)
    if k == 0:
        return [()]

    def extend(t: int, prefix: list[int]) -> None:
        if t == k:
            out.append(tuple(prefix))
            return
        cap = letters[t]
        if t > 0:
            prev = prefix[-1]
            cap = min(cap, prev - 1 if letters[t - 1] > letters[t] else prev)
        for b in range(cap, 0, -1):
            prefix.append(b)
            extend(t + 1, prefix)
            prefix.pop()

    extend(0, [])
    return out


def compatible_sequences(word: ReducedWord) -> tuple[StrongComposition, ...]:
    """All compatible sequences for a word, printed weakly increasing.

    >>> [c.parts for c in compatible_sequences(ReducedWord((2, 4, 1, 2, 3)))]
    [(1, 1, 1, 2, 2)]
    """
    flags = _compatible_flags(word.letters)
    seqs = sorted(tuple(reversed(f)) for f in flags)
    return tuple(StrongComposition(s) for s in seqs)


def _reduced_word_tuples_uncached(w_values: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    n = len(w_values)
    vals = list(w_values)
    pos = [0] * (n + 1)
    for i, v in enumerate(vals, start=1):
        pos[v] = i
    out: list[tuple[int, ...]] = []
    acc: list[int] = []

    # Peel the last printed letter: p is usable when p+1 sits left of p, and
    # removing it means swapping the values p, p+1.
    def collect() -> None:
        found = False
        for p in range(1, n):
            ip, iq = pos[p], pos[p + 1]
            if iq < ip:
                found = True
                vals[ip - 1], vals[iq - 1] = p + 1, p
                pos[p], pos[p + 1] = iq, ip
                acc.append(p)
                collect()
                acc.pop()
                vals[ip - 1], vals[iq - 1] = p, p + 1
                pos[p], pos[p + 1] = ip, iq
        if not found:
            out.append(tuple(reversed(acc)))

    collect()
    out.sort()
    return tuple(out)


@functools.lru_cache(maxsize=16)
def reduced_word_tuples(w_values: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    """All reduced words of the permutation with the given one-line values,
    as plain letter tuples sorted lexicographically."""
    return _reduced_word_tuples_uncached(w_values)


def enumerate_reduced_words(w: Permutation) -> tuple[ReducedWord, ...]:
    """The complete set R(w), sorted lexicographically in printed form.

    >>> [rw.letters for rw in enumerate_reduced_words(Permutation((2, 1)))]
    [(1,)]
    """
    check_cell_guard(inversions(w), f"enumerating reduced words of {w.values}")
    wt = w.trimmed()
    perm = wt if wt.n else Permutation(())
    return tuple(
        ReducedWord(letters, word_permutation(letters) if letters else Permutation(()))
        for letters in reduced_word_tuples(wt.values)
    )


def _super_yamanouchi_letters(w_values: tuple[int, ...]) -> tuple[int, ...]:
    vals = list(w_values)
    n = len(vals)
    word: list[int] = []
    while True:
        i = next((i for i in range(n - 1, 0, -1) if vals[i - 1] > vals[i]), None)
        if i is None:
            break
        j = next((j for j in range(i + 1, n + 1) if vals[j - 1] > vals[i - 1]), n + 1)
        # Slide the value at position i rightward to rest just left of j.
        for t in range(i, j - 1):
            vals[t - 1], vals[t] = vals[t], vals[t - 1]
            word.append(t)
    return tuple(word)


def super_yamanouchi_word(w: Permutation) -> ReducedWord:
    """The unique reduced word whose runs are intervals with strictly
    decreasing first letters; its descent composition is dominance-minimal.

    >>> super_yamanouchi_word(Permutation((4, 2, 1, 5, 3))).letters
    (4, 2, 1, 2, 3)
    """
    letters = _super_yamanouchi_letters(w.trimmed().values)
    return ReducedWord(letters)


def is_super_yamanouchi(word: ReducedWord) -> bool:
    runs = _runs_of(word.letters)
    if any(run[-1] - run[0] != len(run) - 1 for run in runs):
        return False
    firsts = [run[0] for run in runs]
    return all(a > b for a, b in zip(firsts, firsts[1:]))


def _swap_letters(letters: tuple[int, ...], i: int) -> tuple[int, ...]:
    k = len(letters)
    a, b = letters[k - i], letters[k - i - 1]
    if abs(a - b) <= 1:
        return letters
    out = list(letters)
    out[k - i], out[k - i - 1] = b, a
    return tuple(out)


def _braid_letters(letters: tuple[int, ...], i: int) -> tuple[int, ...]:
    k = len(letters)
    a, b, c = letters[k - i + 1], letters[k - i], letters[k - i - 1]
    if not (a == c and abs(a - b) == 1):
        return letters
    out = list(letters)
    out[k - i + 1], out[k - i], out[k - i - 1] = b, a, b
    return tuple(out)


def word_move(word: ReducedWord, kind: str, i: int) -> ReducedWord:
    """Swap or braid at position i from the right; inapplicable moves return
    the word unchanged. Both moves are involutions staying inside R(w).

    >>> word_move(ReducedWord((5, 6, 7, 4, 3, 5, 4, 5, 1, 2, 3, 6)), "braid", 6).letters
    (5, 6, 7, 4, 3, 4, 5, 4, 1, 2, 3, 6)
    """
    k = len(word.letters)
    if kind == "swap":
        if not 1 <= i < k:
            raise ValueError(f"swap position must satisfy 1 <= i < {k}, got {i}")
        new = _swap_letters(word.letters, i)
    elif kind == "braid":
        if not 1 < i < k:
            raise ValueError(f"braid position must satisfy 1 < i < {k}, got {i}")
        new = _braid_letters(word.letters, i)
    else:
        raise ValueError(f"unknown move kind {kind!r}")
    if new is word.letters:
        return word
    return ReducedWord(new, word.permutation)


def _pair_words(top: tuple[int, ...], bottom: tuple[int, ...]) -> Permutation:
    # Scan both words by printed position; each top letter k either matches a
    # bottom letter equal to the current k or decrements k past a k-1.
    k = len(top)
    if len(bottom) != k:
        raise PairingError("words of different lengths cannot be paired")
    paired = [False] * k
    v = [0] * k
    for p in range(k):
        val = top[p]
        t = 0
        found = None
        while t < k:
            if paired[t]:
                t += 1
            elif bottom[t] == val:
                found = t
                break
            elif bottom[t] == val - 1:
                val -= 1
                t += 1
            else:
                t += 1
        if found is None:
            raise PairingError(
                f"no partner for printed position {p + 1} of {top} in {bottom}"
            )
        paired[found] = True
        # Positions are mirrored into the right-to-left indexing of the paper.
        v[k - p - 1] = k - found
    return Permutation(tuple(v))


def word_permutation_and_inversions(word: ReducedWord) -> tuple[Permutation, int]:
    """The pairing permutation v and the inversion statistic of a word.

    The statistic counts the minimum number of swaps and braids separating the
    word from the super-Yamanouchi word of its permutation.

    >>> word_permutation_and_inversions(ReducedWord((5, 6, 3, 4, 5, 7, 3, 1, 4, 2, 3, 6)))[1]
    11
    """
    pi = _super_yamanouchi_letters(word.permutation.trimmed().values)
    v = _pair_words(pi, word.letters)
    inv = inversions(v) - (sum(pi) - sum(word.letters))
    if inv < 0:
        raise PairingError(f"negative inversion number for {word.letters}")
    return v, inv


def word_metric(sigma: ReducedWord, tau: ReducedWord) -> int:
    """Minimum number of swap/braid relations taking one word to the other.

    When one endpoint is the super-Yamanouchi word this is the inversion
    statistic of the other (the pairing formula's proven domain); for general
    pairs the pairing formula can disagree with the relation distance, so the
    move graph is searched directly.

    >>> pi = ReducedWord((4, 2, 1, 2, 3))
    >>> word_metric(pi, pi)
    0
    """
    if sigma.permutation.trimmed() != tau.permutation.trimmed():
        raise ValueError("words for different permutations have no distance")
    if sigma.letters == tau.letters:
        return 0
    pi = _super_yamanouchi_letters(sigma.permutation.trimmed().values)
    if sigma.letters == pi:
        return word_permutation_and_inversions(tau)[1]
    if tau.letters == pi:
        return word_permutation_and_inversions(sigma)[1]
    k = len(sigma.letters)
    dist = {sigma.letters: 0}
    frontier = [sigma]
    while frontier:
        nxt = []
        for word in frontier:
            moves = [word_move(word, "swap", i) for i in range(1, k)]
            moves += [word_move(word, "braid", i) for i in range(2, k)]
            for moved in moves:
                if moved.letters == tau.letters:
                    return dist[word.letters] + 1
                if moved.letters not in dist:
                    dist[moved.letters] = dist[word.letters] + 1
                    nxt.append(moved)
        frontier = nxt
    raise PairingError(f"{tau.letters} unreachable from {sigma.letters}")


def coxeter_knuth_move(word: ReducedWord, i: int) -> ReducedWord:
    """The Coxeter-Knuth involution centered at position i from the right.

    It acts on the three letters at positions i-1, i, i+1: a braid when the
    outer letters agree, a swap moving the middle-valued letter otherwise.
    """
    k = len(word.letters)
    if not 1 < i < k:
        raise ValueError(f"position must satisfy 1 < i < {k}, got {i}")
    a, b, c = word.at(i - 1), word.at(i), word.at(i + 1)
    if c == a and abs(a - b) == 1:
        new = _braid_letters(word.letters, i)
    elif a > c > b or a < c < b:
        new = _swap_letters(word.letters, i - 1)
    elif c > a > b or c < a < b:
        new = _swap_letters(word.letters, i)
    else:
        return word
    return ReducedWord(new, word.permutation)


def coxeter_knuth_class(word: ReducedWord) -> frozenset[tuple[int, ...]]:
    """All letter tuples reachable through Coxeter-Knuth moves."""
    k = len(word.letters)
    seen = {word.letters}
    frontier = [word.letters]
    while frontier:
        current = frontier.pop()
        rw = ReducedWord(current, word.permutation)
        for i in range(2, k):
            nxt = coxeter_knuth_move(rw, i).letters
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return frozenset(seen)
