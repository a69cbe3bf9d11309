import pytest

from schubert.core import Cell, Permutation, all_permutations
from schubert.balanced import (
    BalancedTableau,
    ShapeMismatchError,
    ascend,
    classify_balanced,
    enumerate_balanced,
    is_semistandard_balanced,
    is_standard_balanced,
    sbt_inversions,
    sbt_inversions_via_rowsort,
    sbt_move,
    sbt_permutation,
    super_yamanouchi_sbt,
)
from schubert.diagram import diagram_of_word, enumerate_diagrams
from schubert.redword import (
    ReducedWord,
    enumerate_reduced_words,
    word_permutation_and_inversions,
)

W42153 = Permutation((4, 2, 1, 5, 3))
W153264 = Permutation((1, 5, 3, 2, 6, 4))
W41758236 = Permutation((4, 1, 7, 5, 8, 2, 3, 6))

SBT_42153_FIGURE = {
    ((3, 2, 1), (4,), (5,)), ((3, 4, 1), (2,), (5,)), ((3, 4, 2), (1,), (5,)),
    ((3, 2, 1), (5,), (4,)), ((4, 2, 1), (5,), (3,)), ((4, 3, 1), (5,), (2,)),
    ((3, 5, 2), (1,), (4,)), ((4, 5, 2), (1,), (3,)), ((3, 5, 1), (2,), (4,)),
    ((4, 5, 1), (2,), (3,)), ((4, 5, 1), (3,), (2,)),
}


def _rows_tuple(t):
    labels = t.row_labels()
    return tuple(labels[r] for r in sorted(labels))


def test_enumerate_sbt_matches_figure():
    sbts = enumerate_balanced(W42153, "sbt")
    assert len(sbts) == 11
    assert {_rows_tuple(t) for t in sbts} == SBT_42153_FIGURE
    for t in sbts:
        assert is_standard_balanced(t)


def test_enumerate_ssbt_and_qbt_counts():
    ssbts = enumerate_balanced(W153264, "ssbt")
    assert len(ssbts) == 26
    assert all(is_semistandard_balanced(t) for t in ssbts)
    assert len(enumerate_balanced(W153264, "qbt")) == 7


def test_ssbt_figure_sample():
    # a few fillings transcribed from the figure for shape 153264
    rows = {
        t.row_labels().get(2, ()): t for t in enumerate_balanced(W153264, "ssbt")
    }
    found = {(_rows_tuple(t)) for t in enumerate_balanced(W153264, "ssbt")}
    assert ((2, 2, 2), (3,), (5,)) in found
    assert ((2, 2, 1), (1,), (2,)) in found
    assert ((1, 1, 1), (2,), (3,)) in found
    assert ((2, 2, 1), (3,), (2,)) in found


def test_qbt_figure():
    qbt = enumerate_balanced(W153264, "qbt")
    got = {
        (t.row_labels()[5][0], t.row_labels()[3][0], t.row_labels()[2]) for t in qbt
    }
    assert got == {
        (5, 3, (2, 2, 2)), (5, 1, (2, 2, 2)), (5, 1, (2, 2, 1)),
        (3, 3, (2, 2, 2)), (2, 3, (2, 2, 1)), (2, 3, (2, 1, 1)),
        (2, 1, (2, 2, 1)),
    }


def test_sbt_count_equals_reduced_word_count():
    for w in all_permutations(5):
        assert len(enumerate_balanced(w, "sbt")) == len(enumerate_reduced_words(w))


def test_super_yamanouchi_sbt():
    t = super_yamanouchi_sbt(W41758236)
    assert t.row_labels() == {
        5: (12, 11, 10),
        4: (9, 8),
        3: (7, 6, 5, 4),
        1: (3, 2, 1),
    }
    flags = classify_balanced(t)
    assert flags.sbt and flags.super_yamanouchi
    assert sbt_inversions(t) == 0
    assert sbt_permutation(t) == Permutation.identity(12)


def test_sbt_move_chain_figure():
    t = super_yamanouchi_sbt(W41758236)
    chain = [t]
    for kind, i in [("swap", 3), ("swap", 2), ("swap", 1), ("swap", 7)]:
        t = sbt_move(t, kind, i)
    chain.append(t)
    assert t.row_labels() == {5: (12, 11, 10), 4: (9, 7), 3: (8, 6, 5, 1), 1: (4, 3, 2)}
    for kind, i in [("braid", 6), ("braid", 8), ("swap", 6)]:
        t = sbt_move(t, kind, i)
        chain.append(t)
    for kind, i in [("swap", 4), ("swap", 9), ("swap", 8), ("swap", 7)]:
        t = sbt_move(t, kind, i)
    chain.append(t)
    assert [sbt_inversions(c) for c in chain] == [0, 4, 5, 6, 7, 11]
    assert t.row_labels() == {5: (12, 11, 7), 4: (6, 4), 3: (9, 8, 10, 1), 1: (5, 3, 2)}
    assert sbt_permutation(t) == Permutation((2, 3, 5, 1, 8, 9, 10, 4, 6, 7, 11, 12))


def test_sbt_moves_are_involutions_preserving_membership():
    sbts = set(enumerate_balanced(W42153, "sbt"))
    for t in sbts:
        n = len(t.cells)
        for i in range(1, n):
            moved = sbt_move(t, "swap", i)
            assert moved in sbts
            assert sbt_move(moved, "swap", i) == t
            if moved != t:
                assert abs(sbt_inversions(moved) - sbt_inversions(t)) == 1
        for i in range(2, n):
            moved = sbt_move(t, "braid", i)
            assert moved in sbts
            assert sbt_move(moved, "braid", i) == t
            if moved != t:
                assert abs(sbt_inversions(moved) - sbt_inversions(t)) == 1


def test_sbt_swap_same_row_or_column_is_identity():
    t = super_yamanouchi_sbt(W42153)
    # labels 3,2,1 share row 1; 4 alone in row 2
    assert sbt_move(t, "swap", 1) == t
    assert sbt_move(t, "swap", 2) == t


def test_sbt_inversion_formulas_agree():
    for t in enumerate_balanced(W42153, "sbt"):
        assert sbt_inversions(t) == sbt_inversions_via_rowsort(t)


def test_ascend_running_example():
    d = diagram_of_word(ReducedWord((5, 6, 3, 4, 5, 7, 3, 1, 4, 2, 3, 6)))
    t = ascend(d, "qrd_to_sbt")
    assert t.row_labels() == {5: (12, 11, 7), 4: (6, 4), 3: (9, 8, 10, 1), 1: (5, 3, 2)}


def test_ascend_is_bijection_preserving_statistics():
    for w in all_permutations(4) + [W42153]:
        words = enumerate_reduced_words(w)
        images = set()
        for rw in words:
            t = ascend(diagram_of_word(rw), "qrd_to_sbt")
            v, inv = word_permutation_and_inversions(rw)
            assert sbt_permutation(t) == v
            assert sbt_inversions(t) == inv
            images.add(t)
        assert images == set(enumerate_balanced(w, "sbt"))


def test_descended_diagrams_pair_with_figure():
    # The eleven quasi-Yamanouchi diagrams ascend to the eleven standard
    # balanced tableaux in matching figure order.
    pairs = [
        ((4, 2, 1, 2, 3), ((3, 2, 1), (4,), (5,))),
        ((4, 1, 2, 1, 3), ((3, 4, 1), (2,), (5,))),
        ((4, 1, 2, 3, 1), ((3, 4, 2), (1,), (5,))),
        ((2, 4, 1, 2, 3), ((3, 2, 1), (5,), (4,))),
        ((2, 1, 4, 2, 3), ((4, 2, 1), (5,), (3,))),
        ((2, 1, 2, 4, 3), ((4, 3, 1), (5,), (2,))),
        ((1, 4, 2, 3, 1), ((3, 5, 2), (1,), (4,))),
        ((1, 2, 4, 3, 1), ((4, 5, 2), (1,), (3,))),
        ((1, 4, 2, 1, 3), ((3, 5, 1), (2,), (4,))),
        ((1, 2, 4, 1, 3), ((4, 5, 1), (2,), (3,))),
        ((1, 2, 1, 4, 3), ((4, 5, 1), (3,), (2,))),
    ]
    for letters, expected_rows in pairs:
        t = ascend(diagram_of_word(ReducedWord(letters)), "qrd_to_sbt")
        assert _rows_tuple(t) == expected_rows, letters


SSRD_TO_SSBT_FIGURE_PAIRS = [
    # (reduced diagram row contents, (row-5 value, row-3 value, row-2 values))
    ({5: (5,), 3: (3,), 2: (2, 3, 4)}, (5, 3, (2, 2, 2))),
    ({5: (5,), 3: (3,), 2: (2, 3), 1: (4,)}, (5, 3, (2, 2, 1))),
    ({5: (5,), 3: (3,), 2: (2,), 1: (3, 4)}, (5, 3, (2, 1, 1))),
    ({5: (5,), 3: (3,), 1: (2, 3, 4)}, (5, 3, (1, 1, 1))),
    ({5: (5,), 2: (3,), 1: (2, 3, 4)}, (5, 2, (1, 1, 1))),
    ({5: (5,), 2: (2, 3, 4), 1: (2,)}, (5, 1, (2, 2, 2))),
    ({5: (5,), 2: (2, 3), 1: (2, 4)}, (5, 1, (2, 2, 1))),
    ({4: (5,), 3: (3,), 2: (2, 3, 4)}, (4, 3, (2, 2, 2))),
    ({4: (5,), 3: (3,), 2: (2, 3), 1: (4,)}, (4, 3, (2, 2, 1))),
    ({4: (5,), 3: (3,), 2: (2,), 1: (3, 4)}, (4, 3, (2, 1, 1))),
    ({4: (5,), 3: (3,), 1: (2, 3, 4)}, (4, 3, (1, 1, 1))),
    ({4: (5,), 2: (3,), 1: (2, 3, 4)}, (4, 2, (1, 1, 1))),
    ({4: (5,), 2: (2, 3, 4), 1: (2,)}, (4, 1, (2, 2, 2))),
    ({4: (5,), 2: (2, 3), 1: (2, 4)}, (4, 1, (2, 2, 1))),
    ({3: (3, 5), 2: (2, 3, 4)}, (3, 3, (2, 2, 2))),
    ({3: (3, 5), 2: (2, 3), 1: (4,)}, (3, 3, (2, 2, 1))),
    ({3: (3, 5), 2: (2,), 1: (3, 4)}, (3, 3, (2, 1, 1))),
    ({3: (3, 5), 1: (2, 3, 4)}, (3, 3, (1, 1, 1))),
    ({3: (5,), 2: (3,), 1: (2, 3, 4)}, (3, 2, (1, 1, 1))),
    ({3: (5,), 2: (2, 3, 4), 1: (2,)}, (3, 1, (2, 2, 2))),
    ({3: (5,), 2: (2, 3), 1: (2, 4)}, (3, 1, (2, 2, 1))),
    ({3: (3,), 2: (2, 3, 5), 1: (4,)}, (2, 3, (2, 2, 1))),
    ({3: (3,), 2: (2, 5), 1: (3, 4)}, (2, 3, (2, 1, 1))),
    ({3: (3,), 2: (5,), 1: (2, 3, 4)}, (2, 3, (1, 1, 1))),
    ({2: (3, 5), 1: (2, 3, 4)}, (2, 2, (1, 1, 1))),
    ({2: (2, 3, 5), 1: (2, 4)}, (2, 1, (2, 2, 1))),
]


def test_ssrd_diagrams_ascend_to_ssbt_figures_respectively():
    # Diagrams are matched to figure panels by row contents; absolute columns
    # carry no content.
    rd = enumerate_diagrams(W153264, "rd")
    by_rows = {tuple(sorted(d.row_labels().items())): d for d in rd}
    assert len(by_rows) == 26
    for rows, (v5, v3, r2) in SSRD_TO_SSBT_FIGURE_PAIRS:
        d = by_rows[tuple(sorted(rows.items()))]
        t = ascend(d, "rd_to_ssbt")
        assert t.row_labels() == {5: (v5,), 3: (v3,), 2: r2}, rows


def test_rd_to_ssbt_is_weight_preserving_bijection():
    rd = enumerate_diagrams(W153264, "rd")
    images = [ascend(d, "rd_to_ssbt") for d in rd]
    assert all(d.weight() == t.weight() for d, t in zip(rd, images))
    assert set(images) == set(enumerate_balanced(W153264, "ssbt"))
    assert len(set(images)) == 26


def test_weight_multisets_coincide():
    from schubert.kohnert import kohnert_closure
    from schubert.core import rothe_diagram

    for w in all_permutations(4):
        rd = sorted(d.weight().parts for d in enumerate_diagrams(w, "rd"))
        ssbt = sorted(t.weight().parts for t in enumerate_balanced(w, "ssbt"))
        kd = sorted(d.weight().parts for d in kohnert_closure(rothe_diagram(w)))
        assert rd == ssbt == kd


def test_row_sort_uniqueness():
    for w in all_permutations(4):
        seen = {}
        for t in enumerate_balanced(w, "sbt"):
            key = tuple(sorted((r, tuple(sorted(vs, reverse=True)))
                               for r, vs in t.row_labels().items()))
            assert key not in seen, "two tableaux row-sort identically"
            seen[key] = t


def test_classify_balanced_figures():
    sup = super_yamanouchi_sbt(W41758236)
    flags = classify_balanced(sup)
    assert flags.super_yamanouchi and flags.sbt
    for t in enumerate_balanced(W42153, "sbt"):
        assert classify_balanced(t).sbt
    for t in enumerate_balanced(W153264, "ssbt"):
        assert classify_balanced(t).ssbt
    qbt = enumerate_balanced(W153264, "qbt")
    for t in qbt:
        flags = classify_balanced(t)
        assert flags.ssbt and flags.quasi_yamanouchi_balanced


def test_shape_mismatch_errors():
    with pytest.raises(ShapeMismatchError):
        BalancedTableau(frozenset({(Cell(1, 2), 1)}))
    with pytest.raises(ShapeMismatchError):
        BalancedTableau(
            frozenset({(Cell(1, 1), 1)}), shape=Permutation((1, 2, 3))
        )


def test_ascend_rejects_virtual_diagram():
    d = diagram_of_word(ReducedWord((5, 6, 3, 4, 5, 7, 3, 1, 4, 2, 3, 6)))
    with pytest.raises(ValueError):
        ascend(d, "rd_to_ssbt")


def _shortest_move_path(rw):
    # Any BFS-shortest swap/braid path to the super-Yamanouchi word, found
    # independently of the greedy descent used by ascend.
    from schubert.redword import super_yamanouchi_word, word_move

    target = super_yamanouchi_word(rw.permutation).letters
    parents = {rw.letters: None}
    frontier = [rw]
    while target not in parents:
        nxt = []
        for word in frontier:
            k = len(word.letters)
            moves = [(kind, i) for i in range(1, k) for kind in ("swap",)]
            moves += [("braid", i) for i in range(2, k)]
            for kind, i in moves:
                moved = word_move(word, kind, i)
                if moved.letters not in parents:
                    parents[moved.letters] = (word.letters, kind, i)
                    nxt.append(moved)
        frontier = nxt
    path = []
    cur = target
    while parents[cur] is not None:
        prev, kind, i = parents[cur]
        path.append((kind, i))
        cur = prev
    return list(reversed(path))


def test_ascend_minimal_sequence_independence():
    # Replaying any other minimal sequence on the super-Yamanouchi tableau
    # lands on the same ascended tableau.
    from schubert.balanced import _greedy_moves_to_super

    for w in all_permutations(4):
        for rw in enumerate_reduced_words(w):
            d = diagram_of_word(rw)
            t = ascend(d, "qrd_to_sbt")
            greedy = _greedy_moves_to_super(rw.letters)
            assert len(greedy) == word_permutation_and_inversions(rw)[1]
            other = _shortest_move_path(rw)
            assert len(other) == len(greedy)
            replay = super_yamanouchi_sbt(rw.permutation.trimmed())
            for kind, i in reversed(other):
                moved = sbt_move(replay, kind, i)
                assert moved != replay
                replay = moved
            assert replay == t
