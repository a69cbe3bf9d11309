"""Exact-arithmetic Schubert polynomials via seven cross-verified combinatorial models."""

from .balanced import (
    BalancedTableau,
    ascend,
    classify_balanced,
    enumerate_balanced,
    sbt_inversions,
    sbt_move,
    sbt_permutation,
)
from .core import (
    VIRTUAL,
    Cell,
    Diagram,
    Permutation,
    SizeGuardError,
    StrongComposition,
    WeakComposition,
    dominates_refines,
    flatten,
    inversions,
    key_diagram,
    rothe_diagram,
    shift,
)
from .diagram import (
    LabeledDiagram,
    align,
    classify,
    destandardization_fiber,
    destandardize,
    diagram_of_word,
    enumerate_diagrams,
    left_justify,
    qrd_move,
    reading_word_and_weight,
)
from .insertion import (
    KeyTableau,
    YoungTableau,
    drop,
    eg_insert,
    lift,
    skt_descent_composition,
    skt_syt_bijection,
    standard_key_tableaux,
    weak_dual_move,
    weak_insert,
)
from .kohnert import kohnert_closure, kohnert_move, kohnert_polynomial
from .polynomial import (
    Polynomial,
    arith,
    divided_difference,
    fundamental_slide,
    key_polynomial,
    schubert,
)
from .redword import (
    ReducedWord,
    RunDecomposition,
    compatible_sequences,
    coxeter_knuth_move,
    enumerate_reduced_words,
    run_decomposition,
    super_yamanouchi_word,
    weak_descent_composition,
    word_metric,
    word_move,
    word_permutation_and_inversions,
)

__all__ = [
    "VIRTUAL",
    "BalancedTableau",
    "Cell",
    "Diagram",
    "KeyTableau",
    "LabeledDiagram",
    "Permutation",
    "Polynomial",
    "ReducedWord",
    "RunDecomposition",
    "SizeGuardError",
    "StrongComposition",
    "WeakComposition",
    "YoungTableau",
    "align",
    "arith",
    "ascend",
    "classify",
    "classify_balanced",
    "compatible_sequences",
    "coxeter_knuth_move",
    "destandardization_fiber",
    "destandardize",
    "diagram_of_word",
    "divided_difference",
    "dominates_refines",
    "drop",
    "eg_insert",
    "enumerate_balanced",
    "enumerate_diagrams",
    "enumerate_reduced_words",
    "flatten",
    "fundamental_slide",
    "inversions",
    "key_diagram",
    "key_polynomial",
    "kohnert_closure",
    "kohnert_move",
    "kohnert_polynomial",
    "left_justify",
    "lift",
    "qrd_move",
    "reading_word_and_weight",
    "rothe_diagram",
    "run_decomposition",
    "sbt_inversions",
    "sbt_move",
    "sbt_permutation",
    "schubert",
    "shift",
    "skt_descent_composition",
    "skt_syt_bijection",
    "standard_key_tableaux",
    "super_yamanouchi_word",
    "weak_descent_composition",
    "weak_dual_move",
    "weak_insert",
    "word_metric",
    "word_move",
    "word_permutation_and_inversions",
]
