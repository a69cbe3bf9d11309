"""
Command-line front end: expansion, enumeration, and verification.

Exit codes: 0 success, 2 usage or parse error, 3 resource guard exceeded.
Output is byte-stable for fixed inputs and flags; every listing ends with a
``count: N`` line.
"""
from __future__ import annotations

import argparse
import itertools
import json
import random
import sys

from .core import (
    Diagram,
    Permutation,
    SizeGuardError,
    WeakComposition,
    cell_guard,
    diagram_to_json,
    inversions,
    key_diagram,
    rothe_diagram,
)
from .polynomial import (
    KEY_STRATEGIES,
    SCHUBERT_STRATEGIES,
    Polynomial,
    key_polynomial,
    schubert,
)


def _parse_ints(text: str, what: str) -> tuple[int, ...]:
    try:
        return tuple(int(piece) for piece in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"{what} must be comma-separated integers: {text!r}")


def _perm(text: str) -> Permutation:
    values = _parse_ints(text, "permutation")
    try:
        return Permutation(values)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _comp(text: str) -> WeakComposition:
    parts = _parse_ints(text, "composition")
    try:
        return WeakComposition(parts)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _format_basis_terms(symbol: str, terms: dict[tuple[int, ...], int]) -> str:
    if not terms:
        return "0"
    width = max((len(t) for t in terms), default=0)
    pieces = []
    for index in sorted(terms, key=lambda t: t + (0,) * (width - len(t))):
        padded = index + (0,) * (width - len(index))
        coeff = terms[index]
        body = f"{symbol}({','.join(str(x) for x in padded)})"
        pieces.append(body if coeff == 1 else f"{coeff}*{body}")
    return " + ".join(pieces)


def _slide_terms_of_perm(w: Permutation) -> dict[tuple[int, ...], int]:
    from .redword import _descent_composition, reduced_word_tuples

    terms: dict[tuple[int, ...], int] = {}
    for ls in reduced_word_tuples(w.trimmed().values):
        des = _descent_composition(ls)
        if des.is_virtual:
            continue
        terms[des.parts] = terms.get(des.parts, 0) + 1
    return terms


def _key_terms_of_perm(w: Permutation) -> dict[tuple[int, ...], int]:
    from .diagram import enumerate_diagrams

    terms: dict[tuple[int, ...], int] = {}
    for d in enumerate_diagrams(w, "yrd"):
        key = d.weight().parts
        terms[key] = terms.get(key, 0) + 1
    return terms


def _slide_terms_of_comp(a: WeakComposition) -> dict[tuple[int, ...], int]:
    from .insertion import skt_descent_composition, standard_key_tableaux

    terms: dict[tuple[int, ...], int] = {}
    for t in standard_key_tableaux(a):
        des = skt_descent_composition(t)
        if des.is_virtual:
            continue
        terms[des.parts] = terms.get(des.parts, 0) + 1
    return terms


def _cmd_expand(args) -> int:
    if (args.perm is None) == (args.comp is None):
        raise UsageError("expand needs exactly one of --perm or --comp")
    if args.perm is not None:
        strategy = args.strategy or "divided-difference"
        if strategy not in SCHUBERT_STRATEGIES:
            raise UsageError(f"unknown strategy {strategy!r} for a permutation target")
        if args.basis == "monomial":
            poly = schubert(args.perm, strategy)
            return _emit_polynomial(poly, args.format)
        terms = (
            _slide_terms_of_perm(args.perm)
            if args.basis == "slide"
            else _key_terms_of_perm(args.perm)
        )
        symbol = "F" if args.basis == "slide" else "k"
        return _emit_basis(symbol, terms, args.format)
    strategy = args.strategy or "skt"
    if strategy not in KEY_STRATEGIES:
        raise UsageError(f"unknown strategy {strategy!r} for a composition target")
    if args.basis == "monomial":
        return _emit_polynomial(key_polynomial(args.comp, strategy), args.format)
    if args.basis == "slide":
        return _emit_basis("F", _slide_terms_of_comp(args.comp), args.format)
    return _emit_basis("k", {args.comp.parts: 1}, args.format)


def _emit_polynomial(poly: Polynomial, fmt: str) -> int:
    if fmt == "json":
        print(json.dumps(poly.to_records()))
    else:
        print(poly.text())
    return 0


def _emit_basis(symbol: str, terms: dict[tuple[int, ...], int], fmt: str) -> int:
    if fmt == "json":
        width = max((len(t) for t in terms), default=0)
        records = [
            {"coefficient": terms[t], "index": list(t + (0,) * (width - len(t)))}
            for t in sorted(terms, key=lambda t: t + (0,) * (width - len(t)))
        ]
        print(json.dumps({"basis": symbol, "terms": records}))
    else:
        print(_format_basis_terms(symbol, terms))
    return 0


def _serialize_word(letters: tuple[int, ...]) -> str:
    return ",".join(str(x) for x in letters)


def _serialize_labeled(d) -> str:
    return "; ".join(f"{c.row},{c.col},{v}" for c, v in d.reading_cells())


def _serialize_diagram(d: Diagram) -> str:
    return "; ".join(f"{c.row},{c.col}" for c in d.sorted_cells())


def _cmd_enumerate(args) -> int:
    from . import balanced, diagram, insertion, kohnert, redword

    obj = args.object
    items: list = []  # (plain text, json record, art)
    if obj == "words":
        if args.perm is None:
            raise UsageError("enumerate --object words needs --perm")
        items = [
            (_serialize_word(rw.letters), list(rw.letters), None)
            for rw in redword.enumerate_reduced_words(args.perm)
        ]
    elif obj in ("qrd", "rd", "yrd"):
        if args.perm is None:
            raise UsageError(f"enumerate --object {obj} needs --perm")
        for d in diagram.enumerate_diagrams(args.perm, obj):
            items.append(
                (_serialize_labeled(d), diagram.labeled_to_json(d), diagram.render_labeled(d))
            )
    elif obj in ("sbt", "ssbt"):
        if args.perm is None:
            raise UsageError(f"enumerate --object {obj} needs --perm")
        for t in balanced.enumerate_balanced(args.perm, obj):
            ld = t.to_labeled_diagram()
            items.append(
                (_serialize_labeled(ld), diagram.labeled_to_json(ld), diagram.render_labeled(ld))
            )
    elif obj == "skt":
        if args.comp is None:
            raise UsageError("enumerate --object skt needs --comp")
        for t in insertion.standard_key_tableaux(args.comp):
            cells = diagram.LabeledDiagram(
                frozenset(
                    ((r, c), v)
                    for r, row in enumerate(t.rows, start=1)
                    for c, v in enumerate(row, start=1)
                )
            )
            items.append(
                (
                    _serialize_labeled(cells),
                    diagram.labeled_to_json(cells),
                    diagram.render_labeled(cells),
                )
            )
    elif obj == "kohnert":
        if args.perm is not None:
            base = rothe_diagram(args.perm)
        elif args.comp is not None:
            base = key_diagram(args.comp)
        else:
            raise UsageError("enumerate --object kohnert needs --perm or --comp")
        closure = sorted(kohnert.kohnert_closure(base), key=lambda d: sorted(d.cells))
        for d in closure:
            items.append(
                (_serialize_diagram(d), diagram_to_json(d), diagram.render_diagram(d))
            )
    else:
        raise UsageError(f"unknown object {obj!r}")

    if args.format == "json":
        print(json.dumps({"items": [record for _, record, _ in items], "count": len(items)}))
        return 0
    for text, _, art in items:
        if args.format == "art" and art is not None:
            print(art)
            print()
        else:
            print(text)
    print(f"count: {len(items)}")
    return 0


def _perms_for_suite(n: int, sample: int | None, seed: int | None):
    everyone = [Permutation(p) for p in itertools.permutations(range(1, n + 1))]
    if sample is None:
        return everyone
    rng = random.Random(seed if seed is not None else 0)
    return [Permutation(tuple(rng.sample(range(1, n + 1), n))) for _ in range(sample)]


def _suite_cross_model(perms) -> list[tuple[str, str | None]]:
    results = []
    for strategy in SCHUBERT_STRATEGIES:
        if strategy == "divided-difference":
            continue
        failure = None
        for w in perms:
            if schubert(w, strategy) != schubert(w, "divided-difference"):
                failure = f"counterexample {','.join(map(str, w.values))}"
                break
        results.append((f"{strategy} == divided-difference", failure))
    return results


def _suite_bijections(perms) -> list[tuple[str, str | None]]:
    from .balanced import ascend, enumerate_balanced, sbt_inversions, sbt_permutation
    from .diagram import diagram_of_word, enumerate_diagrams, yamanouchi_letter_set
    from .insertion import eg_insert, skt_descent_composition, standard_key_tableaux
    from .redword import (
        ReducedWord,
        _descent_composition,
        coxeter_knuth_class,
        enumerate_reduced_words,
        word_permutation_and_inversions,
    )

    def check_reading_word(w):
        words = enumerate_reduced_words(w)
        qrd = enumerate_diagrams(w, "qrd")
        if len(qrd) != len(words):
            return "sizes differ"
        for rw in words:
            d = diagram_of_word(rw)
            if d.reading_word() != rw.letters:
                return f"reading word broke at {rw.letters}"
            if d.weight() != _descent_composition(rw.letters):
                return f"weight != descent composition at {rw.letters}"
        return None

    def check_ascent(w):
        words = enumerate_reduced_words(w)
        images = set()
        for rw in words:
            d = diagram_of_word(rw)
            t = ascend(d, "qrd_to_sbt")
            v, inv = word_permutation_and_inversions(rw)
            if sbt_permutation(t) != v or sbt_inversions(t) != inv:
                return f"statistics not preserved at {rw.letters}"
            images.add(t)
        if images != set(enumerate_balanced(w, "sbt")):
            return "not a bijection onto the standard balanced tableaux"
        return None

    def check_insertion_partition(w):
        words = enumerate_reduced_words(w)
        classes: dict[tuple, list[tuple[int, ...]]] = {}
        for rw in words:
            p, _ = eg_insert(rw)
            classes.setdefault(p.rows, []).append(rw.letters)
        yam = yamanouchi_letter_set(w.trimmed().values)
        for members in classes.values():
            cls = coxeter_knuth_class(ReducedWord(members[0]))
            if cls != frozenset(members):
                return f"insertion fiber is not a Coxeter-Knuth class at {members[0]}"
            reps = [ls for ls in members if ls in yam]
            des_multiset = sorted(
                _descent_composition(ls).parts
                for ls in members
                if not _descent_composition(ls).is_virtual
            )
            if not des_multiset:
                if reps:
                    return f"virtual fiber with a representative at {members[0]}"
                continue
            if len(reps) != 1:
                return f"fiber without a unique representative at {members[0]}"
            shape = _descent_composition(reps[0])
            skt_multiset = sorted(
                skt_descent_composition(t).parts
                for t in standard_key_tableaux(shape)
                if not skt_descent_composition(t).is_virtual
            )
            if des_multiset != skt_multiset:
                return f"descent multisets differ for shape {shape.parts}"
        return None

    checks = [
        ("reading word: quasi-Yamanouchi diagrams <-> reduced words", check_reading_word),
        ("ascent: quasi-Yamanouchi diagrams <-> standard balanced tableaux", check_ascent),
        ("insertion partition matches standard key tableaux", check_insertion_partition),
    ]
    results = []
    for name, check in checks:
        failure = None
        for w in perms:
            failure = check(w)
            if failure:
                failure = f"{failure} (w={','.join(map(str, w.values))})"
                break
        results.append((name, failure))
    return results


def _suite_involutions(perms) -> list[tuple[str, str | None]]:
    from .balanced import enumerate_balanced, sbt_move
    from .diagram import diagram_of_word, qrd_move
    from .insertion import standard_key_tableaux, weak_dual_move
    from .redword import coxeter_knuth_move, enumerate_reduced_words, word_move

    def check_word_moves(w):
        for rw in enumerate_reduced_words(w):
            k = len(rw.letters)
            for i in range(1, k):
                if word_move(word_move(rw, "swap", i), "swap", i) != rw:
                    return f"swap {i} not an involution at {rw.letters}"
            for i in range(2, k):
                if word_move(word_move(rw, "braid", i), "braid", i) != rw:
                    return f"braid {i} not an involution at {rw.letters}"
                if coxeter_knuth_move(coxeter_knuth_move(rw, i), i) != rw:
                    return f"Coxeter-Knuth {i} not an involution at {rw.letters}"
        return None

    def check_diagram_moves(w):
        for rw in enumerate_reduced_words(w):
            d = diagram_of_word(rw)
            k = len(rw.letters)
            for i in range(1, k):
                if qrd_move(qrd_move(d, "swap", i), "swap", i) != d:
                    return f"diagram swap {i} not an involution at {rw.letters}"
        return None

    def check_sbt_moves(w):
        for t in enumerate_balanced(w, "sbt"):
            n = len(t.cells)
            for i in range(1, n):
                if sbt_move(sbt_move(t, "swap", i), "swap", i) != t:
                    return f"tableau swap {i} not an involution"
            for i in range(2, n):
                if sbt_move(sbt_move(t, "braid", i), "braid", i) != t:
                    return f"tableau braid {i} not an involution"
        return None

    def check_weak_dual(w):
        from .redword import _descent_composition, enumerate_reduced_words

        shapes = {
            _descent_composition(rw.letters)
            for rw in enumerate_reduced_words(w)
            if not _descent_composition(rw.letters).is_virtual
        }
        for shape in shapes:
            for t in standard_key_tableaux(shape):
                n = t.size()
                for i in range(2, n):
                    if weak_dual_move(weak_dual_move(t, i), i) != t:
                        return f"weak dual move {i} not an involution on {t.rows}"
        return None

    checks = [
        ("word swaps, braids and Coxeter-Knuth moves are involutions", check_word_moves),
        ("diagram swaps are involutions", check_diagram_moves),
        ("balanced tableau moves are involutions", check_sbt_moves),
        ("weak dual equivalence moves are involutions", check_weak_dual),
    ]
    results = []
    for name, check in checks:
        failure = None
        for w in perms:
            failure = check(w)
            if failure:
                failure = f"{failure} (w={','.join(map(str, w.values))})"
                break
        results.append((name, failure))
    return results


def _cmd_verify(args) -> int:
    if args.n * (args.n - 1) // 2 > cell_guard():
        raise SizeGuardError(
            f"n={args.n} exceeds the cell guard of {cell_guard()} inversions"
        )
    perms = _perms_for_suite(args.n, args.sample, args.seed)
    suites = {
        "cross-model": _suite_cross_model,
        "bijections": _suite_bijections,
        "involutions": _suite_involutions,
    }
    results = suites[args.suite](perms)
    all_ok = True
    for name, failure in results:
        if failure is None:
            print(f"PASS {name}")
        else:
            all_ok = False
            print(f"FAIL {name}: {failure}")
    return 0 if all_ok else 1


class UsageError(Exception):
    pass


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schubert",
        description="Schubert polynomials via seven cross-verified combinatorial models",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    expand = sub.add_parser("expand", help="expand a Schubert or key polynomial")
    expand.add_argument("--perm", type=_perm, help="permutation, e.g. 4,2,1,5,3")
    expand.add_argument("--comp", type=_comp, help="weak composition, e.g. 0,3,0,2")
    expand.add_argument(
        "--basis", choices=("monomial", "slide", "key"), default="monomial"
    )
    expand.add_argument("--strategy", help="expansion strategy (model) to use")
    expand.add_argument("--format", choices=("plain", "json"), default="plain")
    expand.set_defaults(func=_cmd_expand)

    enum = sub.add_parser("enumerate", help="list combinatorial objects")
    enum.add_argument(
        "--object",
        required=True,
        choices=("words", "qrd", "rd", "yrd", "sbt", "ssbt", "skt", "kohnert"),
    )
    enum.add_argument("--perm", type=_perm)
    enum.add_argument("--comp", type=_comp)
    enum.add_argument("--format", choices=("plain", "json", "art"), default="plain")
    enum.set_defaults(func=_cmd_enumerate)

    verify = sub.add_parser("verify", help="run identity suites")
    verify.add_argument(
        "--suite", required=True, choices=("cross-model", "bijections", "involutions")
    )
    verify.add_argument("--n", type=int, required=True)
    verify.add_argument("--sample", type=int, help="sample size instead of all of S_n")
    verify.add_argument("--seed", type=int, help="seed for sampled suites")
    verify.set_defaults(func=_cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except argparse.ArgumentTypeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SizeGuardError as exc:
        print(f"resource guard: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
