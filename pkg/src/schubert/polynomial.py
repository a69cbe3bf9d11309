"""
Sparse exact-integer multivariate polynomials, with constructors for
fundamental slide, key, and Schubert polynomials and the divided-difference
oracle.

Exponent vectors are stored with trailing zeros stripped, so x1^2 means the
same polynomial whatever the ambient variable count; arithmetic auto-extends.
Serialized term order is graded reverse-lexicographic, highest degree first.
"""
from __future__ import annotations

import functools
from typing import Iterable, Mapping, Union

from .core import (
    Permutation,
    WeakComposition,
    check_cell_guard,
    inversions,
    key_diagram,
    rothe_diagram,
)

SCHUBERT_STRATEGIES = (
    "compatible-sequences",
    "slide-words",
    "reduced-diagrams",
    "ssbt",
    "key-yamanouchi",
    "kohnert",
    "divided-difference",
)

KEY_STRATEGIES = ("skt", "kohnert")


class InexactDivisionError(ArithmeticError):
    """A divided difference did not divide exactly; internal arithmetic bug."""


def _strip(exp: Iterable[int]) -> tuple[int, ...]:
    e = tuple(exp)
    while e and e[-1] == 0:
        e = e[:-1]
    return e


def _grevlex_key(exp: tuple[int, ...], n: int):
    # Highest total degree first; ties broken so that the last variable in
    # which two exponents differ decides, with the smaller power winning.
    padded = exp + (0,) * (n - len(exp))
    return (-sum(exp), tuple(reversed(padded)))


class Polynomial:
    """An integer polynomial as a mapping from exponent tuples to coefficients.

    >>> (Polynomial.x(1) + Polynomial.x(2)) * Polynomial.x(1)
    Polynomial('x1^2 + x1*x2')
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, ...], int] | None = None):
        data: dict[tuple[int, ...], int] = {}
        if terms:
            for exp, coeff in terms.items():
                coeff = int(coeff)
                if coeff == 0:
                    continue
                e = _strip(exp)
                if any(x < 0 for x in e):
                    raise ValueError(f"negative exponent in {exp}")
                data[e] = data.get(e, 0) + coeff
                if data[e] == 0:
                    del data[e]
        self.terms = data

    @classmethod
    def zero(cls) -> Polynomial:
        return cls()

    @classmethod
    def one(cls) -> Polynomial:
        return cls({(): 1})

    @classmethod
    def x(cls, i: int) -> Polynomial:
        """The variable x_i (1-based)."""
        if i < 1:
            raise ValueError("variables are 1-based")
        return cls({(0,) * (i - 1) + (1,): 1})

    @classmethod
    def monomial(cls, exponents: Iterable[int], coefficient: int = 1) -> Polynomial:
        return cls({tuple(exponents): coefficient})

    @property
    def nvars(self) -> int:
        return max((len(e) for e in self.terms), default=0)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, exponents: Iterable[int]) -> int:
        return self.terms.get(_strip(exponents), 0)

    def coefficient_sum(self) -> int:
        return sum(self.terms.values())

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: Polynomial) -> Polynomial:
        out = dict(self.terms)
        for e, c in other.terms.items():
            new = out.get(e, 0) + c
            if new:
                out[e] = new
            else:
                out.pop(e, None)
        result = Polynomial.__new__(Polynomial)
        result.terms = out
        return result

    def __neg__(self) -> Polynomial:
        result = Polynomial.__new__(Polynomial)
        result.terms = {e: -c for e, c in self.terms.items()}
        return result

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def __mul__(self, other: Union[Polynomial, int]) -> Polynomial:
        if isinstance(other, int):
            return Polynomial({e: c * other for e, c in self.terms.items()})
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                if len(e1) < len(e2):
                    e1p, e2p = e2, e1
                else:
                    e1p, e2p = e1, e2
                e = tuple(
                    a + (e2p[i] if i < len(e2p) else 0) for i, a in enumerate(e1p)
                )
                new = out.get(e, 0) + c1 * c2
                if new:
                    out[e] = new
                else:
                    del out[e]
        result = Polynomial.__new__(Polynomial)
        result.terms = out
        return result

    __rmul__ = __mul__

    def swap_variables(self, i: int) -> Polynomial:
        """Act by the simple transposition exchanging x_i and x_{i+1}."""
        out: dict[tuple[int, ...], int] = {}
        for e, c in self.terms.items():
            padded = list(e) + [0] * (max(0, i + 1 - len(e)))
            padded[i - 1], padded[i] = padded[i], padded[i - 1]
            key = _strip(padded)
            out[key] = out.get(key, 0) + c
        return Polynomial(out)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        """Terms in graded reverse-lexicographic order, padded to nvars."""
        n = self.nvars
        keys = sorted(self.terms, key=lambda e: _grevlex_key(e, n))
        return [(e + (0,) * (n - len(e)), self.terms[e]) for e in keys]

    def text(self) -> str:
        """Human-readable form such as ``3*x1^2*x2``; zero prints ``0``."""
        if not self.terms:
            return "0"
        pieces = []
        for exp, coeff in self.sorted_terms():
            factors = []
            for i, p in enumerate(exp, start=1):
                if p == 1:
                    factors.append(f"x{i}")
                elif p > 1:
                    factors.append(f"x{i}^{p}")
            if not factors:
                pieces.append(str(coeff))
            elif coeff == 1:
                pieces.append("*".join(factors))
            elif coeff == -1:
                pieces.append("-" + "*".join(factors))
            else:
                pieces.append(f"{coeff}*" + "*".join(factors))
        return " + ".join(pieces)

    def to_records(self) -> list[dict]:
        return [
            {"coefficient": c, "exponents": list(e)} for e, c in self.sorted_terms()
        ]

    def __repr__(self) -> str:
        return f"Polynomial({self.text()!r})"


def arith(p: Polynomial, q: Polynomial, op: str) -> Polynomial:
    """Exact arithmetic dispatch: op is one of add, sub, mul."""
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise ValueError(f"unknown arithmetic op {op!r}")


def slide_monomials(a: WeakComposition) -> list[tuple[int, ...]]:
    """Exponent vectors b with b dominating a and flat(b) refining flat(a)."""
    if a.is_virtual:
        return []
    parts = a.parts
    n = len(parts)
    flat = [p for p in parts if p > 0]
    prefix_a = [0]
    for p in parts:
        prefix_a.append(prefix_a[-1] + p)
    out: list[tuple[int, ...]] = []

    def place(pos: int, block: int, rem: int, total: int, acc: list[int]) -> None:
        if pos == n:
            if block == len(flat) and rem == 0:
                out.append(tuple(acc))
            return
        # Remaining open piece plus unstarted blocks must fit the positions left.
        needed = (1 if rem else 0) + (len(flat) - block)
        if needed > n - pos:
            return
        floor = prefix_a[pos + 1]
        # Zero here, unless dominance already forces mass at this prefix.
        if total >= floor:
            acc.append(0)
            place(pos + 1, block, rem, total, acc)
            acc.pop()
        if rem:
            lo = max(1, floor - total)
            for c in range(lo, rem + 1):
                acc.append(c)
                place(pos + 1, block, rem - c, total + c, acc)
                acc.pop()
        elif block < len(flat):
            nxt = flat[block]
            lo = max(1, floor - total)
            for c in range(lo, nxt + 1):
                acc.append(c)
                place(pos + 1, block + 1, nxt - c, total + c, acc)
                acc.pop()

    place(0, 0, 0, 0, [])
    return out


def fundamental_slide(a: WeakComposition) -> Polynomial:
    """The fundamental slide polynomial of a weak composition; zero when
    virtual so that descent-composition sums stay total.

    >>> fundamental_slide(WeakComposition((3, 2))).text()
    'x1^3*x2^2'
    """
    if a.is_virtual:
        return Polynomial.zero()
    return Polynomial({b: 1 for b in slide_monomials(a)})


def divided_difference(p: Polynomial, i: int) -> Polynomial:
    """The i-th divided difference (p - s_i.p) / (x_i - x_{i+1}).

    The quotient is computed termwise (it is always exact on integer input)
    and re-multiplied to confirm exactness.
    """
    if i < 1:
        raise ValueError("divided differences are 1-based")
    out: dict[tuple[int, ...], int] = {}
    for e, c in p.terms.items():
        padded = e + (0,) * max(0, i + 1 - len(e))
        hi, lo = padded[i - 1], padded[i]
        if hi == lo:
            continue
        sign = 1 if hi > lo else -1
        lo, hi = min(hi, lo), max(hi, lo)
        base = list(padded)
        # (x^hi y^lo - x^lo y^hi) / (x - y) = sum_{t=lo}^{hi-1} x^t y^{hi+lo-1-t}
        for t in range(lo, hi):
            base[i - 1], base[i] = t, hi + lo - 1 - t
            key = _strip(base)
            new = out.get(key, 0) + sign * c
            if new:
                out[key] = new
            else:
                del out[key]
    result = Polynomial.__new__(Polynomial)
    result.terms = out
    xi_minus = Polynomial.x(i) - Polynomial.x(i + 1)
    if result * xi_minus != p - p.swap_variables(i):
        raise InexactDivisionError(f"divided difference {i} was not exact")
    return result


def staircase_monomial(n: int) -> Polynomial:
    """x1^(n-1) x2^(n-2) ... x_(n-1), the top Schubert polynomial of S_n."""
    return Polynomial.monomial(tuple(range(n - 1, 0, -1)))


def _schubert_divided_difference(w: Permutation) -> Polynomial:
    from .redword import super_yamanouchi_word

    wt = w.trimmed()
    n = max(wt.n, 1)
    u = wt.inverse().extended(n) * Permutation.longest(n)
    p = staircase_monomial(n)
    for letter in super_yamanouchi_word(u).letters:
        p = divided_difference(p, letter)
    return p


def _schubert_compatible_sequences(w: Permutation) -> Polynomial:
    from .redword import _compatible_flags, reduced_word_tuples

    terms: dict[tuple[int, ...], int] = {}
    for letters in reduced_word_tuples(w.trimmed().values):
        for flags in _compatible_flags(letters):
            exp = [0] * max(flags, default=0)
            for b in flags:
                exp[b - 1] += 1
            key = _strip(exp)
            terms[key] = terms.get(key, 0) + 1
    return Polynomial(terms)


def _schubert_slide_words(w: Permutation) -> Polynomial:
    from .redword import _descent_composition, reduced_word_tuples

    total = Polynomial.zero()
    for letters in reduced_word_tuples(w.trimmed().values):
        total = total + fundamental_slide(_descent_composition(letters))
    return total


def _schubert_reduced_diagrams(w: Permutation) -> Polynomial:
    from .diagram import enumerate_diagrams

    terms: dict[tuple[int, ...], int] = {}
    for d in enumerate_diagrams(w, "rd"):
        key = d.weight().parts
        terms[key] = terms.get(key, 0) + 1
    return Polynomial(terms)


def _schubert_ssbt(w: Permutation) -> Polynomial:
    from .balanced import enumerate_balanced

    terms: dict[tuple[int, ...], int] = {}
    for t in enumerate_balanced(w, "ssbt"):
        key = t.weight().parts
        terms[key] = terms.get(key, 0) + 1
    return Polynomial(terms)


def _schubert_key_yamanouchi(w: Permutation) -> Polynomial:
    from .diagram import enumerate_diagrams

    total = Polynomial.zero()
    for d in enumerate_diagrams(w, "yrd"):
        total = total + key_polynomial(d.weight(), "skt")
    return total


def _schubert_kohnert(w: Permutation) -> Polynomial:
    from .kohnert import kohnert_polynomial

    return kohnert_polynomial(rothe_diagram(w))


_SCHUBERT_DISPATCH = {
    "compatible-sequences": _schubert_compatible_sequences,
    "slide-words": _schubert_slide_words,
    "reduced-diagrams": _schubert_reduced_diagrams,
    "ssbt": _schubert_ssbt,
    "key-yamanouchi": _schubert_key_yamanouchi,
    "kohnert": _schubert_kohnert,
    "divided-difference": _schubert_divided_difference,
}


def schubert(w: Permutation, strategy: str = "divided-difference") -> Polynomial:
    """The Schubert polynomial of w under any of the seven strategies.

    All strategies return the identical polynomial; the divided-difference
    construction is the independent oracle the combinatorial models are
    checked against.

    >>> schubert(Permutation((1, 2, 3))).text()
    '1'
    """
    if strategy not in _SCHUBERT_DISPATCH:
        raise ValueError(f"unknown strategy {strategy!r}; choose from {SCHUBERT_STRATEGIES}")
    check_cell_guard(inversions(w), f"Schubert polynomial of {w.values}")
    return _SCHUBERT_DISPATCH[strategy](w)


def _key_skt(a: WeakComposition) -> Polynomial:
    from .insertion import skt_descent_composition, standard_key_tableaux

    total = Polynomial.zero()
    for t in standard_key_tableaux(a):
        total = total + fundamental_slide(skt_descent_composition(t))
    return total


def _key_kohnert(a: WeakComposition) -> Polynomial:
    from .kohnert import kohnert_polynomial

    return kohnert_polynomial(key_diagram(a))


@functools.lru_cache(maxsize=256)
def _key_polynomial_cached(parts: tuple[int, ...], strategy: str) -> Polynomial:
    a = WeakComposition(parts)
    if strategy == "skt":
        return _key_skt(a)
    return _key_kohnert(a)


def key_polynomial(a: WeakComposition, strategy: str = "skt") -> Polynomial:
    """The key polynomial of a weak composition, via standard key tableaux or
    via Kohnert's rule; the two strategies agree.

    >>> key_polynomial(WeakComposition((0, 2))).text()
    'x1^2 + x1*x2 + x2^2'
    """
    if strategy not in KEY_STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}; choose from {KEY_STRATEGIES}")
    if a.is_virtual:
        raise ValueError("key polynomials are not defined for the virtual composition")
    check_cell_guard(a.size(), f"key polynomial of {a.parts}")
    return _key_polynomial_cached(a.parts, strategy)
