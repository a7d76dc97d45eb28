"""Magnus expansions of longitude words and non-repeating Milnor invariants.

A longitude is a word in the meridians x1..xm.  Its Magnus expansion
(``x -> 1 + X``) is truncated at a fixed degree; in non-repeating mode every
monomial with a repeated letter is discarded, which is compatible with
multiplication because such monomials span a two-sided ideal.

When the non-repeating coefficients of the i-th longitude vanish in degrees
1..n, its degree n+1 part (with X_i set to zero) is a Lie element.  Its
coordinates on right-normed brackets are the coefficients of the words that
end in their largest letter, and that is how ``mu^i_n`` is assembled.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ContextMismatch, LabelOutOfRange, LowerOrderNonzero, ParseError
from .groups import parse_word_letters
from .lambda_form import normalize_lambda
from .lie import LieElement, eta, lie_normalize
from .treesum import IntersectionForest, forest_to_sum

__all__ = [
    "MeridianWord",
    "MagnusPolynomial",
    "AllVanish",
    "ALL_VANISH",
    "magnus_expand",
    "mu_invariants",
    "first_nonvanishing_order",
    "verify_eta_identity",
    "sublink_longitudes",
    "commutator",
    "bracket_word",
    "parse_longitudes",
    "format_longitudes",
]


def _reduce(letters) -> tuple:
    out: list = []
    for g, e in letters:
        if out and out[-1] == (g, -e):
            out.pop()
        else:
            out.append((g, e))
    return tuple(out)


@dataclass(frozen=True)
class MeridianWord:
    """Longitude of component ``component`` as a reduced word in meridians.

    ``letters`` is a tuple of ``(generator, +1 or -1)``; it is freely
    reduced on construction.
    """

    component: int
    letters: tuple = ()

    def __post_init__(self):
        flat = []
        for g, e in self.letters:
            if g < 1:
                raise LabelOutOfRange(f"meridian x{g}")
            step = 1 if e > 0 else -1
            flat.extend([(g, step)] * abs(e))
        object.__setattr__(self, "letters", _reduce(flat))

    @classmethod
    def parse(cls, component: int, text: str, line: int = 1, column: int = 1) -> MeridianWord:
        return cls(component, tuple(parse_word_letters(text, line, column)))

    def inverse(self) -> MeridianWord:
        return MeridianWord(self.component, tuple((g, -e) for g, e in reversed(self.letters)))

    def __mul__(self, other: MeridianWord) -> MeridianWord:
        return MeridianWord(self.component, self.letters + other.letters)

    def generators(self) -> frozenset:
        return frozenset(g for g, _ in self.letters)

    def __str__(self):
        if not self.letters:
            return "e"
        return " ".join(f"x{g}" if e > 0 else f"x{g}^-1" for g, e in self.letters)


def commutator(u, v):
    """Letters of ``u v u^-1 v^-1`` for letter tuples ``u`` and ``v``."""
    inv = lambda w: tuple((g, -e) for g, e in reversed(w))
    return _reduce(tuple(u) + tuple(v) + inv(u) + inv(v))


def bracket_word(expr) -> tuple:
    """Letters of the iterated commutator for a bracket expression.

    >>> bracket_word((2, 3))
    ((2, 1), (3, 1), (2, -1), (3, -1))
    """
    if isinstance(expr, int):
        return ((expr, 1),)
    return commutator(bracket_word(expr[0]), bracket_word(expr[1]))


class MagnusPolynomial:
    """Truncated non-commutative polynomial: word tuple -> integer."""

    __slots__ = ("degree", "non_repeating", "terms")

    def __init__(self, degree: int, terms=(), non_repeating: bool = False):
        acc: dict = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for w, c in items:
            w = tuple(w)
            if len(w) > degree or (non_repeating and len(set(w)) != len(w)):
                continue
            acc[w] = acc.get(w, 0) + c
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "non_repeating", non_repeating)
        object.__setattr__(self, "terms", {w: c for w, c in sorted(acc.items(), key=lambda kv: (len(kv[0]), kv[0])) if c})

    def __setattr__(self, name, value):
        raise AttributeError("MagnusPolynomial is immutable")

    @classmethod
    def one(cls, degree: int, non_repeating: bool = False) -> MagnusPolynomial:
        return cls(degree, {(): 1}, non_repeating)

    def __mul__(self, other: MagnusPolynomial) -> MagnusPolynomial:
        D = min(self.degree, other.degree)
        nr = self.non_repeating or other.non_repeating
        acc: dict = {}
        for u, cu in self.terms.items():
            for v, cv in other.terms.items():
                if len(u) + len(v) > D:
                    continue
                if nr and set(u) & set(v):
                    continue
                acc[u + v] = acc.get(u + v, 0) + cu * cv
        return MagnusPolynomial(D, acc, nr)

    def __eq__(self, other):
        return (
            isinstance(other, MagnusPolynomial)
            and self.degree == other.degree
            and self.non_repeating == other.non_repeating
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.degree, self.non_repeating, tuple(self.terms.items())))

    def coefficient(self, word) -> int:
        return self.terms.get(tuple(word), 0)

    def homogeneous(self, d: int) -> dict:
        return {w: c for w, c in self.terms.items() if len(w) == d}

    def __repr__(self):
        return f"MagnusPolynomial({self.degree}, {self.terms})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.terms.items():
            mono = "".join(f"X{k}" for k in w)
            if not mono:
                parts.append(("-" if c < 0 else "+", str(abs(c))))
            else:
                parts.append(("-" if c < 0 else "+", mono if abs(c) == 1 else f"{abs(c)}{mono}"))
        out = " ".join(f"{s} {t}" for s, t in parts)
        return out[2:] if out.startswith("+ ") else out


def _letter_series(g: int, e: int, D: int, nr: bool) -> MagnusPolynomial:
    if e > 0:
        return MagnusPolynomial(D, {(): 1, (g,): 1}, nr)
    return MagnusPolynomial(D, {(g,) * k: (-1) ** k for k in range(D + 1)}, nr)


def magnus_expand(w, D: int, non_repeating: bool = False) -> MagnusPolynomial:
    """Magnus expansion of a word, truncated above degree ``D``.

    ``w`` is a :class:`MeridianWord` or a sequence of ``(generator, ±1)``.

    >>> print(magnus_expand(MeridianWord.parse(1, "x2 x3 x2^-1 x3^-1"), 2, True))
    1 + X2X3 - X3X2
    """
    if D < 1:
        raise ValueError("truncation degree must be at least 1")
    letters = w.letters if isinstance(w, MeridianWord) else MeridianWord(0, tuple(w)).letters
    out = MagnusPolynomial.one(D, non_repeating)
    for g, e in letters:
        out = out * _letter_series(g, e, D, non_repeating)
    return out


# ------------------------------------------------------------------ invariants


def _by_component(longitudes) -> dict:
    out = {}
    for lw in longitudes:
        if lw.component in out:
            raise ContextMismatch(f"two longitudes for component {lw.component}")
        out[lw.component] = lw
    m = len(out)
    if set(out) != set(range(1, m + 1)):
        raise ContextMismatch(f"longitudes must be indexed 1..{m}, got {sorted(out)}")
    for lw in out.values():
        bad = [g for g in lw.generators() if g > m]
        if bad:
            raise LabelOutOfRange(f"longitude {lw.component} uses x{bad[0]} with only {m} components")
    return out


def _component_mu(lw: MeridianWord, n: int) -> LieElement:
    i = lw.component
    poly = magnus_expand(lw, n + 1, non_repeating=True)
    terms = []
    for w, c in poly.terms.items():
        if not w or i in w:
            continue
        if len(w) <= n:
            raise LowerOrderNonzero(i, w, c)
        if w[-1] == max(w):
            expr = w[-1]
            for s in reversed(w[:-1]):
                expr = (s, expr)
            terms.append((expr, c))
    return LieElement(terms)


def mu_invariants(longitudes, n: int) -> dict:
    """Order ``n`` non-repeating Milnor invariants, one Lie element per component.

    Raises :class:`LowerOrderNonzero` with a witness if some lower
    non-repeating coefficient is nonzero.
    """
    if n < 0:
        raise ValueError("order must be non-negative")
    comps = _by_component(longitudes)
    return {i: _component_mu(comps[i], n) for i in sorted(comps)}


class AllVanish:
    """Verdict that every non-repeating invariant vanishes."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __bool__(self):
        return False

    def __repr__(self):
        return "AllVanish"


ALL_VANISH = AllVanish()


def first_nonvanishing_order(longitudes):
    """``(n, invariants)`` for the least order with a nonzero invariant,
    scanning n = 0..m-2, or :data:`ALL_VANISH`."""
    comps = _by_component(longitudes)
    m = len(comps)
    for n in range(0, m - 1):
        mus = mu_invariants(comps.values(), n)
        if any(not a.is_zero() for a in mus.values()):
            return n, mus
    return ALL_VANISH


def verify_eta_identity(forest: IntersectionForest, longitudes) -> dict:
    """Compare ``eta(i, lambda_n)`` with ``mu^i_n`` for each component ``i``."""
    comps = _by_component(longitudes)
    if len(comps) != forest.labels:
        raise ContextMismatch(f"{len(comps)} longitudes for a forest on {forest.labels} labels")
    lam = normalize_lambda(forest_to_sum(forest))
    mus = mu_invariants(comps.values(), forest.order)
    return {i: lie_normalize(eta(i, lam)) == lie_normalize(mus[i]) for i in sorted(comps)}


def sublink_longitudes(longitudes, components) -> list[MeridianWord]:
    """Longitudes of a sublink: other meridians are set to 1 and the kept
    components are renumbered 1..k in the given order."""
    comps = _by_component(longitudes)
    index = {c: k for k, c in enumerate(components, start=1)}
    out = []
    for c in components:
        kept = tuple((index[g], e) for g, e in comps[c].letters if g in index)
        out.append(MeridianWord(index[c], kept))
    return out


# ------------------------------------------------------------------ file format


def parse_longitudes(text: str) -> list[MeridianWord]:
    """Parse lines ``i : word``; ``e`` is the empty word, ``#`` starts a comment."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        head, sep, rest = line.partition(":")
        if not sep:
            raise ParseError("expected 'i : word'", lineno, len(line) + 1)
        try:
            i = int(head)
        except ValueError:
            raise ParseError(f"bad component index {head.strip()!r}", lineno, 1) from None
        col = len(head) + 2 + (len(rest) - len(rest.lstrip()))
        out.append(MeridianWord.parse(i, rest.strip(), lineno, col))
    return out


def format_longitudes(longitudes) -> str:
    return "".join(f"{lw.component} : {lw}\n" for lw in longitudes)
