"""The reduced free Lie algebra on X1..Xm and the tree-to-bracket maps eta.

A bracket expression is an ``int`` (the generator X_k) or a pair of
expressions.  Any bracket with a repeated generator is zero, so
:func:`bracket` drops such terms.

Normal forms use the right-normed brackets
``[X_s1,[X_s2,...,[X_sn,X_z]...]]`` where ``z`` is the largest generator
involved.  Expanded as an associative polynomial (``[A,B] = AB - BA``), the
only word of such a bracket ending in ``X_z`` is ``X_s1...X_sn X_z``.  So
the coordinates of any element are read off its associative expansion:
the coefficient of each word ending in its maximal letter.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import (
    GeneratorClash,
    GroupKindUnsupported,
    MixedDegree,
    ParseError,
    RepeatingTree,
)
from .groups import TRIVIAL
from .lambda_form import LambdaVector, _leafset, _strip
from .treesum import Context, TreeSum
from .trees import DecoratedTree, Leaf, Node

__all__ = [
    "LieElement",
    "LieNormalForm",
    "X",
    "bracket",
    "lie_normalize",
    "eta",
    "eta_left_inverse",
    "parse_bracket",
    "parse_lie_sum",
    "format_bracket",
    "format_lie_sum",
]


def _degree(expr) -> int:
    return 1 if isinstance(expr, int) else _degree(expr[0]) + _degree(expr[1])


def _repeats(expr) -> bool:
    gens = []

    def walk(e):
        if isinstance(e, int):
            gens.append(e)
        else:
            walk(e[0])
            walk(e[1])

    walk(expr)
    return len(gens) != len(set(gens))


class LieElement:
    """Integer combination of square-free bracket expressions."""

    __slots__ = ("_terms",)

    def __init__(self, terms=()):
        acc: dict = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for expr, c in items:
            if _repeats(expr):
                continue
            acc[expr] = acc.get(expr, 0) + int(c)
        object.__setattr__(self, "_terms", {e: c for e, c in sorted(acc.items(), key=lambda kv: _expr_key(kv[0])) if c})

    def __setattr__(self, name, value):
        raise AttributeError("LieElement is immutable")

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def degree(self) -> int | None:
        """Common degree of all terms, ``None`` for zero."""
        degs = {_degree(e) for e in self._terms}
        if len(degs) > 1:
            raise MixedDegree(f"terms of degrees {sorted(degs)}")
        return degs.pop() if degs else None

    def generators(self) -> frozenset:
        out: frozenset = frozenset()
        for e in self._terms:
            out |= _leafset(e)
        return out

    def __add__(self, other: LieElement) -> LieElement:
        return LieElement(list(self.items()) + list(other.items()))

    def __neg__(self):
        return LieElement({e: -c for e, c in self.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, k: int):
        return LieElement({e: k * c for e, c in self.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        """Syntactic equality; compare :func:`lie_normalize` results for
        equality in the Lie algebra."""
        return isinstance(other, LieElement) and self._terms == other._terms

    def __hash__(self):
        return hash(tuple(self._terms.items()))

    def __repr__(self):
        return f"LieElement({str(self)!r})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.items():
            sign = "-" if c < 0 else "+"
            mag = "" if abs(c) == 1 else f"{abs(c)}*"
            parts.append(f"{sign} {mag}{format_bracket(e)}")
        out = " ".join(parts)
        return out[2:] if out.startswith("+ ") else out


def _expr_key(expr):
    if isinstance(expr, int):
        return (0, expr)
    return (1, _expr_key(expr[0]), _expr_key(expr[1]))


def X(i: int) -> LieElement:
    """The generator X_i."""
    return LieElement({i: 1})


def bracket(a: LieElement, b: LieElement) -> LieElement:
    """Bilinear bracket; terms with a repeated generator vanish.

    >>> print(bracket(X(2), X(3)))
    [X2,X3]
    >>> bracket(X(2), X(2)).is_zero()
    True
    """
    return LieElement([((ea, eb), ca * cb) for ea, ca in a.items() for eb, cb in b.items()])


# ------------------------------------------------------------------ normal form


@lru_cache(maxsize=None)
def _expand(expr) -> tuple:
    """Associative expansion of a bracket as a tuple of (word, coeff)."""
    if isinstance(expr, int):
        return (((expr,), 1),)
    acc: dict = {}
    left, right = _expand(expr[0]), _expand(expr[1])
    for u, cu in left:
        for v, cv in right:
            acc[u + v] = acc.get(u + v, 0) + cu * cv
            acc[v + u] = acc.get(v + u, 0) - cu * cv
    return tuple((w, c) for w, c in acc.items() if c)


class LieNormalForm:
    """Coordinates on right-normed brackets ending in the largest generator.

    Keys are words ``(s1, ..., sn, z)`` with ``z`` the maximum letter,
    standing for ``[X_s1,[X_s2,...,[X_sn,X_z]...]]``.
    """

    __slots__ = ("coords",)

    def __init__(self, coords=()):
        items = coords.items() if isinstance(coords, dict) else coords
        acc: dict = {}
        for w, c in items:
            acc[tuple(w)] = acc.get(tuple(w), 0) + c
        object.__setattr__(self, "coords", {w: c for w, c in sorted(acc.items(), key=lambda kv: (sorted(kv[0]), kv[0])) if c})

    def __setattr__(self, name, value):
        raise AttributeError("LieNormalForm is immutable")

    def __eq__(self, other):
        return isinstance(other, LieNormalForm) and self.coords == other.coords

    def __hash__(self):
        return hash(tuple(self.coords.items()))

    def is_zero(self) -> bool:
        return not self.coords

    def coefficient(self, word) -> int:
        return self.coords.get(tuple(word), 0)

    def to_lie(self) -> LieElement:
        terms = []
        for w, c in self.coords.items():
            expr = w[-1]
            for s in reversed(w[:-1]):
                expr = (s, expr)
            terms.append((expr, c))
        return LieElement(terms)

    def __repr__(self):
        return f"LieNormalForm({self.coords})"

    def __str__(self):
        return str(self.to_lie())


def lie_normalize(a: LieElement) -> LieNormalForm:
    """Coordinates of ``a`` on the right-normed basis.

    >>> lie_normalize(bracket(X(3), X(2))).coords
    {(2, 3): -1}
    """
    a.degree  # raises MixedDegree
    acc: dict = {}
    for expr, c in a.items():
        for w, k in _expand(expr):
            if w[-1] == max(w):
                acc[w] = acc.get(w, 0) + c * k
    return LieNormalForm(acc)


# ------------------------------------------------------------------ eta


def _tree_terms(v):
    if isinstance(v, LambdaVector):
        v = v.to_treesum()
    if not v.context.kind.is_trivial:
        raise GroupKindUnsupported(f"eta is defined for undecorated trees, got {v.context.kind}")
    return v


def eta(i: int, v) -> LieElement:
    """Bracket read off each tree from its ``i``-leaf; trees without one map to 0.

    Accepts a non-repeating :class:`TreeSum` or a :class:`LambdaVector`.

    >>> from lambdatrees.trees import Y
    >>> print(eta(1, TreeSum.of(Y(1, 2, 3))))
    [X2,X3]
    """
    s = _tree_terms(v)
    terms = []
    for t, c in s.items():
        if not t.is_non_repeating():
            raise RepeatingTree(f"tree {t} has a repeated label")
        if i in t.labels():
            terms.append((_strip(t.rooted_at_label(i)), c))
    return LieElement(terms)


def _to_body(expr, e):
    if isinstance(expr, int):
        return Leaf(expr, e)
    return Node(_to_body(expr[0], e), _to_body(expr[1], e), e)


def eta_left_inverse(i: int, a: LieElement, labels: int | None = None) -> TreeSum:
    """Put an ``i``-leaf in place of the root of each bracket.

    ``labels`` sets the label count of the result (default: the largest
    label involved).
    """
    if i in a.generators():
        raise GeneratorClash(f"X{i} occurs in {a}")
    deg = a.degree
    if deg is None:
        m = labels if labels is not None else i
        return TreeSum(Context(0, m))
    e = TRIVIAL.identity()
    m = labels if labels is not None else max(a.generators() | {i})
    ctx = Context(deg - 1, m)
    return TreeSum(ctx, [(DecoratedTree(i, _to_body(expr, e)), c) for expr, c in a.items()])


# ------------------------------------------------------------------ text format


def format_bracket(expr) -> str:
    if isinstance(expr, int):
        return f"X{expr}"
    return f"[{format_bracket(expr[0])},{format_bracket(expr[1])}]"


class _Reader:
    def __init__(self, text, line, column):
        self.text, self.pos, self.line, self.col0 = text, 0, line, column

    def error(self, msg):
        raise ParseError(msg, self.line, self.col0 + self.pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos] in " \t":
            self.pos += 1

    def expr(self):
        self.skip()
        if self.pos >= len(self.text):
            self.error("unexpected end of input")
        ch = self.text[self.pos]
        if ch == "X":
            self.pos += 1
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            if start == self.pos:
                self.error("expected a generator index after 'X'")
            k = int(self.text[start:self.pos])
            if k < 1:
                self.pos = start
                self.error("generator index must be positive")
            return k
        if ch == "[":
            self.pos += 1
            a = self.expr()
            self.skip()
            if self.pos >= len(self.text) or self.text[self.pos] != ",":
                self.error("expected ','")
            self.pos += 1
            b = self.expr()
            self.skip()
            if self.pos >= len(self.text) or self.text[self.pos] != "]":
                self.error("expected ']'")
            self.pos += 1
            return (a, b)
        self.error(f"unexpected character {ch!r}")


def parse_bracket(text: str, line: int = 1, column: int = 1):
    """Parse ``X INT | [expr,expr]`` into a bracket expression."""
    r = _Reader(text, line, column)
    out = r.expr()
    r.skip()
    if r.pos != len(text):
        r.error("trailing characters")
    return out


def parse_lie_sum(text: str) -> LieElement:
    """Parse lines ``COEFF EXPR`` (``#`` comments allowed)."""
    terms = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        stripped = line.lstrip()
        if not stripped:
            continue
        col = len(line) - len(stripped) + 1
        head, _, rest = stripped.partition(" ")
        try:
            c = int(head)
        except ValueError:
            raise ParseError(f"expected an integer coefficient, got {head!r}", lineno, col) from None
        terms.append((parse_bracket(rest, lineno, col + len(head) + 1), c))
    return LieElement(terms)


def format_lie_sum(a: LieElement) -> str:
    return "".join(f"{c} {format_bracket(e)}\n" for e, c in a.items())
