"""Canonical coordinates for the groups of non-repeating decorated trees.

For a set S of n+2 labels with minimum ``a`` and maximum ``z``, the *simple*
trees on S are the right-normed brackets ``[s1,[s2,...,[sn,z]...]]`` hung
from an ``a``-leaf, one for each ordering (s1..sn) of the interior labels.
Every non-repeating order n tree is an integer combination of these, and
decorations can be pushed onto the n+1 edges at the non-minimal leaves.
A :class:`LambdaVector` records, for each simple tree and each tuple of
leaf decorations, an integer coefficient.

Normalization steps, per tree:

1. edges already point toward the minimal leaf (OR is applied at build);
2. HOL: the element left on the edge of leaf ``j`` is the path product from
   ``j`` to the minimal leaf, every other edge becomes trivial;
3. AS: at each vertex of the min-to-max geodesic the hanging subtree is
   moved to the left, flipping the sign;
4. IHX: a hanging subtree ``[A,C]`` is split as
   ``[[A,C],P] = [A,[C,P]] - [C,[A,P]]`` until all hanging subtrees are
   leaves;
5. coefficients are collected per simple tree and decoration tuple.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations
from math import comb, factorial
from typing import NamedTuple

from .errors import ContextMismatch, RepeatingTree
from .groups import TRIVIAL, GroupElement
from .treesum import Context, TreeSum
from .trees import DecoratedTree, Leaf, Node

__all__ = [
    "BasisIndex",
    "LambdaVector",
    "lambda_rank",
    "basis_indices",
    "basis_tree",
    "normalize_lambda",
    "simple_expansion",
    "leaf_holonomies",
]


class BasisIndex(NamedTuple):
    labels: tuple  # sorted label set S
    middle: tuple  # interior labels in geodesic order, min side first

    def __str__(self):
        return f"[{','.join(map(str, self.labels))};{','.join(map(str, self.middle))}]"


def lambda_rank(n: int, m: int) -> int:
    """Number of simple trees of order ``n`` on labels 1..m: C(m, n+2)·n!.

    >>> lambda_rank(1, 3), lambda_rank(2, 4), lambda_rank(1, 4)
    (1, 2, 4)
    """
    if n < 0 or m < 1:
        raise ValueError("need n >= 0 and m >= 1")
    return comb(m, n + 2) * factorial(n)


def basis_indices(n: int, m: int) -> list[BasisIndex]:
    """All basis indices in lexicographic order."""
    out = []
    for S in combinations(range(1, m + 1), n + 2):
        for mid in permutations(S[1:-1]):
            out.append(BasisIndex(S, mid))
    return out


def basis_tree(index: BasisIndex, kind=None, decorations=None) -> DecoratedTree:
    """The simple tree for ``index``.

    ``decorations`` gives, for the non-minimal labels in increasing order,
    the element on that leaf's edge (oriented toward the tree); all other
    edges are trivial.
    """
    S, mid = index
    if kind is None:
        kind = decorations[0].kind if decorations else TRIVIAL
    e = kind.identity()
    deco = dict(zip(S[1:], decorations)) if decorations else {}
    body = Leaf(S[-1], deco.get(S[-1], e))
    for lab in reversed(mid):
        body = Node(Leaf(lab, deco.get(lab, e)), body, e)
    return DecoratedTree(S[0], body)


class LambdaVector:
    """Element of the non-repeating tree group in simple-tree coordinates.

    Coordinates are a map ``(BasisIndex, decoration tuple) -> int``; the
    decoration tuple lists the leaf elements for the non-minimal labels in
    increasing label order (empty entries never occur: trivial groups use
    tuples of identities).
    """

    __slots__ = ("context", "_coords")

    def __init__(self, context: Context, coords=()):
        acc: dict = {}
        items = coords.items() if isinstance(coords, dict) else coords
        for key, c in items:
            acc[key] = acc.get(key, 0) + int(c)
        object.__setattr__(self, "context", context)
        object.__setattr__(
            self,
            "_coords",
            {k: c for k, c in sorted(acc.items(), key=lambda kv: _coord_key(kv[0])) if c},
        )

    def __setattr__(self, name, value):
        raise AttributeError("LambdaVector is immutable")

    @staticmethod
    def basis(n: int, m: int) -> list[BasisIndex]:
        return basis_indices(n, m)

    def items(self):
        """Pairs ``((index, decorations), coefficient)`` in canonical order."""
        return self._coords.items()

    @property
    def coords(self) -> dict:
        """Nested view ``index -> {decorations: coefficient}``."""
        out: dict = {}
        for (idx, decos), c in self._coords.items():
            out.setdefault(idx, {})[decos] = c
        return out

    def coefficient(self, index: BasisIndex, decorations=None) -> int:
        if decorations is None:
            e = self.context.kind.identity()
            decorations = (e,) * (len(index.labels) - 1)
        return self._coords.get((BasisIndex(*index), tuple(decorations)), 0)

    def is_zero(self) -> bool:
        return not self._coords

    def __eq__(self, other):
        if not isinstance(other, LambdaVector):
            return NotImplemented
        return self.context == other.context and self._coords == other._coords

    def __hash__(self):
        return hash((self.context, tuple(self._coords.items())))

    def _check(self, other):
        if self.context != other.context:
            raise ContextMismatch(f"{self.context} vs {other.context}")

    def __add__(self, other: LambdaVector) -> LambdaVector:
        self._check(other)
        return LambdaVector(self.context, list(self.items()) + list(other.items()))

    def __neg__(self):
        return LambdaVector(self.context, {k: -c for k, c in self.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, k: int):
        return LambdaVector(self.context, {key: k * c for key, c in self.items()})

    __rmul__ = __mul__

    def to_treesum(self) -> TreeSum:
        """Sum of decorated simple trees representing this vector."""
        kind = self.context.kind
        return TreeSum(
            self.context,
            [(basis_tree(idx, kind, decos), c) for (idx, decos), c in self.items()],
        )

    def __repr__(self):
        return f"LambdaVector({self.context}, {self._coords})"

    def __str__(self):
        return format_lambda(self)


def _coord_key(key):
    idx, decos = key
    return (idx.labels, idx.middle, tuple(g.sort_key() for g in decos))


def format_lambda(v: LambdaVector) -> str:
    """Text lines ``[S;middle] (g_2,...,g_max) coeff`` (decorations omitted
    for the trivial group), in lexicographic basis order."""
    lines = []
    for (idx, decos), c in v.items():
        if v.context.kind.is_trivial:
            lines.append(f"{idx} {c}")
        else:
            lines.append(f"{idx} ({','.join(str(g) for g in decos)}) {c}")
    return "\n".join(lines) + ("\n" if lines else "")


# ------------------------------------------------------------------ normalization


def leaf_holonomies(t: DecoratedTree) -> dict:
    """Path product from each non-anchor leaf up to the anchor.

    Invariant under HOL moves at every trivalent vertex.
    """
    out: dict = {}

    def walk(s, above: GroupElement):
        if isinstance(s, Leaf):
            out[s.label] = s.deco * above
        else:
            inner = s.deco * above
            walk(s.left, inner)
            walk(s.right, inner)

    walk(t.body, t.body.deco.kind.identity())
    return out


def _strip(s):
    if isinstance(s, Leaf):
        return s.label
    return (_strip(s.left), _strip(s.right))


@lru_cache(maxsize=None)
def _leafset(b) -> frozenset:
    if isinstance(b, int):
        return frozenset((b,))
    return _leafset(b[0]) | _leafset(b[1])


@lru_cache(maxsize=None)
def simple_expansion(bracket, top: int) -> tuple:
    """Write a bracket containing ``top`` in right-normed brackets ending in ``top``.

    ``bracket`` is an int (a generator) or a pair of brackets.  Returns a
    sorted tuple of ``(middle, coefficient)``.

    >>> simple_expansion(((2, 3), 4), 4)
    (((2, 3), 1), ((3, 2), -1))
    """
    if isinstance(bracket, int):
        if bracket != top:
            raise ValueError(f"bracket does not contain {top}")
        return (((), 1),)
    left, right = bracket
    if top in _leafset(right):
        off, path, sign = left, right, 1
    elif top in _leafset(left):
        off, path, sign = right, left, -1  # AS: [P,O] = -[O,P]
    else:
        raise ValueError(f"bracket does not contain {top}")
    acc: dict = {}
    if isinstance(off, int):
        for mid, c in simple_expansion(path, top):
            key = (off,) + mid
            acc[key] = acc.get(key, 0) + sign * c
    else:
        a, c_ = off
        # IHX at the geodesic vertex: [[A,C],P] = [A,[C,P]] - [C,[A,P]]
        for term, s in (((a, (c_, path)), 1), ((c_, (a, path)), -1)):
            for mid, c in simple_expansion(term, top):
                acc[mid] = acc.get(mid, 0) + sign * s * c
    return tuple(sorted((k, v) for k, v in acc.items() if v))


def normalize_lambda(s: TreeSum) -> LambdaVector:
    """Canonical coordinates of a non-repeating tree sum.

    >>> from lambdatrees.trees import Y
    >>> v = normalize_lambda(TreeSum.of(Y(2, 1, 3)))
    >>> v.coefficient(BasisIndex((1, 2, 3), (2,)))
    -1
    """
    coords: dict = {}
    for t, c in s.items():
        if not t.is_non_repeating():
            raise RepeatingTree(f"tree {t} has a repeated label")
        hol = leaf_holonomies(t)
        S = tuple(sorted(t.labels()))
        decos = tuple(hol[lab] for lab in S[1:])
        for mid, k in simple_expansion(_strip(t.body), S[-1]):
            key = (BasisIndex(S, mid), decos)
            coords[key] = coords.get(key, 0) + c * k
    return LambdaVector(s.context, coords)
