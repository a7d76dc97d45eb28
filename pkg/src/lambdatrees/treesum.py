"""Formal integer combinations of decorated trees, and intersection forests.

A :class:`TreeSum` is an element of the free abelian group on trees of one
order; no relations are applied beyond OR (built into tree equality), so
repeating sums compare syntactically.  Use
:func:`lambdatrees.lambda_form.normalize_lambda` to compare non-repeating
sums modulo AS, IHX and HOL.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import ContextMismatch, LabelOutOfRange, ParseError
from .groups import TRIVIAL, GroupKind
from .trees import DecoratedTree, format_tree, parse_tree

__all__ = [
    "Context",
    "TreeSum",
    "IntersectionForest",
    "forest_to_sum",
    "parse_forest",
    "parse_treesum",
    "format_treesum",
]


@dataclass(frozen=True)
class Context:
    """Order ``n``, label count ``m`` and decoration group of a sum."""

    order: int
    labels: int
    kind: GroupKind = TRIVIAL

    def check_tree(self, t: DecoratedTree) -> None:
        if t.order != self.order:
            raise ContextMismatch(f"tree {t} has order {t.order}, expected {self.order}")
        if t.kind != self.kind:
            raise ContextMismatch(f"tree {t} is decorated in {t.kind}, expected {self.kind}")
        bad = [lab for lab in t.labels() if not 1 <= lab <= self.labels]
        if bad:
            raise LabelOutOfRange(f"tree {t} has label {bad[0]} outside 1..{self.labels}")


class TreeSum:
    """Immutable finite map tree -> nonzero integer coefficient."""

    __slots__ = ("context", "_terms")

    def __init__(self, context: Context, terms: Mapping[DecoratedTree, int] | Iterable = ()):
        acc: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for t, c in items:
            context.check_tree(t)
            acc[t] = acc.get(t, 0) + int(c)
        object.__setattr__(self, "context", context)
        object.__setattr__(self, "_terms", {t: c for t, c in sorted(acc.items()) if c})

    def __setattr__(self, name, value):
        raise AttributeError("TreeSum is immutable")

    @classmethod
    def of(cls, tree: DecoratedTree, coefficient: int = 1, labels: int | None = None) -> TreeSum:
        """Single-term sum with the context read off the tree."""
        m = labels if labels is not None else max(tree.labels())
        return cls(Context(tree.order, m, tree.kind), {tree: coefficient})

    @classmethod
    def zero(cls, context: Context) -> TreeSum:
        return cls(context)

    # mapping protocol
    def __getitem__(self, t):
        return self._terms.get(t, 0)

    def __iter__(self):
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other):
        if not isinstance(other, TreeSum):
            return NotImplemented
        return self.context == other.context and self._terms == other._terms

    def __hash__(self):
        return hash((self.context, tuple(self._terms.items())))

    # arithmetic
    def _check(self, other: TreeSum):
        if self.context != other.context:
            raise ContextMismatch(f"{self.context} vs {other.context}")

    def __add__(self, other: TreeSum) -> TreeSum:
        self._check(other)
        return TreeSum(self.context, list(self.items()) + list(other.items()))

    def __neg__(self) -> TreeSum:
        return TreeSum(self.context, {t: -c for t, c in self.items()})

    def __sub__(self, other: TreeSum) -> TreeSum:
        return self + (-other)

    def __mul__(self, k: int) -> TreeSum:
        return TreeSum(self.context, {t: k * c for t, c in self.items()})

    __rmul__ = __mul__

    def with_labels(self, m: int) -> TreeSum:
        """Same terms in a context with label count ``m``."""
        return TreeSum(Context(self.context.order, m, self.context.kind), self._terms)

    def is_non_repeating(self) -> bool:
        return all(t.is_non_repeating() for t in self)

    def __repr__(self):
        return f"TreeSum({self.context}, {format_treesum(self)!r})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for t, c in self.items():
            sign = "-" if c < 0 else "+"
            mag = "" if abs(c) == 1 else f"{abs(c)}*"
            parts.append(f"{sign} {mag}{format_tree(t)}")
        out = " ".join(parts)
        return out[2:] if out.startswith("+ ") else out


@dataclass(frozen=True)
class IntersectionForest:
    """Signed trees of one order: the combinatorial record of unpaired
    intersection points."""

    entries: tuple
    order: int
    labels: int
    kind: GroupKind = TRIVIAL

    def __post_init__(self):
        ctx = Context(self.order, self.labels, self.kind)
        for sign, t in self.entries:
            if sign not in (1, -1):
                raise ValueError(f"sign must be +1 or -1, got {sign}")
            ctx.check_tree(t)

    @property
    def context(self) -> Context:
        return Context(self.order, self.labels, self.kind)


def forest_to_sum(forest: IntersectionForest) -> TreeSum:
    """Sum of signed trees; isomorphic entries (modulo OR) combine.

    >>> from lambdatrees.trees import Y
    >>> f = IntersectionForest(((1, Y(1, 2, 3)), (-1, Y(1, 2, 3))), 1, 3)
    >>> forest_to_sum(f).is_zero()
    True
    """
    return TreeSum(forest.context, [(t, s) for s, t in forest.entries])


# ------------------------------------------------------------------ file formats


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if line.strip():
            yield lineno, line


def _infer(trees, order, labels, kind):
    if order is None:
        order = trees[0].order if trees else 0
    if labels is None:
        labels = max((max(t.labels()) for t in trees), default=order + 2)
    return Context(order, labels, kind)


def parse_forest(text: str, order: int | None = None, labels: int | None = None, kind: GroupKind = TRIVIAL) -> IntersectionForest:
    """Parse lines ``+ TREE`` / ``- TREE``; ``#`` starts a comment."""
    entries = []
    for lineno, line in _content_lines(text):
        stripped = line.lstrip()
        col = len(line) - len(stripped) + 1
        if stripped[0] not in "+-":
            raise ParseError("forest entry must start with '+' or '-'", lineno, col)
        sign = 1 if stripped[0] == "+" else -1
        rest = stripped[1:]
        if rest and rest[0] not in " \t":
            raise ParseError("expected whitespace after sign", lineno, col + 1)
        t = parse_tree(rest, kind, labels, line=lineno, column=col + 1)
        entries.append((sign, t))
    ctx = _infer([t for _, t in entries], order, labels, kind)
    return IntersectionForest(tuple(entries), ctx.order, ctx.labels, kind)


def parse_treesum(text: str, order: int | None = None, labels: int | None = None, kind: GroupKind = TRIVIAL) -> TreeSum:
    """Parse lines ``COEFF TREE``."""
    terms = []
    for lineno, line in _content_lines(text):
        stripped = line.lstrip()
        col = len(line) - len(stripped) + 1
        head, _, rest = stripped.partition(" ")
        try:
            coeff = int(head)
        except ValueError:
            raise ParseError(f"expected an integer coefficient, got {head!r}", lineno, col) from None
        t = parse_tree(rest, kind, labels, line=lineno, column=col + len(head) + 1)
        terms.append((t, coeff))
    ctx = _infer([t for t, _ in terms], order, labels, kind)
    return TreeSum(ctx, terms)


def format_treesum(s: TreeSum) -> str:
    """One ``COEFF TREE`` line per term, in canonical tree order."""
    return "".join(f"{c} {format_tree(t)}\n" for t, c in s.items())
