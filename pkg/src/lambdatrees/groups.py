"""Edge-decoration groups: trivial, free abelian Z^k and free F_k.

Elements are immutable and hashable.  Free-group words are stored as tuples
of signed generator indices (``-2`` is the inverse of ``x2``) and are always
freely reduced; free abelian elements are exponent vectors.

>>> Z2 = GroupKind.parse("zk:2")
>>> g = Z2.parse_word("x1 x2^-1")
>>> (g * g).payload
(2, -2)
>>> F = GroupKind.parse("free:2")
>>> w = F.parse_word("x1 x2")
>>> str(w * w.inverse())
'e'
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import total_ordering

from .errors import ParseError, UnreducedWord

__all__ = ["GroupKind", "GroupElement", "TRIVIAL", "parse_word_letters", "format_letters"]

_TERM = re.compile(r"x(\d+)(?:\^(-?\d+))?$")


def parse_word_letters(text: str, line: int = 1, column: int = 1) -> list[tuple[int, int]]:
    """Split a word ``"e"`` or ``"x1 x2^-1 ..."`` into (generator, exponent) pairs.

    Exponents are kept as written; no reduction happens here.
    """
    text = text.strip()
    if text == "e" or text == "":
        return []
    out = []
    pos = 0
    for tok in text.split():
        m = _TERM.match(tok)
        if m is None:
            col = column + text.find(tok, pos)
            raise ParseError(f"bad word term {tok!r}", line, col)
        pos = text.find(tok, pos) + len(tok)
        gen = int(m.group(1))
        exp = int(m.group(2)) if m.group(2) is not None else 1
        if gen < 1:
            raise ParseError(f"generator index must be >= 1 in {tok!r}", line, column)
        out.append((gen, exp))
    return out


def format_letters(pairs) -> str:
    """Inverse of :func:`parse_word_letters`, compressing runs of a generator."""
    runs: list[list[int]] = []
    for gen, exp in pairs:
        if runs and runs[-1][0] == gen:
            runs[-1][1] += exp
            if runs[-1][1] == 0:
                runs.pop()
        elif exp != 0:
            runs.append([gen, exp])
    if not runs:
        return "e"
    return " ".join(f"x{g}" if e == 1 else f"x{g}^{e}" for g, e in runs)


@dataclass(frozen=True)
class GroupKind:
    """Which group decorates tree edges.

    ``name`` is one of ``"trivial"``, ``"zk"`` (free abelian of rank ``rank``)
    or ``"free"`` (free of rank ``rank``).
    """

    name: str = "trivial"
    rank: int = 0

    def __post_init__(self):
        if self.name not in ("trivial", "zk", "free"):
            raise ValueError(f"unknown group kind {self.name!r}")
        if self.name == "trivial" and self.rank != 0:
            raise ValueError("trivial group has rank 0")
        if self.rank < 0:
            raise ValueError("negative rank")

    @classmethod
    def parse(cls, text: str) -> GroupKind:
        """Parse ``trivial``, ``zk:K`` or ``free:K``."""
        text = text.strip()
        if text == "trivial":
            return cls()
        name, _, k = text.partition(":")
        if name not in ("zk", "free") or not k.isdigit():
            raise ParseError(f"bad group kind {text!r}; expected trivial, zk:K or free:K")
        return cls(name, int(k))

    def __str__(self):
        return "trivial" if self.name == "trivial" else f"{self.name}:{self.rank}"

    @property
    def is_trivial(self) -> bool:
        return self.name == "trivial"

    def identity(self) -> GroupElement:
        if self.name == "zk":
            return GroupElement(self, (0,) * self.rank)
        return GroupElement(self, ())

    def generator(self, i: int) -> GroupElement:
        """The generator ``x_i`` (1-based)."""
        if not 1 <= i <= self.rank:
            raise ValueError(f"generator x{i} outside rank {self.rank} group")
        if self.name == "zk":
            v = [0] * self.rank
            v[i - 1] = 1
            return GroupElement(self, tuple(v))
        return GroupElement(self, (i,))

    def from_letters(self, pairs, reduce: bool = True) -> GroupElement:
        """Build an element from (generator, exponent) pairs.

        With ``reduce=False`` a free-group word that is not freely reduced
        raises :class:`UnreducedWord` instead of being cancelled.
        """
        for g, _ in pairs:
            if not 1 <= g <= self.rank:
                raise ValueError(f"generator x{g} outside {self}")
        if self.name == "trivial":
            return self.identity()
        if self.name == "zk":
            v = [0] * self.rank
            for g, e in pairs:
                v[g - 1] += e
            return GroupElement(self, tuple(v))
        letters: list[int] = []
        for g, e in pairs:
            letters.extend([g if e > 0 else -g] * abs(e))
        if reduce:
            return GroupElement(self, _free_reduce(letters))
        return GroupElement(self, tuple(letters))

    def parse_word(self, text: str, reduce: bool = True, line: int = 1, column: int = 1) -> GroupElement:
        pairs = parse_word_letters(text, line, column)
        if self.name == "trivial" and pairs:
            raise ParseError(f"nontrivial word {text!r} for the trivial group", line, column)
        try:
            return self.from_letters(pairs, reduce=reduce)
        except ValueError as exc:
            raise ParseError(str(exc), line, column) from None


def _free_reduce(letters) -> tuple[int, ...]:
    stack: list[int] = []
    for a in letters:
        if stack and stack[-1] == -a:
            stack.pop()
        else:
            stack.append(a)
    return tuple(stack)


TRIVIAL = GroupKind()


@total_ordering
@dataclass(frozen=True)
class GroupElement:
    kind: GroupKind
    payload: tuple[int, ...] = ()

    def __post_init__(self):
        k = self.kind
        if k.name == "trivial" and self.payload:
            raise ValueError("trivial group element with payload")
        if k.name == "zk" and len(self.payload) != k.rank:
            raise ValueError(f"expected exponent vector of length {k.rank}")
        if k.name == "free":
            for a, b in zip(self.payload, self.payload[1:]):
                if a == -b:
                    raise UnreducedWord(f"word {format_letters(self.letters())} is not freely reduced")
            if any(a == 0 or abs(a) > k.rank for a in self.payload):
                raise ValueError("free word letter outside generator range")

    def letters(self) -> list[tuple[int, int]]:
        if self.kind.name == "zk":
            return [(i + 1, e) for i, e in enumerate(self.payload) if e]
        return [(abs(a), 1 if a > 0 else -1) for a in self.payload]

    def __mul__(self, other: GroupElement) -> GroupElement:
        if other.kind != self.kind:
            raise ValueError(f"cannot multiply elements of {self.kind} and {other.kind}")
        if self.kind.name == "zk":
            return GroupElement(self.kind, tuple(a + b for a, b in zip(self.payload, other.payload)))
        if self.kind.name == "free":
            return GroupElement(self.kind, _free_reduce(self.payload + other.payload))
        return self

    def inverse(self) -> GroupElement:
        if self.kind.name == "zk":
            return GroupElement(self.kind, tuple(-a for a in self.payload))
        return GroupElement(self.kind, tuple(-a for a in reversed(self.payload)))

    def is_identity(self) -> bool:
        return not any(self.payload)

    def __lt__(self, other: GroupElement) -> bool:
        return self.sort_key() < other.sort_key()

    def sort_key(self):
        # shortlex for free words, plain lexicographic for exponent vectors
        return (len(self.payload), self.payload) if self.kind.name == "free" else self.payload

    def __str__(self):
        return format_letters(self.letters())

    def __repr__(self):
        return f"GroupElement({self.kind}, {self})"
