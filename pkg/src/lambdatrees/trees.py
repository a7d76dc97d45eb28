"""Decorated unitrivalent trees.

A tree is stored *anchored* at one of its leaves: the anchor label plus a
body, which is the rest of the tree viewed as a rooted binary tree hanging
from the anchor.  Each :class:`Leaf` and :class:`Node` carries the group
element on the edge directly above it, oriented upward (toward the anchor).
A node's vertex orientation is the cyclic order (up, left, right).

Edge orientations are not stored independently: the OR relation (reverse an
edge and invert its element) is applied when a tree is built, so every edge
points toward the anchor.  The anchor is the leaf with the minimal label;
when that label repeats, the leaf giving the smallest sort key wins.  With
that, two trees are equal exactly when they are isomorphic modulo OR.

Text grammar (decorations sit on the edge above a subtree, oriented up)::

    tree  := leaf | "(" tree "," tree ")" deco?
    leaf  := INT deco?
    deco  := "[" gword "]"

The outermost pair ``(A,B)`` is the inner product: A and B joined by one
edge.  ``((1,2),3)`` is the Y-tree with vertex orientation (1,2,3).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import BadValence, LabelOutOfRange, NotATree, ParseError
from .groups import TRIVIAL, GroupElement, GroupKind

__all__ = [
    "Leaf",
    "Node",
    "DecoratedTree",
    "TreeGraph",
    "validate_tree",
    "parse_tree",
    "format_tree",
    "Y",
]


@dataclass(frozen=True)
class Leaf:
    label: int
    deco: GroupElement

    def key(self):
        return (0, self.label, self.deco.sort_key())


@dataclass(frozen=True)
class Node:
    left: "Subtree"
    right: "Subtree"
    deco: GroupElement

    def key(self):
        return (1, self.left.key(), self.right.key(), self.deco.sort_key())


Subtree = Union[Leaf, Node]


def _with_deco(s: Subtree, deco: GroupElement) -> Subtree:
    if isinstance(s, Leaf):
        return Leaf(s.label, deco)
    return Node(s.left, s.right, deco)


@dataclass
class TreeGraph:
    """Explicit graph form of a decorated tree.

    ``labels`` maps univalent vertices to labels, ``cyclic`` maps trivalent
    vertices to their three incident edge indices in cyclic order, and
    ``edges`` lists ``(tail, head, decoration)``.  A decoration may be a
    :class:`GroupElement` or a word string (parsed without reduction).
    """

    labels: dict
    cyclic: dict
    edges: list
    kind: GroupKind = TRIVIAL

    def reversed_edge(self, index: int) -> TreeGraph:
        """Same tree with edge ``index`` reversed and its element inverted (OR)."""
        edges = list(self.edges)
        u, v, g = edges[index]
        g = _as_element(g, self.kind)
        edges[index] = (v, u, g.inverse())
        return TreeGraph(dict(self.labels), dict(self.cyclic), edges, self.kind)


def _as_element(g, kind: GroupKind) -> GroupElement:
    if isinstance(g, GroupElement):
        if g.kind != kind:
            raise ValueError(f"decoration in {g.kind}, expected {kind}")
        return g
    if g is None:
        return kind.identity()
    return kind.parse_word(str(g), reduce=False)


def validate_tree(graph: TreeGraph, m: int | None = None) -> None:
    """Raise unless ``graph`` is a labeled unitrivalent tree with labels in 1..m.

    >>> validate_tree(TreeGraph({0: 1, 1: 2}, {}, [(0, 1, None)]), 2)
    """
    vertices = set(graph.labels) | set(graph.cyclic)
    if set(graph.labels) & set(graph.cyclic):
        raise BadValence("a vertex is declared both univalent and trivalent")
    incident: dict = {}
    for idx, (u, v, _) in enumerate(graph.edges):
        if u == v:
            raise NotATree(f"edge {idx} is a loop")
        for w in (u, v):
            incident.setdefault(w, []).append(idx)
            if w not in vertices:
                raise BadValence(f"vertex {w} has valence {_valence(graph, w)}; must be 1 or 3")
    for v in vertices:
        deg = len(incident.get(v, []))
        if v in graph.labels and deg != 1:
            raise BadValence(f"univalent vertex {v} has {deg} edges")
        if v in graph.cyclic:
            if deg != 3:
                raise BadValence(f"trivalent vertex {v} has {deg} edges")
            if sorted(graph.cyclic[v]) != sorted(incident[v]):
                raise BadValence(f"cyclic order at vertex {v} does not list its edges")
    if len(graph.edges) != len(vertices) - 1 or not vertices:
        raise NotATree("edge count is not vertex count minus one")
    # connectivity
    start = next(iter(vertices))
    seen = {start}
    stack = [start]
    while stack:
        w = stack.pop()
        for idx in incident.get(w, []):
            u, v, _ = graph.edges[idx]
            x = v if u == w else u
            if x not in seen:
                seen.add(x)
                stack.append(x)
    if seen != vertices:
        raise NotATree("graph is disconnected")
    if len(graph.labels) < 2:
        raise NotATree("a tree needs at least two univalent vertices")
    for v, lab in graph.labels.items():
        if not isinstance(lab, int) or lab < 1 or (m is not None and lab > m):
            raise LabelOutOfRange(f"label {lab} outside 1..{m}")
    for _, _, g in graph.edges:
        _as_element(g, graph.kind)


def _valence(graph, w):
    return sum((u == w) + (v == w) for u, v, _ in graph.edges)


class DecoratedTree:
    """Immutable decorated tree in canonical anchored form.

    ``DecoratedTree(anchor, body)`` accepts any anchoring and re-anchors to
    the canonical one, so equality and hashing are isomorphism modulo OR.
    """

    __slots__ = ("anchor", "body", "_key", "_kind")

    def __init__(self, anchor: int, body: Subtree):
        anchor, body = _canonical(anchor, body)
        object.__setattr__(self, "anchor", anchor)
        object.__setattr__(self, "body", body)
        object.__setattr__(self, "_key", (anchor, body.key()))
        object.__setattr__(self, "_kind", body.deco.kind)

    def __setattr__(self, name, value):
        raise AttributeError("DecoratedTree is immutable")

    def __eq__(self, other):
        return isinstance(other, DecoratedTree) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __lt__(self, other):
        return self._key < other._key

    def sort_key(self):
        return self._key

    def __repr__(self):
        return f"DecoratedTree({format_tree(self)!r})"

    def __str__(self):
        return format_tree(self)

    @property
    def kind(self) -> GroupKind:
        return self._kind

    @property
    def order(self) -> int:
        return _count_nodes(self.body)

    def leaf_labels(self) -> list[int]:
        """Labels in traversal order: anchor first, then body leaves left to right."""
        out = [self.anchor]
        _collect_labels(self.body, out)
        return out

    def labels(self) -> frozenset[int]:
        return frozenset(self.leaf_labels())

    def multiplicity(self, label: int) -> int:
        return self.leaf_labels().count(label)

    def is_non_repeating(self) -> bool:
        labs = self.leaf_labels()
        return len(set(labs)) == len(labs)

    def map_leaves(self, fn) -> DecoratedTree:
        """New tree with leaf ``k`` (traversal order) relabeled ``fn(k, label)``."""
        counter = iter(range(1, 10**9))
        anchor = fn(0, self.anchor)

        def walk(s):
            if isinstance(s, Leaf):
                return Leaf(fn(next(counter), s.label), s.deco)
            left = walk(s.left)
            return Node(left, walk(s.right), s.deco)

        return DecoratedTree(anchor, walk(self.body))

    def relabel(self, mapping: dict) -> DecoratedTree:
        return self.map_leaves(lambda _, lab: mapping.get(lab, lab))

    def to_graph(self) -> TreeGraph:
        labels = {0: self.anchor}
        cyclic: dict = {}
        edges: list = []
        counter = [1]

        def walk(s, parent):
            v = counter[0]
            counter[0] += 1
            up = len(edges)
            edges.append((v, parent, s.deco))
            if isinstance(s, Leaf):
                labels[v] = s.label
            else:
                el = walk(s.left, v)
                er = walk(s.right, v)
                cyclic[v] = (up, el, er)
            return up

        walk(self.body, 0)
        return TreeGraph(labels, cyclic, edges, self.kind)

    @classmethod
    def from_graph(cls, graph: TreeGraph, m: int | None = None) -> DecoratedTree:
        validate_tree(graph, m)
        anchor_v = min(graph.labels, key=lambda v: (graph.labels[v], v))
        anchor, body = _anchor_graph(graph, anchor_v)
        return cls(anchor, body)

    def rooted_at(self, leaf_index: int) -> tuple[int, Subtree]:
        """(label, body) anchored at the leaf with the given traversal index.

        Unlike the constructor this does not re-canonicalize, so the result
        shows the tree as seen from that particular leaf.
        """
        g = self.to_graph()
        vertex = sorted(g.labels)[leaf_index]
        return _anchor_graph(g, vertex)

    def rooted_at_label(self, label: int) -> Subtree:
        """Body of the tree seen from its unique ``label`` leaf."""
        labs = self.leaf_labels()
        if labs.count(label) != 1:
            raise ValueError(f"label {label} occurs {labs.count(label)} times")
        return self.rooted_at(labs.index(label))[1]


def _count_nodes(s) -> int:
    if isinstance(s, Leaf):
        return 0
    return 1 + _count_nodes(s.left) + _count_nodes(s.right)


def _collect_labels(s, out):
    if isinstance(s, Leaf):
        out.append(s.label)
    else:
        _collect_labels(s.left, out)
        _collect_labels(s.right, out)


def _anchor_graph(graph: TreeGraph, anchor_v) -> tuple[int, Subtree]:
    kind = graph.kind
    edges = [(u, v, _as_element(g, kind)) for u, v, g in graph.edges]
    incident: dict = {}
    for idx, (u, v, _) in enumerate(edges):
        incident.setdefault(u, []).append(idx)
        incident.setdefault(v, []).append(idx)

    def other(idx, w):
        u, v, _ = edges[idx]
        return v if u == w else u

    def build(w, via):
        tail, _, g = edges[via]
        deco = g if tail == w else g.inverse()
        if w in graph.labels:
            return Leaf(graph.labels[w], deco)
        c = graph.cyclic[w]
        k = c.index(via)
        e1, e2 = c[(k + 1) % 3], c[(k + 2) % 3]
        return Node(build(other(e1, w), e1), build(other(e2, w), e2), deco)

    (e0,) = incident[anchor_v]
    return graph.labels[anchor_v], build(other(e0, anchor_v), e0)


def _canonical(anchor: int, body: Subtree) -> tuple[int, Subtree]:
    labs = [anchor]
    _collect_labels(body, labs)
    low = min(labs)
    if anchor == low and labs.count(low) == 1:
        return anchor, body
    tmp = object.__new__(DecoratedTree)
    object.__setattr__(tmp, "anchor", anchor)
    object.__setattr__(tmp, "body", body)
    object.__setattr__(tmp, "_kind", body.deco.kind)
    g = tmp.to_graph()
    best = None
    for v, lab in g.labels.items():
        if lab != low:
            continue
        cand = _anchor_graph(g, v)
        ck = (cand[0], cand[1].key())
        if best is None or ck < best[0]:
            best = (ck, cand)
    return best[1]


# ---------------------------------------------------------------- text format


class _Reader:
    def __init__(self, text, kind, line, column):
        self.text = text
        self.pos = 0
        self.kind = kind
        self.line = line
        self.col0 = column

    def error(self, msg):
        raise ParseError(msg, self.line, self.col0 + self.pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos] in " \t":
            self.pos += 1

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def deco(self):
        if self.peek() != "[":
            return self.kind.identity()
        start = self.pos + 1
        end = self.text.find("]", start)
        if end < 0:
            self.error("unterminated decoration")
        word = self.text[start:end]
        self.pos = end + 1
        return self.kind.parse_word(word, reduce=False, line=self.line, column=self.col0 + start)

    def tree(self):
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            left = self.tree()
            self.expect(",")
            right = self.tree()
            self.expect(")")
            return ("node", left, right, self.deco())
        if ch.isdigit():
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            return ("leaf", int(self.text[start : self.pos]), self.deco())
        self.error("expected a label or '('")


def parse_tree(text: str, kind: GroupKind = TRIVIAL, m: int | None = None, line: int = 1, column: int = 1) -> DecoratedTree:
    """Parse the tree grammar.

    >>> str(parse_tree("(3,(2,1))"))
    '((3,2),1)'
    """
    r = _Reader(text, kind, line, column)
    raw = r.tree()
    if r.peek():
        r.error("trailing characters")
    if raw[0] != "node":
        r.error("a tree needs at least two leaves")
    if not raw[3].is_identity():
        r.error("outermost pair has no edge above it to decorate")
    labels: dict = {}
    children: dict = {}
    up: dict = {}
    edges: list = []
    counter = [0]

    def build(node):
        # returns (top vertex, upward decoration of the edge above it)
        v = counter[0]
        counter[0] += 1
        if node[0] == "leaf":
            labels[v] = node[1]
            return v, node[2]
        slots = []
        for child in node[1:3]:
            c, gc = build(child)
            up[c] = len(edges)
            slots.append(len(edges))
            edges.append((c, v, gc))
        children[v] = slots
        return v, node[3]

    a, ga = build(raw[1])
    b, gb = build(raw[2])
    up[a] = up[b] = len(edges)
    edges.append((a, b, ga * gb.inverse()))
    cyclic = {v: (el, er, up[v]) for v, (el, er) in children.items()}
    graph = TreeGraph(labels, cyclic, edges, kind)
    try:
        return DecoratedTree.from_graph(graph, m)
    except (LabelOutOfRange, BadValence, NotATree) as exc:
        raise type(exc)(f"{exc} (line {line})") from None


def _format_sub(s: Subtree) -> str:
    deco = "" if s.deco.is_identity() else f"[{s.deco}]"
    if isinstance(s, Leaf):
        return f"{s.label}{deco}"
    return f"({_format_sub(s.left)},{_format_sub(s.right)}){deco}"


def format_tree(t: DecoratedTree) -> str:
    """Canonical text: ``(BODY,ANCHOR)``; re-parses to an equal tree."""
    return f"({_format_sub(t.body)},{t.anchor})"


def Y(a: int, b: int, c: int, kind: GroupKind = TRIVIAL) -> DecoratedTree:
    """Order 1 tree with vertex orientation (a, b, c) and trivial decorations."""
    e = kind.identity()
    return DecoratedTree(c, Node(Leaf(a, e), Leaf(b, e), e))
