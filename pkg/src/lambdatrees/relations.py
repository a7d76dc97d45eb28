"""Instances of the AS, IHX, OR and HOL relations.

Each function returns a :class:`TreeSum` (or, for OR, a pair of graphs)
that is zero in the tree group.  Trivalent vertices are addressed by paths
of ``"L"``/``"R"`` steps from the top of the anchored body; ``""`` is the
vertex next to the anchor leaf.
"""

from __future__ import annotations

from .groups import GroupElement
from .treesum import Context, TreeSum
from .trees import DecoratedTree, Leaf, Node, TreeGraph

__all__ = [
    "vertex_paths",
    "internal_edge_paths",
    "antisymmetry_relation",
    "ihx_relation",
    "holonomy_relation",
    "orientation_pair",
]


def vertex_paths(t: DecoratedTree) -> list[str]:
    out = []

    def walk(s, path):
        if isinstance(s, Node):
            out.append(path)
            walk(s.left, path + "L")
            walk(s.right, path + "R")

    walk(t.body, "")
    return out


def internal_edge_paths(t: DecoratedTree) -> list[str]:
    """Vertices whose upward edge joins two trivalent vertices."""
    return [p for p in vertex_paths(t) if p]


def _get(s, path):
    for step in path:
        s = s.left if step == "L" else s.right
    return s


def _replace(s, path, new):
    if not path:
        return new
    if path[0] == "L":
        return Node(_replace(s.left, path[1:], new), s.right, s.deco)
    return Node(s.left, _replace(s.right, path[1:], new), s.deco)


def _context(t: DecoratedTree, m: int | None) -> Context:
    return Context(t.order, m if m is not None else max(t.labels()), t.kind)


def antisymmetry_relation(t: DecoratedTree, path: str, m: int | None = None) -> TreeSum:
    """``t + t'`` where ``t'`` has the vertex at ``path`` reversed."""
    v = _get(t.body, path)
    flipped = DecoratedTree(t.anchor, _replace(t.body, path, Node(v.right, v.left, v.deco)))
    return TreeSum(_context(t, m), [(t, 1), (flipped, 1)])


def ihx_relation(t: DecoratedTree, path: str, m: int | None = None) -> TreeSum:
    """Three-term IHX relation at the edge above the vertex at ``path``.

    The edge is made trivial first.  Seen from its parent vertex P (which
    keeps its own upward edge), with the chosen vertex C = [A, B] and
    sibling D, the relation is the Jacobi identity
    ``P[[A,B],D] + P[[B,D],A] + P[[D,A],B] = 0`` (signed by AS when C is a
    right child).
    """
    if not path:
        raise ValueError("the vertex next to the anchor has no internal edge above it")
    parent_path, side = path[:-1], path[-1]
    p = _get(t.body, parent_path)
    c = _get(t.body, path)
    e = c.deco.kind.identity()
    a, b = c.left, c.right
    d = p.right if side == "L" else p.left
    sign = 1 if side == "L" else -1

    def make(x, y, z):
        # P[[x, y], z] with trivial new internal edge
        return DecoratedTree(t.anchor, _replace(t.body, parent_path, Node(Node(x, y, e), z, p.deco)))

    base = DecoratedTree(t.anchor, _replace(t.body, path, Node(a, b, e)))
    return TreeSum(_context(t, m), [(base, 1), (make(b, d, a), sign), (make(d, a, b), sign)])


def holonomy_relation(t: DecoratedTree, path: str, h: GroupElement, m: int | None = None) -> TreeSum:
    """``t - t'`` where ``t'`` is ``t`` with a HOL move by ``h`` at a vertex.

    With every edge at the vertex oriented toward it, all three elements
    are multiplied on the right by ``h``.  The upward edge points away from
    the vertex, so it is multiplied by ``h**-1`` on the left.
    """
    v = _get(t.body, path)
    inv = h.inverse()

    def push(s):
        if isinstance(s, Leaf):
            return Leaf(s.label, s.deco * h)
        return Node(s.left, s.right, s.deco * h)

    moved = Node(push(v.left), push(v.right), inv * v.deco)
    t2 = DecoratedTree(t.anchor, _replace(t.body, path, moved))
    return TreeSum(_context(t, m), [(t, 1), (t2, -1)])


def orientation_pair(t: DecoratedTree, edge: int) -> tuple[TreeGraph, TreeGraph]:
    """Graph of ``t`` and the same graph with one edge reversed and inverted."""
    g = t.to_graph()
    return g, g.reversed_edge(edge)
