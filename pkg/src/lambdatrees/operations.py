"""Label operations on tree sums: parallel copies, internal sums, reversal, deletion.

All four are linear and act term by term; decorations ride along unchanged.
They make sense on repeating sums too.
"""

from __future__ import annotations

from itertools import product

from .errors import LabelOutOfRange
from .treesum import Context, TreeSum

__all__ = ["op_parallel", "op_sum", "op_reverse", "op_delete"]


def _check_label(s: TreeSum, *labels: int):
    for i in labels:
        if not 1 <= i <= s.context.labels:
            raise LabelOutOfRange(f"label {i} outside 1..{s.context.labels}")


def op_parallel(s: TreeSum, i: int) -> TreeSum:
    """Add a parallel copy of component ``i`` as new label m+1.

    A tree with r leaves labeled ``i`` becomes the sum of its 2**r
    relabelings, each ``i``-leaf independently kept or changed to m+1.

    >>> from lambdatrees.trees import Y
    >>> print(op_parallel(TreeSum.of(Y(1, 2, 3)), 3))
    ((2,3),1) + ((2,4),1)
    """
    _check_label(s, i)
    ctx = s.context
    new = ctx.labels + 1
    terms = []
    for t, c in s.items():
        positions = [k for k, lab in enumerate(t.leaf_labels()) if lab == i]
        for choice in product((i, new), repeat=len(positions)):
            swap = dict(zip(positions, choice))
            terms.append((t.map_leaves(lambda k, lab: swap.get(k, lab)), c))
    return TreeSum(Context(ctx.order, new, ctx.kind), terms)


def op_sum(s: TreeSum, i: int, j: int) -> TreeSum:
    """Internal sum: relabel every ``i``-leaf as ``j``.  The label count stays m."""
    _check_label(s, i, j)
    if i == j:
        raise ValueError("internal sum needs two distinct labels")
    return TreeSum(s.context, [(t.relabel({i: j}), c) for t, c in s.items()])


def op_reverse(s: TreeSum, i: int) -> TreeSum:
    """Reverse the orientation of component ``i``: sign (-1)**(number of i-leaves)."""
    _check_label(s, i)
    return TreeSum(s.context, [(t, -c if t.multiplicity(i) % 2 else c) for t, c in s.items()])


def op_delete(s: TreeSum, i: int) -> TreeSum:
    """Delete component ``i``: drop every term with an ``i``-leaf."""
    _check_label(s, i)
    return TreeSum(s.context, [(t, c) for t, c in s.items() if i not in t.labels()])
