"""Tree sums, their normal forms, and the label operations.

Run: python demos/trees_and_normal_forms.py
"""

from lambdatrees.groups import GroupKind
from lambdatrees.lambda_form import basis_indices, basis_tree, format_lambda, lambda_rank, normalize_lambda
from lambdatrees.operations import op_delete, op_parallel, op_reverse, op_sum
from lambdatrees.trees import parse_tree
from lambdatrees.treesum import TreeSum, format_treesum


def show(title, s):
    print(f"-- {title}")
    print(format_treesum(s) or "0\n", end="")


# Ranks grow fast with the number of labels.
print("rank of order n on m labels")
for n in range(4):
    print(f"  n={n}:", [lambda_rank(n, m) for m in range(n + 2, 8)])

# Basis of order 2 on 4 labels: two trees, both hung off label 1.
print("\nbasis, n=2, m=4")
for idx in basis_indices(2, 4):
    print(" ", idx, "->", basis_tree(idx))

# Three order-2 trees and their coordinates.  Different shapes, same span.
for text in ("(((1,2),3),4)", "((1,4),(2,3))", "((4,1),(2,3))"):
    v = normalize_lambda(TreeSum.of(parse_tree(text), labels=4))
    print(f"\n{text}:")
    print(format_lambda(v), end="")

# Decorated trees: the same picture over Z, with holonomy.
Z = GroupKind.parse("zk:1")
t = parse_tree("((2[x1],3),1)", kind=Z)
s = TreeSum.of(t, labels=3)
print()
show("a Z-decorated Y tree", s)
print(format_lambda(normalize_lambda(s)), end="")

# Operations on labels.
s = TreeSum.of(parse_tree("((1,2),3)"), labels=3)
show("doubling label 1", op_parallel(s, 1))
show("merging 4 into 1 after doubling", op_sum(op_parallel(s, 1), 4, 1))
show("reversing label 2", op_reverse(s, 2))
show("deleting label 3", op_delete(s, 3))
