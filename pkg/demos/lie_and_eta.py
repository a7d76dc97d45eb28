"""From trees to Lie brackets and back.

Each tree read from one of its leaves gives a bracket in the free Lie
algebra.  Putting the leaf back inverts this up to a factor n+2 once all
labels are summed.
"""

from lambdatrees.lambda_form import basis_indices, basis_tree, normalize_lambda
from lambdatrees.lie import X, bracket, eta, eta_left_inverse, lie_normalize
from lambdatrees.trees import Y
from lambdatrees.treesum import TreeSum

print("eta_1(Y(1,2,3)) =", eta(1, TreeSum.of(Y(1, 2, 3))))
print("eta_2(Y(1,2,3)) =", eta(2, TreeSum.of(Y(1, 2, 3))))

# Jacobi holds after normalization.
a, b, c = X(1), X(2), X(3)
jac = bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b))
print("Jacobi sum normalizes to", lie_normalize(jac).coords or 0)

# Round trip on one basis tree, n=2, m=5.
idx = basis_indices(2, 5)[3]
v = TreeSum.of(basis_tree(idx), labels=5)
print("\ntree:", basis_tree(idx))
total = TreeSum.zero(v.context)
for i in range(1, 6):
    image = eta(i, v)
    print(f"  eta_{i} = {image}")
    if not image.is_zero():
        total = total + eta_left_inverse(i, image, 5)
print("sum of left inverses == 4 * tree:", normalize_lambda(total) == normalize_lambda(4 * v))
