"""Indeterminacy lattices for order 1 and order 2 intersection data.

Order 1 is linear: a lattice in Z^4 (or Z for three components).  Order 2
adds a quadratic term, so the image is only explored inside a box.
"""

import random

from lambdatrees.indeterminacy import (
    INT2_ORDER,
    IntersectionData,
    int1_quadruple,
    int1_triple,
    int2_linear,
    int2_membership,
    int2_quadratic_image,
)

print("three components, zero data:", int1_triple(IntersectionData(1, {(1, 2): [0], (3, 1): [0], (2, 3): [0]})))
print("three components, one sphere meets once:", int1_triple(IntersectionData(1, {(1, 2): [0], (3, 1): [1], (2, 3): [0]})))

pats = [(1, 2, 3), (1, 2, 4), (1, 3, 2), (1, 3, 4), (4, 1, 2), (4, 1, 3), (2, 3, 1), (2, 3, 4), (2, 4, 1), (2, 4, 3), (3, 4, 1), (3, 4, 2)]
a = {p: [0] for p in pats}
a[1, 2, 3] = a[1, 2, 4] = [1]
L = int1_quadruple(IntersectionData(1, a))
print("\nfour components:", L, "quotient", L.quotient_description())

rng = random.Random(3)
data = IntersectionData(2, {p: [rng.randint(-2, 2) for _ in range(2)] for p in INT2_ORDER})
print("\nrandom order 2 data, linear part:", int2_linear(data).quotient_description())

q1 = IntersectionData(1, {p: [0] for p in INT2_ORDER}, ((1,),))
rep = int2_quadratic_image(q1, 3, window=6)
print(f"\nquadratic form x^2, B=3: {len(rep.points)} points")
print("  projection gcds", rep.projection_gcds, "complete", rep.projection_complete)
print("  pairs whose sum is missing within the window:", len(rep.closure_violations))
for target in [(5, 7), (40, 1)]:
    print(f"  {target}:", int2_membership(target, q1, 3))
