"""Milnor invariants from longitude words.

The Borromean rings have longitudes that are commutators of the other two
meridians.  Their first nonzero invariant sits in order 1, and it agrees with
eta applied to a single Y tree.
"""

from lambdatrees.milnor import (
    MeridianWord,
    bracket_word,
    first_nonvanishing_order,
    magnus_expand,
    sublink_longitudes,
    verify_eta_identity,
)
from lambdatrees.treesum import parse_forest

borromean = [
    MeridianWord(1, bracket_word((2, 3))),
    MeridianWord(2, bracket_word((3, 1))),
    MeridianWord(3, bracket_word((1, 2))),
]
for lw in borromean:
    print(f"{lw.component} : {lw}")
    print("    magnus:", magnus_expand(lw, 2, non_repeating=True))

n, mus = first_nonvanishing_order(borromean)
print(f"\nfirst nonzero order {n}")
for i, a in mus.items():
    print(f"  mu^{i} = {a}")
print("matches eta of ((1,2),3):", verify_eta_identity(parse_forest("+ ((1,2),3)"), borromean))

# A four-component link with one order-2 tree.
four = [
    MeridianWord(1, bracket_word((2, (3, 4)))),
    MeridianWord(2, bracket_word(((3, 4), 1))),
    MeridianWord(3, bracket_word((4, (1, 2)))),
    MeridianWord(4, bracket_word(((1, 2), 3))),
]
print("\nfour components, first order:", first_nonvanishing_order(four)[0])
print("eta check:", verify_eta_identity(parse_forest("+ (((1,2),3),4)"), four))

# Any three of its components form a link with vanishing invariants.
sub = sublink_longitudes(four, (1, 2, 3))
print("sublink 1,2,3:", first_nonvanishing_order(sub))
