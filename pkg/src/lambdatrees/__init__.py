"""Non-repeating intersection invariants of Whitney towers.

Decorated unitrivalent trees and their canonical coordinates, the label
operations on tree sums, the reduced free Lie algebra with the maps eta,
Milnor invariants from Magnus expansions, and the INT indeterminacy
lattices and quadratic images.
"""

from .errors import *  # noqa: F401,F403
from .groups import TRIVIAL, GroupElement, GroupKind
from .trees import DecoratedTree, Leaf, Node, TreeGraph, Y, format_tree, parse_tree, validate_tree
from .treesum import Context, IntersectionForest, TreeSum, forest_to_sum, parse_forest, parse_treesum
from .lambda_form import BasisIndex, LambdaVector, basis_indices, basis_tree, lambda_rank, normalize_lambda
from .operations import op_delete, op_parallel, op_reverse, op_sum
from .lie import LieElement, LieNormalForm, X, bracket, eta, eta_left_inverse, lie_normalize, parse_bracket
from .milnor import (
    ALL_VANISH,
    MagnusPolynomial,
    MeridianWord,
    first_nonvanishing_order,
    magnus_expand,
    mu_invariants,
    sublink_longitudes,
    verify_eta_identity,
)
from .lattice import LatticeSubgroup, hermite_normal_form, smith_invariants
from .indeterminacy import (
    IntersectionData,
    gcd_pullapart_check,
    int1_quadruple,
    int1_triple,
    int2_linear,
    int2_membership,
    int2_quadratic_image,
)

__version__ = "0.1.0"
