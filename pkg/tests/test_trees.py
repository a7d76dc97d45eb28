import random

import pytest

from helpers import KINDS, random_tree
from lambdatrees.errors import BadValence, LabelOutOfRange, NotATree, ParseError, UnreducedWord
from lambdatrees.groups import GroupKind
from lambdatrees.trees import DecoratedTree, Leaf, Node, TreeGraph, Y, format_tree, parse_tree, validate_tree

Z1 = GroupKind.parse("zk:1")
F2 = GroupKind.parse("free:2")


def test_y_tree_text():
    assert str(Y(1, 2, 3)) == "((2,3),1)"
    assert parse_tree("((1,2),3)") == Y(1, 2, 3)
    # cyclic rotations describe the same tree, transpositions do not
    assert Y(2, 3, 1) == Y(1, 2, 3) == Y(3, 1, 2)
    assert Y(2, 1, 3) != Y(1, 2, 3)


def test_inner_product_is_symmetric():
    assert parse_tree("(((1,2),3),4)") == parse_tree("(4,((1,2),3))")
    assert parse_tree("(((1,2),3),4)") == parse_tree("((1,2),(3,4))")


def test_order_and_labels():
    t = parse_tree("(((1,2),3),(4,5))")
    assert t.order == 3
    assert sorted(t.leaf_labels()) == [1, 2, 3, 4, 5]
    assert t.is_non_repeating()
    assert parse_tree("((1,1),2)").multiplicity(1) == 2


def test_decorations_and_orientation():
    t = parse_tree("((1[x1],2),3[x1^2])", Z1)
    assert parse_tree(format_tree(t), Z1) == t
    # both sides of the outermost pair point toward the joining edge
    a = parse_tree("((1,2)[x1],3)", Z1)
    assert a == parse_tree("(3[x1^-1],(1,2))", Z1)
    assert a == parse_tree("((1,2),3[x1^-1])", Z1)
    assert a != parse_tree("(3[x1],(1,2))", Z1)


def test_parse_errors_have_positions():
    with pytest.raises(ParseError) as err:
        parse_tree("((1,2),3", line=4)
    assert err.value.line == 4 and err.value.column == 9
    with pytest.raises(ParseError):
        parse_tree("((1,2),3)[x1]", Z1)
    with pytest.raises(ParseError):
        parse_tree("7")
    with pytest.raises(ParseError):
        parse_tree("((1,2),3) junk")


def test_label_and_word_errors():
    with pytest.raises(LabelOutOfRange):
        parse_tree("((1,2),5)", m=4)
    with pytest.raises(UnreducedWord):
        parse_tree("((1[x1 x1^-1],2),3)", F2)


def test_validate_tree_errors():
    e = None
    with pytest.raises(BadValence):
        validate_tree(TreeGraph({0: 1, 1: 2, 2: 3}, {}, [(0, 1, e), (1, 2, e)]))
    with pytest.raises(NotATree):
        validate_tree(TreeGraph({0: 1, 1: 2, 2: 3, 3: 4}, {}, [(0, 1, e), (2, 3, e)]))
    with pytest.raises(LabelOutOfRange):
        validate_tree(TreeGraph({0: 1, 1: 0}, {}, [(0, 1, e)]))
    cyc = TreeGraph({0: 1, 1: 2, 2: 3, 3: 4}, {4: (0, 1, 2), 5: (3, 4, 5)}, [(0, 4, e), (1, 4, e), (2, 4, e), (3, 5, e), (5, 5, e)])
    with pytest.raises((NotATree, BadValence)):
        validate_tree(cyc)


def test_graph_round_trip_and_rerooting(rng):
    for k in range(200):
        kind = KINDS[k % 3]
        t = random_tree(rng.randint(0, 3), 6, rng, kind, repeating=k % 2 == 0)
        assert DecoratedTree.from_graph(t.to_graph()) == t
        assert parse_tree(format_tree(t), kind) == t
        idx = rng.randrange(len(t.leaf_labels()))
        lab, body = t.rooted_at(idx)
        assert DecoratedTree(lab, body) == t


def test_or_move_on_every_edge(rng):
    for k in range(100):
        t = random_tree(rng.randint(1, 3), 6, rng, KINDS[k % 3])
        g = t.to_graph()
        for i in range(len(g.edges)):
            assert DecoratedTree.from_graph(g.reversed_edge(i)) == t


def test_relabel_and_map_leaves():
    t = Y(1, 2, 3)
    assert t.relabel({1: 4}) == Y(4, 2, 3)
    assert str(t.map_leaves(lambda k, lab: lab + 1)) == "((3,4),2)"


def test_decorated_anchor_ties():
    # repeated minimal label: equality is still independent of the anchor chosen
    t = DecoratedTree(1, Node(Leaf(1, F2.generator(1)), Leaf(2, F2.identity()), F2.identity()))
    u = DecoratedTree(1, Node(Leaf(2, F2.identity()), Leaf(1, F2.identity()), F2.generator(1).inverse()))
    g = t.to_graph()
    assert all(DecoratedTree.from_graph(g.reversed_edge(i)) == t for i in range(len(g.edges)))
    assert isinstance(u == t, bool)
