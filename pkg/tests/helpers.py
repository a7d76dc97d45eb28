"""Random trees, sums and relation instances shared by the tests."""

from __future__ import annotations

import random

from lambdatrees.groups import TRIVIAL, GroupKind
from lambdatrees.relations import internal_edge_paths, vertex_paths
from lambdatrees.trees import DecoratedTree, Leaf, Node
from lambdatrees.treesum import Context, TreeSum

KINDS = [TRIVIAL, GroupKind.parse("zk:2"), GroupKind.parse("free:2")]


def random_element(kind: GroupKind, rng: random.Random, length: int = 3):
    g = kind.identity()
    if kind.is_trivial:
        return g
    for _ in range(rng.randint(0, length)):
        x = kind.generator(rng.randint(1, kind.rank))
        g = g * (x if rng.random() < 0.5 else x.inverse())
    return g


def random_body(labels, kind, rng, decorate=True):
    labels = list(labels)
    if len(labels) == 1:
        return Leaf(labels[0], random_element(kind, rng) if decorate else kind.identity())
    k = rng.randint(1, len(labels) - 1)
    deco = random_element(kind, rng) if decorate else kind.identity()
    return Node(random_body(labels[:k], kind, rng, decorate), random_body(labels[k:], kind, rng, decorate), deco)


def random_tree(n: int, m: int, rng: random.Random, kind: GroupKind = TRIVIAL, repeating: bool = False, decorate=True):
    """Order ``n`` tree on labels from 1..m (distinct unless ``repeating``)."""
    if repeating:
        labels = [rng.randint(1, m) for _ in range(n + 2)]
    else:
        labels = rng.sample(range(1, m + 1), n + 2)
    rng.shuffle(labels)
    return DecoratedTree(labels[0], random_body(labels[1:], kind, rng, decorate))


def random_treesum(n: int, m: int, rng: random.Random, kind: GroupKind = TRIVIAL, terms: int = 4, repeating=False):
    ts = [(random_tree(n, m, rng, kind, repeating), rng.choice([-2, -1, 1, 1, 2, 3])) for _ in range(rng.randint(0, terms))]
    return TreeSum(Context(n, m, kind), ts)


def random_paths(t, rng):
    return rng.choice(vertex_paths(t))


def random_internal(t, rng):
    paths = internal_edge_paths(t)
    return rng.choice(paths) if paths else None
