"""Shared fixtures: element shortcuts and independent brute-force oracles.

The oracles here deliberately avoid the library's own algorithms: tree
isomorphism classes are counted through parent arrays and nested tuples,
automorphism counts through plane-representation counting, and cuts through
edge-subset filtering.
"""

from __future__ import annotations

import itertools
import math
import random
from fractions import Fraction

from hopftrees import LinearCombination, Polynomial, Tree, parse_tree


def t(text: str) -> Tree:
    return parse_tree(text)


def ot(text: str) -> Tree:
    return parse_tree(text, ordered=True)


def lc(*pairs) -> LinearCombination:
    return LinearCombination([(basis, coeff) for basis, coeff in pairs])


def random_polynomial(rng: random.Random, num_vars: int, max_degree: int) -> Polynomial:
    terms = {}
    for _ in range(rng.randint(1, 4)):
        exps = [0] * num_vars
        for _ in range(rng.randint(0, max_degree)):
            exps[rng.randrange(num_vars)] += 1
        coeff = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
        terms[tuple(exps)] = terms.get(tuple(exps), Fraction(0)) + coeff
    return Polynomial(num_vars, terms)


# ---------------------------------------------------------------------------
# oracle: unordered rooted tree isomorphism classes via parent arrays


def _shape_from_parents(parents: tuple[int, ...]):
    """Canonical nested-sorted-tuple form of a rooted tree given parent links."""
    children: list[list[int]] = [[] for _ in range(len(parents) + 1)]
    for node, parent in enumerate(parents, start=1):
        children[parent].append(node)

    def shape(node: int):
        return tuple(sorted(shape(c) for c in children[node]))

    return shape(0)


def count_rooted_shapes_by_parent_arrays(num_nodes: int) -> int:
    """Number of unordered rooted trees with ``num_nodes`` nodes.

    Every rooted tree admits a numbering where parents precede children, so
    enumerating all parent arrays (node i's parent among 0..i-1) and reducing
    to canonical nested tuples hits every isomorphism class.
    """
    if num_nodes == 1:
        return 1
    shapes = set()
    for parents in itertools.product(*(range(i) for i in range(1, num_nodes))):
        shapes.add(_shape_from_parents(parents))
    return len(shapes)


# ---------------------------------------------------------------------------
# oracle: automorphism count via plane representations


def _plane_forms(tree: Tree):
    """All distinct plane (child-order-sensitive) forms of an unordered tree."""
    if not tree.children:
        yield ()
        return
    child_forms = [set(_plane_forms(c)) for c in tree.children]
    seen = set()
    for perm in itertools.permutations(range(len(tree.children))):
        for combo in itertools.product(*(child_forms[i] for i in perm)):
            seen.add(combo)
    yield from seen


def automorphisms_by_plane_count(tree: Tree) -> int:
    """|Aut| = (product of children-count factorials) / #plane representations."""
    total_orderings = 1

    def count(node: Tree) -> None:
        nonlocal total_orderings
        total_orderings *= math.factorial(len(node.children))
        for c in node.children:
            count(c)

    count(tree)
    plane = len(set(_plane_forms(tree)))
    assert total_orderings % plane == 0
    return total_orderings // plane
