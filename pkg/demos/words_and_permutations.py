"""Shuffles of words, heap products of permutations, and the tree bridge.

Permutations live in standard cycle order (cycles start at their minimum,
listed with decreasing heads, fixed points explicit).  Each cycle string maps
to a subtree by hanging every entry below its nearest smaller left neighbor;
that bijection turns the heap product into tree grafting.
"""

from hopftrees import (
    HEAP_ORDERED,
    cycle_coproduct,
    deconcatenation,
    heap_product,
    parse_permutation,
    parse_word,
    permutation_to_tree,
    shuffle_antipode,
    shuffle_product,
    symmetric_group,
    tree_to_permutation,
    word_count,
    ordered_trees,
)

print("== shuffles ==")
print("x1 sh x2    =", shuffle_product(parse_word("x1"), parse_word("x2")))
print("x1.x2 sh x3 =", shuffle_product(parse_word("x1.x2"), parse_word("x3")))
print("x1 sh x1    =", shuffle_product(parse_word("x1"), parse_word("x1")))
print("Delta(x1.x2) =", deconcatenation(parse_word("x1.x2")))
print("S(x1.x2.x3)  =", shuffle_antipode(parse_word("x1.x2.x3")))
print()

print("== heap products ==")
one = parse_permutation("(1)")
two = parse_permutation("(2)(1)")
print("(1) # (1)    =", heap_product(one, one))
print("(2)(1) # (1) =", heap_product(two, one))
print("(1) # (1 2)  =", heap_product(one, parse_permutation("(1 2)")))
print("(1 2) # (1)  =", heap_product(parse_permutation("(1 2)"), one), " (not commutative)")
print()

print("== cycle-subset coproduct ==")
print("Delta((2)(1)) =", cycle_coproduct(two))
print()

print("== the tree bridge ==")
for p in symmetric_group(3):
    print(f"  {p.encode():12s} <-> {permutation_to_tree(p).encode()}")
print()

sigma, tau = parse_permutation("(2)(1)"), parse_permutation("(1)")
lhs = heap_product(sigma, tau).map_basis(permutation_to_tree)
rhs = HEAP_ORDERED.product(permutation_to_tree(sigma), permutation_to_tree(tau))
print("products intertwine:", lhs == rhs)
roundtrip = all(
    tree_to_permutation(permutation_to_tree(p)) == p for p in symmetric_group(4)
)
print("round trip on all of S_4:", roundtrip)
print()

print("== graded dimensions: planar trees against words ==")
alphabet = [
    (tree.encode(), degree)
    for degree in range(1, 6)
    for tree in ordered_trees(degree)
    if len(tree.children) == 1
]
for degree in range(6):
    print(
        f"  degree {degree}: planar trees {len(ordered_trees(degree)):3d} "
        f"words {word_count(alphabet, degree):3d}"
    )
