"""A tour of the grafting algebra of rooted trees.

Trees are written in a nested-parenthesis form: ``()`` is the single node,
``(;())`` the two-node chain, ``(;()())`` the root with two leaves.  The
product of two trees strips the root off the first and attaches the resulting
subtrees below the nodes of the second in every possible way.
"""

from hopftrees import HEAP_ORDERED, ORDERED, ROOTED, parse_tree, rooted_trees

chain2 = parse_tree("(;())")
chain3 = parse_tree("(;(;()))")
v = parse_tree("(;()())")

print("== products ==")
print("chain2 * chain2 =", ROOTED.product(chain2, chain2))
print("chain2 * chain3 =", ROOTED.product(chain2, chain3))
print("v * chain2      =", ROOTED.product(v, chain2))
print()

print("== the coproduct splits the root's children over all subsets ==")
for tree in (chain2, chain3, v):
    print(f"Delta({tree}) = {ROOTED.coproduct(tree)}")
print()

print("== the antipode flips primitives and corrects higher terms ==")
for tree in (chain2, chain3, v):
    print(f"S({tree}) = {ROOTED.antipode(tree)}")
print()

print("== the same machinery runs on planar (ordered) trees ==")
chain2o = parse_tree("(;())", ordered=True)
print("ordered chain2 * chain2 =", ORDERED.product(chain2o, chain2o))
print()

print("== and on standard heap-ordered trees, with label shifting ==")
one = parse_tree("(;(1))")
print("(;(1)) * (;(1)) =", HEAP_ORDERED.product(one, one))
print()

print("== basis sizes by degree ==")
print("rooted trees:", [len(rooted_trees(n)) for n in range(7)])
print()

print("== the axiom sweep is the contract; run it ==")
print(ROOTED.verify(3))
