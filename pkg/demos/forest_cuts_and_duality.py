"""Forests, admissible cuts, and the pairing with the grafting algebra.

Forest monomials are ``*``-joined trees (``1`` is the empty monomial).  A cut
removes edges, at most one per root-to-leaf path; the coproduct sums the
pruned pieces against the part still holding the root.
"""

from fractions import Fraction

from hopftrees import (
    ROOTED,
    admissible_cuts,
    dual_pairing,
    forest_coproduct,
    forest_monomials,
    parse_forest,
    parse_tree,
    rooted_trees,
    symmetry_factor,
)

v = parse_tree("(;()())")
cherry = parse_tree("(;(;())())")

print("== admissible cuts of the two-leaf tree ==")
for pruned, root_part in admissible_cuts(v):
    print(f"  pruned {pruned.encode():8s} root part {root_part.encode()}")
print()

print("== coproducts ==")
for text in ("()", "(;())", "(;()())", "()*()"):
    monomial = parse_forest(text)
    print(f"Delta({monomial}) = {forest_coproduct(monomial)}")
print()

print("== symmetry factors (automorphism counts) ==")
for degree in range(4):
    for tree in rooted_trees(degree):
        print(f"  |Aut({tree.encode()})| = {symmetry_factor(tree)}")
print()

print("== the pairing is diagonal with symmetry weights ==")
for tree_text, forest_text in (
    ("(;(;()))", "(;())"),
    ("(;()())", "()*()"),
    ("(;()())", "(;())"),
    ("(;()()())", "()*()*()"),
):
    tree = parse_tree(tree_text)
    monomial = parse_forest(forest_text)
    print(f"  <{tree_text}, {forest_text}> = {dual_pairing(tree, monomial)}")
print()

print("== duality: pairing a product equals pairing the coproduct ==")
t1 = parse_tree("(;())")
t2 = parse_tree("(;()())")
product = ROOTED.product(t1, t2)
for monomial in forest_monomials(t1.degree() + t2.degree()):
    lhs = sum((c * dual_pairing(s, monomial) for s, c in product), Fraction(0))
    rhs = sum(
        (
            c * dual_pairing(t1, pair.left) * dual_pairing(t2, pair.right)
            for pair, c in forest_coproduct(monomial)
        ),
        Fraction(0),
    )
    marker = "ok" if lhs == rhs else "MISMATCH"
    print(f"  a = {monomial.encode():12s} lhs = rhs = {lhs}  [{marker}]")
