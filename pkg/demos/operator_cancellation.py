"""Labeled trees as differential operators, and tree-level cancellation.

Fix derivations E1, E2, E3.  A word in them composes to a higher-order
operator; expanding each word through the grafting product turns compositions
into labeled trees, where cancellations happen before any differentiation.
The double commutator E3(E2E1 - E1E2) - (E2E1 - E1E2)E3 expands to 24 trees
of which 18 cancel, leaving 6 genuine differentiations.
"""

from hopftrees import (
    DerivationEnv,
    apply_tree_operator,
    expand_operator,
    parse_polynomial,
    verify_composition,
    word_to_trees,
)

env = DerivationEnv.from_dict({"n": 1, "E1": ["x1"], "E2": ["x1^2"], "E3": ["x1^3"]})
cube = parse_polynomial("x1^3", 1)

print("== a word becomes a combination of labeled trees ==")
print("E1,E2 ->", word_to_trees(("E1", "E2")))
print()

print("== each tree is a concrete operator ==")
for text in ("(;(E1))", "(;(E2;(E1)))", "(;(E1)(E2))"):
    from hopftrees import parse_tree

    tree = parse_tree(text)
    print(f"  {text} applied to x1^3 -> {apply_tree_operator(tree, env, cube)}")
print()

print("== composition check: trees of a word == nested application ==")
check = verify_composition(("E1", "E2"), env, cube)
print("E1,E2 on x1^3:", check.render())
print()

print("== the double-commutator cancellation ==")
expansion = expand_operator(
    [
        (1, ("E3", "E2", "E1")),
        (-1, ("E3", "E1", "E2")),
        (-1, ("E2", "E1", "E3")),
        (1, ("E1", "E2", "E3")),
    ],
    env.symbols,
)
print(expansion.report())
print("surviving trees:")
for term in expansion.terms:
    sign = "+" if term.coeff > 0 else "-"
    print(f"  {sign} {term.tree.encode()}")
print()
print("factorized multi-index forms:")
for term in expansion.terms:
    print(" ", term.render())
