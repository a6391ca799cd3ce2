"""Polynomials, derivations, and labeled trees acting as differential operators."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hopftrees import (
    Derivation,
    DerivationEnv,
    LinearCombination,
    Polynomial,
    apply_tree_operator,
    expand_operator,
    labeled_algebra,
    labeled_trees,
    parse_polynomial,
    parse_word_polynomial,
    verify_composition,
    word_to_trees,
)
from helpers import lc, random_polynomial, t


ENV1 = DerivationEnv.from_dict({"n": 1, "E1": ["x1"], "E2": ["x1^2"]})
CUBE = parse_polynomial("x1^3", 1)


def test_polynomial_parsing_and_rendering():
    p = parse_polynomial("3*x1^2*x2 - 1/2*x2", 2)
    assert p.render() == "-1/2*x2 + 3*x1^2*x2"
    assert parse_polynomial(p.render(), 2) == p
    assert parse_polynomial("-x1 + 4", 1).render() == "4 - x1"


def test_polynomial_parse_errors():
    from hopftrees import ParseError

    with pytest.raises(ParseError):
        parse_polynomial("x3", 2)
    with pytest.raises(ParseError):
        parse_polynomial("2y", 2)


def test_power_rule():
    p = parse_polynomial("x1^2*x2", 2)
    assert p.derivative(1) == parse_polynomial("2*x1*x2", 2)
    assert parse_polynomial("x1^2", 2).derivative(2) == Polynomial.zero(2)


exponents = st.tuples(st.integers(0, 3), st.integers(0, 2), st.integers(0, 2))
polys = st.dictionaries(
    exponents, st.fractions(min_value=-9, max_value=9, max_denominator=4), max_size=4
).map(lambda d: Polynomial(3, d))


@given(polys)
def test_mixed_partials_commute(p):
    for i in range(1, 4):
        for j in range(i + 1, 4):
            assert p.derivative(i).derivative(j) == p.derivative(j).derivative(i)


@given(polys, polys)
def test_derivative_is_leibniz_on_products(p, q):
    for i in range(1, 4):
        assert (p * q).derivative(i) == p.derivative(i) * q + p * q.derivative(i)


def test_euler_operator():
    euler = Derivation((parse_polynomial("x1", 1),))
    assert euler.apply(CUBE) == parse_polynomial("3*x1^3", 1)
    squared = Derivation((parse_polynomial("x1^2", 1),))
    assert squared.apply(parse_polynomial("x1", 1)) == parse_polynomial("x1^2", 1)


@given(polys, polys)
def test_derivation_leibniz(p, q):
    field = Derivation(
        (
            parse_polynomial("x2", 3),
            parse_polynomial("x1*x3", 3),
            parse_polynomial("1", 3),
        )
    )
    assert field.apply(p * q) == field.apply(p) * q + p * field.apply(q)


def test_tree_operator_single_branch_is_plain_application():
    assert apply_tree_operator(t("(;(E1))"), ENV1, CUBE) == parse_polynomial("3*x1^3", 1)


def test_tree_operator_chain_value():
    chain = t("(;(E2;(E1)))")
    assert apply_tree_operator(chain, ENV1, CUBE) == parse_polynomial("6*x1^4", 1)


def test_tree_operator_sibling_value_and_composition_split():
    sibling = t("(;(E1)(E2))")
    chain = t("(;(E2;(E1)))")
    assert apply_tree_operator(sibling, ENV1, CUBE) == parse_polynomial("6*x1^4", 1)
    total = apply_tree_operator(sibling, ENV1, CUBE) + apply_tree_operator(chain, ENV1, CUBE)
    nested = ENV1["E1"].apply(ENV1["E2"].apply(CUBE))
    assert total == nested == parse_polynomial("12*x1^4", 1)


def test_tree_operator_rejects_unknown_labels():
    with pytest.raises(KeyError):
        apply_tree_operator(t("(;(E9))"), ENV1, CUBE)


def test_word_to_trees_generator():
    assert word_to_trees(("E1",)) == lc((t("(;(E1))"), 1))


def test_word_to_trees_length_two():
    expected = lc((t("(;(E1)(E2))"), 1), (t("(;(E2;(E1)))"), 1))
    assert word_to_trees(("E1", "E2")) == expected


def test_word_to_trees_length_three_multiplicity():
    # per-step grafting counts: 2 trees, then 3 placements on each
    combo = word_to_trees(("E1", "E2", "E3"))
    assert combo.total_multiplicity() == 6


def test_commutator_leaves_only_chains():
    expansion = expand_operator(
        [(1, ("E1", "E2")), (-1, ("E2", "E1"))], ("E1", "E2")
    )
    assert expansion.surviving == lc(
        (t("(;(E2;(E1)))"), 1), (t("(;(E1;(E2)))"), -1)
    )


def test_double_commutator_cancellation_counts():
    expansion = expand_operator(
        [
            (1, ("E3", "E2", "E1")),
            (-1, ("E3", "E1", "E2")),
            (-1, ("E2", "E1", "E3")),
            (1, ("E1", "E2", "E3")),
        ],
        ("E1", "E2", "E3"),
    )
    assert expansion.raw_tree_count == 24
    assert expansion.cancelled_count == 18
    assert expansion.surviving_count == 6
    assert expansion.surviving == lc(
        (t("(;(E1;(E2)(E3)))"), 1),
        (t("(;(E1;(E2;(E3))))"), 1),
        (t("(;(E2;(E1)(E3)))"), -1),
        (t("(;(E2;(E1;(E3))))"), -1),
        (t("(;(E3;(E1;(E2))))"), -1),
        (t("(;(E3;(E2;(E1))))"), 1),
    )


def test_syntactic_cancellation():
    expansion = expand_operator([(1, ("E1", "E2")), (-1, ("E1", "E2"))], ("E1", "E2"))
    assert expansion.surviving == LinearCombination.zero()
    assert expansion.surviving_count == 0


def test_composition_check_base_case_and_pair():
    assert verify_composition(("E1",), ENV1, CUBE)
    check = verify_composition(("E1", "E2"), ENV1, CUBE)
    assert check.ok and check.tree_side == parse_polynomial("12*x1^4", 1)


def test_composition_check_randomized_sweep():
    rng = random.Random(20240811)
    symbols = ("E1", "E2", "E3")
    for trial in range(100):
        n = rng.choice((2, 3))
        env = DerivationEnv.from_dict(
            {
                "n": n,
                **{
                    s: [random_polynomial(rng, n, 2).render() for _ in range(n)]
                    for s in symbols
                },
            }
        )
        word = tuple(rng.choice(symbols) for _ in range(rng.randint(1, 3)))
        f = random_polynomial(rng, n, 3)
        assert verify_composition(word, env, f), (trial, word)


def test_module_law_flat_case():
    rng = random.Random(7)
    env = DerivationEnv.from_dict(
        {"n": 2, "E1": ["x2", "x1"], "E2": ["x1*x2", "1"]}
    )
    alg = labeled_algebra(("E1", "E2"))
    for degree in range(3):
        for tree in labeled_trees(degree, ("E1", "E2")):
            a = random_polynomial(rng, 2, 2)
            b = random_polynomial(rng, 2, 2)
            lhs = apply_tree_operator(tree, env, a * b)
            rhs = Polynomial.zero(2)
            for pair, coeff in alg.coproduct(tree):
                rhs = rhs + coeff * (
                    apply_tree_operator(pair.left, env, a)
                    * apply_tree_operator(pair.right, env, b)
                )
            assert lhs == rhs, tree.encode()


@settings(max_examples=25)
@given(polys, polys)
def test_tree_operator_linear_in_argument(p, q):
    env = DerivationEnv.from_dict({"n": 3, "E1": ["x2", "x3", "x1"]})
    tree = t("(;(E1;(E1)))")
    lhs = apply_tree_operator(tree, env, p + q)
    rhs = apply_tree_operator(tree, env, p) + apply_tree_operator(tree, env, q)
    assert lhs == rhs


def test_word_polynomial_parser():
    parsed = parse_word_polynomial("E3,E2,E1 - E3,E1,E2 + 2*E1,E2")
    assert parsed == [
        (Fraction(1), ("E3", "E2", "E1")),
        (Fraction(-1), ("E3", "E1", "E2")),
        (Fraction(2), ("E1", "E2")),
    ]
