"""Exact-arithmetic Hopf algebras of trees, forests, words and permutations,
together with their actions on polynomial algebras by symbolic derivations."""

from .algebra import (
    LinearCombination,
    ParseError,
    TensorPair,
    extend_bilinear,
    extend_linear,
    format_fraction,
    tensor,
)
from .axioms import VerificationReport, graded_antipode, verify_hopf_axioms
from .connection import (
    Connection,
    apply_connection_operator,
    check_module_law,
    covariant_derivative,
    covariant_differential,
    subtree_derivation,
    vector_covariant_differential,
)
from .connes_kreimer import (
    Cut,
    admissible_cuts,
    apply_cut,
    dual_pairing,
    forest_coproduct,
    forest_counit,
    forest_monomials,
    forest_symmetry_factor,
    monomial_product,
    symmetry_factor,
    tree_edges,
    verify_forest_algebra,
)
from .diff_ops import (
    CompositionCheck,
    Derivation,
    DerivationEnv,
    OperatorExpansion,
    Polynomial,
    apply_tree_operator,
    expand_operator,
    parse_polynomial,
    parse_word_polynomial,
    verify_composition,
    word_to_trees,
)
from .grossman_larson import (
    HEAP_ORDERED,
    ORDERED,
    ROOTED,
    TreeHopfAlgebra,
    labeled_algebra,
)
from .permutations import (
    HEAP_PRODUCT_ALGEBRA,
    CyclePermutation,
    cycle_coproduct,
    heap_product,
    parse_permutation,
    perm_counit,
    permutation_to_tree,
    relabel,
    shift,
    standard_order,
    symmetric_group,
    tree_to_permutation,
)
from .shuffle import (
    EMPTY_WORD,
    ShuffleHopfAlgebra,
    Word,
    deconcatenation,
    parse_word,
    shuffle_antipode,
    shuffle_product,
    word_count,
    word_counit,
)
from .trees import (
    Forest,
    Tree,
    add_root,
    attach_all,
    canonicalize,
    heap_ordered_trees,
    is_standard_heap_tree,
    labeled_trees,
    ordered_labeled_trees,
    ordered_trees,
    parse_forest,
    parse_tree,
    relabel_standard,
    rooted_trees,
    shift_labels,
    strip_root,
)

__version__ = "0.1.0"
