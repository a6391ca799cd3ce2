"""The grafting Hopf algebra of rooted trees, parameterized by tree variant.

The product of ``t1`` and ``t2`` strips the root of ``t1`` and attaches the
resulting forest to the nodes of ``t2`` in all ``(n+1)^r`` ways; the coproduct
splits the root's children over all ``2^r`` position subsets, regrafting each
side onto a fresh root.  The single-node tree is the unit and the only
group-like basis element, so the algebra is graded connected and the antipode
is the standard recursion.

One object, :class:`TreeHopfAlgebra`, covers plain, labeled, ordered,
ordered-labeled and standard heap-ordered trees; the heap variant shifts
labels on the product side and restandardizes them on the coproduct side so
that basis elements stay in standard form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import axioms
from .algebra import LinearCombination, TensorPair
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
    relabel_standard,
    rooted_trees,
    shift_labels,
    strip_root,
)


@dataclass(frozen=True)
class TreeHopfAlgebra:
    """Grafting product / root-split coproduct on a chosen tree variant."""

    ordered: bool = False
    heap: bool = False
    symbols: tuple[str, ...] = ()

    def __post_init__(self):
        if self.heap and (self.ordered or self.symbols):
            raise ValueError("heap-ordered flavor uses unordered trees with integer labels")

    def unit(self) -> Tree:
        return Tree(ordered=self.ordered)

    def degree(self, t: Tree) -> int:
        return t.degree()

    def basis(self, degree: int, cap: int | None = None) -> list[Tree]:
        if self.heap:
            return heap_ordered_trees(degree, cap)
        if self.symbols and self.ordered:
            return ordered_labeled_trees(degree, self.symbols, cap)
        if self.symbols:
            return labeled_trees(degree, self.symbols, cap)
        if self.ordered:
            return ordered_trees(degree, cap)
        return rooted_trees(degree, cap)

    def _check_member(self, t: Tree) -> None:
        if t.ordered != self.ordered:
            raise ValueError(f"tree {t.encode()} has the wrong ordered/unordered flavor")
        if self.heap and not is_standard_heap_tree(t):
            raise ValueError(f"tree {t.encode()} is not a standard heap-ordered tree")
        if self.symbols:
            bad = [x for x in t.labels()[1:] if x not in self.symbols]
            if bad:
                raise ValueError(f"unknown labels {bad} in {t.encode()}")

    def product(self, t1: Tree, t2: Tree) -> LinearCombination:
        """Attach the root-subtrees of ``t1`` to the nodes of ``t2`` in all ways."""
        self._check_member(t1)
        self._check_member(t2)
        forest = strip_root(t1)
        if self.heap:
            forest = Forest(tuple(shift_labels(s, t2.degree()) for s in forest.trees))
        return attach_all(forest, t2)

    def coproduct(self, t: Tree) -> LinearCombination:
        """Split the root's children over all position subsets; cocommutative."""
        self._check_member(t)
        children = t.children
        terms: list[tuple[TensorPair, int]] = []
        for mask in range(1 << len(children)):
            kept = tuple(c for i, c in enumerate(children) if mask >> i & 1)
            rest = tuple(c for i, c in enumerate(children) if not mask >> i & 1)
            left = add_root(Forest(kept), self.ordered)
            right = add_root(Forest(rest), self.ordered)
            if self.heap:
                left = relabel_standard(left)
                right = relabel_standard(right)
            terms.append((TensorPair(left, right), 1))
        return LinearCombination(terms)

    def counit(self, t: Tree) -> Fraction:
        self._check_member(t)
        return Fraction(1 if t.degree() == 0 else 0)

    def antipode(self, t: Tree) -> LinearCombination:
        self._check_member(t)
        return axioms.graded_antipode(self, canonicalize(t))

    def verify(self, max_degree: int, name: str | None = None) -> axioms.VerificationReport:
        """Run the Hopf axiom sweep on all basis trees up to ``max_degree``."""
        return axioms.verify_hopf_axioms(self, max_degree, name or self.describe())

    def describe(self) -> str:
        if self.heap:
            return "heap-ordered tree algebra"
        bits = []
        if self.ordered:
            bits.append("ordered")
        if self.symbols:
            bits.append(f"labeled({','.join(self.symbols)})")
        return " ".join(bits) + " tree algebra" if bits else "rooted tree algebra"


ROOTED = TreeHopfAlgebra()
ORDERED = TreeHopfAlgebra(ordered=True)
HEAP_ORDERED = TreeHopfAlgebra(heap=True)


def labeled_algebra(symbols, ordered: bool = False) -> TreeHopfAlgebra:
    return TreeHopfAlgebra(ordered=ordered, symbols=tuple(symbols))
