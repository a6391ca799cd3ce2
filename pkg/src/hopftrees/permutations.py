"""Permutations in disjoint-cycle form and their heap-product Hopf algebra.

A permutation is stored in standard order: every cycle written starting from
its smallest entry, cycles listed with decreasing first entries, and fixed
points kept as explicit 1-cycles.  The heap product of ``s in S_m`` with
``t in S_n`` shifts ``s``'s entries up by ``n`` and then attaches each of its
cycle strings either immediately to the right of a letter of ``t`` or as a
standalone cycle, one term per assignment, ``(n+1)^r`` terms in all.  The
coproduct splits the cycle set over all subsets, relabeling each part
order-isomorphically down to an initial segment.

The same structure lives on standard heap-ordered trees: a cycle string maps
to the subtree in which each entry hangs below its nearest smaller left
neighbor, and the string is recovered by listing children in decreasing label
order.  :func:`permutation_to_tree` / :func:`tree_to_permutation` realize this
bijection; the exhaustive sweeps in the tests check that it intertwines both
products and both coproducts.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import axioms
from .algebra import LinearCombination, ParseError, TensorPair
from .trees import Tree, canonicalize, is_standard_heap_tree


@dataclass(frozen=True)
class CyclePermutation:
    """Disjoint cycles over a finite set of positive integers, standard order.

    Algebra basis elements act on ``{1..n}``; :func:`shift` produces the
    shifted window ``{m+1..m+k}`` used while building heap products.
    """

    cycles: tuple[tuple[int, ...], ...] = ()

    @classmethod
    def from_cycles(cls, cycles, n: int | None = None) -> "CyclePermutation":
        """Normalize raw cycles to standard order, adding fixed points up to ``n``."""
        seen: set[int] = set()
        cleaned: list[tuple[int, ...]] = []
        for cycle in cycles:
            entries = tuple(int(x) for x in cycle)
            if not entries:
                continue
            for x in entries:
                if x <= 0:
                    raise ValueError(f"entries must be positive, got {x}")
                if x in seen:
                    raise ValueError(f"duplicate entry {x} across cycles")
                seen.add(x)
            cleaned.append(entries)
        top = max(seen, default=0)
        size = top if n is None else int(n)
        if size < top:
            raise ValueError(f"entry {top} out of range for S_{size}")
        for fixed in range(1, size + 1):
            if fixed not in seen:
                cleaned.append((fixed,))
        return cls(_standardize(cleaned))

    @classmethod
    def identity(cls, n: int) -> "CyclePermutation":
        return cls.from_cycles([], n=n)

    def points(self) -> frozenset[int]:
        return frozenset(x for cycle in self.cycles for x in cycle)

    @property
    def size(self) -> int:
        """Number of points moved-or-fixed; the grading degree."""
        return sum(len(c) for c in self.cycles)

    def is_standard_domain(self) -> bool:
        return self.points() == frozenset(range(1, self.size + 1))

    def encode(self) -> str:
        if not self.cycles:
            return "()"
        return "".join("(" + " ".join(str(x) for x in c) + ")" for c in self.cycles)

    def __str__(self) -> str:
        return self.encode()


def _standardize(cycles) -> tuple[tuple[int, ...], ...]:
    rotated = []
    for cycle in cycles:
        pivot = cycle.index(min(cycle))
        rotated.append(tuple(cycle[pivot:] + cycle[:pivot]))
    rotated.sort(key=lambda c: -c[0])
    return tuple(rotated)


def standard_order(cycles, n: int | None = None) -> CyclePermutation:
    """Standard form of a raw cycle list: smallest-first cycles, decreasing heads."""
    return CyclePermutation.from_cycles(cycles, n=n)


def shift(p: CyclePermutation, offset: int) -> CyclePermutation:
    """Increase every entry by ``offset`` (a permutation of the shifted window)."""
    return CyclePermutation(tuple(tuple(x + offset for x in c) for c in p.cycles))


def relabel(cycles) -> CyclePermutation:
    """Relabel the entries of disjoint cycles order-isomorphically to ``1..k``."""
    cycles = [tuple(int(x) for x in c) for c in cycles]
    entries = sorted(x for c in cycles for x in c)
    if len(entries) != len(set(entries)):
        raise ValueError("cycles are not disjoint")
    mapping = {old: new for new, old in enumerate(entries, start=1)}
    return CyclePermutation(_standardize([tuple(mapping[x] for x in c) for c in cycles]))


_STANDALONE = ("standalone",)


def heap_product(s: CyclePermutation, t: CyclePermutation) -> LinearCombination:
    """Attach each shifted cycle string of ``s`` into ``t``; ``(n+1)^r`` terms.

    Attachment points are the letters of ``t`` plus one extra meaning "keep the
    string as its own cycle".  A string attached to letter ``x`` is inserted
    immediately to the right of ``x``; strings sharing a letter stack with
    larger heads nearer to ``x``, which is exactly the arrangement that makes
    every stacked string hang below ``x`` under the tree bijection.
    """
    if not s.is_standard_domain() or not t.is_standard_domain():
        raise ValueError("heap product expects permutations of {1..n}")
    n = t.size
    shifted = shift(s, n).cycles  # heads strictly decreasing
    letters = [
        (ci, pi) for ci, cycle in enumerate(t.cycles) for pi in range(len(cycle))
    ]
    points: list[tuple] = list(letters) + [_STANDALONE]
    out: list[tuple[CyclePermutation, int]] = []
    for assignment in itertools.product(points, repeat=len(shifted)):
        blocks: dict[tuple, list[tuple[int, ...]]] = {}
        standalone: list[tuple[int, ...]] = []
        for string, point in zip(shifted, assignment):
            if point is _STANDALONE:
                standalone.append(string)
            else:
                # iteration order of `shifted` has decreasing heads already
                blocks.setdefault(point, []).append(string)
        new_cycles: list[tuple[int, ...]] = []
        for ci, cycle in enumerate(t.cycles):
            grown: list[int] = []
            for pi, letter in enumerate(cycle):
                grown.append(letter)
                for string in blocks.get((ci, pi), []):
                    grown.extend(string)
            new_cycles.append(tuple(grown))
        new_cycles.extend(standalone)
        out.append((CyclePermutation(_standardize(new_cycles)), 1))
    return LinearCombination(out)


def cycle_coproduct(p: CyclePermutation) -> LinearCombination:
    """Split the cycle set over all subsets, relabeling both parts."""
    cycles = p.cycles
    terms: list[tuple[TensorPair, int]] = []
    for mask in range(1 << len(cycles)):
        kept = [c for i, c in enumerate(cycles) if mask >> i & 1]
        rest = [c for i, c in enumerate(cycles) if not mask >> i & 1]
        terms.append((TensorPair(relabel(kept), relabel(rest)), 1))
    return LinearCombination(terms)


def perm_counit(p: CyclePermutation) -> Fraction:
    return Fraction(1 if not p.cycles else 0)


def symmetric_group(n: int) -> list[CyclePermutation]:
    """All elements of S_n in standard cycle form."""
    out = []
    for images in itertools.permutations(range(1, n + 1)):
        mapping = {i + 1: images[i] for i in range(n)}
        remaining = set(mapping)
        cycles = []
        while remaining:
            start = min(remaining)
            cycle = [start]
            remaining.discard(start)
            nxt = mapping[start]
            while nxt != start:
                cycle.append(nxt)
                remaining.discard(nxt)
                nxt = mapping[nxt]
            cycles.append(tuple(cycle))
        out.append(CyclePermutation(_standardize(cycles)))
    return sorted(out, key=CyclePermutation.encode)


# ---------------------------------------------------------------------------
# Bijection with standard heap-ordered trees


def _string_to_subtree(string: tuple[int, ...]) -> Tree:
    """Each entry becomes a child of its nearest smaller left neighbor."""
    children_of: dict[int, list[int]] = {x: [] for x in string}
    roots: list[int] = []
    stack: list[int] = []
    for x in string:
        while stack and stack[-1] > x:
            stack.pop()
        if stack:
            children_of[stack[-1]].append(x)
        else:
            roots.append(x)
        stack.append(x)

    def build(x: int) -> Tree:
        return canonicalize(Tree(x, tuple(build(c) for c in children_of[x])))

    assert len(roots) == 1  # a standard-order string starts with its minimum
    return build(roots[0])


def permutation_to_tree(p: CyclePermutation) -> Tree:
    """Standard-order cycles become the root subtrees of a heap-ordered tree."""
    if not p.is_standard_domain():
        raise ValueError("expected a permutation of {1..n}")
    subtrees = tuple(_string_to_subtree(c) for c in p.cycles)
    return canonicalize(Tree(None, subtrees))


def _subtree_to_string(t: Tree) -> tuple[int, ...]:
    out: list[int] = [t.label]
    for child in sorted(t.children, key=lambda c: -c.label):
        out.extend(_subtree_to_string(child))
    return tuple(out)


def tree_to_permutation(t: Tree) -> CyclePermutation:
    """Inverse of :func:`permutation_to_tree` on standard heap-ordered trees."""
    if not is_standard_heap_tree(t):
        raise ValueError(f"{t.encode()} is not a standard heap-ordered tree")
    cycles = [_subtree_to_string(c) for c in t.children]
    return CyclePermutation(_standardize(cycles))


@dataclass(frozen=True)
class PermutationHopfAlgebra:
    """Adapter exposing the heap product algebra to the generic axiom sweep."""

    def unit(self) -> CyclePermutation:
        return CyclePermutation()

    def degree(self, p: CyclePermutation) -> int:
        return p.size

    def basis(self, degree: int) -> list[CyclePermutation]:
        return symmetric_group(degree)

    def product(self, a: CyclePermutation, b: CyclePermutation) -> LinearCombination:
        return heap_product(a, b)

    def coproduct(self, p: CyclePermutation) -> LinearCombination:
        return cycle_coproduct(p)

    def counit(self, p: CyclePermutation) -> Fraction:
        return perm_counit(p)

    def antipode(self, p: CyclePermutation) -> LinearCombination:
        return axioms.graded_antipode(self, p)

    def verify(self, max_degree: int) -> axioms.VerificationReport:
        return axioms.verify_hopf_axioms(self, max_degree, "heap product algebra")


HEAP_PRODUCT_ALGEBRA = PermutationHopfAlgebra()


def parse_permutation(text: str, n: int | None = None) -> CyclePermutation:
    """Parse standard cycle notation like ``(1 3)(4)(5 7)``; ``()`` is the
    identity of S_0.  ``n`` forces the ambient symmetric group."""
    stripped = text.strip()
    if stripped == "()":
        return CyclePermutation.identity(n or 0)
    cycles: list[list[int]] = []
    pos = 0
    while pos < len(stripped):
        ch = stripped[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch != "(":
            raise ParseError("expected '('", stripped, pos)
        end = stripped.find(")", pos)
        if end < 0:
            raise ParseError("unclosed cycle", stripped, pos)
        body = stripped[pos + 1 : end]
        entries = []
        for piece in body.replace(",", " ").split():
            if not piece.isdigit():
                raise ParseError(f"invalid entry {piece!r}", stripped, pos + 1)
            entries.append(int(piece))
        if not entries:
            raise ParseError("empty cycle", stripped, pos)
        cycles.append(entries)
        pos = end + 1
    try:
        return CyclePermutation.from_cycles(cycles, n=n)
    except ValueError as exc:
        raise ParseError(str(exc), stripped, 0) from exc
