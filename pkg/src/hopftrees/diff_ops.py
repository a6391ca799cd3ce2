"""Sparse exact polynomials, derivations, and the tree-to-operator expansion.

A labeled tree encodes a higher-order differential operator: number the
non-root nodes ``1..k``, pick a summation index ``i_j in {1..n}`` for each,
and multiply one factor per node — the root contributes ``f`` differentiated
by its children's indices, and a node labeled ``E`` contributes the ``i_j``-th
coefficient of ``E`` differentiated by its children's indices.  Summing over
all index assignments gives the operator's value on ``f``.

Words in the derivation symbols expand to combinations of labeled trees via
the grafting product, and the expansion composes: the tree operator of a word
equals the nested application of the derivations.  Cancellations between words
happen at the tree level, before any differentiation.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .algebra import (
    LinearCombination,
    ParseError,
    Scalar,
    extend_bilinear,
    format_fraction,
)
from .grossman_larson import labeled_algebra
from .trees import Tree, canonicalize


class Polynomial:
    """Sparse multivariate polynomial with Fraction coefficients.

    Terms map exponent vectors (tuples of length ``num_vars``) to nonzero
    coefficients.  Immutable by convention.
    """

    __slots__ = ("num_vars", "_terms")

    def __init__(self, num_vars: int, terms: Mapping | Iterable = ()):
        self.num_vars = int(num_vars)
        data: dict[tuple[int, ...], Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exponents, coeff in items:
            exps = tuple(int(e) for e in exponents)
            if len(exps) != self.num_vars or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent vector {exps} for {self.num_vars} variables")
            c = Fraction(coeff)
            if not c:
                continue
            c += data.get(exps, 0)
            if c:
                data[exps] = c
            else:
                del data[exps]
        self._terms = data

    @classmethod
    def zero(cls, num_vars: int) -> "Polynomial":
        return cls(num_vars)

    @classmethod
    def constant(cls, num_vars: int, value: Scalar) -> "Polynomial":
        return cls(num_vars, {(0,) * num_vars: Fraction(value)})

    @classmethod
    def variable(cls, num_vars: int, index: int) -> "Polynomial":
        """The variable ``x_index``, 1-based."""
        if not 1 <= index <= num_vars:
            raise ValueError(f"variable index {index} out of range 1..{num_vars}")
        exps = tuple(1 if i == index - 1 else 0 for i in range(num_vars))
        return cls(num_vars, {exps: 1})

    def terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        return sorted(self._terms.items(), key=lambda kv: (sum(kv[0]), kv[0]))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.num_vars == other.num_vars and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.num_vars, frozenset(self._terms.items())))

    def _check(self, other: "Polynomial") -> None:
        if self.num_vars != other.num_vars:
            raise ValueError("variable counts differ")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        return Polynomial(self.num_vars, list(self._terms.items()) + list(other._terms.items()))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.num_vars, {e: -c for e, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            out: dict[tuple[int, ...], Fraction] = {}
            for e1, c1 in self._terms.items():
                for e2, c2 in other._terms.items():
                    key = tuple(a + b for a, b in zip(e1, e2))
                    val = out.get(key, Fraction(0)) + c1 * c2
                    if val:
                        out[key] = val
                    else:
                        out.pop(key, None)
            return Polynomial(self.num_vars, out)
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return Polynomial(self.num_vars, {e: c * v for e, v in self._terms.items()})
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.__mul__(other)
        return NotImplemented

    def derivative(self, index: int) -> "Polynomial":
        """Formal partial derivative with respect to ``x_index`` (1-based)."""
        if not 1 <= index <= self.num_vars:
            raise ValueError(f"variable index {index} out of range 1..{self.num_vars}")
        i = index - 1
        out = {}
        for exps, coeff in self._terms.items():
            if exps[i] == 0:
                continue
            lowered = exps[:i] + (exps[i] - 1,) + exps[i + 1 :]
            out[lowered] = out.get(lowered, Fraction(0)) + coeff * exps[i]
        return Polynomial(self.num_vars, out)

    def total_degree(self) -> int:
        return max((sum(e) for e in self._terms), default=0)

    def render(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for exps, coeff in self.terms():
            factors = [
                f"x{i + 1}" + (f"^{e}" if e > 1 else "")
                for i, e in enumerate(exps)
                if e > 0
            ]
            mag = abs(coeff)
            if not factors:
                body = format_fraction(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = format_fraction(mag) + "*" + "*".join(factors)
            if not pieces:
                pieces.append(body if coeff > 0 else f"-{body}")
            else:
                pieces.append((" + " if coeff > 0 else " - ") + body)
        return "".join(pieces)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"Polynomial({self.num_vars}, {self.render()!r})"


def parse_polynomial(text: str, num_vars: int) -> Polynomial:
    """Parse forms like ``3*x1^2*x2 - 1/2*x2 + 4``."""
    stripped = text.strip()
    if not stripped:
        raise ParseError("empty polynomial", text, 0)
    # split on top-level + and - (a leading sign and a sign after '*'/'^'/'/' are
    # part of the term, everything else separates terms)
    chunks: list[tuple[int, str, int]] = []
    current_sign = 1
    term_start = 0
    buf = ""
    for i, ch in enumerate(stripped + "\0"):
        if ch in "+-" and buf.strip() and not buf.rstrip().endswith(("*", "^", "/")):
            chunks.append((current_sign, buf, term_start))
            current_sign = 1 if ch == "+" else -1
            buf = ""
            term_start = i + 1
        elif ch == "-" and not buf.strip():
            current_sign = -current_sign
            term_start = i + 1
        elif ch == "+" and not buf.strip():
            term_start = i + 1
        elif ch != "\0":
            buf += ch
    if buf.strip():
        chunks.append((current_sign, buf, term_start))
    if not chunks:
        raise ParseError("empty polynomial", text, 0)
    result = Polynomial.zero(num_vars)
    for sgn, chunk, offset in chunks:
        result = result + sgn * _parse_monomial(chunk, num_vars, text, offset)
    return result


def _parse_monomial(chunk: str, num_vars: int, full: str, offset: int) -> Polynomial:
    coeff = Fraction(1)
    exps = [0] * num_vars
    for factor in chunk.split("*"):
        piece = factor.strip()
        if not piece:
            raise ParseError("empty factor", full, offset)
        if piece[0] == "x":
            name, _, power = piece.partition("^")
            idx_text = name[1:]
            if not idx_text.isdigit():
                raise ParseError(f"invalid variable {name!r}", full, offset)
            idx = int(idx_text)
            if not 1 <= idx <= num_vars:
                raise ParseError(f"variable x{idx} out of range for n={num_vars}", full, offset)
            exponent = 1
            if power:
                if not power.strip().isdigit():
                    raise ParseError(f"invalid exponent {power!r}", full, offset)
                exponent = int(power)
            exps[idx - 1] += exponent
        else:
            try:
                coeff *= Fraction(piece)
            except (ValueError, ZeroDivisionError):
                raise ParseError(f"invalid coefficient {piece!r}", full, offset) from None
    return Polynomial(num_vars, {tuple(exps): coeff})


@dataclass(frozen=True, eq=False)
class Derivation:
    """A first-order operator ``sum_mu a^mu d/dx_mu`` with polynomial coefficients."""

    coeffs: tuple[Polynomial, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a derivation needs at least one coefficient")
        n = self.coeffs[0].num_vars
        if any(p.num_vars != n for p in self.coeffs) or len(self.coeffs) != n:
            raise ValueError("coefficient count must equal the variable count")

    @classmethod
    def zero(cls, num_vars: int) -> "Derivation":
        return cls(tuple(Polynomial.zero(num_vars) for _ in range(num_vars)))

    @property
    def num_vars(self) -> int:
        return len(self.coeffs)

    def apply(self, f: Polynomial) -> Polynomial:
        """``sum_mu a^mu * df/dx_mu``; satisfies the Leibniz rule."""
        if f.num_vars != self.num_vars:
            raise ValueError("variable counts differ")
        out = Polynomial.zero(self.num_vars)
        for mu, coeff in enumerate(self.coeffs, start=1):
            if coeff:
                out = out + coeff * f.derivative(mu)
        return out

    def __add__(self, other: "Derivation") -> "Derivation":
        if not isinstance(other, Derivation):
            return NotImplemented
        return Derivation(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Derivation") -> "Derivation":
        return self + (-1) * other

    def __rmul__(self, other) -> "Derivation":
        if isinstance(other, (int, Fraction, Polynomial)):
            return Derivation(tuple(other * p for p in self.coeffs))
        return NotImplemented

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Derivation):
            return NotImplemented
        return self.coeffs == other.coeffs

    def render(self) -> str:
        parts = [
            f"({p.render()})*D{mu}" for mu, p in enumerate(self.coeffs, start=1) if p
        ]
        return " + ".join(parts) if parts else "0"

    def __str__(self) -> str:
        return self.render()


class DerivationEnv:
    """A finite family of named derivations sharing one variable count."""

    def __init__(self, num_vars: int, derivations: Mapping[str, Derivation]):
        self.num_vars = int(num_vars)
        table = dict(derivations)
        for name, deriv in table.items():
            if deriv.num_vars != self.num_vars:
                raise ValueError(f"derivation {name} has the wrong variable count")
        self._table = table

    def __getitem__(self, symbol: str) -> Derivation:
        if symbol not in self._table:
            raise KeyError(f"unknown derivation symbol {symbol!r}")
        return self._table[symbol]

    def __contains__(self, symbol: str) -> bool:
        return symbol in self._table

    @property
    def symbols(self) -> tuple[str, ...]:
        return tuple(sorted(self._table))

    @classmethod
    def from_dict(cls, spec: Mapping) -> "DerivationEnv":
        """Build from ``{"n": 2, "E1": ["x1", "0"], ...}`` with polynomial strings."""
        if "n" not in spec:
            raise ValueError("derivation spec needs an 'n' entry")
        n = int(spec["n"])
        table = {}
        for name, coeffs in spec.items():
            if name == "n":
                continue
            if len(coeffs) != n:
                raise ValueError(f"derivation {name} needs {n} coefficient polynomials")
            table[name] = Derivation(tuple(parse_polynomial(str(c), n) for c in coeffs))
        return cls(n, table)


# ---------------------------------------------------------------------------
# Tree operators


def _number_nodes(t: Tree) -> tuple[list[int], dict[int, tuple[str, list[int]]]]:
    """DFS-number the non-root nodes 1..k; return root child numbers and, per
    node number, its label and its children's numbers."""
    info: dict[int, tuple[str, list[int]]] = {}
    counter = itertools.count(1)

    def walk(node: Tree) -> list[int]:
        numbers = []
        for child in node.children:
            j = next(counter)
            numbers.append(j)
            info[j] = (child.label, walk(child))
        return numbers

    root_children = walk(t)
    return root_children, info


def apply_tree_operator(t: Tree, env: DerivationEnv, f: Polynomial) -> Polynomial:
    """Evaluate the differential operator encoded by a labeled tree on ``f``."""
    if t.label is not None:
        raise ValueError("the root of an operator tree must be unlabeled")
    if f.num_vars != env.num_vars:
        raise ValueError("variable counts differ")
    root_children, info = _number_nodes(t)
    for j, (label, _) in info.items():
        if not isinstance(label, str) or label not in env:
            raise KeyError(f"unknown derivation symbol {label!r} at node {j}")
    n = env.num_vars
    k = len(info)
    total = Polynomial.zero(n)
    for assignment in itertools.product(range(1, n + 1), repeat=k):
        index = dict(zip(range(1, k + 1), assignment))
        term = f
        for child in root_children:
            term = term.derivative(index[child])
        for j, (label, children) in info.items():
            factor = env[label].coeffs[index[j] - 1]
            for child in children:
                factor = factor.derivative(index[child])
            term = term * factor
            if not term:
                break
        total = total + term
    return total


def word_to_trees(word: Sequence[str], symbols: Iterable[str] | None = None) -> LinearCombination:
    """Expand a word in derivation symbols into labeled trees.

    The letters multiply left to right through the grafting product, starting
    from single-branch trees; the result is the tree form of the composed
    operator.
    """
    word = tuple(word)
    if symbols is not None:
        known = set(symbols)
        unknown = [s for s in word if s not in known]
        if unknown:
            raise KeyError(f"unknown derivation symbols {unknown}")
    alphabet = tuple(dict.fromkeys(word)) if symbols is None else tuple(sorted(set(word) | set(symbols)))
    alg = labeled_algebra(alphabet)
    result = LinearCombination.single(alg.unit())
    for letter in reversed(word):
        generator = canonicalize(Tree(None, (Tree(letter),)))
        result = extend_bilinear(alg.product, LinearCombination.single(generator), result)
    return result


@dataclass
class OperatorTerm:
    """One surviving tree together with its formal multi-index factorization."""

    coeff: Fraction
    tree: Tree
    factors: tuple[str, ...]

    def render(self) -> str:
        sign = "-" if self.coeff < 0 else "+"
        mag = abs(self.coeff)
        coeff_text = "" if mag == 1 else f"{format_fraction(mag)}*"
        return f"{sign} {coeff_text}sum " + " ".join(self.factors)


@dataclass
class OperatorExpansion:
    """Tree-level expansion of a formal polynomial in derivation symbols."""

    raw_tree_count: int
    surviving: LinearCombination
    terms: list[OperatorTerm]

    @property
    def surviving_count(self) -> int:
        return int(self.surviving.total_multiplicity())

    @property
    def cancelled_count(self) -> int:
        return self.raw_tree_count - self.surviving_count

    def report(self) -> str:
        return (
            f"raw_trees: {self.raw_tree_count}, "
            f"cancelled: {self.cancelled_count}, "
            f"surviving: {self.surviving_count}"
        )


def _tree_factors(t: Tree) -> tuple[str, ...]:
    root_children, info = _number_nodes(t)
    factors = []
    for j in sorted(info, reverse=True):
        label, children = info[j]
        ds = "".join(f"D_i{c} " for c in children)
        factors.append(f"({ds}a_{label}^i{j})")
    ds = "".join(f"D_i{c} " for c in root_children)
    factors.append(f"({ds}f)")
    return tuple(factors)


def expand_operator(
    word_terms: Sequence[tuple[Scalar, Sequence[str]]],
    symbols: Iterable[str] | None = None,
) -> OperatorExpansion:
    """Expand ``sum_w c_w * word`` to trees and cancel at the tree level.

    The raw count tallies every generated tree with multiplicity, before
    cancellation between words; the surviving combination is what is left
    after coefficients merge.
    """
    raw = Fraction(0)
    surviving = LinearCombination.zero()
    for coeff, word in word_terms:
        expansion = word_to_trees(tuple(word), symbols)
        raw += abs(Fraction(coeff)) * expansion.total_multiplicity()
        surviving = surviving + Fraction(coeff) * expansion
    terms = [
        OperatorTerm(c, t, _tree_factors(t)) for t, c in surviving.terms()
    ]
    return OperatorExpansion(int(raw), surviving, terms)


@dataclass
class CompositionCheck:
    """Outcome of comparing a word's tree expansion against nested application."""

    ok: bool
    tree_side: Polynomial
    nested_side: Polynomial

    def __bool__(self) -> bool:
        return self.ok

    def render(self) -> str:
        if self.ok:
            return f"ok: both sides equal {self.tree_side.render()}"
        return (
            "MISMATCH\n"
            f"  tree expansion:     {self.tree_side.render()}\n"
            f"  nested application: {self.nested_side.render()}"
        )


def verify_composition(word: Sequence[str], env: DerivationEnv, f: Polynomial) -> CompositionCheck:
    """Check that the tree expansion of a word applied to ``f`` equals the
    nested application of its derivations, left to right."""
    trees = word_to_trees(tuple(word), env.symbols)
    tree_side = Polynomial.zero(env.num_vars)
    for t, coeff in trees:
        tree_side = tree_side + coeff * apply_tree_operator(t, env, f)
    nested = f
    for symbol in reversed(tuple(word)):
        nested = env[symbol].apply(nested)
    return CompositionCheck(tree_side == nested, tree_side, nested)


def parse_word_polynomial(text: str) -> list[tuple[Fraction, tuple[str, ...]]]:
    """Parse ``E3,E2,E1 - E3,E1,E2 + 2*E1,E2`` into (coefficient, word) pairs."""
    stripped = text.strip()
    if not stripped:
        raise ParseError("empty operator polynomial", text, 0)
    out: list[tuple[Fraction, tuple[str, ...]]] = []
    sign = Fraction(1)
    for piece in re.split(r"([+-])", stripped):
        chunk = piece.strip()
        if not chunk:
            continue
        if chunk == "+":
            sign = Fraction(1)
            continue
        if chunk == "-":
            sign = Fraction(-1)
            continue
        coeff = sign
        body = chunk
        if "*" in chunk:
            head, _, body = chunk.partition("*")
            try:
                coeff = sign * Fraction(head.strip())
            except (ValueError, ZeroDivisionError):
                raise ParseError(f"invalid coefficient {head!r}", text, 0) from None
        letters = tuple(s.strip() for s in body.split(","))
        if not all(s.isidentifier() for s in letters):
            raise ParseError(f"invalid word {body!r}", text, 0)
        out.append((coeff, letters))
        sign = Fraction(1)
    return out
