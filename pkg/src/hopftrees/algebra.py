"""Formal linear combinations over arbitrary bases, with exact rational coefficients.

Every algebraic object in this library is either a basis element (a tree, a
forest, a word, a permutation, a tensor pair of those) or a
:class:`LinearCombination` of basis elements.  Coefficients are always
``fractions.Fraction``; nothing in the library ever touches floating point.

A basis element must be immutable, hashable, and expose ``encode() -> str``
returning its canonical text form.  Two basis elements are equal exactly when
their encodings are equal, and all printed output is sorted by encoding, so
results are deterministic across runs and platforms.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Iterable, Iterator, Mapping, Protocol, runtime_checkable


Scalar = Fraction | int
"""Anything accepted where a coefficient is expected."""


class ParseError(ValueError):
    """Malformed textual input, annotated with the offending position."""

    def __init__(self, message: str, text: str | None = None, position: int | None = None):
        super().__init__(message)
        self.message = message
        self.text = text
        self.position = position

    def __str__(self) -> str:
        if self.text is None or self.position is None:
            return self.message
        pointer = " " * self.position + "^"
        return f"{self.message} at position {self.position}\n  {self.text}\n  {pointer}"


@runtime_checkable
class BasisElement(Protocol):
    def encode(self) -> str: ...


@dataclass(frozen=True)
class TensorPair:
    """A pure tensor ``left (x) right`` of two basis elements."""

    left: Any
    right: Any

    def encode(self) -> str:
        return f"{self.left.encode()} (x) {self.right.encode()}"

    def swap(self) -> "TensorPair":
        return TensorPair(self.right, self.left)


class LinearCombination:
    """A finite formal sum ``sum_i c_i * b_i`` with nonzero Fraction coefficients.

    Immutable.  Supports ``+``, ``-``, unary ``-`` and multiplication by a
    scalar on either side.  Zero coefficients are purged on construction.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Any, Scalar] | Iterable[tuple[Any, Scalar]] = ()):
        data: dict[Any, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for basis, coeff in items:
            c = Fraction(coeff)
            if not c:
                continue
            c += data.get(basis, 0)
            if c:
                data[basis] = c
            else:
                data.pop(basis, None)
        self._terms = data

    @classmethod
    def zero(cls) -> "LinearCombination":
        return cls()

    @classmethod
    def single(cls, basis: Any, coeff: Scalar = 1) -> "LinearCombination":
        return cls(((basis, coeff),))

    def terms(self) -> list[tuple[Any, Fraction]]:
        """Terms sorted by the basis elements' canonical encodings."""
        return sorted(self._terms.items(), key=lambda item: item[0].encode())

    def __iter__(self) -> Iterator[tuple[Any, Fraction]]:
        return iter(self.terms())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coefficient(self, basis: Any) -> Fraction:
        return self._terms.get(basis, Fraction(0))

    def support(self) -> set[Any]:
        return set(self._terms)

    def total_multiplicity(self) -> Fraction:
        """Sum of the absolute values of all coefficients.

        For combinations produced by counting constructions (all coefficients
        positive integers) this is the raw number of generated terms before
        merging.
        """
        return sum((abs(c) for c in self._terms.values()), Fraction(0))

    def map_basis(self, fn: Callable[[Any], Any]) -> "LinearCombination":
        """Relabel basis elements through ``fn`` (coefficients merge)."""
        return LinearCombination((fn(b), c) for b, c in self._terms.items())

    def __add__(self, other: "LinearCombination") -> "LinearCombination":
        if not isinstance(other, LinearCombination):
            return NotImplemented
        out = dict(self._terms)
        for basis, coeff in other._terms.items():
            new = out.get(basis, 0) + coeff
            if new:
                out[basis] = new
            else:
                out.pop(basis, None)
        result = LinearCombination.zero()
        result._terms = out
        return result

    def __sub__(self, other: "LinearCombination") -> "LinearCombination":
        return self + (-other)

    def __neg__(self) -> "LinearCombination":
        return (-1) * self

    def __rmul__(self, scalar: Scalar) -> "LinearCombination":
        c = Fraction(scalar)
        if not c:
            return LinearCombination.zero()
        result = LinearCombination.zero()
        result._terms = {b: c * v for b, v in self._terms.items()}
        return result

    def __mul__(self, scalar: Scalar) -> "LinearCombination":
        return self.__rmul__(scalar)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinearCombination):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def render(self) -> str:
        """Deterministic text form, e.g. ``(;()()) + 2*(;(;()))``."""
        if not self._terms:
            return "0"
        pieces: list[str] = []
        for basis, coeff in self.terms():
            body = basis.encode()
            mag = abs(coeff)
            part = body if mag == 1 else f"{mag}*{body}"
            if not pieces:
                pieces.append(part if coeff > 0 else f"-{part}")
            else:
                pieces.append((" + " if coeff > 0 else " - ") + part)
        return "".join(pieces)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"LinearCombination({self.render()})"


def extend_linear(fn: Callable[[Any], LinearCombination], combo: LinearCombination) -> LinearCombination:
    """Apply a basis-level map to a combination by linearity."""
    out = LinearCombination.zero()
    for basis, coeff in combo:
        out = out + coeff * fn(basis)
    return out


def extend_bilinear(
    fn: Callable[[Any, Any], LinearCombination],
    a: LinearCombination,
    b: LinearCombination,
) -> LinearCombination:
    """Apply a basis-level binary map to two combinations bilinearly."""
    out = LinearCombination.zero()
    for x, cx in a:
        for y, cy in b:
            out = out + (cx * cy) * fn(x, y)
    return out


def tensor(a: LinearCombination, b: LinearCombination) -> LinearCombination:
    """Tensor product: the coefficient of ``x (x) y`` is ``a[x] * b[y]``."""
    return extend_bilinear(lambda x, y: LinearCombination.single(TensorPair(x, y)), a, b)


def format_fraction(value: Fraction) -> str:
    """``p/q`` with the ``/q`` omitted for integers."""
    value = Fraction(value)
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"invalid rational {text!r}", text, 0) from exc
