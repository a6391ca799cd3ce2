"""Connections on derivations and the induced action of ordered labeled trees.

A connection is given in coordinates by Christoffel data: polynomials
``gamma[i, j, k]`` so that

    (nabla_E F)^k = sum_mu E^mu dF^k/dx_mu + sum_{i,j} gamma[i,j,k] E^i F^j.

This formula is additive in both slots, function-linear in the lower slot and
Leibniz in the upper one, for arbitrary polynomial Christoffel data.

An ordered labeled subtree turns into a single derivation by folding its
children through the connection, first child outermost; a whole tree (root
unlabeled, child subtrees s_1..s_m) acts on a polynomial f as the m-th
covariant differential of f evaluated on the subtree derivations, in child
order.  With zero Christoffel data the action collapses to the flat
multi-index expansion of labeled trees.
"""

from __future__ import annotations

import json
from typing import Mapping, Sequence

from .diff_ops import Derivation, DerivationEnv, Polynomial, apply_tree_operator, parse_polynomial
from .grossman_larson import TreeHopfAlgebra
from .trees import Tree, canonicalize


class Connection:
    """Christoffel data ``gamma[i, j, k]`` with polynomial entries; zeros omitted."""

    def __init__(self, num_vars: int, gamma: Mapping[tuple[int, int, int], Polynomial] | None = None):
        self.num_vars = int(num_vars)
        data: dict[tuple[int, int, int], Polynomial] = {}
        for (i, j, k), poly in (gamma or {}).items():
            for index in (i, j, k):
                if not 1 <= index <= self.num_vars:
                    raise ValueError(f"index {index} out of range 1..{self.num_vars}")
            if poly.num_vars != self.num_vars:
                raise ValueError("Christoffel entry has the wrong variable count")
            if poly:
                data[(i, j, k)] = poly
        self._gamma = data

    @classmethod
    def flat(cls, num_vars: int) -> "Connection":
        return cls(num_vars)

    @property
    def is_flat(self) -> bool:
        return not self._gamma

    def christoffel(self, i: int, j: int, k: int) -> Polynomial:
        return self._gamma.get((i, j, k), Polynomial.zero(self.num_vars))

    @classmethod
    def from_dict(cls, spec: Mapping) -> "Connection":
        """Build from ``{"n": 1, "gamma": {"i,j,k": "<polynomial>"}}``."""
        if "n" not in spec:
            raise ValueError("connection spec needs an 'n' entry")
        n = int(spec["n"])
        gamma = {}
        for key, value in (spec.get("gamma") or {}).items():
            parts = [p.strip() for p in str(key).split(",")]
            if len(parts) != 3 or not all(p.isdigit() for p in parts):
                raise ValueError(f"bad Christoffel key {key!r}; expected 'i,j,k'")
            i, j, k = (int(p) for p in parts)
            gamma[(i, j, k)] = parse_polynomial(str(value), n)
        return cls(n, gamma)

    @classmethod
    def from_json(cls, text: str) -> "Connection":
        return cls.from_dict(json.loads(text))


def covariant_derivative(conn: Connection, lower: Derivation, upper: Derivation) -> Derivation:
    """``nabla_lower upper`` in coordinates."""
    n = conn.num_vars
    if lower.num_vars != n or upper.num_vars != n:
        raise ValueError("variable counts differ")
    comps = []
    for k in range(1, n + 1):
        comp = Polynomial.zero(n)
        upper_k = upper.coeffs[k - 1]
        for mu in range(1, n + 1):
            comp = comp + lower.coeffs[mu - 1] * upper_k.derivative(mu)
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                gamma = conn.christoffel(i, j, k)
                if gamma:
                    comp = comp + gamma * lower.coeffs[i - 1] * upper.coeffs[j - 1]
        comps.append(comp)
    return Derivation(tuple(comps))


def vector_covariant_differential(
    field: Derivation, fields: Sequence[Derivation], conn: Connection
) -> Derivation:
    """The m-th covariant differential of a vector field, ``(nabla^m E)(X_1..X_m)``:

    ``nabla_{X_1}((nabla^{m-1} E)(X_2,..)) - sum_i (nabla^{m-1} E)(X_2,.., nabla_{X_1} X_i, ..)``.

    The correction terms stop the argument fields from being differentiated,
    so with zero Christoffel data the components are the plain higher partials
    of ``E``'s coefficients contracted against the argument components.
    """
    if not fields:
        return field
    head, tail = fields[0], list(fields[1:])
    result = covariant_derivative(conn, head, vector_covariant_differential(field, tail, conn))
    for i in range(len(tail)):
        corrected = list(tail)
        corrected[i] = covariant_derivative(conn, head, tail[i])
        result = result - vector_covariant_differential(field, corrected, conn)
    return result


def subtree_derivation(subtree: Tree, env: DerivationEnv, conn: Connection) -> Derivation:
    """Fold a labeled subtree into one derivation.

    A leaf labeled E is E itself; a node labeled E with children
    ``u_1 .. u_k`` is the k-th covariant differential of E evaluated on the
    child derivations in order.  On a single child this is ``nabla_{theta(u_1)} E``.
    """
    if not isinstance(subtree.label, str):
        raise ValueError("every node below the root must carry a derivation symbol")
    base = env[subtree.label]
    if not subtree.children:
        return base
    fields = [subtree_derivation(u, env, conn) for u in subtree.children]
    return vector_covariant_differential(base, fields, conn)


def covariant_differential(
    f: Polynomial, fields: Sequence[Derivation], conn: Connection
) -> Polynomial:
    """The m-th covariant differential ``(nabla^m f)(X_1, .., X_m)``:

    ``X_1((nabla^{m-1} f)(X_2,..)) - sum_i (nabla^{m-1} f)(X_2,.., nabla_{X_1} X_i, ..)``.
    """
    if not fields:
        return f
    head, tail = fields[0], list(fields[1:])
    if head.num_vars != f.num_vars:
        raise ValueError("variable counts differ")
    result = head.apply(covariant_differential(f, tail, conn))
    for i in range(len(tail)):
        corrected = list(tail)
        corrected[i] = covariant_derivative(conn, head, tail[i])
        result = result - covariant_differential(f, corrected, conn)
    return result


def apply_connection_operator(
    t: Tree, env: DerivationEnv, conn: Connection, f: Polynomial
) -> Polynomial:
    """Action of an ordered labeled tree on ``f`` through the connection."""
    if t.label is not None:
        raise ValueError("the root of an operator tree must be unlabeled")
    fields = [subtree_derivation(s, env, conn) for s in t.children]
    return covariant_differential(f, fields, conn)


def check_module_law(
    t: Tree,
    env: DerivationEnv,
    conn: Connection,
    a: Polynomial,
    b: Polynomial,
) -> bool:
    """Does ``t . (a b) = sum (t' . a)(t'' . b)`` over the ordered coproduct?"""
    alg = TreeHopfAlgebra(ordered=True, symbols=env.symbols)
    lhs = apply_connection_operator(t, env, conn, a * b)
    rhs = Polynomial.zero(env.num_vars)
    for pair, coeff in alg.coproduct(t):
        left = apply_connection_operator(pair.left, env, conn, a)
        right = apply_connection_operator(pair.right, env, conn, b)
        rhs = rhs + coeff * (left * right)
    return lhs == rhs


def flat_action_matches_tree_operator(
    t: Tree, env: DerivationEnv, f: Polynomial
) -> bool:
    """With zero Christoffel data the connection action must reproduce the flat
    multi-index expansion of the underlying unordered tree."""
    flat = Connection.flat(env.num_vars)
    via_connection = apply_connection_operator(t, env, flat, f)
    forgotten = canonicalize(_forget_order(t))
    via_expansion = apply_tree_operator(forgotten, env, f)
    return via_connection == via_expansion


def _forget_order(t: Tree) -> Tree:
    return Tree(t.label, tuple(_forget_order(c) for c in t.children), False)
