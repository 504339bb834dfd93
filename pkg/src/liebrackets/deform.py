"""Contractions, the deformation path, and the coboundary identity.

The ordinary commutator algebra on square matrices degenerates to the
rank-r bracket algebra along an epsilon-scaled change of basis: scale
``E_{i,j}`` by 1, epsilon or epsilon^2 according to how the indices sit
relative to ``r``, and let epsilon go to 0.  Epsilon is kept symbolic as a
Laurent polynomial so the limit is exponent truncation (exact) and a
divergent contraction is detected rather than silently wrong.

In the other direction the straight-line path ``(1-t) I + t J`` of
parameters deforms the commutator into the rank-r bracket; for ``t < 1``
the column-scaling transport map makes the two isomorphic, and the bracket
with any parameter is a 2-coboundary of the commutator's adjoint action.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Tuple

from .algebra import Verdict
from .brackets import BracketParam, StructureConstants, basis_matrices, bracket
from .matrices import Matrix, ShapeError
from .scalars import Scalar, scalar_div, scalar_str, to_scalar


class ContractionDivergenceError(ValueError):
    """A negative epsilon-exponent made the contraction limit undefined."""

    def __init__(self, message: str, triple: tuple):
        super().__init__(message)
        self.triple = triple


class LaurentScalar:
    """Finite Laurent polynomial in epsilon with exact rational coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Dict[int, Scalar] = None):
        clean = {}
        if terms:
            for e, c in terms.items():
                c = to_scalar(c)
                if c != 0:
                    clean[int(e)] = c
        self.terms = clean

    @classmethod
    def from_scalar(cls, c) -> "LaurentScalar":
        return cls({0: to_scalar(c)})

    @classmethod
    def monomial(cls, c, exponent: int) -> "LaurentScalar":
        return cls({exponent: to_scalar(c)})

    def is_zero(self) -> bool:
        return not self.terms

    def min_exponent(self):
        return min(self.terms) if self.terms else None

    def constant_term(self) -> Scalar:
        return self.terms.get(0, 0)

    def __add__(self, other: "LaurentScalar") -> "LaurentScalar":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentScalar(out)

    def __neg__(self) -> "LaurentScalar":
        return LaurentScalar({e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "LaurentScalar") -> "LaurentScalar":
        return self + (-other)

    def __mul__(self, other: "LaurentScalar") -> "LaurentScalar":
        out: Dict[int, Scalar] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentScalar(out)

    def scale(self, c) -> "LaurentScalar":
        c = to_scalar(c)
        return LaurentScalar({e: c * v for e, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentScalar):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms):
            c = scalar_str(self.terms[e])
            if e == 0:
                parts.append(c)
            elif e == 1:
                parts.append(f"{c}*eps")
            else:
                parts.append(f"{c}*eps^{e}")
        return " + ".join(parts)

    def to_json(self) -> list:
        return [{"exp": e, "coef": scalar_str(self.terms[e])} for e in sorted(self.terms)]


class EpsStructureConstants:
    """Structure constants whose coefficients are Laurent polynomials in
    epsilon; pairs stored for i < j only, like ``StructureConstants``."""

    __slots__ = ("dim", "table")

    def __init__(self, dim: int, table: Dict[Tuple[int, int], Dict[int, LaurentScalar]]):
        clean = {}
        for (a, b), terms in table.items():
            if not (0 <= a < b < dim):
                raise ValueError(f"pair ({a}, {b}) must satisfy 0 <= a < b < dim")
            kept = {k: v for k, v in terms.items() if not v.is_zero()}
            if kept:
                clean[(a, b)] = kept
        self.dim = dim
        self.table = clean

    def to_json(self) -> dict:
        out = []
        for (a, b) in sorted(self.table):
            terms = self.table[(a, b)]
            out.append(
                {
                    "i": a,
                    "j": b,
                    "terms": [{"k": k, "laurent": terms[k].to_json()} for k in sorted(terms)],
                }
            )
        return {"dim": self.dim, "brackets": out}


def contraction_constants(n: int, r: int) -> EpsStructureConstants:
    """Ordinary-commutator constants in the scaled basis.

    Basis element ``(i, j)`` (1-based) is scaled by epsilon^(f(i) + f(j))
    with f = 0 on 1..r and 1 above; the commutator
    ``[E_{i,j}, E_{k,l}] = d(j,k) E_{i,l} - d(l,i) E_{k,j}`` picks up
    epsilon^(2 f(j)) on the first term and epsilon^(2 f(i)) on the second,
    both nonnegative.
    """
    if not (0 <= r <= n):
        raise ValueError(f"rank {r} out of range for size {n}")

    def f(idx0: int) -> int:
        return 0 if idx0 < r else 1

    table: Dict[Tuple[int, int], Dict[int, LaurentScalar]] = {}
    for a in range(n * n):
        i, j = divmod(a, n)
        for b in range(a + 1, n * n):
            k, l = divmod(b, n)
            terms: Dict[int, LaurentScalar] = {}
            if j == k:
                t = i * n + l
                add = LaurentScalar.monomial(1, 2 * f(j))
                terms[t] = terms.get(t, LaurentScalar()) + add
            if l == i:
                t = k * n + j
                add = LaurentScalar.monomial(-1, 2 * f(i))
                terms[t] = terms.get(t, LaurentScalar()) + add
            terms = {k2: v for k2, v in terms.items() if not v.is_zero()}
            if terms:
                table[(a, b)] = terms
    return EpsStructureConstants(n * n, table)


def contraction_limit(c: EpsStructureConstants) -> StructureConstants:
    """Drop the positive-exponent parts; fail hard on any negative exponent."""
    table: Dict[Tuple[int, int], Dict[int, Scalar]] = {}
    for (a, b), terms in c.table.items():
        out = {}
        for k, v in terms.items():
            lowest = v.min_exponent()
            if lowest is not None and lowest < 0:
                raise ContractionDivergenceError(
                    f"coefficient of basis {k} in [{a}, {b}] has epsilon exponent {lowest}",
                    (a, b, k),
                )
            const = v.constant_term()
            if const != 0:
                out[k] = const
        if out:
            table[(a, b)] = out
    return StructureConstants(c.dim, table)


@dataclass(frozen=True)
class DeformationPath:
    """The parameter ``(1-t) I + t j`` at a fixed exact rational ``t``."""

    n: int
    j: Matrix
    t: Scalar

    def __post_init__(self):
        if self.j.shape != (self.n, self.n):
            raise ShapeError(f"parameter must be {self.n}x{self.n}, got {self.j.shape}")
        if not (0 <= self.t <= 1):
            raise ValueError(f"path time must lie in [0, 1], got {self.t}")

    def parameter(self) -> Matrix:
        return (1 - self.t) * Matrix.identity(self.n) + self.t * self.j

    def bracket_param(self) -> BracketParam:
        return BracketParam(self.n, self.n, self.parameter())


def deformation_bracket(n: int, j: Matrix, t) -> BracketParam:
    """Bracket parameter ``(1-t) I + t j`` on square matrices of size n."""
    return DeformationPath(n, j, to_scalar(t)).bracket_param()


def psi_t(x: Matrix, t, r: int) -> Matrix:
    """Scale columns r+1..n of a square matrix by (1 - t).

    This is the transport that exhibits the deformed bracket at `t` as
    isomorphic to the ordinary commutator whenever t != 1.
    """
    t = to_scalar(t)
    if x.rows != x.cols:
        raise ShapeError(f"expected a square matrix, got {x.rows}x{x.cols}")
    if not (0 <= r <= x.rows):
        raise ShapeError(f"split index {r} out of range for size {x.rows}")
    scale = 1 - t
    return Matrix([[v * scale if c >= r else v for c, v in enumerate(row)] for row in x._data])


def psi_t_inverse(x: Matrix, t, r: int) -> Matrix:
    """Inverse of the column scaling; undefined (singular) at t = 1."""
    t = to_scalar(t)
    if t == 1:
        raise ZeroDivisionError("the transport map is singular at t = 1")
    if x.rows != x.cols:
        raise ShapeError(f"expected a square matrix, got {x.rows}x{x.cols}")
    inv = scalar_div(1, 1 - t)
    return Matrix([[v * inv if c >= r else v for c, v in enumerate(row)] for row in x._data])


def alpha_coboundary(x: Matrix, j: Matrix) -> Matrix:
    """The potential ``(x j + j x) / 2`` whose coboundary is the j-bracket."""
    if x.shape != j.shape or x.rows != x.cols:
        raise ShapeError(f"need equal square shapes, got {x.shape} and {j.shape}")
    s = x @ j + j @ x
    return s * scalar_div(1, 2)


def ce_coboundary_check(j: Matrix, n: int):
    """Verify ``[A, a(B)] - [B, a(A)] - a([A, B]) = [A, B]_j`` on basis pairs.

    Unsubscripted brackets are ordinary commutators; the identity shows the
    j-bracket is a 2-coboundary for the commutator's adjoint action.
    """
    if j.shape != (n, n):
        raise ShapeError(f"parameter must be {n}x{n}, got {j.rows}x{j.cols}")
    param_j = BracketParam(n, n, j)
    basis = basis_matrices(n, n)
    for a in range(len(basis)):
        for b in range(a + 1, len(basis)):
            A, B = basis[a], basis[b]
            lhs = (
                _comm(A, alpha_coboundary(B, j))
                - _comm(B, alpha_coboundary(A, j))
                - alpha_coboundary(_comm(A, B), j)
            )
            rhs = bracket(A, B, param_j)
            if lhs != rhs:
                return Verdict(
                    False,
                    {
                        "pair": [a, b],
                        "coboundary": str(lhs),
                        "bracket": str(rhs),
                    },
                )
    return Verdict(True)


def _comm(a: Matrix, b: Matrix) -> Matrix:
    return a @ b - b @ a
