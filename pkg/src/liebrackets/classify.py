"""Rank-based equivalence of bracket parameters and isomorphism witnesses.

Two parameters of one shape are equivalent (``J = Q J' P`` with invertible
``Q``, ``P``) exactly when they share a rank, and equivalent parameters give
isomorphic bracket algebras through ``A -> P A Q``.  This module produces
those witnesses explicitly from two rank factorizations and runs the
desk-scale classification harness over a whole shape: one normal form per
rank, invariant signatures, and verified witnesses for random same-rank
pairs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .algebra import LieAlgebra, LinearMap, hom_check, invariant_signature
from .brackets import BracketParam, basis_matrices
from .matrices import (
    Matrix,
    RankFactorization,
    ShapeError,
    inverse,
    rank,
    rank_factorization,
)


class ClassificationError(ValueError):
    """Raised when a witness is requested for inequivalent parameters."""

    def __init__(self, message: str, rank1: int, rank2: int):
        super().__init__(message)
        self.rank1 = rank1
        self.rank2 = rank2


@dataclass(frozen=True)
class NormalForm:
    """Shape, rank and the factorization putting a parameter in normal form."""

    m: int
    n: int
    r: int
    factorization: RankFactorization


def equivalent(j1: Matrix, j2: Matrix) -> bool:
    """Same shape and same rank."""
    if j1.shape != j2.shape:
        raise ShapeError(f"cannot compare {j1.rows}x{j1.cols} with {j2.rows}x{j2.cols}")
    return rank(j1) == rank(j2)


def normal_form(j: Matrix) -> NormalForm:
    f = rank_factorization(j)
    return NormalForm(m=j.rows, n=j.cols, r=f.rank, factorization=f)


def iso_witness(j1: Matrix, j2: Matrix) -> LinearMap:
    """Flattened isomorphism ``A -> P A Q`` from the j1-bracket to the j2-bracket.

    With ``j1 = q1 D p1`` and ``j2 = q2 D p2`` sharing the normal form ``D``,
    the pair ``Q = q1 q2^-1``, ``P = p2^-1 p1`` satisfies ``j1 = Q j2 P``.
    """
    if j1.shape != j2.shape:
        raise ShapeError(f"cannot relate {j1.rows}x{j1.cols} with {j2.rows}x{j2.cols}")
    nf1 = normal_form(j1)
    nf2 = normal_form(j2)
    if nf1.r != nf2.r:
        raise ClassificationError(
            f"parameters of ranks {nf1.r} and {nf2.r} are not equivalent", nf1.r, nf2.r
        )
    q = nf1.factorization.q @ inverse(nf2.factorization.q)
    p = inverse(nf2.factorization.p) @ nf1.factorization.p
    n_ops, m_ops = j1.cols, j1.rows  # operands live in Mat(cols x rows)
    columns = [(p @ e @ q).entries for e in basis_matrices(n_ops, m_ops)]
    return LinearMap.from_columns(columns)


def random_parameter(rng: random.Random, rows: int, cols: int, target_rank: int) -> Matrix:
    """Seeded random integer matrix of exactly the requested rank.

    Sampled as a product of two factors with entries uniform in [-3, 3]
    (rank at most the target by construction) and redrawn until the rank is
    exact; rejection on the full matrix would almost never land on an
    intermediate rank.
    """
    if not (0 <= target_rank <= min(rows, cols)):
        raise ShapeError(f"rank {target_rank} out of range for {rows}x{cols}")
    if target_rank == 0:
        return Matrix.zeros(rows, cols)
    for _ in range(1000):
        left = Matrix([[rng.randint(-3, 3) for _ in range(target_rank)] for _ in range(rows)])
        right = Matrix([[rng.randint(-3, 3) for _ in range(cols)] for _ in range(target_rank)])
        m = left @ right
        if rank(m) == target_rank:
            return m
    raise RuntimeError(f"failed to sample a rank-{target_rank} {rows}x{cols} matrix")


def classify_rank_family(n: int, m: int, seed: int = 0, witness_pairs: int = 1) -> dict:
    """Classification report for the shape ``Mat(n x m)``.

    For each rank: the invariant signature of the normal-form algebra and a
    witness check on random same-rank parameter pairs.  Shapes with
    ``min(n, m) < 2`` fall outside the classification theorems' hypotheses
    and are flagged degenerate (still computed).
    """
    if n < 1 or m < 1:
        raise ShapeError(f"invalid shape {n}x{m}")
    rng = random.Random(seed)
    entries = []
    signatures = []
    for r in range(min(n, m) + 1):
        alg = LieAlgebra.from_param(BracketParam.normal(n, m, r))
        sig = invariant_signature(alg)
        signatures.append(sig)
        verified = True
        for _ in range(witness_pairs):
            j1 = random_parameter(rng, m, n, r)
            j2 = random_parameter(rng, m, n, r)
            f = iso_witness(j1, j2)
            verdict = hom_check(
                f,
                LieAlgebra.from_param(BracketParam(n, m, j1)),
                LieAlgebra.from_param(BracketParam(n, m, j2)),
            )
            if not verdict.bijective:
                verified = False
        entries.append({"r": r, "signature": sig.to_json(), "witness_verified": verified})
    distinct = all(
        signatures[a] != signatures[b]
        for a in range(len(signatures))
        for b in range(a + 1, len(signatures))
    )
    return {
        "n": n,
        "m": m,
        "seed": seed,
        "degenerate": min(n, m) < 2,
        "entries": entries,
        "pairwise_distinct": distinct,
    }
