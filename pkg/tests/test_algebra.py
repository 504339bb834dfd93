"""Engine computations: axioms, center, series, Killing form, hom checks."""

import random

import pytest

from liebrackets.algebra import (
    LieAlgebra,
    LinearMap,
    adjoint,
    center,
    centralizer,
    derived_series,
    hom_check,
    invariant_signature,
    jacobi_check,
    killing_form,
    lower_central_series,
    subalgebra_closed,
)
from liebrackets.brackets import (
    BracketParam,
    StructureConstants,
    basis_matrices,
    bracket,
)
from liebrackets.classify import iso_witness, random_parameter
from liebrackets.matrices import (
    Matrix,
    ShapeError,
    Subspace,
    inverse,
    rank,
    rank_factorization,
    rank_normal_form,
)


def random_matrix(rng, rows, cols, lo=-3, hi=3):
    return Matrix([[rng.randint(lo, hi) for _ in range(cols)] for _ in range(rows)])


def sl2_constants():
    # Basis (H, X, Y): [H,X] = 2X, [H,Y] = -2Y, [X,Y] = H.
    return StructureConstants(3, {(0, 1): {1: 2}, (0, 2): {2: -2}, (1, 2): {0: 1}})


def heisenberg3_constants():
    return StructureConstants(3, {(0, 1): {2: 1}})


def series_dims_bruteforce(param):
    """Derived series dimensions straight from matrix spans (no constants)."""
    n, m = param.n, param.m
    current = Subspace.span(n, m, basis_matrices(n, m))
    dims = [current.dim]
    while True:
        brackets = [
            bracket(current.basis[a], current.basis[b], param)
            for a in range(current.dim)
            for b in range(a + 1, current.dim)
        ]
        nxt = Subspace.span(n, m, brackets) if brackets else Subspace(n, m, ())
        dims.append(nxt.dim)
        if nxt.dim == 0 or nxt.dim == current.dim:
            return dims
        current = nxt


def killing_gram_bruteforce(param):
    """Gram matrix from dense adjoint matrices built by the generic bracket."""
    basis = basis_matrices(param.n, param.m)
    d = len(basis)
    ads = []
    for a in range(d):
        cols = [bracket(basis[a], basis[b], param).entries for b in range(d)]
        ads.append(Matrix(tuple(zip(*cols))))
    return Matrix([[(ads[a] @ ads[b]).trace() for b in range(d)] for a in range(d)])


class TestJacobi:
    def test_matrix_space_passes_exhaustively(self):
        rng = random.Random(0)
        param = BracketParam(3, 3, random_matrix(rng, 3, 3))
        assert jacobi_check(LieAlgebra.from_param(param)).passed

    def test_abelian_passes(self):
        assert jacobi_check(LieAlgebra.abelian(4)).passed

    def test_tampered_constants_reported(self):
        good = sl2_constants()
        assert jacobi_check(LieAlgebra(3, good)).passed
        # Flipping the sign of [H, Y] makes the cyclic sum on (H, X, Y)
        # equal -4H, a genuine Jacobi violation.
        bad = StructureConstants(3, {(0, 1): {1: 2}, (0, 2): {2: 2}, (1, 2): {0: 1}})
        verdict = jacobi_check(LieAlgebra(3, bad))
        assert not verdict.passed
        assert verdict.witness["triple"] == [0, 1, 2]
        assert verdict.witness["defect"] == {"0": "-4"}

    def test_verified_constructor_rejects(self):
        bad = StructureConstants(3, {(0, 1): {1: 2}, (0, 2): {2: 2}, (1, 2): {0: 1}})
        with pytest.raises(ValueError):
            LieAlgebra.verified(3, bad)

    def test_verdict_json_shape(self):
        verdict = jacobi_check(LieAlgebra.abelian(2))
        assert verdict.to_json() == {"pass": True, "witness": None}


class TestCenter:
    def test_gl2_center_is_scalars(self):
        alg = LieAlgebra.from_param(BracketParam.commutator(2))
        ctr = center(alg)
        assert ctr.dim == 1
        assert ctr.contains(Matrix.identity(2))

    def test_rank_one_square(self):
        alg = LieAlgebra.from_param(BracketParam(2, 2, Matrix.diagonal([1, 0])))
        ctr = center(alg)
        assert ctr.dim == 1
        assert ctr.contains(Matrix.unit(2, 2, 1, 1))

    def test_rectangular(self):
        alg = LieAlgebra.from_param(BracketParam.normal(3, 2, 1))
        ctr = center(alg)
        assert ctr.dim == (3 - 1) * (2 - 1)
        # spanned by the bottom-right block opposite the identity corner
        assert ctr.contains(Matrix.unit(3, 2, 1, 1))
        assert ctr.contains(Matrix.unit(3, 2, 2, 1))

    def test_zero_parameter_whole_space(self):
        alg = LieAlgebra.from_param(BracketParam(2, 2, Matrix.zeros(2, 2)))
        assert center(alg).dim == 4

    def test_transport_through_factorization(self):
        # Z_J = p^-1 Z_normal q^-1 when J = q D p.
        rng = random.Random(1)
        for n, r in ((2, 1), (3, 2), (3, 1)):
            j = random_parameter(rng, n, n, r)
            f = rank_factorization(j)
            q_inv, p_inv = inverse(f.q), inverse(f.p)
            normal_center = center(LieAlgebra.from_param(BracketParam.normal(n, n, r)))
            transported = normal_center.map(lambda z: p_inv @ z @ q_inv)
            assert center(LieAlgebra.from_param(BracketParam(n, n, j))) == transported

    def test_transport_through_iso_witness(self):
        # The verified isomorphism carries center onto center.
        rng = random.Random(2)
        for n, m, r in ((2, 2, 1), (3, 2, 1), (2, 3, 2)):
            j = random_parameter(rng, m, n, r)
            jn = rank_normal_form(m, n, r)
            witness = iso_witness(j, jn)
            src = LieAlgebra.from_param(BracketParam(n, m, j))
            dst = LieAlgebra.from_param(BracketParam.normal(n, m, r))
            mapped = center(src).map(
                lambda z: dst.from_coords(witness.apply(src.to_coords(z)))
            )
            assert mapped == center(dst)


class TestCentralizer:
    def test_whole_algebra_gives_center(self):
        alg = LieAlgebra.from_param(BracketParam.commutator(2))
        assert centralizer(alg, alg.full_subspace()) == center(alg)

    def test_empty_gives_whole(self):
        alg = LieAlgebra.from_param(BracketParam.commutator(2))
        assert centralizer(alg, Subspace(2, 2, ())).dim == 4

    def test_corner_block_centralizer(self):
        # Centralizer of the embedded End(V1) block in the rank-r algebra:
        # scalars on the corner plus the free bottom-right block.
        n, r = 3, 2
        alg = LieAlgebra.from_param(BracketParam.normal(n, n, r))
        corner = Subspace.span(
            n, n, [Matrix.unit(n, n, i, j) for i in range(r) for j in range(r)]
        )
        result = centralizer(alg, corner)
        assert result.dim == 1 + (n - r) ** 2
        assert result.contains(Matrix.diagonal([1, 1, 0]))
        assert result.contains(Matrix.unit(n, n, 2, 2))

    def test_ambient_mismatch(self):
        alg = LieAlgebra.from_param(BracketParam.commutator(2))
        with pytest.raises(ShapeError):
            centralizer(alg, Subspace(3, 1, ()))


class TestSeries:
    def test_abelian_stabilizes_at_zero(self):
        dims = [t.dim for t in derived_series(LieAlgebra.abelian(3))]
        assert dims == [3, 0]
        assert [t.dim for t in lower_central_series(LieAlgebra.abelian(3))] == [3, 0]

    def test_gl2_derived_series(self):
        param = BracketParam.commutator(2)
        assert series_dims_bruteforce(param) == [4, 3, 3]
        dims = [t.dim for t in derived_series(LieAlgebra.from_param(param))]
        assert dims == [4, 3, 3]

    def test_heisenberg_lcs(self):
        alg = LieAlgebra(3, heisenberg3_constants())
        assert [t.dim for t in lower_central_series(alg)] == [3, 1, 0]
        assert [t.dim for t in derived_series(alg)] == [3, 1, 0]

    def test_series_against_bruteforce_random(self):
        rng = random.Random(2)
        for _ in range(5):
            n, m = rng.randint(1, 3), rng.randint(1, 3)
            param = BracketParam(n, m, random_matrix(rng, m, n))
            dims = [t.dim for t in derived_series(LieAlgebra.from_param(param))]
            assert dims == series_dims_bruteforce(param)


class TestKilling:
    def test_abelian_zero(self):
        gram, r = killing_form(LieAlgebra.abelian(3))
        assert gram.is_zero() and r == 0

    def test_heisenberg_zero(self):
        gram, r = killing_form(LieAlgebra(3, heisenberg3_constants()))
        assert gram.is_zero() and r == 0

    def test_gl2_rank_three(self):
        param = BracketParam.commutator(2)
        gram, r = killing_form(LieAlgebra.from_param(param))
        assert gram == killing_gram_bruteforce(param)
        assert r == 3

    def test_matches_bruteforce_random(self):
        rng = random.Random(3)
        for _ in range(4):
            n = rng.randint(1, 3)
            param = BracketParam(n, n, random_matrix(rng, n, n))
            gram, _ = killing_form(LieAlgebra.from_param(param))
            assert gram == killing_gram_bruteforce(param)


class TestAdjoint:
    def test_central_element_zero_map(self):
        alg = LieAlgebra.from_param(BracketParam.commutator(2))
        assert adjoint(alg, Matrix.identity(2)).matrix.is_zero()

    def test_columns_match_brackets(self):
        alg = LieAlgebra.from_param(BracketParam.commutator(2))
        ad = adjoint(alg, Matrix.unit(2, 2, 0, 0))
        basis = basis_matrices(2, 2)
        for b, eb in enumerate(basis):
            expect = bracket(Matrix.unit(2, 2, 0, 0), eb, alg.model).entries
            assert ad.column(b) == expect

    def test_homomorphism_into_commutators(self):
        # ad_[x,y] = ad_x ad_y - ad_y ad_x, exactly.
        rng = random.Random(4)
        alg = LieAlgebra.from_param(BracketParam(2, 2, random_matrix(rng, 2, 2)))
        x = random_matrix(rng, 2, 2)
        y = random_matrix(rng, 2, 2)
        lhs = adjoint(alg, alg.bracket_coords(x, y)).matrix
        ax, ay = adjoint(alg, x).matrix, adjoint(alg, y).matrix
        assert lhs == ax @ ay - ay @ ax

    def test_length_checked(self):
        alg = LieAlgebra.abelian(3)
        with pytest.raises(ShapeError):
            adjoint(alg, [1, 2])


class TestSubalgebraClosed:
    def test_block_triangle_shape_closed(self):
        # Matrices (G, H; 0, K) form a subalgebra of the rank-r algebra.
        n, r = 3, 2
        alg = LieAlgebra.from_param(BracketParam.normal(n, n, r))
        mats = [Matrix.unit(n, n, i, j) for i in range(r) for j in range(r)]
        mats += [Matrix.unit(n, n, i, j) for i in range(r) for j in range(r, n)]
        assert subalgebra_closed(alg, Subspace.span(n, n, mats)).passed
        mats += [Matrix.unit(n, n, i, j) for i in range(r, n) for j in range(r, n)]
        assert subalgebra_closed(alg, Subspace.span(n, n, mats)).passed

    def test_whole_algebra_closed(self):
        alg = LieAlgebra.from_param(BracketParam.commutator(2))
        assert subalgebra_closed(alg, alg.full_subspace()).passed

    def test_off_diagonal_pair_not_closed(self):
        alg = LieAlgebra.from_param(BracketParam.commutator(2))
        span = Subspace.span(2, 2, [Matrix.unit(2, 2, 0, 1), Matrix.unit(2, 2, 1, 0)])
        verdict = subalgebra_closed(alg, span)
        assert not verdict.passed
        assert verdict.witness["pair"] == [0, 1]


class TestHomCheck:
    def test_identity_map(self):
        alg = LieAlgebra.from_param(BracketParam.commutator(2))
        verdict = hom_check(LinearMap.identity(4), alg, alg)
        assert verdict.is_hom and verdict.injective

    def test_zero_map(self):
        alg = LieAlgebra.from_param(BracketParam.commutator(2))
        zero = LinearMap(4, 4, Matrix.zeros(4, 4))
        verdict = hom_check(zero, alg, alg)
        assert verdict.is_hom and not verdict.injective

    def test_multiplication_by_invertible_parameter(self):
        # A -> J A is an isomorphism onto the commutator algebra.
        rng = random.Random(5)
        n = 2
        j = random_matrix(rng, n, n)
        while rank(j) != n:
            j = random_matrix(rng, n, n)
        src = LieAlgebra.from_param(BracketParam(n, n, j))
        dst = LieAlgebra.from_param(BracketParam.commutator(n))
        cols = [(j @ e).entries for e in basis_matrices(n, n)]
        verdict = hom_check(LinearMap.from_columns(cols), src, dst)
        assert verdict.is_hom and verdict.injective

    def test_non_hom_witnessed(self):
        src = LieAlgebra(3, sl2_constants())
        dst = LieAlgebra.abelian(3)
        verdict = hom_check(LinearMap.identity(3), src, dst)
        assert not verdict.is_hom
        assert verdict.witness is not None

    def test_abstract_destination_path(self):
        # No model on the destination: the constants route is exercised.
        src = LieAlgebra(3, heisenberg3_constants())
        verdict = hom_check(LinearMap.identity(3), src, LieAlgebra(3, heisenberg3_constants()))
        assert verdict.is_hom and verdict.injective


class TestSignature:
    def test_abelian(self):
        sig = invariant_signature(LieAlgebra.abelian(4))
        assert sig.dim == 4 and sig.center_dim == 4
        assert sig.derived_dims == (4, 0) and sig.lcs_dims == (4, 0)
        assert sig.killing_rank == 0 and sig.derived_center_dim == 0

    def test_gl2_vs_rank_one(self):
        full = invariant_signature(LieAlgebra.from_param(BracketParam.commutator(2)))
        low = invariant_signature(LieAlgebra.from_param(BracketParam(2, 2, Matrix.diagonal([1, 0]))))
        assert full.center_dim == 1 and full.killing_rank == 3
        assert low.center_dim == 1
        assert low.killing_rank != full.killing_rank
        assert full != low

    def test_preserved_by_verified_isomorphism(self):
        rng = random.Random(6)
        for _ in range(5):
            n, m = rng.randint(2, 3), rng.randint(2, 3)
            r = rng.randint(0, min(n, m))
            j1 = random_parameter(rng, m, n, r)
            j2 = random_parameter(rng, m, n, r)
            src = LieAlgebra.from_param(BracketParam(n, m, j1))
            dst = LieAlgebra.from_param(BracketParam(n, m, j2))
            assert hom_check(iso_witness(j1, j2), src, dst).bijective
            assert invariant_signature(src) == invariant_signature(dst)

    def test_json_flat(self):
        sig = invariant_signature(LieAlgebra.abelian(2))
        js = sig.to_json()
        assert set(js) == {
            "dim",
            "center_dim",
            "derived_dims",
            "lcs_dims",
            "killing_rank",
            "derived_center_dim",
        }
