"""Exact computer algebra for the bracket family [A, B]_J = A J B - B J A
on rectangular matrix spaces over the rationals."""

from .algebra import (
    HomVerdict,
    InvariantSignature,
    LieAlgebra,
    LinearMap,
    Verdict,
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
from .brackets import (
    BasisIndex,
    BracketParam,
    StructureConstants,
    basis_matrices,
    basis_matrix,
    block_bracket,
    bracket,
    structure_constants,
)
from .classify import (
    ClassificationError,
    NormalForm,
    classify_rank_family,
    equivalent,
    iso_witness,
    normal_form,
    random_parameter,
)
from .constructions import (
    CATALOG_NAMES,
    BracketClaim,
    CatalogEntry,
    HeisenbergModel,
    HypothesisError,
    ObstructionVerdict,
    RepCandidate,
    SemidirectModel,
    ado_embed,
    classical_representation,
    example_catalog,
    heisenberg_abstract,
    heisenberg_obstruction,
    heisenberg_realization,
    pad_matrix,
    restricted_constants,
    semidirect_S,
)
from .deform import (
    ContractionDivergenceError,
    DeformationPath,
    EpsStructureConstants,
    LaurentScalar,
    alpha_coboundary,
    ce_coboundary_check,
    contraction_constants,
    contraction_limit,
    deformation_bracket,
    psi_t,
    psi_t_inverse,
)
from .matrices import (
    Matrix,
    RankFactorization,
    RrefResult,
    ShapeError,
    SingularMatrixError,
    Subspace,
    format_matrix,
    inverse,
    join_blocks,
    kernel,
    matrix_from_json,
    matrix_to_json,
    parse_matrix,
    rank,
    rank_factorization,
    rank_normal_form,
    rref,
    solve_coordinates,
    split_blocks,
)
from .scalars import Scalar, as_fraction, scalar_div, scalar_str, to_scalar
from .verify import run_all

__version__ = "0.1.0"
