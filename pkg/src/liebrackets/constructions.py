"""Named constructions on top of the bracket family.

* the (2n+1)-dimensional Heisenberg algebra realized with a corank-one
  parameter on square matrices of size n+2,
* the trace obstruction ruling out low-dimensional faithful Heisenberg
  representations,
* the semidirect model S(V1, V2) isomorphic to the rank-r bracket algebra
  on square matrices,
* zero-padding of a commutator matrix algebra into a rectangular bracket
  algebra (every matrix Lie algebra embeds this way),
* a catalog of small worked examples with their expected brackets,
  including the ones whose published values disagree with the bracket
  definition (kept, flagged).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .algebra import LieAlgebra, LinearMap, hom_check
from .brackets import BracketParam, StructureConstants, basis_matrices, block_bracket, bracket
from .matrices import (
    Matrix,
    ShapeError,
    Subspace,
    join_blocks,
    rank,
    solve_coordinates,
)
from .scalars import scalar_str


class HypothesisError(ValueError):
    """Raised when a construction's size hypotheses are violated."""


def restricted_constants(basis: Tuple[Matrix, ...], param: BracketParam, labels=None) -> LieAlgebra:
    """Structure constants of the bracket restricted to the span of ``basis``.

    Fails if the span is not closed under the bracket.
    """
    dim = len(basis)
    table: Dict[tuple, dict] = {}
    for a in range(dim):
        for b in range(a + 1, dim):
            w = bracket(basis[a], basis[b], param)
            coords = solve_coordinates(list(basis), w)
            if coords is None:
                raise ValueError(
                    f"span not closed: bracket of basis elements {a} and {b} leaves the span"
                )
            terms = {k: v for k, v in enumerate(coords) if v != 0}
            if terms:
                table[(a, b)] = terms
    return LieAlgebra(dim, StructureConstants(dim, table), labels)


# ---------------------------------------------------------------------------
# Heisenberg realization and the representation obstruction
# ---------------------------------------------------------------------------

def heisenberg_abstract(n: int) -> LieAlgebra:
    """The (2n+1)-dimensional Heisenberg algebra: [X_i, Y_i] = Z, Z central.

    Basis order: X_1..X_n, Y_1..Y_n, Z.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    dim = 2 * n + 1
    table = {(i, n + i): {2 * n: 1} for i in range(n)}
    labels = tuple(
        [f"X{i + 1}" for i in range(n)] + [f"Y{i + 1}" for i in range(n)] + ["Z"]
    )
    return LieAlgebra(dim, StructureConstants(dim, table), labels)


@dataclass(frozen=True)
class HeisenbergModel:
    """Generators X_i = E(1, i+1), Y_i = E(i+1, n+2), Z = E(1, n+2) inside
    square matrices of size n+2 under the corank-one normal parameter."""

    n: int
    ambient: BracketParam
    xs: Tuple[Matrix, ...]
    ys: Tuple[Matrix, ...]
    z: Matrix

    def generators(self) -> Tuple[Matrix, ...]:
        return self.xs + self.ys + (self.z,)

    def span(self) -> Subspace:
        size = self.n + 2
        return Subspace(size, size, self.generators())

    def abstract(self) -> LieAlgebra:
        return heisenberg_abstract(self.n)

    def realized_algebra(self) -> LieAlgebra:
        return restricted_constants(self.generators(), self.ambient, self.abstract().labels)


def heisenberg_realization(n: int) -> HeisenbergModel:
    """Build the realization and verify every generator bracket exactly."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    size = n + 2
    param = BracketParam.normal(size, size, n + 1)
    xs = tuple(Matrix.unit(size, size, 0, i + 1) for i in range(n))
    ys = tuple(Matrix.unit(size, size, i + 1, size - 1) for i in range(n))
    z = Matrix.unit(size, size, 0, size - 1)
    model = HeisenbergModel(n, param, xs, ys, z)
    gens = model.generators()
    if rank(Matrix(tuple(g.entries for g in gens))) != 2 * n + 1:
        raise ValueError("generators are linearly dependent")
    for i in range(n):
        for j in range(n):
            expect = z if i == j else Matrix.zeros(size, size)
            if bracket(xs[i], ys[j], param) != expect:
                raise ValueError(f"[X{i + 1}, Y{j + 1}] != {'Z' if i == j else '0'}")
            if bracket(xs[i], xs[j], param) != Matrix.zeros(size, size):
                raise ValueError(f"[X{i + 1}, X{j + 1}] != 0")
            if bracket(ys[i], ys[j], param) != Matrix.zeros(size, size):
                raise ValueError(f"[Y{i + 1}, Y{j + 1}] != 0")
    for g in gens:
        if bracket(z, g, param) != Matrix.zeros(size, size):
            raise ValueError("Z is not central among the generators")
    return model


@dataclass(frozen=True)
class RepCandidate:
    """A proposed matrix representation: one image per basis element."""

    src: LieAlgebra
    images: Tuple[Matrix, ...]
    target_dim: int

    def __post_init__(self):
        if len(self.images) != self.src.dim:
            raise ShapeError(f"{self.src.dim} basis elements but {len(self.images)} images")
        for img in self.images:
            if img.shape != (self.target_dim, self.target_dim):
                raise ShapeError(
                    f"image of shape {img.rows}x{img.cols}, expected square {self.target_dim}"
                )

    def as_map(self) -> LinearMap:
        return LinearMap.from_columns([img.entries for img in self.images])


def classical_representation(n: int = 1) -> RepCandidate:
    """The strictly-upper-triangular faithful representation in size n+2."""
    size = n + 2
    xs = [Matrix.unit(size, size, 0, i + 1) for i in range(n)]
    ys = [Matrix.unit(size, size, i + 1, size - 1) for i in range(n)]
    z = Matrix.unit(size, size, 0, size - 1)
    return RepCandidate(heisenberg_abstract(n), tuple(xs + ys + [z]), size)


_OBSTRUCTION_KINDS = ("not-a-hom", "not-faithful", "faithful", "scalar-Z-contradiction")


@dataclass(frozen=True)
class ObstructionVerdict:
    kind: str
    detail: Optional[dict] = None

    def __post_init__(self):
        if self.kind not in _OBSTRUCTION_KINDS:
            raise ValueError(f"unknown verdict kind {self.kind!r}")

    def to_json(self) -> dict:
        return {"verdict": self.kind, "detail": self.detail}


def heisenberg_obstruction(cand: RepCandidate) -> ObstructionVerdict:
    """Judge a candidate representation of the Heisenberg algebra.

    A nonzero scalar image of the central element Z is contradictory on its
    own: Z is a bracket of generators, any homomorphic image of it is a
    commutator and hence traceless, while a nonzero scalar matrix has
    nonzero trace in characteristic zero.  Otherwise the candidate is
    checked as a commutator homomorphism and for injectivity.
    """
    d = cand.src.dim
    if d < 3 or d % 2 == 0:
        raise ShapeError(f"source dimension {d} is not 2n+1 for n >= 1")
    n = (d - 1) // 2
    if cand.src.constants != heisenberg_abstract(n).constants:
        raise ValueError("source is not the Heisenberg algebra in canonical basis order")
    z_img = cand.images[-1]
    if not z_img.is_zero() and z_img.is_scalar_multiple_of_identity():
        lam = z_img[0, 0]
        return ObstructionVerdict(
            "scalar-Z-contradiction",
            {
                "z_image_scalar": scalar_str(lam),
                "trace": scalar_str(z_img.trace()),
                "reason": "a commutator has trace 0, a nonzero scalar matrix does not",
            },
        )
    target = LieAlgebra.from_param(BracketParam.commutator(cand.target_dim))
    verdict = hom_check(cand.as_map(), cand.src, target)
    if not verdict.is_hom:
        return ObstructionVerdict("not-a-hom", verdict.witness)
    if verdict.injective:
        return ObstructionVerdict("faithful", {"target_dim": cand.target_dim})
    return ObstructionVerdict("not-faithful", {"map_rank": cand.as_map().rank(), "needed": d})


# ---------------------------------------------------------------------------
# The semidirect model S(V1, V2)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SemidirectModel:
    """End(V1) acting on the two-step nilpotent algebra
    Hom(V1,V2) + Hom(V2,V1) + End(V2), isomorphic to the rank-r bracket
    algebra on square matrices of size r+s via the block-assembly map."""

    r: int
    s: int
    constants: StructureConstants
    phi: LinearMap
    labels: Tuple[str, ...]

    @property
    def dim(self) -> int:
        return (self.r + self.s) ** 2

    def algebra(self) -> LieAlgebra:
        return LieAlgebra(self.dim, self.constants, self.labels)

    def target(self) -> LieAlgebra:
        n = self.r + self.s
        return LieAlgebra.from_param(BracketParam.normal(n, n, self.r))

    def nilpotent_indices(self) -> range:
        """Coordinate range of the nilpotent part (the A, B, C components)."""
        return range(self.r * self.r, self.dim)


def _component_blocks(r: int, s: int):
    """(rows, cols, offset) of the X, A, B, C components in coordinate order."""
    off_x = 0
    off_a = off_x + r * r
    off_b = off_a + s * r
    off_c = off_b + r * s
    return (
        ("X", r, r, off_x),
        ("A", s, r, off_a),
        ("B", r, s, off_b),
        ("C", s, s, off_c),
    )


def semidirect_S(r: int, s: int) -> SemidirectModel:
    """Build S(V1, V2) with dim V1 = r, dim V2 = s and its verified isomorphism.

    The bracket of quadruples is
    ``[(X,A,B,C), (X',A',B',C')] = ([X,X'], AX' - A'X, XB' - X'B, AB' - A'B)``
    and the isomorphism assembles the blocks as ``[[X, B], [A, C]]``.
    """
    if r < 1 or s < 0:
        raise ValueError(f"need r >= 1 and s >= 0, got r={r}, s={s}")
    n = r + s
    dim = n * n
    components = _component_blocks(r, s)

    basis_blocks = []
    labels: List[str] = []
    for name, rows, cols, _ in components:
        if rows == 0 or cols == 0:
            continue
        for i in range(rows):
            for j in range(cols):
                blocks = {cname: None for cname, *_ in components}
                blocks[name] = Matrix.unit(rows, cols, i, j)
                basis_blocks.append((blocks["X"], blocks["A"], blocks["B"], blocks["C"]))
                labels.append(f"{name}[{i + 1},{j + 1}]")

    def flatten(blocks) -> tuple:
        coords = [0] * dim
        for (name, rows, cols, off), blk in zip(components, blocks):
            if blk is None or rows == 0 or cols == 0:
                continue
            for i in range(rows):
                for j in range(cols):
                    coords[off + i * cols + j] = blk[i, j]
        return tuple(coords)

    table: Dict[tuple, dict] = {}
    for a in range(dim):
        for b in range(a + 1, dim):
            w = block_bracket(basis_blocks[a], basis_blocks[b], r)
            terms = {k: v for k, v in enumerate(flatten(w)) if v != 0}
            if terms:
                table[(a, b)] = terms
    constants = StructureConstants(dim, table)

    columns = [
        join_blocks((x, a_, b_, c_), n, n, r).entries for (x, a_, b_, c_) in basis_blocks
    ]
    phi = LinearMap.from_columns(columns)
    model = SemidirectModel(r, s, constants, phi, tuple(labels))
    verdict = hom_check(phi, model.algebra(), model.target())
    if not verdict.bijective:
        raise ValueError(f"block-assembly map failed verification: {verdict.witness}")
    return model


# ---------------------------------------------------------------------------
# Zero-padding embeddings
# ---------------------------------------------------------------------------

def pad_matrix(m: Matrix, rows: int, cols: int) -> Matrix:
    if rows < m.rows or cols < m.cols:
        raise ShapeError(f"cannot pad {m.rows}x{m.cols} into {rows}x{cols}")
    out = [[0] * cols for _ in range(rows)]
    for i in range(m.rows):
        for j in range(m.cols):
            out[i][j] = m[i, j]
    return Matrix(out)


def ado_embed(cand: RepCandidate, n: int, m: int, q: int):
    """Pad a commutator matrix algebra into ``Mat(n x m)`` with the rank-q
    normal parameter; returns the padded span and the verification verdict.

    Requires ``q >= p`` and ``n, m >= q`` where ``p`` is the candidate's
    matrix size; brackets of matrices supported in the top-left ``p x p``
    corner then reduce to ordinary commutators.
    """
    p = cand.target_dim
    if q < p:
        raise HypothesisError(f"need q >= p: q={q} < p={p}")
    if n < q or m < q:
        raise HypothesisError(f"need n, m >= q: n={n}, m={m}, q={q}")
    commutator_target = LieAlgebra.from_param(BracketParam.commutator(p))
    pre = hom_check(cand.as_map(), cand.src, commutator_target)
    if not pre.is_hom:
        raise ValueError(f"candidate is not a commutator homomorphism: {pre.witness}")
    padded = [pad_matrix(img, n, m) for img in cand.images]
    big = LieAlgebra.from_param(BracketParam.normal(n, m, q))
    f = LinearMap.from_columns([mat.entries for mat in padded])
    verdict = hom_check(f, cand.src, big)
    span = Subspace.span(n, m, padded)
    return span, verdict


# ---------------------------------------------------------------------------
# Worked-example catalog
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BracketClaim:
    """An expected bracket value recorded next to the computed one."""

    left: str
    right: str
    claimed: tuple
    computed: tuple
    note: str = ""

    @property
    def matches(self) -> bool:
        return tuple(self.claimed) == tuple(self.computed)

    def to_json(self, labels) -> dict:
        def coords(c):
            return {labels[k]: scalar_str(v) for k, v in enumerate(c) if v != 0}

        return {
            "pair": [self.left, self.right],
            "claimed": coords(self.claimed),
            "computed": coords(self.computed),
            "matches": self.matches,
            "note": self.note,
        }


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    description: str
    param: BracketParam
    basis: Tuple[Matrix, ...]
    labels: Tuple[str, ...]
    algebra: LieAlgebra
    claims: Tuple[BracketClaim, ...]

    @property
    def discrepancies(self) -> tuple:
        return tuple(f"[{c.left},{c.right}]" for c in self.claims if not c.matches)

    def to_json(self) -> dict:
        from .matrices import matrix_to_json

        return {
            "name": self.name,
            "description": self.description,
            "param": {
                "n": self.param.n,
                "m": self.param.m,
                "j": matrix_to_json(self.param.j),
            },
            "basis": {lbl: matrix_to_json(b) for lbl, b in zip(self.labels, self.basis)},
            "constants": self.algebra.constants.to_json(),
            "claims": [c.to_json(self.labels) for c in self.claims],
            "discrepancies": list(self.discrepancies),
        }


def _entry(name, description, param, basis, labels, claims_spec) -> CatalogEntry:
    algebra = restricted_constants(tuple(basis), param, tuple(labels))
    claims = []
    index = {lbl: k for k, lbl in enumerate(labels)}
    for left, right, claimed, note in claims_spec:
        computed = algebra.constants.bracket_basis(index[left], index[right])
        dense = tuple(computed.get(k, 0) for k in range(algebra.dim))
        claims.append(BracketClaim(left, right, tuple(claimed), dense, note))
    return CatalogEntry(name, description, param, tuple(basis), tuple(labels), algebra, tuple(claims))


def _catalog_heisenberg3_gl21() -> CatalogEntry:
    param = BracketParam(2, 2, Matrix.diagonal([1, 0]))
    basis = [Matrix.unit(2, 2, 1, 0), Matrix.unit(2, 2, 0, 1), Matrix.unit(2, 2, 1, 1)]
    labels = ["X", "Y", "Z"]
    z = (0, 0, 1)
    zero = (0, 0, 0)
    claims = [
        ("X", "Y", z, "the 3-dimensional Heisenberg relation"),
        ("X", "Z", zero, ""),
        ("Y", "Z", zero, ""),
    ]
    return _entry(
        "heisenberg3_gl21",
        "Faithful Heisenberg triple inside 2x2 matrices with the rank-1 parameter "
        "diag(1,0); no such triple exists under the ordinary 2x2 commutator.",
        param,
        basis,
        labels,
        claims,
    )


def _catalog_affine2_column() -> CatalogEntry:
    param = BracketParam(2, 1, Matrix([[1, 0]]))
    basis = [Matrix.column([1, 0]), Matrix.column([0, 1])]
    labels = ["e1", "e2"]
    claims = [
        (
            "e2",
            "e1",
            (1, 0),
            "published value is e1; direct evaluation of the bracket gives e2 "
            "(still the nonabelian 2-dimensional algebra)",
        ),
    ]
    return _entry(
        "affine2_column",
        "Column space R^2 with parameter (1 0): the nonabelian two-dimensional "
        "(affine) Lie algebra.",
        param,
        basis,
        labels,
        claims,
    )


def _catalog_g32_1() -> CatalogEntry:
    param = BracketParam(3, 1, Matrix([[1, 0, 0]]))
    basis = [Matrix.column([-1, 0, 0]), Matrix.column([0, 1, 0]), Matrix.column([0, 0, 1])]
    labels = ["e1", "e2", "e3"]
    claims = [
        ("e1", "e2", (0, 1, 0), ""),
        ("e1", "e3", (0, 0, 1), ""),
        ("e2", "e3", (0, 0, 0), ""),
    ]
    return _entry(
        "g32_1",
        "Column space R^3 with parameter (1 0 0) and sign-flipped first basis "
        "vector: the solvable algebra with [e1,e2]=e2, [e1,e3]=e3.",
        param,
        basis,
        labels,
        claims,
    )


def _catalog_column4() -> CatalogEntry:
    param = BracketParam(4, 1, Matrix([[1, 0, 0, 0]]))
    basis = [Matrix.unit(4, 1, i, 0) for i in range(4)]
    labels = [f"e{i + 1}" for i in range(4)]
    claims = []
    for i in range(4):
        for j in range(i + 1, 4):
            expect = [0, 0, 0, 0]
            if j == 0:
                expect[i] += 1
            if i == 0:
                expect[j] -= 1
            claims.append((labels[i], labels[j], tuple(expect), ""))
    return _entry(
        "column4",
        "Column space R^4 with parameter (1 0 0 0): brackets "
        "[e_i,e_j] = d(j,1) e_i - d(i,1) e_j.",
        param,
        basis,
        labels,
        claims,
    )


def _catalog_mat2_rank1() -> CatalogEntry:
    param = BracketParam(2, 2, Matrix.diagonal([0, 1]))
    h = Matrix.diagonal([1, -1])
    x = Matrix.unit(2, 2, 0, 1)
    y = Matrix.unit(2, 2, 1, 0)
    ident = Matrix.identity(2)
    basis = [h, x, y, ident]
    labels = ["H", "X", "Y", "I"]
    from fractions import Fraction

    half = Fraction(1, 2)
    claims = [
        ("H", "X", (0, 1, 0, 0), ""),
        ("H", "Y", (0, 0, -1, 0), ""),
        (
            "X",
            "Y",
            (0, 0, 0, 0),
            "published value is 0; direct evaluation gives E(1,1) = (H + I)/2, so "
            "span{H,X,Y} is not closed under this bracket and the entry works on "
            "the full 2x2 space",
        ),
    ]
    return _entry(
        "mat2_rank1",
        "Full 2x2 matrix space with the rank-1 parameter diag(0,1), containing "
        "the standard sl(2) generators H, X, Y (completed by the identity).",
        param,
        basis,
        labels,
        claims,
    )


def _catalog_mat2_full() -> CatalogEntry:
    param = BracketParam.commutator(2)
    basis = list(basis_matrices(2, 2))
    labels = ["E11", "E12", "E21", "E22"]
    claims = []
    units = {"E11": (0, 0), "E12": (0, 1), "E21": (1, 0), "E22": (1, 1)}
    keys = list(units)
    for a in range(4):
        for b in range(a + 1, 4):
            i, j = units[keys[a]]
            k, l = units[keys[b]]
            expect = [0, 0, 0, 0]
            if j == k:
                expect[2 * i + l] += 1
            if l == i:
                expect[2 * k + j] -= 1
            claims.append((keys[a], keys[b], tuple(expect), ""))
    return _entry(
        "mat2_full",
        "Full 2x2 matrix space with the identity parameter: the ordinary "
        "commutator algebra gl(2).",
        param,
        basis,
        labels,
        claims,
    )


_CATALOG_BUILDERS = {
    "heisenberg3_gl21": _catalog_heisenberg3_gl21,
    "affine2_column": _catalog_affine2_column,
    "g32_1": _catalog_g32_1,
    "column4": _catalog_column4,
    "mat2_rank1": _catalog_mat2_rank1,
    "mat2_full": _catalog_mat2_full,
}

CATALOG_NAMES = tuple(sorted(_CATALOG_BUILDERS))


def example_catalog(name: str) -> CatalogEntry:
    """Fetch a worked example by name; unknown names list the valid ones."""
    try:
        builder = _CATALOG_BUILDERS[name]
    except KeyError:
        raise ValueError(
            f"unknown example {name!r}; valid names: {', '.join(CATALOG_NAMES)}"
        ) from None
    return builder()
