"""Generic computations on Lie algebras given by structure constants.

Axiom verification, centers and centralizers, derived and lower central
series, the Killing form, adjoint maps, subalgebra and homomorphism checks,
and the invariant signature used as a computable stand-in for isomorphism
classification.  An algebra may carry a ``model`` tag recording that its
basis is the canonical (row-major) basis of a matrix space ``Mat(n x m)``
with a middle-parameter bracket; coordinate vectors then reshape to
matrices and back.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .brackets import BracketParam, StructureConstants, bracket, structure_constants
from .matrices import Matrix, ShapeError, Subspace, kernel, rank, rref
from .scalars import Scalar, scalar_str


@dataclass(frozen=True)
class Verdict:
    """Outcome of a checkable claim; ``witness`` explains a failure."""

    passed: bool
    witness: Optional[dict] = None

    def __bool__(self) -> bool:
        return self.passed

    def to_json(self) -> dict:
        return {"pass": self.passed, "witness": self.witness}


@dataclass(frozen=True)
class HomVerdict:
    """Outcome of a homomorphism check, with injectivity alongside."""

    is_hom: bool
    injective: bool
    witness: Optional[dict] = None

    def __bool__(self) -> bool:
        return self.is_hom

    @property
    def bijective(self) -> bool:
        return self.is_hom and self.injective

    def to_json(self) -> dict:
        return {"pass": self.is_hom, "injective": self.injective, "witness": self.witness}


@dataclass(frozen=True)
class LinearMap:
    """A linear map between coordinate spaces, columns = basis images."""

    src_dim: int
    dst_dim: int
    matrix: Matrix

    def __post_init__(self):
        if self.matrix.shape != (self.dst_dim, self.src_dim):
            raise ShapeError(
                f"map matrix {self.matrix.rows}x{self.matrix.cols} does not match "
                f"{self.dst_dim}x{self.src_dim}"
            )

    @classmethod
    def identity(cls, dim: int) -> "LinearMap":
        return cls(dim, dim, Matrix.identity(dim))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[Scalar]]) -> "LinearMap":
        rows = tuple(zip(*columns))
        return cls(len(columns), len(rows), Matrix(rows))

    def column(self, a: int) -> tuple:
        return self.matrix.column_tuple(a)

    def apply(self, coords: Sequence[Scalar]) -> tuple:
        if len(coords) != self.src_dim:
            raise ShapeError(f"expected {self.src_dim} coordinates, got {len(coords)}")
        data = self.matrix._data
        return tuple(sum(r[a] * coords[a] for a in range(self.src_dim) if coords[a] != 0) for r in data)

    def compose(self, inner: "LinearMap") -> "LinearMap":
        return LinearMap(inner.src_dim, self.dst_dim, self.matrix @ inner.matrix)

    def rank(self) -> int:
        return rank(self.matrix)

    def is_bijective(self) -> bool:
        return self.src_dim == self.dst_dim and self.rank() == self.src_dim


@dataclass
class LieAlgebra:
    """Dimension + structure constants, with optional labels and matrix model.

    When ``model`` is set the constants are exactly those of the model's
    bracket over the canonical row-major basis, so coordinates and
    ``Mat(n x m)`` elements convert freely.
    """

    dim: int
    constants: StructureConstants
    labels: Optional[Tuple[str, ...]] = None
    model: Optional[BracketParam] = None

    def __post_init__(self):
        if self.constants.dim != self.dim:
            raise ValueError(f"constants dim {self.constants.dim} != algebra dim {self.dim}")
        if self.labels is not None and len(self.labels) != self.dim:
            raise ValueError("one label per basis element required")
        if self.model is not None and self.model.dim != self.dim:
            raise ShapeError("model space dimension does not match algebra dimension")

    @classmethod
    def from_param(cls, param: BracketParam, labels=None) -> "LieAlgebra":
        return cls(param.dim, structure_constants(param), labels, param)

    @classmethod
    def abelian(cls, dim: int, labels=None) -> "LieAlgebra":
        return cls(dim, StructureConstants(dim, {}), labels)

    @classmethod
    def verified(cls, dim: int, constants: StructureConstants, labels=None, model=None) -> "LieAlgebra":
        """Construct and insist on the Jacobi identity."""
        alg = cls(dim, constants, labels, model)
        verdict = jacobi_check(alg)
        if not verdict:
            raise ValueError(f"structure constants violate the Jacobi identity: {verdict.witness}")
        return alg

    @property
    def ambient_shape(self) -> tuple:
        if self.model is not None:
            return (self.model.n, self.model.m)
        return (self.dim, 1)

    def basis_label(self, k: int) -> str:
        if self.labels is not None:
            return self.labels[k]
        if self.model is not None:
            i, j = divmod(k, self.model.m)
            return f"E[{i + 1},{j + 1}]"
        return f"x{k}"

    def to_coords(self, x) -> tuple:
        if isinstance(x, Matrix):
            if x.shape != self.ambient_shape:
                raise ShapeError(f"element shape {x.shape} vs ambient {self.ambient_shape}")
            return x.entries
        coords = tuple(x)
        if len(coords) != self.dim:
            raise ShapeError(f"expected {self.dim} coordinates, got {len(coords)}")
        return coords

    def from_coords(self, coords: Sequence[Scalar]) -> Matrix:
        rows, cols = self.ambient_shape
        return Matrix.from_flat(rows, cols, coords)

    def full_subspace(self) -> Subspace:
        rows, cols = self.ambient_shape
        return Subspace(rows, cols, tuple(Matrix.unit(rows, cols, *divmod(k, cols)) for k in range(self.dim)))

    def bracket_coords(self, x, y) -> tuple:
        x = self.to_coords(x)
        y = self.to_coords(y)
        if self.model is not None:
            return bracket(self.from_coords(x), self.from_coords(y), self.model).entries
        return self.constants.bracket_coords(x, y)


def _coords_json(coords) -> dict:
    return {str(k): scalar_str(v) for k, v in enumerate(coords) if v != 0}


def jacobi_check(L: LieAlgebra) -> Verdict:
    """Verify the cyclic Jacobi sum on every basis triple a < b < c.

    Antisymmetry is structural in the constants, so the triples are the
    whole content of the axiom check.  A violation is reported with the
    first offending triple and its nonzero defect vector.
    """
    cb = L.constants.bracket_basis
    d = L.dim
    pair_cache: Dict[Tuple[int, int], Dict[int, Scalar]] = {}
    for a in range(d):
        for b in range(a + 1, d):
            pair_cache[(a, b)] = cb(a, b)

    def ad_into(acc, sign, x, inner):
        for k, v in inner.items():
            for t, w in cb(x, k).items():
                acc[t] = acc.get(t, 0) + sign * v * w

    for a in range(d):
        for b in range(a + 1, d):
            ab = pair_cache[(a, b)]
            for c in range(b + 1, d):
                defect: Dict[int, Scalar] = {}
                ad_into(defect, 1, a, pair_cache[(b, c)])
                ad_into(defect, -1, b, pair_cache[(a, c)])
                ad_into(defect, 1, c, ab)
                if any(v != 0 for v in defect.values()):
                    return Verdict(
                        False,
                        {
                            "triple": [a, b, c],
                            "defect": {str(k): scalar_str(v) for k, v in defect.items() if v != 0},
                        },
                    )
    return Verdict(True)


def _kernel_subspace(L: LieAlgebra, rows: Dict[tuple, list]) -> Subspace:
    if not rows:
        return L.full_subspace()
    mat = Matrix(tuple(rows[key] for key in sorted(rows)))
    ker = kernel(mat)
    ar, ac = L.ambient_shape
    return Subspace.span(ar, ac, [L.from_coords(v.column_tuple(0)) for v in ker.basis])


def center(L: LieAlgebra) -> Subspace:
    """Solutions of ``[x, y] = 0`` for all ``y``: kernel of the stacked adjoint."""
    rows: Dict[tuple, list] = {}

    def row(b, k):
        key = (b, k)
        if key not in rows:
            rows[key] = [0] * L.dim
        return rows[key]

    for (i, j), terms in L.constants.table.items():
        for k, v in terms.items():
            row(j, k)[i] += v
            row(i, k)[j] -= v
    return _kernel_subspace(L, rows)


def centralizer(L: LieAlgebra, S: Subspace) -> Subspace:
    """Elements bracketing to zero with every basis member of ``S``."""
    if (S.ambient_rows, S.ambient_cols) != L.ambient_shape:
        raise ShapeError(
            f"subspace ambient {S.ambient_rows}x{S.ambient_cols} does not match "
            f"algebra ambient {L.ambient_shape[0]}x{L.ambient_shape[1]}"
        )
    rows: Dict[tuple, list] = {}
    for s_idx, s in enumerate(S.basis):
        sc = L.to_coords(s)

        def row(k, _s=s_idx):
            key = (_s, k)
            if key not in rows:
                rows[key] = [0] * L.dim
            return rows[key]

        for (i, j), terms in L.constants.table.items():
            ci, cj = sc[i], sc[j]
            if ci == 0 and cj == 0:
                continue
            for k, v in terms.items():
                if cj != 0:
                    row(k)[i] += v * cj
                if ci != 0:
                    row(k)[j] -= v * ci
    return _kernel_subspace(L, rows)


def _span_coords(vectors) -> list:
    """Echelonized list of coordinate tuples spanning the given vectors."""
    rows = [v for v in vectors if any(x != 0 for x in v)]
    if not rows:
        return []
    reduced, pivots, _ = rref(Matrix(rows))
    return [reduced.row(i) for i in range(len(pivots))]


def _coords_to_subspace(L: LieAlgebra, coords: list) -> Subspace:
    ar, ac = L.ambient_shape
    return Subspace(ar, ac, tuple(L.from_coords(c) for c in coords))


def _series(L: LieAlgebra, lower_central: bool) -> List[Subspace]:
    d = L.dim
    current = [tuple(1 if i == k else 0 for i in range(d)) for k in range(d)]
    terms = [L.full_subspace()]
    dims = [d]
    bc = L.constants.bracket_coords
    while len(terms) <= d + 1:
        if lower_central:
            gens = []
            for a in range(d):
                for y in current:
                    v = [0] * d
                    for b, yb in enumerate(y):
                        if yb == 0 or a == b:
                            continue
                        for k, w in L.constants.bracket_basis(a, b).items():
                            v[k] += yb * w
                    gens.append(tuple(v))
        else:
            gens = [bc(current[a], current[b]) for a in range(len(current)) for b in range(a + 1, len(current))]
        nxt = _span_coords(gens)
        terms.append(_coords_to_subspace(L, nxt))
        if len(nxt) == 0 or len(nxt) == dims[-1]:
            break
        dims.append(len(nxt))
        current = nxt
    return terms


def derived_series(L: LieAlgebra) -> List[Subspace]:
    """g, [g,g], [[g,g],[g,g]], ... until the dimension stabilizes."""
    return _series(L, lower_central=False)


def lower_central_series(L: LieAlgebra) -> List[Subspace]:
    """g, [g,g], [g,[g,g]], ... until the dimension stabilizes."""
    return _series(L, lower_central=True)


def _sparse_ads(L: LieAlgebra) -> list:
    """Column-sparse adjoint matrices: ads[a][b] = sparse column [x_a, x_b]."""
    ads: list = [dict() for _ in range(L.dim)]
    for (i, j), terms in L.constants.table.items():
        ads[i][j] = dict(terms)
        ads[j][i] = {k: -v for k, v in terms.items()}
    return ads


def killing_form(L: LieAlgebra):
    """Gram matrix ``trace(ad_a . ad_b)`` and its exact rank."""
    d = L.dim
    ads = _sparse_ads(L)
    gram = [[0] * d for _ in range(d)]
    for a in range(d):
        cols_a = ads[a]
        for b in range(a, d):
            cols_b = ads[b]
            total = 0
            for v, col in cols_b.items():
                for u, w in col.items():
                    x = cols_a.get(u)
                    if x:
                        y = x.get(v)
                        if y:
                            total += y * w
            gram[a][b] = total
            gram[b][a] = total
    gram_matrix = Matrix(gram)
    return gram_matrix, rank(gram_matrix)


def adjoint(L: LieAlgebra, x) -> LinearMap:
    """Matrix of ``y -> [x, y]`` in the basis, as a linear map on coordinates."""
    xc = L.to_coords(x)
    d = L.dim
    cols = []
    for b in range(d):
        col = [0] * d
        for a, xa in enumerate(xc):
            if xa == 0 or a == b:
                continue
            for k, v in L.constants.bracket_basis(a, b).items():
                col[k] += xa * v
        cols.append(tuple(col))
    return LinearMap.from_columns(cols)


def subalgebra_closed(L: LieAlgebra, S: Subspace) -> Verdict:
    """Pass iff the bracket of any two basis members of ``S`` stays in ``S``."""
    if (S.ambient_rows, S.ambient_cols) != L.ambient_shape:
        raise ShapeError(
            f"subspace ambient {S.ambient_rows}x{S.ambient_cols} does not match "
            f"algebra ambient {L.ambient_shape[0]}x{L.ambient_shape[1]}"
        )
    for a in range(S.dim):
        for b in range(a + 1, S.dim):
            w = L.from_coords(L.bracket_coords(S.basis[a], S.basis[b]))
            residual = S.reduce(w)
            if not residual.is_zero():
                return Verdict(
                    False,
                    {
                        "pair": [a, b],
                        "residual": _coords_json(residual.entries),
                    },
                )
    return Verdict(True)


def hom_check(f: LinearMap, src: LieAlgebra, dst: LieAlgebra) -> HomVerdict:
    """Check ``f([x,y]) = [f(x), f(y)]`` on all basis pairs, plus injectivity.

    The right-hand side is evaluated through the destination's matrix model
    when it has one (an independent route from the structure constants).
    """
    if f.src_dim != src.dim or f.dst_dim != dst.dim:
        raise ShapeError(
            f"map {f.dst_dim}x{f.src_dim} does not fit algebras of dims {src.dim} -> {dst.dim}"
        )
    d = src.dim
    fcols = [f.column(a) for a in range(d)]
    use_model = dst.model is not None
    witness = None
    is_hom = True
    for a in range(d):
        for b in range(a + 1, d):
            lhs = [0] * dst.dim
            for k, v in src.constants.bracket_basis(a, b).items():
                col = fcols[k]
                for t in range(dst.dim):
                    if col[t] != 0:
                        lhs[t] += v * col[t]
            if use_model:
                rhs = bracket(dst.from_coords(fcols[a]), dst.from_coords(fcols[b]), dst.model).entries
            else:
                rhs = dst.constants.bracket_coords(fcols[a], fcols[b])
            if tuple(lhs) != tuple(rhs):
                is_hom = False
                witness = {
                    "pair": [a, b],
                    "f_of_bracket": _coords_json(lhs),
                    "bracket_of_images": _coords_json(rhs),
                }
                break
        if not is_hom:
            break
    injective = f.rank() == src.dim
    return HomVerdict(is_hom, injective, witness)


@dataclass(frozen=True)
class InvariantSignature:
    """Computable isomorphism invariants, compared as a single value."""

    dim: int
    center_dim: int
    derived_dims: tuple
    lcs_dims: tuple
    killing_rank: int
    derived_center_dim: int

    def __post_init__(self):
        for dims in (self.derived_dims, self.lcs_dims):
            if any(a < b for a, b in zip(dims, dims[1:])):
                raise ValueError(f"series dimensions must be weakly decreasing: {dims}")

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "center_dim": self.center_dim,
            "derived_dims": list(self.derived_dims),
            "lcs_dims": list(self.lcs_dims),
            "killing_rank": self.killing_rank,
            "derived_center_dim": self.derived_center_dim,
        }


def invariant_signature(L: LieAlgebra) -> InvariantSignature:
    """Assemble the signature; equal signatures are necessary for isomorphism."""
    ctr = center(L)
    der = derived_series(L)
    lcs = lower_central_series(L)
    _, k_rank = killing_form(L)
    derived_sub = der[1] if len(der) > 1 else der[0]
    if derived_sub.dim == 0:
        dcd = 0
    else:
        dcd = centralizer(L, derived_sub).intersection(derived_sub).dim
    return InvariantSignature(
        dim=L.dim,
        center_dim=ctr.dim,
        derived_dims=tuple(t.dim for t in der),
        lcs_dims=tuple(t.dim for t in lcs),
        killing_rank=k_rank,
        derived_center_dim=dcd,
    )
