"""Dense exact linear algebra over the rationals.

Everything here is a pure function of immutable values: ``Matrix`` holds a
tuple-of-tuples of exact scalars, and the row-reduction routines return new
matrices together with the invertible transforms that witness them.  The
two-sided factorization ``M = Q * D_r * P`` (``D_r`` the rank normal form,
``Q`` and ``P`` invertible) is the workhorse behind every equivalence and
classification computation in the package.

Text format for matrices: rows separated by ``;``, entries by whitespace,
entries as integers or ``p/q``, e.g. ``"1 0; 0 1/2"``.  JSON format:
``{"rows": n, "cols": m, "entries": [["p/q", ...], ...]}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional, Sequence

from .scalars import Scalar, scalar_div, scalar_str, to_scalar


class ShapeError(ValueError):
    """Raised when operands have incompatible or invalid shapes."""


class SingularMatrixError(ValueError):
    """Raised when a matrix that must be invertible is not.

    Carries the actual ``rank`` of the offending matrix.
    """

    def __init__(self, message: str, rank: int):
        super().__init__(message)
        self.rank = rank


class Matrix:
    """An immutable dense matrix of exact rational scalars.

    Shapes are always positive in both dimensions; 0-row or 0-column
    matrices are rejected at construction.
    """

    __slots__ = ("rows", "cols", "_data", "_hash")

    def __init__(self, data: Iterable[Iterable]):
        rows = tuple(tuple(to_scalar(x) for x in row) for row in data)
        if not rows or not rows[0]:
            raise ShapeError("matrix must have at least one row and one column")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ShapeError("ragged rows: all rows must have equal length")
        self.rows = len(rows)
        self.cols = width
        self._data = rows
        self._hash = None

    @classmethod
    def _raw(cls, data: tuple) -> "Matrix":
        # Internal: entries already exact scalars, shape already consistent.
        self = object.__new__(cls)
        self.rows = len(data)
        self.cols = len(data[0])
        self._data = data
        self._hash = None
        return self

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        if rows < 1 or cols < 1:
            raise ShapeError(f"invalid shape {rows}x{cols}")
        return cls._raw(tuple((0,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        if n < 1:
            raise ShapeError(f"invalid size {n}")
        return cls._raw(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def unit(cls, rows: int, cols: int, i: int, j: int) -> "Matrix":
        """The basis matrix with a single 1 at 0-based position (i, j)."""
        if not (0 <= i < rows and 0 <= j < cols):
            raise ShapeError(f"unit position ({i}, {j}) outside {rows}x{cols}")
        return cls._raw(tuple(tuple(1 if (r, c) == (i, j) else 0 for c in range(cols)) for r in range(rows)))

    @classmethod
    def diagonal(cls, values: Sequence) -> "Matrix":
        vals = [to_scalar(v) for v in values]
        n = len(vals)
        if n < 1:
            raise ShapeError("diagonal requires at least one entry")
        return cls._raw(tuple(tuple(vals[i] if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def column(cls, values: Sequence) -> "Matrix":
        return cls(tuple((v,) for v in values))

    @classmethod
    def from_flat(cls, rows: int, cols: int, flat: Sequence) -> "Matrix":
        flat = tuple(flat)
        if len(flat) != rows * cols:
            raise ShapeError(f"need {rows * cols} entries for {rows}x{cols}, got {len(flat)}")
        return cls(tuple(flat[r * cols : (r + 1) * cols] for r in range(rows)))

    @property
    def shape(self) -> tuple:
        return (self.rows, self.cols)

    @property
    def entries(self) -> tuple:
        """Row-major flat tuple of all entries."""
        return tuple(x for row in self._data for x in row)

    def __getitem__(self, key) -> Scalar:
        i, j = key
        return self._data[i][j]

    def row(self, i: int) -> tuple:
        return self._data[i]

    def column_tuple(self, j: int) -> tuple:
        return tuple(r[j] for r in self._data)

    def __add__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.shape != other.shape:
            raise ShapeError(f"cannot add {self.rows}x{self.cols} and {other.rows}x{other.cols}")
        return Matrix._raw(tuple(tuple(x + y for x, y in zip(r1, r2)) for r1, r2 in zip(self._data, other._data)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.shape != other.shape:
            raise ShapeError(f"cannot subtract {other.rows}x{other.cols} from {self.rows}x{self.cols}")
        return Matrix._raw(tuple(tuple(x - y for x, y in zip(r1, r2)) for r1, r2 in zip(self._data, other._data)))

    def __neg__(self) -> "Matrix":
        return Matrix._raw(tuple(tuple(-x for x in r) for r in self._data))

    def __mul__(self, scalar) -> "Matrix":
        c = to_scalar(scalar)
        return Matrix._raw(tuple(tuple(c * x for x in r) for r in self._data))

    __rmul__ = __mul__

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ShapeError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        bcols = tuple(zip(*other._data))
        return Matrix._raw(
            tuple(tuple(sum(x * y for x, y in zip(arow, bcol)) for bcol in bcols) for arow in self._data)
        )

    def transpose(self) -> "Matrix":
        return Matrix._raw(tuple(zip(*self._data)))

    def trace(self) -> Scalar:
        if self.rows != self.cols:
            raise ShapeError(f"trace of non-square {self.rows}x{self.cols} matrix")
        return sum(self._data[i][i] for i in range(self.rows))

    def is_zero(self) -> bool:
        return all(x == 0 for row in self._data for x in row)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_scalar_multiple_of_identity(self) -> bool:
        if self.rows != self.cols:
            return False
        d = self._data[0][0]
        return all(x == (d if i == j else 0) for i, row in enumerate(self._data) for j, x in enumerate(row))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.rows, self.cols, self._data))
        return self._hash

    def __str__(self) -> str:
        return format_matrix(self)

    def __repr__(self) -> str:
        return f"Matrix({format_matrix(self)!r})"


def parse_matrix(text: str) -> Matrix:
    """Parse the ``"1 0; 0 1/2"`` text format."""
    rows = [r for r in (part.strip() for part in text.split(";")) if r]
    if not rows:
        raise ShapeError(f"empty matrix text: {text!r}")
    return Matrix(tuple(tuple(tok for tok in row.split()) for row in rows))


def format_matrix(m: Matrix) -> str:
    return "; ".join(" ".join(scalar_str(x) for x in row) for row in m._data)


def matrix_to_json(m: Matrix) -> dict:
    return {
        "rows": m.rows,
        "cols": m.cols,
        "entries": [[scalar_str(x) for x in row] for row in m._data],
    }


def matrix_from_json(obj: dict) -> Matrix:
    m = Matrix(obj["entries"])
    if m.rows != obj["rows"] or m.cols != obj["cols"]:
        raise ShapeError(
            f"declared shape {obj['rows']}x{obj['cols']} does not match entries {m.rows}x{m.cols}"
        )
    return m


class RrefResult(NamedTuple):
    reduced: Matrix
    pivots: tuple
    transform: Matrix


def rref(m: Matrix) -> RrefResult:
    """Reduced row-echelon form with the invertible transform that produced it.

    Returns ``(reduced, pivots, transform)`` with ``transform @ m == reduced``.
    Pivot choice is deterministic: first nonzero entry scanning top-to-bottom
    within each column, columns left-to-right.
    """
    a = [list(row) for row in m._data]
    t = [[1 if i == j else 0 for j in range(m.rows)] for i in range(m.rows)]
    pivots = []
    prow = 0
    for col in range(m.cols):
        pr = next((r for r in range(prow, m.rows) if a[r][col] != 0), None)
        if pr is None:
            continue
        if pr != prow:
            a[prow], a[pr] = a[pr], a[prow]
            t[prow], t[pr] = t[pr], t[prow]
        pv = a[prow][col]
        if pv != 1:
            a[prow] = [scalar_div(x, pv) for x in a[prow]]
            t[prow] = [scalar_div(x, pv) for x in t[prow]]
        for r in range(m.rows):
            if r == prow:
                continue
            f = a[r][col]
            if f != 0:
                arow, apiv = a[r], a[prow]
                a[r] = [x - f * y for x, y in zip(arow, apiv)]
                trow, tpiv = t[r], t[prow]
                t[r] = [x - f * y for x, y in zip(trow, tpiv)]
        pivots.append(col)
        prow += 1
        if prow == m.rows:
            break
    return RrefResult(Matrix(a), tuple(pivots), Matrix(t))


def rank(m: Matrix) -> int:
    return len(rref(m).pivots)


def inverse(m: Matrix) -> Matrix:
    if m.rows != m.cols:
        raise ShapeError(f"cannot invert non-square {m.rows}x{m.cols} matrix")
    reduced, pivots, transform = rref(m)
    if len(pivots) < m.rows:
        raise SingularMatrixError(
            f"matrix of rank {len(pivots)} < {m.rows} is singular", rank=len(pivots)
        )
    return transform


def kernel(m: Matrix) -> "Subspace":
    """Basis of the right null space, as column vectors in canonical form."""
    reduced, pivots, _ = rref(m)
    free = [c for c in range(m.cols) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * m.cols
        v[f] = 1
        for i, p in enumerate(pivots):
            v[p] = -reduced._data[i][f]
        basis.append(Matrix.column(v))
    return Subspace(m.cols, 1, basis)


def rank_normal_form(rows: int, cols: int, r: int) -> Matrix:
    """The rows x cols matrix with the identity of size ``r`` in the top-left
    corner and zeros elsewhere (``r = 0`` gives the zero matrix)."""
    if not (0 <= r <= min(rows, cols)):
        raise ShapeError(f"rank {r} out of range for {rows}x{cols}")
    return Matrix._raw(
        tuple(tuple(1 if (i == j and i < r) else 0 for j in range(cols)) for i in range(rows))
    )


@dataclass(frozen=True)
class RankFactorization:
    """Invertible ``q`` (rows x rows), ``p`` (cols x cols) and ``rank`` with
    ``q @ rank_normal_form(rows, cols, rank) @ p`` equal to the input."""

    q: Matrix
    p: Matrix
    rank: int

    def normal_form(self) -> Matrix:
        return rank_normal_form(self.q.rows, self.p.rows, self.rank)

    def reconstruct(self) -> Matrix:
        return self.q @ self.normal_form() @ self.p


def rank_factorization(j: Matrix) -> RankFactorization:
    """Factor ``j = q @ D_r @ p`` with ``D_r`` the rank normal form.

    Row-reduce to RREF (recording the row transform), then clear the
    non-pivot columns with column operations.  The witnesses are not unique;
    this routine is deterministic and returns identities when the input is
    already in normal form.
    """
    reduced, pivots, transform = rref(j)
    r = len(pivots)
    if r == 0:
        return RankFactorization(Matrix.identity(j.rows), Matrix.identity(j.cols), 0)
    n = j.cols
    order = list(pivots) + [c for c in range(n) if c not in pivots]
    perm = Matrix._raw(tuple(tuple(1 if order[k] == i else 0 for k in range(n)) for i in range(n)))
    shuffled = reduced @ perm
    # shuffled = [I_r, S; 0, 0]; clear S with a unipotent column transform.
    elim = [[1 if i == j2 else 0 for j2 in range(n)] for i in range(n)]
    for i in range(r):
        for c in range(r, n):
            elim[i][c] = -shuffled._data[i][c]
    col_transform = perm @ Matrix(elim)
    return RankFactorization(inverse(transform), inverse(col_transform), r)


def solve_coordinates(basis: Sequence[Matrix], target: Matrix) -> Optional[tuple]:
    """Coordinates of ``target`` in the span of ``basis``, or None if outside.

    All matrices must share one shape; ``basis`` must be linearly
    independent (unique coordinates).
    """
    if not basis:
        return () if target.is_zero() else None
    cols = [m.entries for m in basis]
    aug = Matrix(tuple(zip(*cols, target.entries)))
    reduced, pivots, _ = rref(aug)
    k = len(basis)
    if k in pivots:
        return None
    if len(pivots) != k:
        raise ValueError("basis matrices are linearly dependent")
    coords = [0] * k
    for i, p in enumerate(pivots):
        coords[p] = reduced._data[i][k]
    return tuple(coords)


class Subspace:
    """A linear subspace of a matrix space, given by an independent basis.

    The ambient space is ``Mat(ambient_rows x ambient_cols)``; basis members
    are matrices of that shape.  Equality means equality of spans.
    """

    __slots__ = ("ambient_rows", "ambient_cols", "basis", "_echelon")

    def __init__(self, ambient_rows: int, ambient_cols: int, basis: Iterable[Matrix]):
        basis = tuple(basis)
        if ambient_rows < 1 or ambient_cols < 1:
            raise ShapeError(f"invalid ambient shape {ambient_rows}x{ambient_cols}")
        for b in basis:
            if b.shape != (ambient_rows, ambient_cols):
                raise ShapeError(
                    f"basis matrix of shape {b.rows}x{b.cols} in ambient {ambient_rows}x{ambient_cols}"
                )
        self.ambient_rows = ambient_rows
        self.ambient_cols = ambient_cols
        self.basis = basis
        self._echelon = None
        if basis and rank(Matrix(tuple(b.entries for b in basis))) != len(basis):
            raise ValueError("basis matrices are linearly dependent")

    @classmethod
    def span(cls, ambient_rows: int, ambient_cols: int, mats: Iterable[Matrix]) -> "Subspace":
        """Span of arbitrary matrices, with a canonical echelonized basis."""
        rows = [m.entries for m in mats if not m.is_zero()]
        if not rows:
            return cls(ambient_rows, ambient_cols, ())
        reduced, pivots, _ = rref(Matrix(rows))
        basis = tuple(
            Matrix.from_flat(ambient_rows, ambient_cols, reduced.row(i)) for i in range(len(pivots))
        )
        return cls(ambient_rows, ambient_cols, basis)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def ambient_dim(self) -> int:
        return self.ambient_rows * self.ambient_cols

    def _echelon_rows(self) -> tuple:
        if self._echelon is None:
            if not self.basis:
                self._echelon = ()
            else:
                reduced, pivots, _ = rref(Matrix(tuple(b.entries for b in self.basis)))
                self._echelon = tuple(reduced.row(i) for i in range(len(pivots)))
        return self._echelon

    def contains(self, mat: Matrix) -> bool:
        if mat.shape != (self.ambient_rows, self.ambient_cols):
            raise ShapeError(
                f"matrix of shape {mat.rows}x{mat.cols} vs ambient {self.ambient_rows}x{self.ambient_cols}"
            )
        if mat.is_zero():
            return True
        ech = self._echelon_rows()
        if not ech:
            return False
        return len(rref(Matrix(ech + (mat.entries,))).pivots) == self.dim

    def reduce(self, mat: Matrix) -> Matrix:
        """Residual of ``mat`` after elimination against the span (zero iff contained)."""
        v = list(mat.entries)
        for row in self._echelon_rows():
            lead = next(i for i, x in enumerate(row) if x != 0)
            f = v[lead]
            if f != 0:
                v = [x - f * y for x, y in zip(v, row)]
        return Matrix.from_flat(self.ambient_rows, self.ambient_cols, v)

    def intersection(self, other: "Subspace") -> "Subspace":
        if (self.ambient_rows, self.ambient_cols) != (other.ambient_rows, other.ambient_cols):
            raise ShapeError("subspaces live in different ambient spaces")
        if not self.basis or not other.basis:
            return Subspace(self.ambient_rows, self.ambient_cols, ())
        cols = [b.entries for b in self.basis] + [tuple(-x for x in b.entries) for b in other.basis]
        ker = kernel(Matrix(tuple(zip(*cols))))
        mats = []
        for kvec in ker.basis:
            combo = Matrix.zeros(self.ambient_rows, self.ambient_cols)
            for a, b in zip(kvec.column_tuple(0)[: self.dim], self.basis):
                if a != 0:
                    combo = combo + a * b
            mats.append(combo)
        return Subspace.span(self.ambient_rows, self.ambient_cols, mats)

    def map(self, fn) -> "Subspace":
        """Image under a matrix-valued function, re-spanned canonically."""
        images = [fn(b) for b in self.basis]
        if not images:
            return Subspace(self.ambient_rows, self.ambient_cols, ())
        first = images[0]
        return Subspace.span(first.rows, first.cols, images)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            (self.ambient_rows, self.ambient_cols) == (other.ambient_rows, other.ambient_cols)
            and self._echelon_rows() == other._echelon_rows()
        )

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient_rows}x{self.ambient_cols})"


def split_blocks(m: Matrix, r: int):
    """Split at row/column ``r`` into (top-left, bottom-left, top-right,
    bottom-right).  Blocks with zero rows or columns come back as None."""
    if not (0 <= r <= min(m.rows, m.cols)):
        raise ShapeError(f"split index {r} out of range for {m.rows}x{m.cols}")
    return (
        _submatrix(m, 0, r, 0, r),
        _submatrix(m, r, m.rows, 0, r),
        _submatrix(m, 0, r, r, m.cols),
        _submatrix(m, r, m.rows, r, m.cols),
    )


def join_blocks(blocks, rows: int, cols: int, r: int) -> Matrix:
    """Reassemble (top-left, bottom-left, top-right, bottom-right) split at ``r``."""
    tl, bl, tr, br = blocks
    out = [[0] * cols for _ in range(rows)]
    for block, r0, c0 in ((tl, 0, 0), (bl, r, 0), (tr, 0, r), (br, r, r)):
        if block is None:
            continue
        for i in range(block.rows):
            for j in range(block.cols):
                out[r0 + i][c0 + j] = block._data[i][j]
    return Matrix(out)


def _submatrix(m: Matrix, r0: int, r1: int, c0: int, c1: int) -> Optional[Matrix]:
    if r1 <= r0 or c1 <= c0:
        return None
    return Matrix._raw(tuple(row[c0:c1] for row in m._data[r0:r1]))
