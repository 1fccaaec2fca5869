"""Exact dense linear algebra over GF(p^e).

:class:`MatGF` wraps a read-only numpy array of element encodings plus
the :class:`~mpcodes.gf.FieldSpec` they live in.  All operations are
exact and deterministic; there is no pivoting heuristic beyond "first
nonzero entry" because the arithmetic is exact.

Rows and columns are numbered from 1 throughout the public API, matching
the usual coding-theory convention; the underlying ``.data`` array is an
ordinary 0-based numpy array.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .gf import FieldElement, FieldMismatchError, FieldSpec

__all__ = [
    "DimensionError",
    "MatGF",
    "RankDeficientError",
    "SingularMatrixError",
]


class DimensionError(ValueError):
    """Shapes do not conform for the requested operation."""


class SingularMatrixError(ValueError):
    """A square matrix required to be invertible is singular."""


class RankDeficientError(ValueError):
    """A matrix required to have full row rank does not."""


# is_nsc enumerates all square minors of leading row blocks; refuse
# inputs where that count explodes.
_NSC_ROW_LIMIT = 12


class MatGF:
    """An exact rows x cols matrix over a fixed GF(p^e)."""

    __slots__ = ("spec", "data")

    def __init__(self, spec: FieldSpec, data):
        arr = np.array(data, dtype=np.int64)
        if arr.ndim != 2:
            raise DimensionError(f"matrix data must be 2-D, got shape {arr.shape}")
        if arr.size and (arr.min() < 0 or arr.max() >= spec.q):
            raise ValueError(f"entries out of range for GF({spec.q})")
        arr.setflags(write=False)
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "data", arr)

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("MatGF is immutable")

    # -- construction ------------------------------------------------------

    @classmethod
    def from_rows(cls, spec: FieldSpec, rows: Sequence[Sequence]) -> "MatGF":
        """Build from rows of encodings or FieldElements (may be empty)."""
        conv = []
        ncols = None
        for row in rows:
            out = []
            for x in row:
                if isinstance(x, FieldElement):
                    if x.spec != spec:
                        raise FieldMismatchError("element from a different field")
                    out.append(x.enc)
                else:
                    out.append(spec.check(int(x)))
            if ncols is None:
                ncols = len(out)
            elif len(out) != ncols:
                raise DimensionError("ragged rows")
            conv.append(out)
        if not conv:
            return cls(spec, np.zeros((0, 0), dtype=np.int64))
        return cls(spec, conv)

    @classmethod
    def zeros(cls, spec: FieldSpec, rows: int, cols: int) -> "MatGF":
        return cls(spec, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, spec: FieldSpec, n: int) -> "MatGF":
        return cls(spec, np.eye(n, dtype=np.int64))

    @classmethod
    def vstack(cls, mats: Sequence["MatGF"]) -> "MatGF":
        specs = {m.spec for m in mats}
        if len(specs) != 1:
            raise FieldMismatchError("cannot stack matrices over different fields")
        cols = {m.cols for m in mats if m.rows}
        if len(cols) > 1:
            raise DimensionError("column counts differ")
        ncol = cols.pop() if cols else mats[0].cols
        blocks = [m.data for m in mats if m.rows] or [
            np.zeros((0, ncol), dtype=np.int64)
        ]
        return cls(mats[0].spec, np.vstack(blocks))

    @classmethod
    def block_diag(cls, spec: FieldSpec, mats: Sequence["MatGF"]) -> "MatGF":
        rows = sum(m.rows for m in mats)
        cols = sum(m.cols for m in mats)
        out = np.zeros((rows, cols), dtype=np.int64)
        r = c = 0
        for m in mats:
            if m.spec != spec:
                raise FieldMismatchError("block over a different field")
            out[r : r + m.rows, c : c + m.cols] = m.data
            r += m.rows
            c += m.cols
        return cls(spec, out)

    # -- basic attributes ---------------------------------------------------

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape  # type: ignore[return-value]

    @property
    def T(self) -> "MatGF":
        return MatGF(self.spec, self.data.T)

    def entry(self, i: int, j: int) -> FieldElement:
        """The (i, j) entry, 1-based."""
        if not (1 <= i <= self.rows and 1 <= j <= self.cols):
            raise IndexError(f"entry ({i},{j}) outside {self.rows}x{self.cols}")
        return self.spec.element(int(self.data[i - 1, j - 1]))

    def is_zero(self) -> bool:
        return not self.data.any()

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MatGF)
            and self.spec == other.spec
            and self.shape == other.shape
            and bool(np.array_equal(self.data, other.data))
        )

    def __hash__(self) -> int:
        return hash((self.spec, self.shape, self.data.tobytes()))

    def __repr__(self) -> str:
        return f"MatGF({self.rows}x{self.cols} over GF({self.spec.q}))"

    def _check_same_field(self, other: "MatGF") -> None:
        if self.spec != other.spec:
            raise FieldMismatchError("matrices over different fields")

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other: "MatGF") -> "MatGF":
        self._check_same_field(other)
        if self.shape != other.shape:
            raise DimensionError(f"cannot add {self.shape} and {other.shape}")
        return MatGF(self.spec, self.spec.add_arr(self.data, other.data))

    def __sub__(self, other: "MatGF") -> "MatGF":
        self._check_same_field(other)
        if self.shape != other.shape:
            raise DimensionError(f"cannot subtract {self.shape} and {other.shape}")
        return MatGF(self.spec, self.spec.sub_arr(self.data, other.data))

    def __neg__(self) -> "MatGF":
        return MatGF(self.spec, self.spec.neg_arr(self.data))

    def __matmul__(self, other: "MatGF") -> "MatGF":
        self._check_same_field(other)
        if self.cols != other.rows:
            raise DimensionError(
                f"cannot multiply {self.shape} by {other.shape}"
            )
        if self.rows == 0 or other.cols == 0:
            return MatGF.zeros(self.spec, self.rows, other.cols)
        if self.cols == 0:
            return MatGF.zeros(self.spec, self.rows, other.cols)
        spec = self.spec
        prods = spec.mul_arr(self.data[:, :, None], other.data[None, :, :])
        return MatGF(spec, spec.sum_arr(prods, axis=1))

    def scale(self, c) -> "MatGF":
        enc = c.enc if isinstance(c, FieldElement) else self.spec.check(int(c))
        return MatGF(self.spec, self.spec.mul_arr(np.int64(enc), self.data))

    def kron(self, other: "MatGF") -> "MatGF":
        """Kronecker product, (rows*rows') x (cols*cols')."""
        self._check_same_field(other)
        spec = self.spec
        ra, ca = self.shape
        rb, cb = other.shape
        if min(ra, ca, rb, cb) == 0:
            return MatGF.zeros(spec, ra * rb, ca * cb)
        out = spec.mul_arr(
            self.data[:, None, :, None], other.data[None, :, None, :]
        )
        return MatGF(spec, out.reshape(ra * rb, ca * cb))

    def frobenius_map(self, ell: int) -> "MatGF":
        """Apply the Frobenius power entrywise."""
        if self.data.size == 0:
            return self
        return MatGF(self.spec, self.spec.frobenius_arr(self.data, ell))

    # -- elimination ----------------------------------------------------------

    def rref(self) -> tuple["MatGF", tuple[int, ...]]:
        """Reduced row echelon form and the 1-based pivot columns.

        Pivoting is deterministic: for each column (left to right) the
        first nonzero entry at or below the current row is the pivot.
        """
        spec = self.spec
        m = self.data.copy()
        rows, cols = m.shape
        pivots: list[int] = []
        r = 0
        for c in range(cols):
            if r >= rows:
                break
            nz = np.flatnonzero(m[r:, c])
            if nz.size == 0:
                continue
            pr = r + int(nz[0])
            if pr != r:
                m[[r, pr]] = m[[pr, r]]
            pv = int(m[r, c])
            if pv != 1:
                m[r] = spec.mul_arr(np.int64(spec.inv(pv)), m[r])
            others = np.flatnonzero(m[:, c])
            others = others[others != r]
            if others.size:
                factors = m[others, c][:, None]
                m[others] = spec.sub_arr(
                    m[others], spec.mul_arr(factors, m[r][None, :])
                )
            pivots.append(c + 1)
            r += 1
        return MatGF(spec, m), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def inverse(self) -> "MatGF":
        if self.rows != self.cols:
            raise DimensionError("only square matrices can be inverted")
        n = self.rows
        if n == 0:
            return self
        aug = MatGF(
            self.spec, np.hstack([self.data, np.eye(n, dtype=np.int64)])
        )
        red, pivots = aug.rref()
        if list(pivots) != list(range(1, n + 1)):
            raise SingularMatrixError("matrix is singular")
        return MatGF(self.spec, red.data[:, n:])

    def kernel_basis(self) -> "MatGF":
        """Rows form a basis of the right kernel {x : self @ x^T = 0}."""
        red, pivots = self.rref()
        n = self.cols
        piv0 = [p - 1 for p in pivots]
        free0 = [j for j in range(n) if j + 1 not in pivots]
        spec = self.spec
        out = np.zeros((len(free0), n), dtype=np.int64)
        for row, f in enumerate(free0):
            out[row, f] = 1
            for r, pc in enumerate(piv0):
                out[row, pc] = spec.neg(int(red.data[r, f]))
        return MatGF(spec, out)

    # -- row selection and completion ------------------------------------------

    def row_submatrix(self, indices: Sequence[int]) -> "MatGF":
        """The submatrix formed by the given 1-based rows, in listed order."""
        seen = set()
        for i in indices:
            if not 1 <= i <= self.rows:
                raise IndexError(f"row index {i} outside 1..{self.rows}")
            if i in seen:
                raise ValueError(f"duplicate row index {i}")
            seen.add(i)
        sel = [i - 1 for i in indices]
        return MatGF(self.spec, self.data[sel, :])

    def complete_to_invertible(self) -> "MatGF":
        """Extend a full-row-rank M x N matrix to an invertible N x N one.

        Deterministic: appends the standard basis row e_j for every
        non-pivot column j of the RREF, in ascending column order.  The
        first M rows of the result equal the input.
        """
        _, pivots = self.rref()
        if len(pivots) != self.rows:
            raise RankDeficientError(
                f"matrix has rank {len(pivots)} < {self.rows} rows"
            )
        if self.rows > self.cols:
            raise RankDeficientError("more rows than columns")
        n = self.cols
        extra = [j for j in range(1, n + 1) if j not in pivots]
        out = np.zeros((n, n), dtype=np.int64)
        out[: self.rows] = self.data
        for r, j in enumerate(extra):
            out[self.rows + r, j - 1] = 1
        return MatGF(self.spec, out)

    def is_nsc(self) -> bool:
        """Non-singular by columns: every i x i submatrix of the first
        i rows is nonsingular, for 1 <= i <= rows (requires rows <= cols)."""
        m, n = self.shape
        if m > _NSC_ROW_LIMIT:
            raise ValueError(
                f"is_nsc limited to {_NSC_ROW_LIMIT} rows (got {m})"
            )
        if m == 0 or m > n:
            return False
        for i in range(1, m + 1):
            top = self.data[:i]
            for cols in combinations(range(n), i):
                sq = MatGF(self.spec, top[:, cols])
                if sq.rank() != i:
                    return False
        return True
