"""Dense and sparse exact linear algebra over GF(q).

Dense matrices are 2-D numpy int64 arrays with entries reduced to [0, q);
elimination is vectorized and uses deterministic pivoting (first nonzero in
column order), so ``rref`` output is bit-reproducible.  Large sparse inputs
take a Markowitz-style elimination path for rank; ranks and kernel
dimensions are strategy-independent.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import CapExceededError
from .field import PrimeField

# Above this many cells, rank(SparseMatrix) keeps the sparse representation
# instead of densifying.  Tunable; results do not depend on the strategy.
DENSE_CELL_LIMIT = 4_000_000


def as_matrix(field: PrimeField, data) -> np.ndarray:
    """Coerce to a 2-D int64 array with entries reduced mod q."""
    M = np.asarray(data, dtype=np.int64)
    if M.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got ndim={M.ndim}")
    return M % field.q


def zeros_matrix(rows: int, cols: int) -> np.ndarray:
    return np.zeros((rows, cols), dtype=np.int64)


def identity_matrix(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)


@dataclass(frozen=True)
class SparseMatrix:
    """Row-compressed sparse matrix: per-row sorted (column, nonzero value)."""

    rows: int
    cols: int
    row_data: tuple[tuple[tuple[int, int], ...], ...]

    def __post_init__(self):
        if len(self.row_data) != self.rows:
            raise ValueError("row_data length must equal rows")
        for entries in self.row_data:
            prev = -1
            for c, v in entries:
                if not 0 <= c < self.cols:
                    raise ValueError(f"column index {c} out of range")
                if c <= prev:
                    raise ValueError("column indices must be strictly increasing")
                if v == 0:
                    raise ValueError("stored zeros are not allowed")
                prev = c

    @classmethod
    def from_rows(cls, rows: int, cols: int, entries_per_row) -> "SparseMatrix":
        data = tuple(tuple(sorted((int(c), int(v)) for c, v in row if v != 0))
                     for row in entries_per_row)
        return cls(rows, cols, data)

    @classmethod
    def from_dense(cls, M: np.ndarray) -> "SparseMatrix":
        rows, cols = M.shape
        data = []
        for i in range(rows):
            nz = np.flatnonzero(M[i])
            data.append(tuple((int(c), int(M[i, c])) for c in nz))
        return cls(rows, cols, tuple(data))

    def to_dense(self) -> np.ndarray:
        M = zeros_matrix(self.rows, self.cols)
        for i, entries in enumerate(self.row_data):
            for c, v in entries:
                M[i, c] = v
        return M

    @property
    def nnz(self) -> int:
        return sum(len(r) for r in self.row_data)


def rref(field: PrimeField, M: np.ndarray) -> tuple[int, np.ndarray, list[int]]:
    """Reduced row echelon form.

    Returns (rank, R, pivot_columns).  R is the unique RREF of M; pivots are
    strictly increasing.  Pivot choice is the first nonzero entry in column
    order, so the row permutation applied is reproducible.
    """
    q = field.q
    R = as_matrix(field, M).copy()
    m, n = R.shape
    pivots: list[int] = []
    pr = 0
    for c in range(n):
        if pr == m:
            break
        nz = np.flatnonzero(R[pr:, c])
        if nz.size == 0:
            continue
        i = pr + int(nz[0])
        if i != pr:
            R[[pr, i]] = R[[i, pr]]
        R[pr] = R[pr] * field.inv(int(R[pr, c])) % q
        other = np.flatnonzero(R[:, c])
        other = other[other != pr]
        if other.size:
            R[other] = (R[other] - np.outer(R[other, c], R[pr])) % q
        pivots.append(c)
        pr += 1
    return len(pivots), R, pivots


def _dense_rank(field: PrimeField, M: np.ndarray) -> int:
    """Forward elimination only; same rank as rref at roughly half the work."""
    q = field.q
    R = as_matrix(field, M).copy()
    m, n = R.shape
    pr = 0
    for c in range(n):
        if pr == m:
            break
        nz = np.flatnonzero(R[pr:, c])
        if nz.size == 0:
            continue
        i = pr + int(nz[0])
        if i != pr:
            R[[pr, i]] = R[[i, pr]]
        below = pr + 1 + np.flatnonzero(R[pr + 1 :, c])
        if below.size:
            factors = R[below, c] * field.inv(int(R[pr, c])) % q
            R[below] = (R[below] - np.outer(factors, R[pr])) % q
        pr += 1
    return pr


def _sparse_rank(field: PrimeField, M: SparseMatrix) -> int:
    """Markowitz-style sparse elimination; deterministic pivot tie-breaks."""
    q = field.q
    rows = {i: dict(entries) for i, entries in enumerate(M.row_data) if entries}
    col_rows: dict[int, set[int]] = {}
    for i, rd in rows.items():
        for c in rd:
            col_rows.setdefault(c, set()).add(i)
    rank = 0
    while rows:
        # Cheapest remaining row, then its column with fewest other nonzeros.
        pi = min(rows, key=lambda i: (len(rows[i]), i))
        prow = rows[pi]
        pc = min(prow, key=lambda c: (len(col_rows[c]), c))
        pinv = field.inv(prow[pc])
        targets = [i for i in col_rows[pc] if i != pi]
        for i in targets:
            rd = rows[i]
            factor = rd[pc] * pinv % q
            for c, v in prow.items():
                new = (rd.get(c, 0) - factor * v) % q
                if new:
                    if c not in rd:
                        col_rows.setdefault(c, set()).add(i)
                    rd[c] = new
                elif c in rd:
                    del rd[c]
                    col_rows[c].discard(i)
            if not rd:
                del rows[i]
        for c in prow:
            col_rows[c].discard(pi)
        del rows[pi]
        rank += 1
    return rank


def rank(field: PrimeField, M, strategy: str = "auto") -> int:
    """Rank of a dense array or SparseMatrix over GF(q)."""
    if strategy not in ("auto", "dense", "sparse"):
        raise ValueError(f"unknown strategy {strategy!r}")
    if isinstance(M, SparseMatrix):
        if strategy == "sparse" or (
            strategy == "auto" and M.rows * M.cols > DENSE_CELL_LIMIT
        ):
            return _sparse_rank(field, M)
        return _dense_rank(field, M.to_dense())
    if strategy == "sparse":
        return _sparse_rank(field, SparseMatrix.from_dense(as_matrix(field, M)))
    return _dense_rank(field, M)


def right_kernel_basis(field: PrimeField, M) -> list[np.ndarray]:
    """Basis of {v : M v = 0} in canonical free-variable form.

    One vector per non-pivot column f (in increasing column order): entry 1
    at f, -R[i, f] at each pivot column, 0 elsewhere.
    """
    if isinstance(M, SparseMatrix):
        M = M.to_dense()
    q = field.q
    _, R, pivots = rref(field, M)
    n = R.shape[1]
    pivot_set = set(pivots)
    basis = []
    for f in range(n):
        if f in pivot_set:
            continue
        v = np.zeros(n, dtype=np.int64)
        v[f] = 1
        for i, p in enumerate(pivots):
            v[p] = (-int(R[i, f])) % q
        basis.append(v)
    return basis


def left_kernel_dim(field: PrimeField, M, strategy: str = "auto") -> int:
    """rows - rank(M): the dimension of {w : w M = 0}."""
    nrows = M.rows if isinstance(M, SparseMatrix) else as_matrix(field, M).shape[0]
    return nrows - rank(field, M, strategy=strategy)


def mat_mul(field: PrimeField, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """A @ B mod q, accumulated in chunks that cannot overflow int64."""
    q = field.q
    A = as_matrix(field, A)
    B = as_matrix(field, B)
    if A.shape[1] != B.shape[0]:
        raise ValueError(f"shape mismatch {A.shape} x {B.shape}")
    step = max(1, (2**62) // max(1, (q - 1) ** 2))
    C = zeros_matrix(A.shape[0], B.shape[1])
    for s in range(0, A.shape[1], step):
        C = (C + A[:, s : s + step] @ B[s : s + step, :]) % q
    return C


def mat_vec(field: PrimeField, M: np.ndarray, v: np.ndarray) -> np.ndarray:
    return mat_mul(field, M, np.asarray(v, dtype=np.int64).reshape(-1, 1)).reshape(-1)


def det(field: PrimeField, M: np.ndarray) -> int:
    """Determinant of a square matrix via elimination."""
    q = field.q
    R = as_matrix(field, M).copy()
    n = R.shape[0]
    if R.shape[1] != n:
        raise ValueError("determinant requires a square matrix")
    d = 1
    for c in range(n):
        nz = np.flatnonzero(R[c:, c])
        if nz.size == 0:
            return 0
        i = c + int(nz[0])
        if i != c:
            R[[c, i]] = R[[i, c]]
            d = -d % q
        piv = int(R[c, c])
        d = d * piv % q
        below = c + 1 + np.flatnonzero(R[c + 1 :, c])
        if below.size:
            factors = R[below, c] * field.inv(piv) % q
            R[below] = (R[below] - np.outer(factors, R[c])) % q
    return d


def check_cell_cap(rows: int, cols: int, cap: int) -> None:
    """Refuse matrix builds beyond the configured cell budget."""
    if rows * cols > cap:
        raise CapExceededError(
            f"matrix of {rows} x {cols} = {rows * cols} cells exceeds cap {cap}"
        )
