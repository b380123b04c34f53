"""The bilinear minor system and its Macaulay matrices.

For every pencil row i and every (r+1)-column subset J, stacking row i of
the pencil on top of the unknown r x n matrix C and taking the maximal
minor on J gives one bilinear equation: expanding along the stacked row,

    eq(i, J) = sum_t (-1)^t m_{i, j_t}(x) * c_{J \\ {j_t}}   (t 0-based),

where c_T is the maximal minor of C on columns T, treated as an independent
linearized unknown.  The degree-b Macaulay matrix collects mu * eq(i, J)
for all x-monomials mu of degree b-1; rows are ordered monomial-major, then
by (i, colex(J)); columns monomial-major by colex, then by colex Plucker
rank.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import estimator
from .combinatorics import monomial_mul, monomials_colex, subsets_colex
from .instance import MinRankInstance
from .linalg import SparseMatrix, check_cell_cap, rank as matrix_rank

MATRIX_CELL_CAP = 50_000_000


@dataclass(frozen=True)
class BilinearEquation:
    """One (r+1)-minor: terms are (x-variable, Plucker subset, coefficient)."""

    row: int
    cols: tuple[int, ...]
    terms: tuple[tuple[int, tuple[int, ...], int], ...]


def build_equations(inst: MinRankInstance) -> list[BilinearEquation]:
    """All m * C(n, r+1) bilinear equations, ordered by (row, colex(J)).

    Zero coefficients are dropped.  Rejects r = n (no (r+1)-column subsets).
    """
    m, n, K, r = inst.m, inst.n, inst.K, inst.r
    if r >= n:
        raise ValueError(f"r={r} must be below n={n}: no (r+1)-column subsets exist")
    q = inst.field.q
    eqs = []
    for i in range(m):
        for J in subsets_colex(n, r + 1):
            terms = []
            for t, j in enumerate(J):
                sign = 1 if t % 2 == 0 else q - 1
                T = J[:t] + J[t + 1 :]
                for ell in range(K):
                    c = int(inst.matrices[ell][i, j]) * sign % q
                    if c:
                        terms.append((ell, T, c))
            eqs.append(BilinearEquation(i, J, tuple(terms)))
    return eqs


@dataclass(frozen=True)
class MacaulayMatrix:
    """Sparse Macaulay matrix at x-degree b with its index bijections."""

    b: int
    K: int
    row_monomials: tuple[tuple[int, ...], ...]  # degree b-1, colex order
    col_monomials: tuple[tuple[int, ...], ...]  # degree b, colex order
    pluckers: tuple[tuple[int, ...], ...]       # r-subsets, colex order
    equations: tuple[BilinearEquation, ...]      # ordered by (row, colex(J))
    data: SparseMatrix

    @property
    def n_rows(self) -> int:
        return self.data.rows

    @property
    def n_cols(self) -> int:
        return self.data.cols

    def row_id(self, mono: tuple[int, ...], eq_index: int) -> int:
        return self._row_mono_index[mono] * len(self.equations) + eq_index

    def col_id(self, mono: tuple[int, ...], plucker: tuple[int, ...]) -> int:
        return self._col_mono_index[mono] * len(self.pluckers) + self._plucker_index[plucker]

    def row_label(self, row: int) -> tuple[tuple[int, ...], BilinearEquation]:
        mu, eq = divmod(row, len(self.equations))
        return self.row_monomials[mu], self.equations[eq]

    def col_label(self, col: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
        nu, t = divmod(col, len(self.pluckers))
        return self.col_monomials[nu], self.pluckers[t]

    def plucker_rank(self, T: tuple[int, ...]) -> int:
        if T not in self._plucker_index:
            raise ValueError(f"{T} is not an r-subset of the column set")
        return self._plucker_index[T]

    def __post_init__(self):
        object.__setattr__(
            self, "_row_mono_index", {mu: i for i, mu in enumerate(self.row_monomials)}
        )
        object.__setattr__(
            self, "_col_mono_index", {nu: i for i, nu in enumerate(self.col_monomials)}
        )
        object.__setattr__(
            self, "_plucker_index", {T: i for i, T in enumerate(self.pluckers)}
        )


def macaulay(inst: MinRankInstance, b: int, cap: int = MATRIX_CELL_CAP) -> MacaulayMatrix:
    """Assemble the degree-b Macaulay matrix of the bilinear system."""
    if b < 1:
        raise ValueError(f"b must be at least 1, got {b}")
    eqs = build_equations(inst)
    K, n, r = inst.K, inst.n, inst.r
    row_monos = tuple(monomials_colex(K, b - 1))
    col_monos = tuple(monomials_colex(K, b))
    pluckers = tuple(subsets_colex(n, r))
    n_plk = len(pluckers)
    rows = len(row_monos) * len(eqs)
    cols = len(col_monos) * n_plk
    check_cell_cap(rows, cols, cap)
    col_mono_index = {nu: i for i, nu in enumerate(col_monos)}
    plucker_index = {T: i for i, T in enumerate(pluckers)}
    row_entries = []
    for mu in row_monos:
        for eq in eqs:
            entries = [
                (col_mono_index[monomial_mul(mu, ell)] * n_plk + plucker_index[T], c)
                for ell, T, c in eq.terms
            ]
            entries.sort()
            row_entries.append(tuple(entries))
    data = SparseMatrix(rows, cols, tuple(row_entries))
    return MacaulayMatrix(b, K, row_monos, col_monos, pluckers, eqs, data)


@dataclass(frozen=True)
class RankCheckReport:
    b: int
    rows: int
    cols: int
    observed_rank: int
    predicted: int
    precondition_met: bool
    match: bool


def rank_check(inst: MinRankInstance, b: int, cap: int = MATRIX_CELL_CAP) -> RankCheckReport:
    """Observed Macaulay rank vs the proven generic count at b in {1, 2}.

    The report never asserts: when the b=2 precondition fails or the
    instance is non-generic, `match` simply records the comparison.
    """
    if b not in (1, 2):
        raise ValueError(f"rank predictions exist only for b in {{1, 2}}, got {b}")
    p = estimator.ParameterSet(inst.m, inst.n, inst.K, inst.r, inst.field.q)
    if b == 1:
        predicted, precondition = estimator.eqs_b1(p), True
    else:
        predicted, precondition = estimator.eqs_b2(p)
    mac = macaulay(inst, b, cap=cap)
    observed = matrix_rank(inst.field, mac.data)
    return RankCheckReport(
        b=b,
        rows=mac.n_rows,
        cols=mac.n_cols,
        observed_rank=observed,
        predicted=predicted,
        precondition_met=precondition,
        match=observed == predicted,
    )
