"""Solving MinRank by linearization of the bilinear minor system.

The right kernel of the degree-b Macaulay matrix contains, for every
solution x with supporting row space C, the evaluation vector whose
(monomial nu, Plucker T) entry is nu(x) * minor_T(C).  Reshaped to a
(monomials x Plucker) matrix such a vector has rank one; extraction
inverts that structure:

* b = 1: the monomial factor is x itself;
* b = 2: the monomial factor fills a symmetric K x K matrix proportional
  to x x^T, and any nonzero row of it is proportional to x.

Kernels of dimension d > 1 are swept exactly: d = 2 via the roots of a
2x2-minor quadratic (all rank-one points of a pencil), small q^d by
enumeration of projective combinations, with a documented fall back to the
brute-force oracle when the solution space itself is small enough to scan.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from .combinatorics import monomial_rank, subsets_colex
from .field import PrimeField
from .instance import (
    BRUTE_FORCE_CAP,
    MinRankInstance,
    SolutionCandidate,
    brute_force_solve,
    evaluate_pencil,
    iter_projective,
    normalize_projective,
    projective_point_count,
    verify_solution,
)
from .linalg import det, rank as matrix_rank, right_kernel_basis, rref
from .modeling import MATRIX_CELL_CAP, MacaulayMatrix, macaulay

EXTRACTION_CAP = 8       # max kernel dimension the solver will sweep
COMBO_CAP = 20_000       # max projective kernel combinations to enumerate


def plucker_vector(field: PrimeField, C: np.ndarray) -> np.ndarray:
    """All maximal minors of an r x n matrix, colex order on column subsets."""
    r, n = C.shape
    return np.array(
        [det(field, C[:, T]) for T in subsets_colex(n, r)], dtype=np.int64
    )


def extend_to_rank(field: PrimeField, M: np.ndarray, r: int) -> np.ndarray:
    """An r x n full-rank matrix whose row space contains that of M.

    Rows are the nonzero rref rows of M, padded with standard basis vectors
    in column order; deterministic.
    """
    rk, R, pivots = rref(field, M)
    if rk > r:
        raise ValueError(f"row space has dimension {rk} > {r}")
    n = M.shape[1]
    rows = [R[i] for i in range(rk)]
    pivot_set = set(pivots)
    for j in range(n):
        if len(rows) == r:
            break
        if j not in pivot_set:
            e = np.zeros(n, dtype=np.int64)
            e[j] = 1
            rows.append(e)
    if len(rows) < r:
        raise ValueError("cannot extend: r exceeds n")
    return np.stack(rows)


def eval_monomial(field: PrimeField, mono: tuple[int, ...], x) -> int:
    v = 1
    for var in mono:
        v = v * (x[var] % field.q) % field.q
    return v


def evaluation_vector(
    field: PrimeField, mac: MacaulayMatrix, x, C: np.ndarray
) -> np.ndarray:
    """Kernel-member candidate: entry at (nu, T) is nu(x) * minor_T(C)."""
    plk = plucker_vector(field, C)
    out = np.zeros(mac.n_cols, dtype=np.int64)
    n_plk = len(mac.pluckers)
    for i, nu in enumerate(mac.col_monomials):
        ev = eval_monomial(field, nu, x)
        if ev:
            out[i * n_plk : (i + 1) * n_plk] = ev * plk % field.q
    return out


@dataclass(frozen=True)
class SolveDiagnostics:
    rows: int
    cols: int
    rank: int
    kernel_dim: int
    method: str
    complete: bool
    fixed_plucker: tuple[int, ...] | None = None
    notes: tuple[str, ...] = dc_field(default_factory=tuple)


def _sqrt_mod(a: int, q: int) -> int | None:
    """A square root of a mod prime q, or None (Tonelli-Shanks)."""
    a %= q
    if a == 0:
        return 0
    if q == 2:
        return a
    if pow(a, (q - 1) // 2, q) != 1:
        return None
    if q % 4 == 3:
        return pow(a, (q + 1) // 4, q)
    # Factor q - 1 = s * 2^e and walk the 2-Sylow subgroup.
    s, e = q - 1, 0
    while s % 2 == 0:
        s //= 2
        e += 1
    z = 2
    while pow(z, (q - 1) // 2, q) != q - 1:
        z += 1
    root = pow(a, (s + 1) // 2, q)
    t = pow(a, s, q)
    c = pow(z, s, q)
    while t != 1:
        i, tt = 0, t
        while tt != 1:
            tt = tt * tt % q
            i += 1
        b = pow(c, 1 << (e - i - 1), q)
        root = root * b % q
        c = b * b % q
        t = t * c % q
        e = i
    return root


def _quadratic_roots(field: PrimeField, c2: int, c1: int, c0: int) -> list[int]:
    """Roots of c2 t^2 + c1 t + c0 over GF(q); the zero polynomial returns []."""
    q = field.q
    c2, c1, c0 = c2 % q, c1 % q, c0 % q
    if c2 == 0:
        if c1 == 0:
            return []
        return [(-c0) * field.inv(c1) % q]
    if q <= 4096:
        return [t for t in range(q) if (c2 * t * t + c1 * t + c0) % q == 0]
    disc = (c1 * c1 - 4 * c2 * c0) % q
    s = _sqrt_mod(disc, q)
    if s is None:
        return []
    half = field.inv(2 * c2 % q)
    roots = {(-c1 + s) * half % q, (-c1 - s) * half % q}
    return sorted(roots)


def _first_minor_quadratic(field: PrimeField, A: np.ndarray, B: np.ndarray):
    """Coefficients of the first 2x2 minor of t*A + B that is not identically
    zero as a polynomial in t; None if the whole pencil has rank <= 1."""
    q = field.q
    rows, cols = A.shape
    for i1 in range(rows):
        for i2 in range(i1 + 1, rows):
            for j1 in range(cols):
                for j2 in range(j1 + 1, cols):
                    a1, b1 = int(A[i1, j1]), int(B[i1, j1])
                    a2, b2 = int(A[i1, j2]), int(B[i1, j2])
                    a3, b3 = int(A[i2, j1]), int(B[i2, j1])
                    a4, b4 = int(A[i2, j2]), int(B[i2, j2])
                    c2 = (a1 * a4 - a2 * a3) % q
                    c1 = (a1 * b4 + b1 * a4 - a2 * b3 - b2 * a3) % q
                    c0 = (b1 * b4 - b2 * b3) % q
                    if c2 or c1 or c0:
                        return c2, c1, c0
    return None


def _rank_one_pencil_points(
    field: PrimeField, A: np.ndarray, B: np.ndarray
) -> list[np.ndarray] | None:
    """All rank-one members of {t A + B} union {A}, or None when every member
    has rank <= 1 (caller must enumerate instead)."""
    quad = _first_minor_quadratic(field, A, B)
    if quad is None:
        return None
    out = []
    if matrix_rank(field, A) == 1:
        out.append(A)
    for t in _quadratic_roots(field, *quad):
        M = (t * A + B) % field.q
        if M.any() and matrix_rank(field, M) == 1:
            out.append(M)
    return out


def _mono_factor(field: PrimeField, W: np.ndarray, fixed_col: int | None):
    """The monomial-side factor of a rank-one reshaped kernel vector.

    With a fixed Plucker column the factor is read straight off that column
    (normalization c_T = 1); otherwise the matrix must have rank one and the
    first nonzero column is taken.
    """
    if fixed_col is not None:
        col = W[:, fixed_col]
        return col if col.any() else None
    if matrix_rank(field, W) != 1:
        return None
    nz_cols = np.flatnonzero(W.any(axis=0))
    return W[:, int(nz_cols[0])]


def _x_from_mono_factor(
    field: PrimeField, mono_vec: np.ndarray, b: int, K: int
) -> tuple[int, ...] | None:
    if b == 1:
        return normalize_projective(field, mono_vec.tolist())
    S = np.zeros((K, K), dtype=np.int64)
    for a in range(K):
        for c in range(a, K):
            v = int(mono_vec[monomial_rank((a, c))])
            S[a, c] = S[c, a] = v
    if not S.any() or matrix_rank(field, S) != 1:
        return None
    row = S[int(np.flatnonzero(S.any(axis=1))[0])]
    return normalize_projective(field, row.tolist())


def solve_linearization(
    inst: MinRankInstance,
    b: int,
    *,
    extraction_cap: int = EXTRACTION_CAP,
    combo_cap: int = COMBO_CAP,
    brute_cap: int = BRUTE_FORCE_CAP,
    matrix_cap: int = MATRIX_CELL_CAP,
    fix_pluecker: tuple[int, ...] | None = None,
) -> tuple[list[SolutionCandidate], SolveDiagnostics]:
    """Kernel extraction at degree b in {1, 2}.

    Returns lexicographically sorted verified solutions plus diagnostics.
    `fix_pluecker` pins the Plucker coordinate that is normalized to one
    during extraction (solutions on which it vanishes are then invisible,
    matching the normalization's invertibility assumption).
    """
    if b not in (1, 2):
        raise ValueError(f"the solver linearizes at b in {{1, 2}}, got {b}")
    f = inst.field
    mac = macaulay(inst, b, cap=matrix_cap)
    kernel = right_kernel_basis(f, mac.data.to_dense())
    d = len(kernel)
    rk = mac.n_cols - d
    n_plk = len(mac.pluckers)
    fixed_col = None
    if fix_pluecker is not None:
        fixed_col = mac.plucker_rank(tuple(fix_pluecker))

    def diag(method, complete, notes=()):
        return SolveDiagnostics(
            rows=mac.n_rows, cols=mac.n_cols, rank=rk, kernel_dim=d,
            method=method, complete=complete,
            fixed_plucker=fix_pluecker, notes=tuple(notes),
        )

    if d == 0:
        return [], diag("none", True)
    if d > extraction_cap:
        return [], diag("none", False, [f"kernel dimension {d} exceeds cap {extraction_cap}"])

    reshaped = [v.reshape(len(mac.col_monomials), n_plk) for v in kernel]
    candidates: set[tuple[int, ...]] = set()
    notes: list[str] = []

    def try_vector(W) -> None:
        mono_vec = _mono_factor(f, W, fixed_col)
        if mono_vec is None or not mono_vec.any():
            return
        x = _x_from_mono_factor(f, mono_vec, b, inst.K)
        if x is not None:
            candidates.add(x)

    method = "direct"
    complete = d == 1
    for W in reshaped:
        try_vector(W)
    if d == 2:
        points = _rank_one_pencil_points(f, reshaped[0], reshaped[1])
        if points is not None:
            for W in points:
                try_vector(W)
            method, complete = "pencil", True
    if not complete:
        n_combos = projective_point_count(f.q, d)
        if n_combos <= combo_cap:
            for coeffs in iter_projective(f, d):
                W = np.zeros_like(reshaped[0])
                for c, Wi in zip(coeffs, reshaped):
                    if c:
                        W = (W + c * Wi) % f.q
                try_vector(W)
            method, complete = "combo-enumeration", True
        elif projective_point_count(f.q, inst.K) <= brute_cap:
            sols = brute_force_solve(inst, cap=brute_cap)
            notes.append("kernel sweep infeasible; solutions from exhaustive scan")
            return sols, diag("brute-fallback", True, notes)
        else:
            notes.append(f"{n_combos} kernel combinations exceed cap {combo_cap}")

    solutions = []
    for x in sorted(candidates):
        if verify_solution(inst, x):
            solutions.append(
                SolutionCandidate(x, matrix_rank(f, evaluate_pencil(inst, x)))
            )
    return solutions, diag(method, complete, notes)
