"""Self-contained dense eigensolver and linear solves.

Drivers around the kernels in :mod:`octoeig.kernels`: LU solves with
partial pivoting, real Schur form via Hessenberg reduction plus
implicit double-shift QR, eigenvalue extraction from the quasi-
triangular factor, eigenvectors by inverse iteration, and complex
eigenproblems by realification to a doubled real problem.

Everything is deterministic given a seed: inverse iteration starts from
a seeded generator and all orderings are fixed.  numpy is used for
array plumbing only; the factorizations themselves are the kernels'.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .kernels import (
    balance_in_place,
    francis_qr,
    hessenberg_in_place,
    lu_factor,
    lu_solve_factored,
    split_real_2x2_blocks,
)

__all__ = [
    "DEFAULT_SEED",
    "SOLVER_TOL",
    "EigenPair",
    "LinalgError",
    "SingularMatrixError",
    "ConvergenceError",
    "lu_solve",
    "real_schur",
    "eigenvalues",
    "eigenvector",
    "schur_eigensystem",
    "complex_eigen",
    "matrix_rank",
    "cluster_gap",
    "cluster_values",
]

DEFAULT_SEED = 1729
SOLVER_TOL = 1e-8
_EPS = float(np.finfo(np.float64).eps)
_MAX_SWEEPS_PER_N = 40


class LinalgError(Exception):
    pass


class SingularMatrixError(LinalgError):
    def __init__(self, pivot_index: int):
        super().__init__(f"matrix is numerically singular at pivot {pivot_index}")
        self.pivot_index = pivot_index


class ConvergenceError(LinalgError):
    def __init__(self, message: str, lo: int = -1, hi: int = -1):
        super().__init__(message)
        self.lo = lo
        self.hi = hi


@dataclass(eq=False)
class EigenPair:
    """One eigenvalue with a unit-norm eigenvector and its relative
    residual ||A v - z v|| / max(1, ||A||_F)."""

    value: complex
    vector: np.ndarray
    residual: float


def _check_square(A) -> np.ndarray:
    A = np.asarray(A)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {A.shape}")
    if not np.all(np.isfinite(A)):
        raise ValueError("matrix entries must be finite")
    return A


def lu_solve(A, B):
    """Solve A X = B by LU with partial pivoting.

    B may be a vector or a matrix of right-hand sides.  Raises
    SingularMatrixError (with the failing pivot index) when a pivot
    falls below n * eps * ||A||_F.
    """
    A = _check_square(A)
    B = np.asarray(B)
    vector_rhs = B.ndim == 1
    if vector_rhs:
        B = B.reshape(-1, 1)
    if B.shape[0] != A.shape[0]:
        raise ValueError(f"shape mismatch: A is {A.shape}, B is {B.shape}")
    dtype = np.promote_types(np.promote_types(A.dtype, B.dtype), np.float64)
    n = A.shape[0]
    fac = np.ascontiguousarray(A, dtype=dtype).copy()
    piv = np.zeros(n, dtype=np.int64)
    fro = _fro(A)
    code = lu_factor(fac, piv, 0.0)
    if code != 0:
        raise SingularMatrixError(code - 1)
    tol = n * _EPS * fro
    diag = np.abs(np.diagonal(fac))
    small = np.nonzero(diag <= tol)[0]
    if small.size:
        raise SingularMatrixError(int(small[0]))
    X = np.ascontiguousarray(B, dtype=dtype).copy()
    lu_solve_factored(fac, piv, X)
    return X[:, 0] if vector_rhs else X


def _fro(A) -> float:
    return float(np.sqrt((np.abs(np.asarray(A)) ** 2).sum()))


def real_schur(A, balance: bool = False):
    """Real Schur form: orthogonal Q and quasi-triangular T with
    A = Q T Q^T; diagonal 2x2 blocks remain only for complex pairs.

    Balancing is off by default because folding a diagonal scaling into
    Q would break orthogonality; the flag exists for experiments where
    only T is consumed.
    """
    A = _check_square(A)
    if np.iscomplexobj(A):
        raise ValueError("real_schur expects a real matrix")
    n = A.shape[0]
    T = np.ascontiguousarray(A, dtype=np.float64).copy()
    Q = np.eye(n)
    if n <= 1:
        return Q, T
    scale = None
    if balance:
        scale = np.ones(n)
        balance_in_place(T, scale)
    fro = _fro(T)
    hessenberg_in_place(T, Q)
    code, lo, hi = francis_qr(T, Q, _EPS, fro, _MAX_SWEEPS_PER_N)
    if code != 0:
        raise ConvergenceError(
            f"QR iteration did not converge on rows {lo}..{hi} "
            f"after {_MAX_SWEEPS_PER_N * n} sweeps",
            lo,
            hi,
        )
    split_real_2x2_blocks(T, Q)
    if scale is not None:
        # undo the similarity on Q's rows; Q is then no longer orthogonal
        Q = (Q.T * scale).T
    return Q, T


def _schur_T(A, balance: bool = True) -> np.ndarray:
    """Quasi-triangular factor only (values path; Q is discarded)."""
    A = _check_square(A)
    n = A.shape[0]
    T = np.ascontiguousarray(A, dtype=np.float64).copy()
    Q = np.eye(n)
    if n <= 1:
        return T
    if balance:
        scale = np.ones(n)
        balance_in_place(T, scale)
    fro = _fro(T)
    hessenberg_in_place(T, Q)
    code, lo, hi = francis_qr(T, Q, _EPS, fro, _MAX_SWEEPS_PER_N)
    if code != 0:
        raise ConvergenceError(
            f"QR iteration did not converge on rows {lo}..{hi} "
            f"after {_MAX_SWEEPS_PER_N * n} sweeps",
            lo,
            hi,
        )
    split_real_2x2_blocks(T, Q)
    return T


def _read_blocks(T):
    """Diagonal blocks of a quasi-triangular T as (start, size, values).

    Complex pairs are emitted as exact mirrors: a + ib and a - ib share
    the bitwise-identical a and b.
    """
    n = T.shape[0]
    blocks = []
    k = 0
    while k < n:
        if k < n - 1 and T[k + 1, k] != 0.0:
            p, qq = T[k, k], T[k, k + 1]
            r, s = T[k + 1, k], T[k + 1, k + 1]
            a = 0.5 * (p + s)
            disc = (p - s) * (p - s) + 4.0 * qq * r
            if disc < 0.0:
                b = 0.5 * np.sqrt(-disc)
                blocks.append((k, 2, (complex(a, b), complex(a, -b))))
            else:
                sq = np.sqrt(disc)
                l1 = 0.5 * ((p + s) + sq) if p + s >= 0.0 else 0.5 * ((p + s) - sq)
                l2 = (p * s - qq * r) / l1 if l1 != 0.0 else 0.5 * ((p + s) - sq)
                blocks.append((k, 2, (complex(l1, 0.0), complex(l2, 0.0))))
            k += 2
        else:
            blocks.append((k, 1, (complex(T[k, k], 0.0),)))
            k += 1
    return blocks


def _sorted_values(blocks) -> np.ndarray:
    vals = [z for (_, _, vs) in blocks for z in vs]
    vals.sort(key=lambda z: (z.real, -z.imag))
    return np.array(vals, dtype=np.complex128)


def eigenvalues(A, balance: bool = True) -> np.ndarray:
    """All eigenvalues of a real square matrix, sorted by real part then
    by descending imaginary part; conjugate pairs are exact mirrors."""
    T = _schur_T(A, balance=balance)
    return _sorted_values(_read_blocks(T))


def cluster_gap(A) -> float:
    """Absolute gap below which computed eigenvalues are treated as one
    cluster when reporting multiplicities."""
    return max(1e-8, 1e-12 * _fro(A))


def cluster_values(values, gap: float):
    """Union-find clustering of complex values with an absolute gap.

    Returns a list of (representative, indices) with the representative
    being the member closest to the cluster mean; clusters are sorted by
    (Re, Im) of the representative.
    """
    values = list(values)
    k = len(values)
    parent = list(range(k))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(k):
        for j in range(i + 1, k):
            if abs(values[i] - values[j]) <= gap:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[rj] = ri
    groups = {}
    for i in range(k):
        groups.setdefault(find(i), []).append(i)
    clusters = []
    for idxs in groups.values():
        mean = sum(values[i] for i in idxs) / len(idxs)
        rep = min(idxs, key=lambda i: abs(values[i] - mean))
        clusters.append((values[rep], sorted(idxs)))
    clusters.sort(key=lambda c: (c[0].real, c[0].imag))
    return clusters


def _orthogonalize(v, basis):
    for u in basis:
        v = v - np.vdot(u, v) * u
    for u in basis:  # second pass for numerical safety
        v = v - np.vdot(u, v) * u
    return v


def _fix_phase(v):
    """Deterministic normalization: unit norm, first significant entry
    positive real (sign flip for real vectors, phase rotation for
    complex ones)."""
    nrm = float(np.sqrt(np.vdot(v, v).real))
    if nrm == 0.0:
        return v
    v = v / nrm
    mags = np.abs(v)
    idx = int(np.argmax(mags > 1e-8 * mags.max()))
    c = v[idx]
    if np.iscomplexobj(v):
        return v * (c.conjugate() / abs(c))
    return v if c > 0 else -v


def _inverse_iteration(A, z, rng, ortho, tol, fro, maxit=10):
    """One eigenvector of A for shift z, orthogonal to `ortho`.

    Returns (vector, residual); the caller checks residual <= tol.
    """
    n = A.shape[0]
    use_complex = np.iscomplexobj(A) or z.imag != 0.0
    dtype = np.complex128 if use_complex else np.float64
    M = np.ascontiguousarray(A, dtype=dtype).copy()
    shift = z if use_complex else z.real
    M[np.diag_indices(n)] -= shift
    piv = np.zeros(n, dtype=np.int64)
    tiny = max(1.0, fro) * _EPS
    lu_factor(M, piv, tiny)
    if use_complex:
        v = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    else:
        v = rng.standard_normal(n)
    v = _orthogonalize(v.astype(dtype), ortho)
    nv = float(np.sqrt(np.vdot(v, v).real))
    if nv == 0.0:
        v = rng.standard_normal(n).astype(dtype)
        nv = float(np.sqrt(np.vdot(v, v).real))
    v = v / nv
    best_v, best_res = v, np.inf
    for _ in range(maxit):
        w = v.reshape(n, 1).copy()
        lu_solve_factored(M, piv, w)
        w = w[:, 0]
        if not np.all(np.isfinite(w)):
            v = (rng.standard_normal(n) + (1j * rng.standard_normal(n) if use_complex else 0.0)).astype(dtype)
            continue
        w = _orthogonalize(w, ortho)
        nw = float(np.sqrt(np.vdot(w, w).real))
        if nw == 0.0:
            v = (rng.standard_normal(n) + (1j * rng.standard_normal(n) if use_complex else 0.0)).astype(dtype)
            continue
        w = w / nw
        res = float(np.sqrt((np.abs(A @ w - z * w) ** 2).sum())) / max(1.0, fro)
        v = w
        if res < best_res:
            best_v, best_res = w, res
        if res <= tol:
            break
    return best_v, best_res


def eigenvector(A, z, seed: int = DEFAULT_SEED, tol: float = SOLVER_TOL):
    """Unit eigenvector of A for the (approximate) eigenvalue z, by
    inverse iteration from a deterministic seeded start.

    z must lie near the spectrum; raises ConvergenceError when the
    residual stays above tol after 10 iterations.
    """
    A = _check_square(A)
    z = complex(z)
    rng = np.random.default_rng(seed)
    fro = _fro(A)
    v, res = _inverse_iteration(A, z, rng, (), tol, fro)
    if res > tol:
        raise ConvergenceError(
            f"inverse iteration for z={z} stalled at residual {res:.3e}"
        )
    return _fix_phase(v)


def schur_eigensystem(A, seed: int = DEFAULT_SEED, tol: float = SOLVER_TOL,
                      balance: bool = True):
    """Eigenvalues plus one eigenvector per Schur block of a real matrix.

    Returns (values, records).  `values` is the full sorted eigenvalue
    multiset (length n).  `records` holds one (z, vector, residual) per
    diagonal block with Im z >= 0: complex conjugate pairs are
    represented once.  Within a cluster of close eigenvalues the vectors
    are mutually orthogonalized so multiplicities yield independent
    eigenvectors; records that fail the residual tolerance (possible
    only for defective clusters) are dropped.
    """
    A = _check_square(A)
    if np.iscomplexobj(A):
        raise ValueError("schur_eigensystem expects a real matrix")
    rng = np.random.default_rng(seed)
    fro = _fro(A)
    T = _schur_T(A, balance=balance)
    blocks = _read_blocks(T)
    values = _sorted_values(blocks)

    reps = []  # canonical (Im >= 0) eigenvalue per block position
    for (start, size, vs) in blocks:
        if size == 1:
            reps.append(vs[0])
        elif vs[0].imag != 0.0:
            reps.append(vs[0] if vs[0].imag > 0 else vs[1])
        else:
            reps.extend(vs)  # 2x2 block with real eigenvalues
    gap = cluster_gap(A)
    records = []
    for rep, idxs in cluster_values(reps, gap):
        found = []
        for i in idxs:
            z = reps[i]
            v, res = _inverse_iteration(A, z, rng, found, tol, fro)
            if res <= tol:
                found.append(v)
                records.append((z, _fix_phase(v), res))
    return values, records


def _mgs_basis(vectors, thresh: float = 1e-6):
    """Orthonormal basis of the numerically independent span, by
    modified Gram-Schmidt with norm pivoting."""
    work = [np.array(v, dtype=np.complex128) for v in vectors]
    basis = []
    while work:
        norms = [float(np.sqrt(np.vdot(w, w).real)) for w in work]
        j = int(np.argmax(norms))
        if norms[j] <= thresh:
            break
        u = work.pop(j) / norms[j]
        basis.append(u)
        work = [w - np.vdot(u, w) * u for w in work]
    return basis


def complex_eigen(A, seed: int = DEFAULT_SEED, tol: float = SOLVER_TOL):
    """All eigenpairs of a complex square matrix.

    A = X + iY is realified to the doubled real matrix [[X, -Y], [Y, X]]
    whose spectrum is {z} united with {conj(z)}; the eigenvalues of A are
    recovered from the structure of the embedded eigenvectors (a vector
    (p, q) of the doubled problem maps to p + iq), never by discarding
    negative imaginary parts.  Returns one EigenPair per eigenvalue
    counted with multiplicity, sorted by (Re, -Im).
    """
    A = _check_square(A)
    m = A.shape[0]
    Ac = np.ascontiguousarray(A, dtype=np.complex128)
    X = Ac.real.copy()
    Y = Ac.imag.copy()
    R = np.block([[X, -Y], [Y, X]])
    _, records = schur_eigensystem(R, seed=seed, tol=tol)
    froA = _fro(Ac)
    gap = cluster_gap(R)

    def _residual(u, z):
        return float(np.sqrt((np.abs(Ac @ u - z * u) ** 2).sum())) / max(1.0, froA)

    pairs = []
    clusters = cluster_values([z for (z, _, _) in records], gap)
    for rep, idxs in clusters:
        group = [records[i] for i in idxs]
        k = len(group)
        if rep.imag > gap:
            u_plus = [0.5 * (w[:m] + 1j * w[m:]) for (_, w, _) in group]
            u_minus = [0.5 * (w[:m] - 1j * w[m:]) for (_, w, _) in group]
            plus_basis = _mgs_basis(u_plus)[:k]
            for u in plus_basis:
                u = _fix_phase(u)
                pairs.append(EigenPair(rep, u, _residual(u, rep)))
            minus_basis = _mgs_basis(u_minus)[: k - len(plus_basis)]
            for u in minus_basis:
                u = _fix_phase(np.conj(u))
                pairs.append(EigenPair(rep.conjugate(), u, _residual(u, rep.conjugate())))
        else:
            # real eigenvalue of the doubled problem: multiplicity is even
            # and the embedded vectors span the eigenspace of A twice over
            emb = [w[:m].astype(np.complex128) + 1j * w[m:] for (_, w, _) in group]
            basis = _mgs_basis(emb)[: max(1, k // 2)]
            for u in basis:
                u = _fix_phase(u)
                pairs.append(EigenPair(rep, u, _residual(u, rep)))
    pairs.sort(key=lambda p: (p.value.real, -p.value.imag))
    return pairs


def matrix_rank(M, tol: float | None = None) -> int:
    """Numerical rank by Gaussian elimination with full pivoting."""
    B = np.array(M, dtype=np.float64, copy=True)
    if B.ndim != 2:
        raise ValueError("matrix_rank expects a 2-d array")
    rows, cols = B.shape
    if tol is None:
        scale = float(np.abs(B).max()) if B.size else 0.0
        tol = max(rows, cols) * _EPS * max(1.0, scale) * 8.0
    rank = 0
    r0 = 0
    c0 = 0
    while r0 < rows and c0 < cols:
        sub = np.abs(B[r0:, c0:])
        i, j = np.unravel_index(int(np.argmax(sub)), sub.shape)
        if sub[i, j] <= tol:
            break
        i += r0
        j += c0
        B[[r0, i], :] = B[[i, r0], :]
        B[:, [c0, j]] = B[:, [j, c0]]
        piv = B[r0, c0]
        for r in range(r0 + 1, rows):
            f = B[r, c0] / piv
            if f != 0.0:
                B[r, c0:] -= f * B[r0, c0:]
        rank += 1
        r0 += 1
        c0 += 1
    return rank
