"""Coupled and complexified eigenproblems for octonionic operator matrices.

A real eigenvalue is too restrictive for the translated 8n x 8n real
matrix, which generally has complex eigenvalues z = a + ib.  Splitting
the matrix eigenvector Psi = xi + i*eta into real vectors turns
M Psi = z Psi into the coupled pair of real equations

    M xi  = a xi  - b eta
    M eta = a eta + b xi

whose pieces all translate back to octonions: two real parameters
(a, b) and two octonion vectors (xi, eta) replace one complex
eigenvalue.  Equivalently, adjoining a commuting imaginary unit i to
the octonions lets the same problem be written as O Phi = Phi (a + ib)
with Phi = phi1 + i*phi2 a complexified octonion vector; both routes
are implemented and agree.

Also here: exact verification of right-eigenvalue claims
M Psi = Psi lambda (the eigenvalue on the right, where it must sit for
hermitian matrices to stand a chance of real eigenvalues), a brute
force enumerator of basis-vector solutions for 2x2 matrices, and the
quaternionic limit in which the coupled pair collapses onto the
quaternionic right eigenvalue problem with lambda = a + e1 b.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import (
    DEFAULT_SEED,
    SOLVER_TOL,
    cluster_gap,
    cluster_values,
    complex_eigen,
    schur_eigensystem,
)
from .octonion import ComplexOctonion, Octonion, format_octonion
from .operators import OperatorMatrix

__all__ = [
    "CoupledSolution",
    "CoupledCluster",
    "ComplexifiedSolution",
    "RightEigenClaim",
    "RightEigenCheck",
    "solve_coupled",
    "coupled_clusters",
    "verify_coupled",
    "solve_complexified",
    "verify_complexified",
    "coupled_from_complexified",
    "verify_right_eigen",
    "enumerate_basis_right_eigs",
    "quaternionic_limit_check",
    "eig_report",
]


@dataclass
class CoupledSolution:
    """One solution (a, b, xi, eta) of the coupled pair, canonically
    oriented with b >= 0; real eigenvalues carry b = 0 and eta = 0."""

    a: float
    b: float
    xi: tuple
    eta: tuple
    residual: float


@dataclass
class CoupledCluster:
    """Solutions whose (a, b) agree within the clustering gap;
    multiplicity is the cluster's share of the algebraic spectrum."""

    a: float
    b: float
    multiplicity: int
    solutions: list


@dataclass
class ComplexifiedSolution:
    """O Phi = Phi z with Phi a complexified octonion vector."""

    z: complex
    phi: tuple
    residual: float


@dataclass(frozen=True)
class RightEigenClaim:
    """A claimed solution of M Psi = Psi lambda (eigenvalue on the right)."""

    psi: tuple
    lam: Octonion


@dataclass
class RightEigenCheck:
    ok: bool
    residual: float
    zero_vector: bool


def _chunk_real(vec: np.ndarray) -> tuple:
    """8n real coefficients -> n octonions (consecutive blocks of 8)."""
    n = len(vec) // 8
    return tuple(Octonion(vec[8 * j : 8 * j + 8]) for j in range(n))


def _chunk_complex(vec: np.ndarray) -> tuple:
    n = len(vec) // 8
    return tuple(
        ComplexOctonion(
            Octonion(vec[8 * j : 8 * j + 8].real),
            Octonion(vec[8 * j : 8 * j + 8].imag),
        )
        for j in range(n)
    )


def verify_coupled(M: OperatorMatrix, a: float, b: float, xi, eta) -> float:
    """Max entrywise octonion-norm residual of the coupled pair.

    Exact (returns 0.0 bit-for-bit) when matrix and vectors are
    integer-valued, since all products and sums then stay exact in
    double precision.
    """
    xi = list(xi)
    eta = list(eta)
    if len(xi) != M.n or len(eta) != M.n:
        raise ValueError(f"vector length != matrix size {M.n}")
    m_xi = M.apply(xi)
    m_eta = M.apply(eta)
    res = 0.0
    for i in range(M.n):
        r1 = m_xi[i] - (a * xi[i] - b * eta[i])
        r2 = m_eta[i] - (a * eta[i] + b * xi[i])
        res = max(res, r1.norm(), r2.norm())
    return res


def solve_coupled(M: OperatorMatrix, seed: int = DEFAULT_SEED,
                  tol: float = SOLVER_TOL) -> list[CoupledSolution]:
    """All coupled solutions of a real-coefficient operator matrix.

    The matrix is translated to its 8n x 8n real form, every eigenpair
    is computed, and each conjugate-pair representative (b >= 0) is
    split into octonion vectors.  One solution is emitted per computed
    eigenvector, so cluster sizes reproduce algebraic multiplicities
    (b = 0 solutions count once, b > 0 once per conjugate pair).
    """
    if M.complexified:
        raise ValueError("solve_coupled needs a real-coefficient operator matrix")
    A = M.to_real_matrix()
    _, records = schur_eigensystem(A, seed=seed, tol=tol)
    sols = []
    for (z, v, _) in records:
        a, b = z.real, z.imag
        if b == 0.0:
            xi = _chunk_real(np.real(v))
            eta = tuple(Octonion.zero() for _ in range(M.n))
        else:
            xi = _chunk_real(np.real(v))
            eta = _chunk_real(np.imag(v))
        res = verify_coupled(M, a, b, xi, eta)
        sols.append(CoupledSolution(a, b, xi, eta, res))
    sols.sort(key=lambda s: (s.a, s.b))
    return sols


def coupled_clusters(M: OperatorMatrix, seed: int = DEFAULT_SEED,
                     tol: float = SOLVER_TOL) -> list[CoupledCluster]:
    """Coupled solutions grouped by (a, b) within the clustering gap."""
    sols = solve_coupled(M, seed=seed, tol=tol)
    A_fro_gap = cluster_gap(M.to_real_matrix())
    clusters = []
    zs = [complex(s.a, s.b) for s in sols]
    for rep, idxs in cluster_values(zs, A_fro_gap):
        members = [sols[i] for i in idxs]
        clusters.append(
            CoupledCluster(rep.real, rep.imag, len(members), members)
        )
    return clusters


def verify_complexified(M: OperatorMatrix, z: complex, phi) -> float:
    """Max entrywise norm of O Phi - Phi z."""
    phi = list(phi)
    if len(phi) != M.n:
        raise ValueError(f"vector length != matrix size {M.n}")
    lhs = M.apply_complex(phi)
    res = 0.0
    zc = ComplexOctonion(
        Octonion.from_scalar(z.real), Octonion.from_scalar(z.imag)
    )
    for i in range(M.n):
        r = lhs[i] - phi[i] * zc
        res = max(res, r.norm())
    return res


def solve_complexified(M: OperatorMatrix, seed: int = DEFAULT_SEED,
                       tol: float = SOLVER_TOL) -> list[ComplexifiedSolution]:
    """Solve O Phi = Phi z through the complex matrix translation.

    For a complexified matrix every eigenvalue of the 8n x 8n complex
    translation yields one solution.  For an i-free matrix the complex
    spectrum is conjugation-symmetric and carries each solution twice
    (as (z, Phi) and (conj z, conj Phi)); only the canonical b >= 0
    representative of each pair is returned, which makes the output
    directly comparable with solve_coupled.
    """
    A = M.to_complex_matrix()
    pairs = complex_eigen(A, seed=seed, tol=tol)
    gap = cluster_gap(A)
    sols = []
    for p in pairs:
        if not M.complexified and p.value.imag < -gap:
            continue
        phi = _chunk_complex(np.asarray(p.vector, dtype=np.complex128))
        res = verify_complexified(M, p.value, phi)
        sols.append(ComplexifiedSolution(p.value, phi, res))
    sols.sort(key=lambda s: (s.z.real, s.z.imag))
    return sols


def coupled_from_complexified(sol: ComplexifiedSolution) -> CoupledSolution:
    """Reinterpret O Phi = Phi(a+ib) as the coupled pair with xi, eta the
    two components of Phi = xi + i eta."""
    xi = tuple(p.re for p in sol.phi)
    eta = tuple(p.im for p in sol.phi)
    return CoupledSolution(sol.z.real, sol.z.imag, xi, eta, sol.residual)


def verify_right_eigen(M: OperatorMatrix, claim: RightEigenClaim) -> RightEigenCheck:
    """Check M Psi = Psi lambda with the products parenthesized as
    written: entry actions M_ij(psi_j) summed per row against psi_i *
    lambda.  Exact for integer-valued data; a zero Psi verifies
    vacuously and is flagged."""
    psi = list(claim.psi)
    if len(psi) != M.n:
        raise ValueError(f"vector length != matrix size {M.n}")
    lhs = M.apply(psi)
    res = 0.0
    for i in range(M.n):
        res = max(res, (lhs[i] - psi[i] * claim.lam).norm())
    zero = all(p.is_zero() for p in psi)
    return RightEigenCheck(ok=(res == 0.0), residual=res, zero_vector=zero)


def _canonical_sign(psi, lam):
    """Flip Psi so its first nonzero component has positive leading
    coefficient; lambda is unchanged under Psi -> -Psi."""
    for p in psi:
        sup = p.support()
        if sup:
            if p.coeffs[sup[0]] < 0:
                return tuple(-q for q in psi), lam
            return tuple(psi), lam
    return tuple(psi), lam


def enumerate_basis_right_eigs(M: OperatorMatrix, psi_a: Octonion | None = None):
    """Brute-force right-eigenvalue solutions of a 2x2 integer matrix
    over signed basis vectors Psi = (+-e_j, +-e_k).

    lambda is derived from the first row, psi_a^-1 (row value), and the
    claim is kept only if both rows verify exactly.  Claims are
    deduplicated up to an overall sign flip of Psi.  By default all
    psi_a in {+-e_j} are scanned; passing psi_a pins the first
    component.
    """
    if M.n != 2:
        raise ValueError("the basis enumerator handles 2x2 matrices")
    if M.complexified or not M.is_integer_valued():
        raise ValueError("the basis enumerator needs integer octonion entries")
    if psi_a is None:
        firsts = [s * Octonion.basis(j) for j in range(8) for s in (1.0, -1.0)]
    else:
        firsts = [psi_a]
    claims = []
    seen = set()
    for pa in firsts:
        pa_inv = pa.inverse()
        for k in range(8):
            for s in (1.0, -1.0):
                pb = s * Octonion.basis(k)
                psi = (pa, pb)
                row1 = M.apply(list(psi))[0]
                lam = pa_inv * row1
                check = verify_right_eigen(M, RightEigenClaim(psi, lam))
                if not check.ok:
                    continue
                cpsi, clam = _canonical_sign(psi, lam)
                key = (
                    tuple(cpsi[0].coeffs),
                    tuple(cpsi[1].coeffs),
                    tuple(clam.coeffs),
                )
                if key in seen:
                    continue
                seen.add(key)
                claims.append(RightEigenClaim(tuple(psi), lam))
    return claims


def _is_quaternionic(o: Octonion, tol: float = 0.0) -> bool:
    return bool(np.all(np.abs(o.coeffs[4:]) <= tol))


def _project_quaternionic(vec: np.ndarray, n: int) -> np.ndarray:
    """Zero the e4..e7 coefficients of every octonion chunk."""
    out = np.array(vec, copy=True)
    for j in range(n):
        out[8 * j + 4 : 8 * j + 8] = 0.0
    return out


def quaternionic_limit_check(M: OperatorMatrix, seed: int = DEFAULT_SEED,
                             tol: float = SOLVER_TOL) -> dict:
    """Check that the coupled problem collapses onto the quaternionic
    right eigenvalue problem when the matrix is quaternionic.

    Requires every entry to be a left multiplication by a quaternion
    (support on 1, e1, e2, e3).  Left multiplication by quaternions
    preserves both the quaternionic subspace and its complement, so
    projecting any eigenvector onto the quaternionic coefficients gives
    a quaternion-valued coupled solution again; each cluster must own
    such a witness, and the witness's eta must be a right eigenvector
    M eta = eta (a + mu b) for a unit imaginary quaternion mu = eta^-1
    xi, the conjugacy representative of a + e1 b.
    """
    report = {"quaternionic": True, "clusters": [], "eigenvalues": []}
    if M.complexified:
        report["quaternionic"] = False
        report["reason"] = "not quaternionic: complexified entries"
        report["ok"] = False
        return report
    for row in M.entries:
        for g in row:
            if not g.is_left_only() or not _is_quaternionic(g.parts[0]):
                report["quaternionic"] = False
                report["reason"] = "not quaternionic: entry outside span(1, e1, e2, e3)"
                report["ok"] = False
                return report
    A = M.to_real_matrix()
    _, records = schur_eigensystem(A, seed=seed, tol=tol)
    gap = cluster_gap(A)
    zs = [z for (z, _, _) in records]
    max_res = 0.0
    all_ok = True
    for rep, idxs in cluster_values(zs, gap):
        a, b = rep.real, rep.imag
        entry = {"a": a, "b": b, "multiplicity": len(idxs)}
        # quaternionic witness: the eigenvector with the largest
        # quaternionic projection, projected
        best_v = None
        best_norm = 0.0
        for i in idxs:
            proj = _project_quaternionic(records[i][1], M.n)
            nrm = float(np.sqrt(np.vdot(proj, proj).real))
            if nrm > best_norm:
                best_norm = nrm
                best_v = proj
        if best_v is None or best_norm <= 1e-8:
            entry["witness_quaternionic"] = False
            all_ok = False
            report["clusters"].append(entry)
            continue
        best_v = best_v / best_norm
        xi = _chunk_real(np.real(best_v))
        eta = _chunk_real(np.imag(best_v))
        entry["witness_quaternionic"] = True
        entry["coupled_residual"] = verify_coupled(M, a, b, xi, eta)
        if b == 0.0:
            # real eigenvalue: xi is directly a right eigenvector with
            # the real lambda = a
            m_xi = M.apply(list(xi))
            res = max((m_xi[i] - a * xi[i]).norm() for i in range(M.n))
            entry["qrep_residual"] = res
            entry["mu_unit_imaginary"] = True
        else:
            j = int(np.argmax([o.norm() for o in eta]))
            if eta[j].is_zero():
                entry["mu_unit_imaginary"] = False
                entry["qrep_residual"] = float("inf")
            else:
                mu = eta[j].inverse() * xi[j]
                entry["mu_unit_imaginary"] = (
                    abs(mu.real) <= 1e-8 and abs(mu.norm() - 1.0) <= 1e-8
                )
                lam = Octonion.from_scalar(a) + b * mu
                m_eta = M.apply(list(eta))
                res = max((m_eta[i] - eta[i] * lam).norm() for i in range(M.n))
                entry["qrep_residual"] = res
        max_res = max(max_res, entry["coupled_residual"], entry["qrep_residual"])
        if entry["qrep_residual"] > tol or not entry["mu_unit_imaginary"]:
            all_ok = False
        report["clusters"].append(entry)
    report["eigenvalues"] = [(c["a"], c["b"]) for c in report["clusters"]]
    report["max_residual"] = max_res
    report["ok"] = report["quaternionic"] and all_ok
    return report


def eig_report(M: OperatorMatrix, seed: int = DEFAULT_SEED,
               tol: float = SOLVER_TOL, method: str = "auto") -> dict:
    """JSON-ready eigenreport: matrix echo, clusters of (a, b) with one
    solution per eigenvector, and the seed that reproduces them.

    The coupled route needs an i-free matrix; the complexified route
    works for both and reports xi = phi1, eta = phi2 of Phi = phi1 +
    i*phi2, which is the same data for i-free inputs.
    """
    if method == "auto":
        method = "complexified" if M.complexified else "coupled"
    if method == "coupled":
        clusters = coupled_clusters(M, seed=seed, tol=tol)
    elif method == "complexified":
        sols = [
            coupled_from_complexified(s)
            for s in solve_complexified(M, seed=seed, tol=tol)
        ]
        gap = cluster_gap(M.to_complex_matrix())
        zs = [complex(s.a, s.b) for s in sols]
        clusters = [
            CoupledCluster(rep.real, rep.imag, len(idxs), [sols[i] for i in idxs])
            for rep, idxs in cluster_values(zs, gap)
        ]
    else:
        raise ValueError(f"unknown method {method!r}")
    return {
        "matrix": M.to_json(),
        "clusters": [
            {
                "a": c.a,
                "b": c.b,
                "multiplicity": c.multiplicity,
                "solutions": [
                    {
                        "xi": [format_octonion(o) for o in s.xi],
                        "eta": [format_octonion(o) for o in s.eta],
                        "residual": s.residual,
                    }
                    for s in c.solutions
                ],
            }
            for c in clusters
        ],
        "seed": seed,
    }
