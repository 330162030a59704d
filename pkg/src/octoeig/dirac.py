"""Octonionic Dirac representation checked at the matrix level.

With a commuting imaginary unit i on top of the octonions, the three
operators alpha_k = i L_{e_k} (k = 1, 2, 3) and beta = i L_{e_4}
translate to 8x8 complex matrices satisfying the Dirac algebra

    {alpha_m, alpha_n} = 2 delta_mn I,   {alpha_k, beta} = 0,
    beta^2 = I,

so the Hamiltonian H(p) = sum_k p_k alpha_k + m beta obeys the
dispersion identity H^2 = (|p|^2 + m^2) I (units hbar = c = 1; the
momentum operator is replaced by its plane-wave symbol p).

The mechanism is linearized alternativity: {L_a, L_b} = -2 <a, b> I for
imaginary octonions, which the report checks over all basis pairs.
An 8-component complexified octonion also splits as Psi + e4 Phi with
both halves in the complexified quaternion subalgebra span(1, e1, e2,
e3); the two sectors are orthogonal under the complex-projected inner
product, giving two independent 4-component spinors.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .octonion import ComplexOctonion, Octonion, left_mul_matrix

__all__ = [
    "DiracRep",
    "dirac_representation",
    "dirac_algebra_check",
    "dispersion_check",
    "left_anticommutator_check",
    "split_doublet",
    "orthogonal_doublet_check",
]


@dataclass
class DiracRep:
    """alpha_k = i L_{e_k} (k=1..3) and beta = i L_{e_4} as 8x8 complex
    matrices; natural units hbar = c = 1."""

    alphas: tuple
    beta: np.ndarray


def dirac_representation() -> DiracRep:
    alphas = tuple(
        1j * left_mul_matrix(Octonion.basis(k).coeffs) for k in (1, 2, 3)
    )
    beta = 1j * left_mul_matrix(Octonion.basis(4).coeffs)
    return DiracRep(alphas, beta)


def _anticomm(A, B):
    return A @ B + B @ A


def dirac_algebra_check(rep: DiracRep | None = None) -> dict:
    """Exact matrix identities of the Dirac algebra (integer complex
    entries, so equality is checked without tolerance)."""
    if rep is None:
        rep = dirac_representation()
    eye = np.eye(8, dtype=np.complex128)
    zero = np.zeros((8, 8), dtype=np.complex128)
    report = {}
    for m in range(3):
        for n in range(3):
            want = 2.0 * eye if m == n else zero
            report[f"anticomm_alpha{m + 1}_alpha{n + 1}"] = bool(
                np.array_equal(_anticomm(rep.alphas[m], rep.alphas[n]), want)
            )
    for m in range(3):
        report[f"anticomm_alpha{m + 1}_beta"] = bool(
            np.array_equal(_anticomm(rep.alphas[m], rep.beta), zero)
        )
    report["beta_squared_is_identity"] = bool(
        np.array_equal(rep.beta @ rep.beta, eye)
    )
    report["all_passed"] = all(report.values())
    return report


def dispersion_check(rep: DiracRep | None = None, p=(0.0, 0.0, 0.0),
                     m: float = 0.0, tol: float = 1e-12) -> dict:
    """H(p)^2 = (|p|^2 + m^2) I within tol."""
    if rep is None:
        rep = dirac_representation()
    p = np.asarray(p, dtype=np.float64)
    if p.shape != (3,):
        raise ValueError("p must be a real 3-vector")
    if m < 0:
        raise ValueError("mass must be nonnegative")
    H = m * rep.beta
    for k in range(3):
        H = H + p[k] * rep.alphas[k]
    target = (float(p @ p) + m * m) * np.eye(8)
    err = float(np.abs(H @ H - target).max())
    return {
        "p": tuple(float(x) for x in p),
        "m": float(m),
        "max_error": err,
        "ok": err <= tol,
    }


def left_anticommutator_check() -> dict:
    """{L_a, L_b} = -2 <a, b> I over all imaginary basis pairs: the
    linearized-alternativity identity behind the Dirac algebra."""
    eye = np.eye(8)
    ok = True
    for a in range(1, 8):
        La = left_mul_matrix(Octonion.basis(a).coeffs)
        for b in range(1, 8):
            Lb = left_mul_matrix(Octonion.basis(b).coeffs)
            want = -2.0 * eye if a == b else np.zeros((8, 8))
            if not np.array_equal(_anticomm(La, Lb), want):
                ok = False
    return {"ok": ok}


def split_doublet(x: ComplexOctonion) -> tuple[ComplexOctonion, ComplexOctonion]:
    """Decompose x = Psi + e4 Phi with Psi, Phi supported on the
    complexified quaternion subalgebra span(1, e1, e2, e3)."""

    def split_oct(o: Octonion) -> tuple[Octonion, Octonion]:
        c = o.coeffs
        psi = np.zeros(8)
        psi[:4] = c[:4]
        # e4 * (f0 + f1 e1 + f2 e2 + f3 e3) = f0 e4 - f1 e5 - f2 e6 - f3 e7
        phi = np.zeros(8)
        phi[0] = c[4]
        phi[1] = -c[5]
        phi[2] = -c[6]
        phi[3] = -c[7]
        return Octonion(psi), Octonion(phi)

    psi_re, phi_re = split_oct(x.re)
    psi_im, phi_im = split_oct(x.im)
    return ComplexOctonion(psi_re, psi_im), ComplexOctonion(phi_re, phi_im)


def _projected_inner(x: ComplexOctonion, y: ComplexOctonion) -> complex:
    """Complex inner product: full conjugate of x (octonionic dagger and
    i -> -i) times y, projected on the C(1, i) component."""
    prod = x.conj_full() * y
    return complex(prod.re.coeffs[0], prod.im.coeffs[0])


def orthogonal_doublet_check() -> dict:
    """The two spinor sectors span(1, e1, e2, e3) and e4*span(...) =
    span(e4..e7) are orthogonal under the complex-projected inner
    product; checked over all basis pairs, plus reconstruction of the
    split on every basis unit."""
    report = {}
    cross_ok = True
    within_ok = True
    for j in range(8):
        for k in range(8):
            val = _projected_inner(
                ComplexOctonion(Octonion.basis(j)),
                ComplexOctonion(Octonion.basis(k)),
            )
            same_sector = (j < 4) == (k < 4)
            if not same_sector and val != 0:
                cross_ok = False
            if j == k and val != 1:
                within_ok = False
    report["cross_sector_orthogonal"] = cross_ok
    report["unit_normalized"] = within_ok
    e4 = ComplexOctonion(Octonion.basis(4))
    recon_ok = True
    for j in range(8):
        for im_part in (False, True):
            x = (
                ComplexOctonion(Octonion.zero(), Octonion.basis(j))
                if im_part
                else ComplexOctonion(Octonion.basis(j))
            )
            psi, phi = split_doublet(x)
            quat_support = all(
                c == 0.0
                for o in (psi.re, psi.im, phi.re, phi.im)
                for c in o.coeffs[4:]
            )
            if not quat_support or not (psi + e4 * phi) == x:
                recon_ok = False
    report["split_reconstructs"] = recon_ok
    report["all_passed"] = cross_ok and within_ok and recon_ok
    return report
