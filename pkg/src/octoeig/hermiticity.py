"""Octonionic inner products and (anti-)hermiticity classification.

The inner product of two octonion vectors is the octonion
sum_k conj(psi_k) * phi_k, parenthesized exactly as written.  Because
octonions do not associate, a hermitian MATRIX does not generally act
as a hermitian OPERATOR under this product: <psi, M psi> and
<M psi, psi> can differ in their imaginary parts.

Projecting the product onto the complex plane spanned by (1, e1),

    [o]_C = (o - e1 (o e1)) / 2,

repairs this for e1: under the projected product e1 is anti-hermitian.
``classify`` decides hermitian / anti-hermitian / neither for an
operator matrix by exhaustively testing all pairs of single-entry basis
vectors; real bilinearity makes the basis check conclusive, and all
arithmetic is exact for integer entries.
"""

from __future__ import annotations

from dataclasses import dataclass

from .eigen import coupled_clusters
from .linalg import DEFAULT_SEED
from .octonion import Octonion
from .operators import OperatorMatrix

__all__ = [
    "FULL",
    "COMPLEX_PROJECTED",
    "HermiticityReport",
    "inner",
    "complex_project",
    "product_values",
    "classify",
    "hermitian_spectrum_theorem_check",
    "survey_imaginary_units",
]

FULL = "full"
COMPLEX_PROJECTED = "complex-projected"
_KIND_ALIASES = {
    FULL: FULL,
    COMPLEX_PROJECTED: COMPLEX_PROJECTED,
    "projected": COMPLEX_PROJECTED,
}


@dataclass
class HermiticityReport:
    operator_id: str
    kind: str
    classification: str  # 'hermitian' | 'anti-hermitian' | 'neither'
    # witness pair (psi, phi, left value, right value) present iff 'neither';
    # it exhibits <psi, O phi> != <O psi, phi> (or the anti-hermitian
    # violation when the operator is hermitian-symmetric on all pairs)
    witness: tuple | None = None


def inner(psi, phi) -> Octonion:
    """Octonionic inner product sum_k conj(psi_k) * phi_k."""
    psi = list(psi)
    phi = list(phi)
    if len(psi) != len(phi):
        raise ValueError(f"length mismatch: {len(psi)} vs {len(phi)}")
    acc = Octonion.zero()
    for p, q in zip(psi, phi):
        acc = acc + p.conj() * q
    return acc


def complex_project(o: Octonion, axis: int = 1) -> Octonion:
    """Projection onto the complex plane (1, e_axis):
    (o - e_axis (o e_axis)) / 2, inner product first.

    axis != 1 is experimental; the supported product uses e1.
    """
    e = Octonion.basis(axis)
    return (o - e * (o * e)) / 2


def _basis_vectors(n: int):
    zero = Octonion.zero()
    for slot in range(n):
        for k in range(8):
            vec = [zero] * n
            vec[slot] = Octonion.basis(k)
            yield tuple(vec)


def product_values(op: OperatorMatrix, psi, phi, kind: str = FULL,
                   axis: int = 1) -> tuple[Octonion, Octonion]:
    """The two sides compared by the hermiticity definitions:
    <psi, O phi> and <O psi, phi>, optionally complex-projected."""
    kind = _KIND_ALIASES[kind]
    left = inner(psi, op.apply(list(phi)))
    right = inner(op.apply(list(psi)), phi)
    if kind == COMPLEX_PROJECTED:
        left = complex_project(left, axis)
        right = complex_project(right, axis)
    return left, right


def classify(op: OperatorMatrix, kind: str = FULL, axis: int = 1,
             operator_id: str = "") -> HermiticityReport:
    """Classify an operator matrix as hermitian, anti-hermitian or
    neither under the chosen product, exhaustively over all pairs of
    single-entry basis vectors (exact integer arithmetic)."""
    if kind not in _KIND_ALIASES:
        raise ValueError(f"unknown product kind {kind!r}")
    kind = _KIND_ALIASES[kind]
    if op.complexified:
        raise ValueError("classification handles real-coefficient operator matrices")
    hermitian = True
    anti = True
    herm_witness = None
    anti_witness = None
    for psi in _basis_vectors(op.n):
        for phi in _basis_vectors(op.n):
            left, right = product_values(op, psi, phi, kind, axis)
            if hermitian and not (left - right).is_zero():
                hermitian = False
                herm_witness = (psi, phi, left, right)
            if anti and not (left + right).is_zero():
                anti = False
                anti_witness = (psi, phi, left, right)
            if not hermitian and not anti:
                break
        if not hermitian and not anti:
            break
    if hermitian and anti:
        classification = "hermitian"  # only the zero operator
    elif hermitian:
        classification = "hermitian"
    elif anti:
        classification = "anti-hermitian"
    else:
        classification = "neither"
    witness = None
    if classification == "neither":
        witness = herm_witness if herm_witness is not None else anti_witness
    return HermiticityReport(operator_id, kind, classification, witness)


def hermitian_spectrum_theorem_check(op: OperatorMatrix,
                                     seed: int = DEFAULT_SEED,
                                     tol: float = 1e-9) -> dict:
    """If the operator classifies as hermitian under the full product,
    its coupled spectrum must be real: every cluster has b = 0."""
    report = classify(op, FULL)
    out = {
        "classification": report.classification,
        "applicable": report.classification == "hermitian",
    }
    if not out["applicable"]:
        out["ok"] = True  # nothing to check; the theorem's premise fails
        return out
    clusters = coupled_clusters(op, seed=seed)
    out["clusters"] = [(c.a, c.b, c.multiplicity) for c in clusters]
    out["max_abs_b"] = max((abs(c.b) for c in clusters), default=0.0)
    out["real_spectrum"] = out["max_abs_b"] <= tol
    out["ok"] = out["real_spectrum"]
    return out


def survey_imaginary_units(kind: str = COMPLEX_PROJECTED, axis: int = 1) -> dict:
    """Classification of each left-multiplication operator [e_m] under
    the chosen product.  Recorded as data: under the (1, e1)-projected
    product only e1 comes out anti-hermitian; the remaining units hit
    associator terms with a surviving e1 component."""
    out = {}
    for m in range(1, 8):
        op = OperatorMatrix([[Octonion.basis(m)]])
        out[m] = classify(op, kind, axis, operator_id=f"e{m}").classification
    return out
