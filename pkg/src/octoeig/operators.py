"""Left/right octonionic operators and their 8x8 real-matrix translation.

Because octonions do not commute, left multiplication L_o (psi -> o psi)
and right multiplication R_o (psi -> psi o) are distinct operators; and
because they do not associate, compositions are order-sensitive.  A
word of factors is therefore applied strictly right to left:

    A B C ... Z psi = A(B(...(Z psi))).

Each operator has a faithful 8x8 real matrix acting on the coefficient
column vec(psi) = (psi_0 .. psi_7)^T, and the 64 operators
{1, L_m, R_n, R_n L_m} form a basis of the full matrix algebra, so the
most general real-linear operator is

    L_{o_0} + sum_m R_m . L_{o_m}        (o_0 .. o_7 octonions),

here ``GeneralizedOperator``.  Square matrices of such operators
translate blockwise to 8n x 8n real (or complex, when each entry also
carries an i-part) matrices; that translation is what the eigensolvers
consume.

Operator words use the text grammar ``L<k>``/``R<k>`` separated by
whitespace, leftmost factor applied last, e.g. ``L4 R5 R1 L6``.
Operator matrices are exchanged as JSON objects
``{"n": int, "entries": [...], "complexified": bool, "entries_im": [...]}``
with row-major entries that are octonion literals (acting by left
multiplication) or arrays of 8 octonion literals (generalized
operators).
"""

from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from .linalg import lu_solve, matrix_rank
from .octonion import (
    ComplexOctonion,
    Octonion,
    OctonionParseError,
    format_octonion,
    left_mul_matrix,
    parse_octonion,
    right_mul_matrix,
)

__all__ = [
    "Factor",
    "OperatorWord",
    "GeneralizedOperator",
    "OperatorMatrix",
    "OperatorMatrixFormatError",
    "L",
    "R",
    "parse_word",
    "word_to_matrix",
    "generalized_to_matrix",
    "matrix_to_generalized",
    "operator_basis",
    "basis_rank",
    "operator_identity_check",
]


@dataclass(frozen=True)
class Factor:
    """One multiplication factor: side 'L' (psi -> value*psi) or
    'R' (psi -> psi*value)."""

    side: str
    value: Octonion

    def __post_init__(self):
        if self.side not in ("L", "R"):
            raise ValueError(f"factor side must be 'L' or 'R', got {self.side!r}")

    def apply(self, psi: Octonion) -> Octonion:
        return self.value * psi if self.side == "L" else psi * self.value

    def to_matrix(self) -> np.ndarray:
        c = self.value.coeffs
        return left_mul_matrix(c) if self.side == "L" else right_mul_matrix(c)

    def __str__(self):
        sup = self.value.support()
        if len(sup) == 1 and self.value.coeffs[sup[0]] == 1.0:
            return f"{self.side}{sup[0]}"
        return f"{self.side}[{format_octonion(self.value)}]"


def L(k: int) -> Factor:
    """Basis left factor L_k."""
    return Factor("L", Octonion.basis(k))


def R(k: int) -> Factor:
    """Basis right factor R_k."""
    return Factor("R", Octonion.basis(k))


class OperatorWord:
    """Ordered product of factors, leftmost applied last."""

    __slots__ = ("factors",)

    def __init__(self, factors=()):
        factors = tuple(factors)
        for f in factors:
            if not isinstance(f, Factor):
                raise TypeError(f"expected Factor, got {type(f).__name__}")
        self.factors = factors

    def apply(self, psi: Octonion) -> Octonion:
        for f in reversed(self.factors):
            psi = f.apply(psi)
        return psi

    def to_matrix(self) -> np.ndarray:
        """The unique 8x8 matrix A with A vec(psi) = vec(word applied to
        psi); matrix products legitimately compose the translated
        factors because each factor acts linearly on coefficients."""
        m = np.eye(8)
        for f in self.factors:
            m = m @ f.to_matrix()
        return m

    def __len__(self):
        return len(self.factors)

    def __str__(self):
        return " ".join(str(f) for f in self.factors) if self.factors else "1"

    def __repr__(self):
        return f"OperatorWord({str(self)!r})"


_WORD_TOKEN = re.compile(r"([LR])([0-9]+)$")


def parse_word(text: str) -> OperatorWord:
    """Parse whitespace-separated factors like 'L4 R5 R1 L6'."""
    factors = []
    for tok in text.split():
        m = _WORD_TOKEN.match(tok)
        if m is None:
            raise OctonionParseError(f"bad operator factor {tok!r}", text.find(tok))
        k = int(m.group(2))
        if not 1 <= k <= 7:
            raise OctonionParseError(
                f"factor index {tok!r} out of range 1..7", text.find(tok)
            )
        factors.append(Factor(m.group(1), Octonion.basis(k)))
    return OperatorWord(factors)


def word_to_matrix(word: OperatorWord) -> np.ndarray:
    return word.to_matrix()


class GeneralizedOperator:
    """L_{o_0} + sum_m R_m . L_{o_m}: the most general real-linear
    operator on octonions (apply the left factor first, then R_m)."""

    __slots__ = ("parts",)

    def __init__(self, parts):
        parts = tuple(parts)
        if len(parts) != 8:
            raise ValueError(f"need 8 octonion parts, got {len(parts)}")
        for p in parts:
            if not isinstance(p, Octonion):
                raise TypeError(f"expected Octonion, got {type(p).__name__}")
        self.parts = parts

    @classmethod
    def left(cls, o: Octonion) -> "GeneralizedOperator":
        """Plain left multiplication by o."""
        return cls((o,) + tuple(Octonion.zero() for _ in range(7)))

    @classmethod
    def zero(cls) -> "GeneralizedOperator":
        return cls(tuple(Octonion.zero() for _ in range(8)))

    def apply(self, psi: Octonion) -> Octonion:
        out = self.parts[0] * psi
        for m in range(1, 8):
            if not self.parts[m].is_zero():
                out = out + (self.parts[m] * psi) * Octonion.basis(m)
        return out

    def apply_complex(self, phi: ComplexOctonion) -> ComplexOctonion:
        """Real-linear action extended complex-linearly: g(x + iy) =
        g(x) + i g(y)."""
        return ComplexOctonion(self.apply(phi.re), self.apply(phi.im))

    def to_matrix(self) -> np.ndarray:
        m = left_mul_matrix(self.parts[0].coeffs)
        for k in range(1, 8):
            if not self.parts[k].is_zero():
                m = m + right_mul_matrix(Octonion.basis(k).coeffs) @ left_mul_matrix(
                    self.parts[k].coeffs
                )
        return m

    def is_left_only(self) -> bool:
        return all(self.parts[m].is_zero() for m in range(1, 8))

    def is_zero(self) -> bool:
        return all(p.is_zero() for p in self.parts)

    def __eq__(self, other):
        if not isinstance(other, GeneralizedOperator):
            return NotImplemented
        return all(a == b for a, b in zip(self.parts, other.parts))

    def allclose(self, other: "GeneralizedOperator", tol: float = 1e-10) -> bool:
        return all(a.allclose(b, tol) for a, b in zip(self.parts, other.parts))

    def __repr__(self):
        inner = ", ".join(format_octonion(p) for p in self.parts)
        return f"GeneralizedOperator([{inner}])"


def generalized_to_matrix(g: GeneralizedOperator) -> np.ndarray:
    return g.to_matrix()


_BASIS_CACHE: dict[str, np.ndarray] = {}


def operator_basis() -> np.ndarray:
    """The 64 basis matrices {1, L_m, R_n, R_n L_m}, as a (64, 8, 8)
    array in the coefficient order used by matrix_to_generalized."""
    if "mats" not in _BASIS_CACHE:
        mats = [np.eye(8)]
        for m in range(1, 8):
            mats.append(left_mul_matrix(Octonion.basis(m).coeffs))
        for n in range(1, 8):
            mats.append(right_mul_matrix(Octonion.basis(n).coeffs))
        for n in range(1, 8):
            for m in range(1, 8):
                mats.append(
                    right_mul_matrix(Octonion.basis(n).coeffs)
                    @ left_mul_matrix(Octonion.basis(m).coeffs)
                )
        _BASIS_CACHE["mats"] = np.array(mats)
        _BASIS_CACHE["flat"] = _BASIS_CACHE["mats"].reshape(64, 64).T.copy()
    return _BASIS_CACHE["mats"]


def matrix_to_generalized(A) -> GeneralizedOperator:
    """Decompose an 8x8 real matrix over the 64-element operator basis
    and repackage the coefficients as a GeneralizedOperator.

    The 64x64 system (columns = flattened basis matrices) is solved by
    the partial-pivot LU of :mod:`octoeig.linalg`; it is provably
    nonsingular, so failure is an internal error.  The exact solution
    coefficients of an integer matrix are integer multiples of 1/12;
    they are snapped to the nearest twelfth, which removes the solver
    rounding entirely (1/12 itself is not a binary float, so the
    subsequent float evaluation of the operator can still differ from A
    in the last bits, within ~1e-13).
    """
    A = np.asarray(A, dtype=np.float64)
    if A.shape != (8, 8):
        raise ValueError(f"expected an 8x8 matrix, got shape {A.shape}")
    operator_basis()
    flat = _BASIS_CACHE["flat"]
    coeffs = lu_solve(flat, A.reshape(64))
    if np.all(A == np.round(A)):
        coeffs = np.round(coeffs * 12.0) / 12.0
    parts = []
    o0 = np.zeros(8)
    o0[0] = coeffs[0]
    o0[1:] = coeffs[1:8]
    parts.append(Octonion(o0))
    for n in range(1, 8):
        on = np.zeros(8)
        on[0] = coeffs[8 + n - 1]
        on[1:] = coeffs[15 + (n - 1) * 7 : 15 + n * 7]
        parts.append(Octonion(on))
    return GeneralizedOperator(parts)


def basis_rank(matrices=None) -> int:
    """Rank of a family of 8x8 matrices viewed as flattened vectors.

    Defaults to the full 64-element operator basis (rank 64, i.e. the
    whole of the 8x8 matrix algebra)."""
    if matrices is None:
        mats = operator_basis()
    else:
        mats = np.array([np.asarray(m, dtype=np.float64) for m in matrices])
    return matrix_rank(mats.reshape(len(mats), -1))


def operator_identity_check() -> dict:
    """Matrix-level identities distinguishing operator composition from
    octonion multiplication.  Returns pass/fail per identity."""
    l1 = left_mul_matrix(Octonion.basis(1).coeffs)
    l2 = left_mul_matrix(Octonion.basis(2).coeffs)
    l3 = left_mul_matrix(Octonion.basis(3).coeffs)
    r2 = right_mul_matrix(Octonion.basis(2).coeffs)
    prod = l1 @ l2
    report = {
        # composition is not octonion multiplication: L1 L2 != L3
        "L1L2_differs_from_L3": not np.array_equal(prod, l3),
        # but the defect is expressible in the operator algebra
        "L1L2_equals_L3_plus_R2L1_minus_L1R2": np.array_equal(
            prod, l3 + r2 @ l1 - l1 @ r2
        ),
    }
    ok = True
    for m in range(1, 8):
        lm = left_mul_matrix(Octonion.basis(m).coeffs)
        rm = right_mul_matrix(Octonion.basis(m).coeffs)
        for n in range(1, 8):
            ln = left_mul_matrix(Octonion.basis(n).coeffs)
            rn = right_mul_matrix(Octonion.basis(n).coeffs)
            if not np.array_equal(lm @ rn + ln @ rm, rn @ lm + rm @ ln):
                ok = False
    report["LmRn_plus_LnRm_symmetric"] = ok
    report["all_passed"] = all(report.values())
    return report


class OperatorMatrixFormatError(ValueError):
    """Schema violation in the operator-matrix JSON; `path` locates it."""

    def __init__(self, message: str, path: str):
        super().__init__(f"{message} (at {path})")
        self.path = path


class OperatorMatrix:
    """Square matrix of generalized octonionic operators, optionally
    complexified (entry = re + i*im pair of operators)."""

    def __init__(self, entries, entries_im=None):
        self.entries = self._normalize(entries)
        self.n = len(self.entries)
        self.entries_im = self._normalize(entries_im) if entries_im is not None else None
        if self.entries_im is not None and len(self.entries_im) != self.n:
            raise ValueError("real and imaginary entry grids differ in size")

    @staticmethod
    def _normalize(rows):
        out = []
        for row in rows:
            new_row = []
            for e in row:
                if isinstance(e, GeneralizedOperator):
                    new_row.append(e)
                elif isinstance(e, Octonion):
                    new_row.append(GeneralizedOperator.left(e))
                elif isinstance(e, (int, float)):
                    new_row.append(GeneralizedOperator.left(Octonion.from_scalar(e)))
                elif isinstance(e, str):
                    new_row.append(GeneralizedOperator.left(parse_octonion(e)))
                else:
                    raise TypeError(f"bad operator-matrix entry {type(e).__name__}")
            out.append(tuple(new_row))
        n = len(out)
        for row in out:
            if len(row) != n:
                raise ValueError("operator matrix must be square")
        if n < 1:
            raise ValueError("operator matrix must have n >= 1")
        return tuple(out)

    @property
    def complexified(self) -> bool:
        return self.entries_im is not None

    # -- actions ------------------------------------------------------------

    def apply(self, vec) -> list[Octonion]:
        """Entrywise action on an octonion vector: (M psi)_i =
        sum_j M_ij(psi_j), each entry applied before summing."""
        if self.complexified:
            raise ValueError("complexified operator matrix acts on complexified vectors")
        if len(vec) != self.n:
            raise ValueError(f"vector length {len(vec)} != matrix size {self.n}")
        out = []
        for i in range(self.n):
            acc = Octonion.zero()
            for j in range(self.n):
                acc = acc + self.entries[i][j].apply(vec[j])
            out.append(acc)
        return out

    def apply_complex(self, vec) -> list[ComplexOctonion]:
        if len(vec) != self.n:
            raise ValueError(f"vector length {len(vec)} != matrix size {self.n}")
        i_unit = ComplexOctonion.i_unit()
        out = []
        for i in range(self.n):
            acc = ComplexOctonion.zero()
            for j in range(self.n):
                phi = vec[j]
                if not isinstance(phi, ComplexOctonion):
                    phi = ComplexOctonion(phi)
                acc = acc + self.entries[i][j].apply_complex(phi)
                if self.entries_im is not None:
                    acc = acc + i_unit * self.entries_im[i][j].apply_complex(phi)
            out.append(acc)
        return out

    # -- translation --------------------------------------------------------

    def to_real_matrix(self) -> np.ndarray:
        """Blockwise 8n x 8n real translation; block (i, j) is the 8x8
        matrix of entry (i, j)."""
        if self.complexified:
            raise ValueError("complexified operator matrix translates to a complex matrix")
        out = np.zeros((8 * self.n, 8 * self.n))
        for i in range(self.n):
            for j in range(self.n):
                out[8 * i : 8 * i + 8, 8 * j : 8 * j + 8] = self.entries[i][j].to_matrix()
        return out

    def to_complex_matrix(self) -> np.ndarray:
        out = np.zeros((8 * self.n, 8 * self.n), dtype=np.complex128)
        for i in range(self.n):
            for j in range(self.n):
                block = self.entries[i][j].to_matrix().astype(np.complex128)
                if self.entries_im is not None:
                    block = block + 1j * self.entries_im[i][j].to_matrix()
                out[8 * i : 8 * i + 8, 8 * j : 8 * j + 8] = block
        return out

    # -- JSON wire format ----------------------------------------------------

    @staticmethod
    def _entry_from_json(e, path: str) -> GeneralizedOperator:
        if isinstance(e, str):
            try:
                return GeneralizedOperator.left(parse_octonion(e))
            except OctonionParseError as exc:
                raise OperatorMatrixFormatError(str(exc), path) from exc
        if isinstance(e, (int, float)):
            return GeneralizedOperator.left(Octonion.from_scalar(e))
        if isinstance(e, list):
            if len(e) != 8:
                raise OperatorMatrixFormatError(
                    f"generalized entry needs 8 parts, got {len(e)}", path
                )
            parts = []
            for k, part in enumerate(e):
                p = f"{path}[{k}]"
                if isinstance(part, str):
                    try:
                        parts.append(parse_octonion(part))
                    except OctonionParseError as exc:
                        raise OperatorMatrixFormatError(str(exc), p) from exc
                elif isinstance(part, list):
                    if len(part) != 8 or not all(
                        isinstance(x, (int, float)) for x in part
                    ):
                        raise OperatorMatrixFormatError(
                            "coefficient array must hold 8 numbers", p
                        )
                    parts.append(Octonion(part))
                else:
                    raise OperatorMatrixFormatError(
                        f"bad generalized part of type {type(part).__name__}", p
                    )
            return GeneralizedOperator(parts)
        raise OperatorMatrixFormatError(
            f"entry must be an octonion literal or an 8-part array, got "
            f"{type(e).__name__}",
            path,
        )

    @classmethod
    def from_json(cls, obj) -> "OperatorMatrix":
        if not isinstance(obj, dict):
            raise OperatorMatrixFormatError("operator matrix must be a JSON object", "$")
        if "n" not in obj:
            raise OperatorMatrixFormatError("missing key 'n'", "$.n")
        n = obj["n"]
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise OperatorMatrixFormatError("'n' must be a positive integer", "$.n")
        for key in obj:
            if key not in ("n", "entries", "complexified", "entries_im"):
                raise OperatorMatrixFormatError(f"unknown key {key!r}", f"$.{key}")

        def grid(key):
            ent = obj.get(key)
            if not isinstance(ent, list) or len(ent) != n * n:
                raise OperatorMatrixFormatError(
                    f"'{key}' must be a row-major array of {n * n} entries",
                    f"$.{key}",
                )
            flat = [
                cls._entry_from_json(e, f"$.{key}[{k}]") for k, e in enumerate(ent)
            ]
            return [flat[i * n : (i + 1) * n] for i in range(n)]

        entries = grid("entries")
        complexified = obj.get("complexified")
        if complexified is None:
            complexified = "entries_im" in obj
        if not isinstance(complexified, bool):
            raise OperatorMatrixFormatError(
                "'complexified' must be a boolean", "$.complexified"
            )
        entries_im = None
        if "entries_im" in obj:
            if not complexified:
                raise OperatorMatrixFormatError(
                    "'entries_im' present but 'complexified' is false",
                    "$.complexified",
                )
            entries_im = grid("entries_im")
        elif complexified:
            raise OperatorMatrixFormatError(
                "complexified matrix needs 'entries_im'", "$.entries_im"
            )
        return cls(entries, entries_im)

    @staticmethod
    def _entry_to_json(g: GeneralizedOperator):
        if g.is_left_only():
            return format_octonion(g.parts[0])
        return [format_octonion(p) for p in g.parts]

    def to_json(self) -> dict:
        obj = {
            "n": self.n,
            "entries": [
                self._entry_to_json(self.entries[i][j])
                for i in range(self.n)
                for j in range(self.n)
            ],
        }
        if self.complexified:
            obj["complexified"] = True
            obj["entries_im"] = [
                self._entry_to_json(self.entries_im[i][j])
                for i in range(self.n)
                for j in range(self.n)
            ]
        return obj

    def is_integer_valued(self) -> bool:
        grids = [self.entries] + ([self.entries_im] if self.entries_im else [])
        return all(
            p.is_integer_valued()
            for grid in grids
            for row in grid
            for g in row
            for p in g.parts
        )

    def __repr__(self):
        kind = "complexified " if self.complexified else ""
        return f"<{kind}OperatorMatrix n={self.n}>"
