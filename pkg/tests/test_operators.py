"""Operator words, generalized operators, the matrix translation and
the operator-matrix JSON format."""

import itertools
import json

import numpy as np
import pytest

from octoeig import (
    ComplexOctonion,
    Factor,
    GeneralizedOperator,
    L,
    Octonion,
    OperatorMatrix,
    OperatorMatrixFormatError,
    OperatorWord,
    R,
    basis_rank,
    eigenvalues,
    matrix_to_generalized,
    operator_identity_check,
    parse_word,
)
from octoeig.octonion import left_mul_matrix, right_mul_matrix

from conftest import rand_int_octonion, rand_octonion

E = Octonion.basis
PSI = Octonion([1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0])

# the displayed 8x8 matrix of psi -> e2 psi
L2_MATRIX = np.array(
    [
        [0, 0, -1, 0, 0, 0, 0, 0],
        [0, 0, 0, 1, 0, 0, 0, 0],
        [1, 0, 0, 0, 0, 0, 0, 0],
        [0, -1, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, -1, 0],
        [0, 0, 0, 0, 0, 0, 0, -1],
        [0, 0, 0, 0, 1, 0, 0, 0],
        [0, 0, 0, 0, 0, 1, 0, 0],
    ],
    dtype=float,
)

E4_MATRIX = np.array(
    [
        [0, 0, 0, 0, -1, 0, 0, 0],
        [0, 0, 0, 0, 0, 1, 0, 0],
        [0, 0, 0, 0, 0, 0, 1, 0],
        [0, 0, 0, 0, 0, 0, 0, 1],
        [1, 0, 0, 0, 0, 0, 0, 0],
        [0, -1, 0, 0, 0, 0, 0, 0],
        [0, 0, -1, 0, 0, 0, 0, 0],
        [0, 0, 0, -1, 0, 0, 0, 0],
    ],
    dtype=float,
)


class TestActions:
    def test_right_mult_by_e1(self):
        c = PSI.coeffs
        got = Factor("R", E(1)).apply(PSI)
        want = [-c[1], c[0], c[3], -c[2], c[5], -c[4], -c[7], c[6]]
        assert np.array_equal(got.coeffs, want)

    def test_left_mult_by_e2(self):
        c = PSI.coeffs
        got = Factor("L", E(2)).apply(PSI)
        want = [-c[2], c[3], c[0], -c[1], -c[6], -c[7], c[4], c[5]]
        assert np.array_equal(got.coeffs, want)

    def test_empty_word_is_identity(self):
        assert OperatorWord().apply(PSI) == PSI
        assert np.array_equal(OperatorWord().to_matrix(), np.eye(8))

    def test_word_ordering_rule(self):
        # leftmost factor applied last: L4 R5 R1 L6 psi = e4{[(e6 psi)e1]e5}
        word = parse_word("L4 R5 R1 L6")
        direct = E(4) * (((E(6) * PSI) * E(1)) * E(5))
        assert word.apply(PSI) == direct

    def test_r1l3_vs_l3r1(self):
        c = PSI.coeffs
        r1l3 = OperatorWord([R(1), L(3)])  # R1(L3 psi) = (e3 psi) e1
        got = r1l3.to_matrix() @ c
        assert np.array_equal(got, [c[2], -c[3], c[0], -c[1], c[6], c[7], -c[4], -c[5]])
        l3r1 = OperatorWord([L(3), R(1)])  # L3(R1 psi) = e3 (psi e1)
        got = l3r1.to_matrix() @ c
        assert np.array_equal(got, [c[2], -c[3], c[0], -c[1], -c[6], -c[7], c[4], c[5]])

    def test_faithfulness_words_up_to_length_3(self):
        gens = [L(k) for k in range(1, 8)] + [R(k) for k in range(1, 8)]
        basis = [E(k) for k in range(8)]
        for length in (1, 2, 3):
            for combo in itertools.product(gens, repeat=length):
                word = OperatorWord(combo)
                m = word.to_matrix()
                for psi in basis:
                    assert np.array_equal(m @ psi.coeffs, word.apply(psi).coeffs)

    def test_parse_word_errors(self):
        from octoeig import OctonionParseError

        with pytest.raises(OctonionParseError):
            parse_word("L4 X2")
        with pytest.raises(OctonionParseError):
            parse_word("L8")


class TestGeneralizedOperator:
    def test_left_e2_matches_displayed_matrix(self):
        g = GeneralizedOperator.left(E(2))
        assert np.array_equal(g.to_matrix(), L2_MATRIX)

    def test_zero(self):
        assert np.array_equal(GeneralizedOperator.zero().to_matrix(), np.zeros((8, 8)))

    def test_matrix_matches_direct_application(self, rng):
        for _ in range(100):
            g = GeneralizedOperator([rand_int_octonion(rng) for _ in range(8)])
            m = g.to_matrix()
            psi = rand_int_octonion(rng)
            assert np.array_equal(m @ psi.coeffs, g.apply(psi).coeffs)

    def test_application_order_right_after_left(self):
        # R_m L_{o_m}: psi -> (o_m psi) e_m
        g = GeneralizedOperator(
            [Octonion.zero(), E(3)] + [Octonion.zero()] * 6
        )  # R_1 L_{e3}
        assert g.apply(PSI) == (E(3) * PSI) * E(1)


class TestDecomposition:
    def test_basis_elements(self):
        g = matrix_to_generalized(left_mul_matrix(E(1).coeffs))
        assert g.parts[0] == E(1)
        assert all(g.parts[m].is_zero() for m in range(1, 8))
        g = matrix_to_generalized(np.eye(8))
        assert g.parts[0] == Octonion.one()
        assert all(g.parts[m].is_zero() for m in range(1, 8))
        g = matrix_to_generalized(right_mul_matrix(E(5).coeffs))
        assert g.parts[5] == Octonion.one()
        assert g.parts[0].is_zero()

    def test_roundtrip_integer(self, rng):
        # exact rational solution is integers/12; the scaled operator
        # reconstructs 12A exactly, the unscaled one to ~1e-13
        for _ in range(25):
            A = rng.integers(-5, 6, (8, 8)).astype(float)
            g = matrix_to_generalized(A)
            scaled = GeneralizedOperator(
                [Octonion(np.round(p.coeffs * 12.0)) for p in g.parts]
            )
            assert all(
                np.array_equal(p.coeffs * 12.0, np.round(p.coeffs * 12.0))
                for p in g.parts
            )
            assert np.array_equal(scaled.to_matrix(), 12.0 * A)
            assert np.abs(g.to_matrix() - A).max() <= 1e-12

    def test_roundtrip_float(self, rng):
        for _ in range(25):
            A = rng.uniform(-3, 3, (8, 8))
            g = matrix_to_generalized(A)
            assert np.abs(g.to_matrix() - A).max() <= 1e-10

    def test_generalized_then_decomposed(self, rng):
        # 100 random operators round-trip through the matrix translation;
        # integer coefficients are recovered exactly
        for _ in range(50):
            g = GeneralizedOperator([rand_octonion(rng) for _ in range(8)])
            g2 = matrix_to_generalized(g.to_matrix())
            assert g2.allclose(g, 1e-10)
        for _ in range(50):
            g = GeneralizedOperator([rand_int_octonion(rng) for _ in range(8)])
            g2 = matrix_to_generalized(g.to_matrix())
            assert g2 == g

    def test_translation_is_linear(self, rng):
        for _ in range(10):
            g1 = GeneralizedOperator([rand_octonion(rng) for _ in range(8)])
            g2 = GeneralizedOperator([rand_octonion(rng) for _ in range(8)])
            g_sum = GeneralizedOperator(
                [a + b for a, b in zip(g1.parts, g2.parts)]
            )
            assert np.abs(
                g_sum.to_matrix() - (g1.to_matrix() + g2.to_matrix())
            ).max() <= 1e-12

    def test_rejects_wrong_shape(self):
        with pytest.raises(ValueError):
            matrix_to_generalized(np.eye(4))


class TestBasisRank:
    def test_full_basis_is_64(self):
        assert basis_rank() == 64

    def test_left_family_is_8(self):
        mats = [np.eye(8)] + [left_mul_matrix(E(m).coeffs) for m in range(1, 8)]
        assert basis_rank(mats) == 8

    def test_coinciding_sums_have_rank_1(self):
        l1 = left_mul_matrix(E(1).coeffs)
        l2 = left_mul_matrix(E(2).coeffs)
        r1 = right_mul_matrix(E(1).coeffs)
        r2 = right_mul_matrix(E(2).coeffs)
        # L1 R2 + L2 R1 = R2 L1 + R1 L2 as operators
        assert basis_rank([l1 @ r2 + l2 @ r1, r2 @ l1 + r1 @ l2]) == 1


class TestOperatorIdentities:
    def test_report(self):
        rep = operator_identity_check()
        assert rep["L1L2_differs_from_L3"]
        assert rep["L1L2_equals_L3_plus_R2L1_minus_L1R2"]
        assert rep["LmRn_plus_LnRm_symmetric"]
        assert rep["all_passed"]

    def test_lm_rm_commute(self):
        for m in range(1, 8):
            lm = left_mul_matrix(E(m).coeffs)
            rm = right_mul_matrix(E(m).coeffs)
            assert np.array_equal(lm @ rm, rm @ lm)


class TestOperatorMatrix:
    def test_e4_block(self):
        M = OperatorMatrix([[E(4)]])
        assert np.array_equal(M.to_real_matrix(), E4_MATRIX)

    def test_identity_block(self):
        M = OperatorMatrix([[1]])
        assert np.array_equal(M.to_real_matrix(), np.eye(8))

    def test_2x2_spectrum(self):
        M = OperatorMatrix([[1, E(4)], [0, E(5)]])
        A = M.to_real_matrix()
        assert A.shape == (16, 16)
        vals = np.sort_complex(eigenvalues(A))
        want = np.sort_complex(np.array([1j] * 4 + [-1j] * 4 + [1.0 + 0j] * 8))
        assert np.abs(vals - want).max() <= 1e-9

    def test_real_only_complex_translation(self):
        M = OperatorMatrix([[1, E(4)], [0, E(5)]])
        C = M.to_complex_matrix()
        assert np.array_equal(C.imag, np.zeros((16, 16)))
        assert np.array_equal(C.real, M.to_real_matrix())

    def test_scalar_i_factor(self):
        M = OperatorMatrix([[Octonion.zero()]], entries_im=[[E(4)]])
        assert np.array_equal(M.to_complex_matrix(), 1j * E4_MATRIX)

    def test_complexified_action_oracle(self, rng):
        entries = [[rand_int_octonion(rng) for _ in range(2)] for _ in range(2)]
        entries_im = [[rand_int_octonion(rng) for _ in range(2)] for _ in range(2)]
        M = OperatorMatrix(entries, entries_im)
        C = M.to_complex_matrix()
        for _ in range(20):
            vec = [
                ComplexOctonion(rand_octonion(rng), rand_octonion(rng))
                for _ in range(2)
            ]
            flat = np.concatenate(
                [v.re.coeffs + 1j * v.im.coeffs for v in vec]
            )
            got = C @ flat
            want = M.apply_complex(vec)
            want_flat = np.concatenate(
                [w.re.coeffs + 1j * w.im.coeffs for w in want]
            )
            assert np.abs(got - want_flat).max() <= 1e-12

    def test_apply_matches_real_translation(self, rng):
        entries = [[rand_int_octonion(rng) for _ in range(3)] for _ in range(3)]
        M = OperatorMatrix(entries)
        A = M.to_real_matrix()
        vec = [rand_int_octonion(rng) for _ in range(3)]
        flat = np.concatenate([v.coeffs for v in vec])
        want = np.concatenate([w.coeffs for w in M.apply(vec)])
        assert np.array_equal(A @ flat, want)

    def test_must_be_square(self):
        with pytest.raises(ValueError):
            OperatorMatrix([[E(1), E(2)]])


class TestJsonFormat:
    def test_parse_simple(self):
        M = OperatorMatrix.from_json({"n": 1, "entries": ["e4"]})
        assert np.array_equal(M.to_real_matrix(), E4_MATRIX)

    def test_parse_2x2(self):
        obj = {"n": 2, "entries": ["1", "e4", "0", "e5"]}
        M = OperatorMatrix.from_json(obj)
        assert M.n == 2 and not M.complexified
        assert M.entries[0][1].parts[0] == E(4)

    def test_roundtrip(self):
        obj = {"n": 2, "entries": ["1 - 2e3 + e7", "e4", "0", "e5"]}
        M = OperatorMatrix.from_json(obj)
        again = OperatorMatrix.from_json(M.to_json())
        assert M.to_json() == again.to_json()
        assert json.dumps(M.to_json()) == json.dumps(again.to_json())

    def test_complexified_roundtrip(self):
        obj = {
            "n": 1,
            "entries": ["e4"],
            "complexified": True,
            "entries_im": ["1"],
        }
        M = OperatorMatrix.from_json(obj)
        assert M.complexified
        assert OperatorMatrix.from_json(M.to_json()).to_json() == M.to_json()

    def test_generalized_entry(self):
        obj = {"n": 1, "entries": [["e2", "0", "0", "0", "0", "0", "0", "0"]]}
        M = OperatorMatrix.from_json(obj)
        assert np.array_equal(M.to_real_matrix(), L2_MATRIX)

    @pytest.mark.parametrize(
        "obj,path",
        [
            ({"entries": ["e4"]}, "$.n"),
            ({"n": 0, "entries": []}, "$.n"),
            ({"n": 1, "entries": ["e9"]}, "$.entries[0]"),
            ({"n": 2, "entries": ["1", "e4", "0"]}, "$.entries"),
            ({"n": 1, "entries": ["1"], "complexified": True}, "$.entries_im"),
            ({"n": 1, "entries": [["e2", "0"]]}, "$.entries[0]"),
            ({"n": 1, "entries": ["1"], "banana": 1}, "$.banana"),
        ],
    )
    def test_schema_errors_carry_path(self, obj, path):
        with pytest.raises(OperatorMatrixFormatError) as err:
            OperatorMatrix.from_json(obj)
        assert err.value.path == path
