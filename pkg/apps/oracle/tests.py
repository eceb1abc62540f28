"""
Tests for Oracle App

This module covers the independent ground-truth channel:
- Moore-Penrose inverse through the complex-adjoint embedding
- Drazin, weighted Drazin and core-EP oracles with their self-checks
- Definitional compositions of the weighted inverse family
- Characterizing-system verification, including negative controls
"""

import inspect
from fractions import Fraction

from django.conf import settings
from django.test import SimpleTestCase, override_settings
from hypothesis import given
import sympy

from apps.inverses.pairs import WeightedPair
from apps.oracle import oracles
from apps.oracle.exceptions import InternalOracleFailure, UnknownSystem
from apps.oracle.oracles import (
    compose_wcep_left, compose_wcep_right, compose_wcmp, compose_wdmp,
    compose_wmpd, core_ep_left_oracle, core_ep_right_oracle, drazin_oracle,
    embed, mp_oracle, oracle_index, s_pinv, s_rank, unembed, wdrazin_oracle,
)
from apps.oracle.verification import SYSTEMS, verify_system
from apps.quaternions.embedding import complex_embedding, to_sympy
from apps.quaternions.exceptions import DimensionMismatch
from apps.quaternions.literals import parse_quaternion
from apps.quaternions.matrices import QMatrix
from apps.quaternions.scalars import ZERO
from apps.quaternions.serializers import load_matrix
from apps.quaternions.strategies import exact_settings, qmatrices, square_matrices, weighted_pairs

FIXTURES = settings.BASE_DIR / 'fixtures'


def load_fixture(name):
    return load_matrix((FIXTURES / name).read_text(encoding='utf-8'))


def M(*rows):
    return QMatrix([[parse_quaternion(cell) if isinstance(cell, str) else cell for cell in row]
                    for row in rows])


class MoorePenroseOracleTests(SimpleTestCase):
    """Test suite for mp_oracle."""

    def test_identity(self):
        self.assertEqual(mp_oracle(QMatrix.identity(3)), QMatrix.identity(3))

    def test_scalar_diagonal(self):
        self.assertEqual(mp_oracle(QMatrix.diagonal([2, 2])), QMatrix.diagonal([Fraction(1, 2)] * 2))

    def test_zero_matrix(self):
        self.assertEqual(mp_oracle(QMatrix.zeros(2, 3)), QMatrix.zeros(3, 2))

    def test_row_vector(self):
        """[1, i]† = [1, i]*/2."""
        self.assertEqual(mp_oracle(M(['1', 'i'])), M(['1/2'], ['-1/2*i']))

    def test_example_rows(self):
        """The first two rows of A† of the worked example."""
        A_dagger = mp_oracle(load_fixture('example/A.txt'))
        self.assertEqual(A_dagger.shape, (3, 4))
        self.assertEqual(A_dagger.row(1), M(['0', '0', '1', '0']).row(1))
        self.assertEqual(A_dagger.row(2), M(['-i', '0', '0', '0']).row(1))

    @given(qmatrices())
    @exact_settings(40)
    def test_embedding_commutes_with_pseudoinverse(self, A):
        """χ(A†) = χ(A)†."""
        self.assertEqual(embed(mp_oracle(A)), s_pinv(embed(A)))

    @given(qmatrices())
    @exact_settings(40)
    def test_embedding_round_trip(self, A):
        self.assertEqual(unembed(embed(A)), A)
        self.assertEqual(embed(A), to_sympy(complex_embedding(A)))

    def test_complex_pseudoinverse_of_singular_matrix(self):
        S = sympy.Matrix([[1, 1], [1, 1]])
        self.assertEqual(s_pinv(S), sympy.Matrix(2, 2, [sympy.Rational(1, 4)] * 4))

    def test_complex_pseudoinverse_matches_sympy(self):
        S = sympy.Matrix([[1, sympy.I, 0], [0, 1, 1 - sympy.I]])
        expected = S.pinv(method='RD').applyfunc(sympy.expand_complex)
        self.assertEqual(s_pinv(S), expected)

    def test_pseudoinverse_of_zero_matrix(self):
        self.assertEqual(s_pinv(sympy.zeros(2, 3)), sympy.zeros(3, 2))

    @given(square_matrices())
    @exact_settings(40)
    def test_index_agrees_with_quaternion_side(self, A):
        self.assertEqual(oracle_index(A), A.index())

    @given(qmatrices())
    @exact_settings(40)
    def test_rank_agrees_with_quaternion_side(self, A):
        self.assertEqual(s_rank(embed(A)), 2 * A.rank())

    def test_unembed_rejects_odd_shape(self):
        with self.assertRaises(InternalOracleFailure):
            unembed(sympy.zeros(3, 2))


class DrazinOracleTests(SimpleTestCase):
    """Test suite for the Drazin, weighted Drazin and core-EP oracles."""

    def test_nonsingular_is_inverse(self):
        A = M(['1', 'i'], ['0', '2'])
        self.assertEqual(drazin_oracle(A), M(['1', '-1/2*i'], ['0', '1/2']))

    def test_nilpotent_is_zero(self):
        self.assertEqual(drazin_oracle(M(['0', '1'], ['0', '0'])), QMatrix.zeros(2, 2))

    def test_idempotent_is_itself(self):
        A = M(['1', '1'], ['0', '0'])
        self.assertEqual(drazin_oracle(A), A)

    def test_index_two(self):
        A = M(['2', '0', '0'], ['0', '0', '1'], ['0', '0', '0'])
        self.assertEqual(A.index(), 2)
        self.assertEqual(oracle_index(A), 2)
        self.assertEqual(drazin_oracle(A), QMatrix.diagonal([Fraction(1, 2), 0, 0]))

    def test_rectangular_rejected(self):
        with self.assertRaises(DimensionMismatch):
            drazin_oracle(QMatrix.zeros(2, 3))

    def test_weighted_with_identity_weight(self):
        A = M(['1', 'i'], ['0', '2'])
        self.assertEqual(wdrazin_oracle(WeightedPair.unweighted(A)), M(['1', '-1/2*i'], ['0', '1/2']))

    def test_weighted_example_holds(self):
        pair = WeightedPair(load_fixture('example/A.txt'), load_fixture('example/W.txt'))
        X = wdrazin_oracle(pair)
        self.assertTrue(verify_system('wdrazin', pair.A, pair.W, X).holds)

    def test_core_ep_of_idempotent(self):
        A = M(['1', '1'], ['0', '0'])
        self.assertEqual(core_ep_right_oracle(A), M(['1', '0'], ['0', '0']))
        self.assertEqual(core_ep_left_oracle(A), M(['1/2', '1/2'], ['1/2', '1/2']))

    @given(square_matrices())
    @exact_settings(40)
    def test_drazin_equations(self, A):
        self.assertTrue(verify_system('drazin', A, None, drazin_oracle(A)).holds)

    @given(square_matrices(max_dim=3))
    @exact_settings(30)
    def test_core_ep_duality(self, A):
        """(A^⊕)* = left core-EP inverse of A*."""
        self.assertEqual(core_ep_right_oracle(A).H, core_ep_left_oracle(A.H))

    @given(weighted_pairs())
    @exact_settings(30)
    def test_weighted_drazin_equations(self, matrices):
        pair = WeightedPair(*matrices)
        self.assertTrue(verify_system('wdrazin', pair.A, pair.W, wdrazin_oracle(pair)).holds)


class SelfCheckTests(SimpleTestCase):
    """Test suite for the oracle self-check switch."""

    def test_failed_check_raises(self):
        with self.assertRaises(InternalOracleFailure):
            oracles._self_check('identity', [('I = 0', QMatrix.identity(2), QMatrix.zeros(2, 2))])

    def test_failure_is_an_assertion_error(self):
        self.assertTrue(issubclass(InternalOracleFailure, AssertionError))

    @override_settings(GINVERSE={'MAX_DIM': 7, 'THREADS': 1, 'ORACLE_SELF_CHECK': False})
    def test_check_can_be_switched_off(self):
        oracles._self_check('identity', [('I = 0', QMatrix.identity(2), QMatrix.zeros(2, 2))])

    def test_oracles_do_not_use_determinants(self):
        source = inspect.getsource(oracles)
        self.assertNotIn('determinants', source)
        self.assertNotIn('representations', source)

    def test_oracles_do_not_share_the_embedding_layer(self):
        source = inspect.getsource(oracles)
        self.assertNotIn('apps.quaternions.embedding', source)
        self.assertNotIn('c_rref', source)
        self.assertNotIn('.index()', source)


class CompositionTests(SimpleTestCase):
    """Test suite for the definitional products of the weighted family."""

    def setUp(self):
        self.pair = WeightedPair(load_fixture('example/A.txt'), load_fixture('example/W.txt'))

    def test_example_wdmp(self):
        self.assertEqual(compose_wdmp(self.pair), load_fixture('example/wdmp.txt'))

    def test_shapes(self):
        self.assertEqual(compose_wdmp(self.pair).shape, (3, 4))
        self.assertEqual(compose_wmpd(self.pair).shape, (3, 4))
        self.assertEqual(compose_wcmp(self.pair).shape, (3, 4))
        self.assertEqual(compose_wcep_right(self.pair).shape, (4, 3))
        self.assertEqual(compose_wcep_left(self.pair).shape, (4, 3))

    def test_identity_weight_reductions(self):
        """With W = I: WDMP = A^D A A†, WMPD = A†A A^D, WCMP = A†A A^D A A†."""
        A = M(['1', 'i', '0'], ['0', '0', '1'], ['0', '0', '0'])
        pair = WeightedPair.unweighted(A)
        drazin, dagger = drazin_oracle(A), mp_oracle(A)
        self.assertEqual(compose_wdmp(pair), drazin @ A @ dagger)
        self.assertEqual(compose_wmpd(pair), dagger @ A @ drazin)
        self.assertEqual(compose_wcmp(pair), dagger @ A @ drazin @ A @ dagger)

    @given(weighted_pairs())
    @exact_settings(30)
    def test_compositions_satisfy_their_systems(self, matrices):
        pair = WeightedPair(*matrices)
        A, W = pair.A, pair.W
        self.assertTrue(verify_system('wdmp', A, W, compose_wdmp(pair)).holds)
        self.assertTrue(verify_system('wmpd', A, W, compose_wmpd(pair)).holds)
        self.assertTrue(verify_system('wcmp', A, W, compose_wcmp(pair)).holds)
        self.assertTrue(verify_system('wcep_right', A, W, compose_wcep_right(pair)).holds)
        self.assertTrue(verify_system('wcep_left', A, W, compose_wcep_left(pair)).holds)


class VerificationTests(SimpleTestCase):
    """Test suite for verify_system."""

    def setUp(self):
        self.A = load_fixture('example/A.txt')
        self.W = load_fixture('example/W.txt')

    def test_reference_wdmp_result_holds(self):
        verdict = verify_system('wdmp', self.A, self.W, load_fixture('example/wdmp.txt'))
        self.assertTrue(verdict.holds)
        self.assertEqual(len(verdict.equations), 3)
        self.assertTrue(all(check.residual == ZERO for check in verdict.equations))

    def test_conjugate_transpose_is_not_pseudoinverse(self):
        verdict = verify_system('penrose', self.A, None, self.A.H)
        self.assertFalse(verdict.holds)
        self.assertTrue(verdict.failed)
        failing = [check for check in verdict.equations if not check.holds]
        self.assertTrue(all(check.residual != ZERO for check in failing))

    def test_projectors_hold(self):
        dagger = mp_oracle(self.A)
        self.assertTrue(verify_system('projector_p', self.A, None, self.A @ dagger).holds)
        self.assertTrue(verify_system('projector_q', self.A, None, dagger @ self.A).holds)

    def test_unknown_system(self):
        with self.assertRaises(UnknownSystem):
            verify_system('bott_duffin', self.A, None, self.A.H)

    def test_wrong_candidate_shape(self):
        with self.assertRaises(DimensionMismatch):
            verify_system('penrose', self.A, None, self.A)

    def test_weighted_system_needs_weight(self):
        with self.assertRaises(DimensionMismatch):
            verify_system('wdmp', self.A, None, load_fixture('example/wdmp.txt'))

    def test_every_system_named(self):
        self.assertEqual(set(SYSTEMS), {
            'penrose', 'drazin', 'wdrazin', 'core_ep_right', 'core_ep_left',
            'wcep_right', 'wcep_left', 'wdmp', 'wmpd', 'wcmp', 'projector_p', 'projector_q',
        })

    @given(qmatrices())
    @exact_settings(40)
    def test_oracle_satisfies_penrose(self, A):
        self.assertTrue(verify_system('penrose', A, None, mp_oracle(A)).holds)
