"""
Tests for Inverses App

This module covers the determinantal representations and the command:
- The worked weighted DMP example, step by step
- Moore-Penrose inverse and projectors
- W-weighted Drazin inverse (U-side, V-side, Hermitian cases) and Drazin inverse
- Core-EP and core inverses
- Weighted core-EP, WDMP, WMPD and WCMP inverses against their oracles
- The ginverse management command and its exit codes
"""

import json
import shutil
import tempfile
from fractions import Fraction
from io import StringIO
from pathlib import Path

from django.conf import settings
from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase
from hypothesis import given

from apps.inverses.pairs import WeightedPair
from apps.inverses.representations import (
    choose_variant, core_ep_left, core_ep_right, core_left, core_right, drazin_inverse,
    mp_inverse, projector_p, projector_q, wdrazin, wdrazin_hermitian, wdrazin_u, wdrazin_v,
)
from apps.inverses.services import InverseService, read_report_results
from apps.inverses.weighted import wcep_left, wcep_right, wcmp, wdmp, wmpd
from apps.oracle.oracles import (
    compose_wcep_left, compose_wcep_right, compose_wcmp, compose_wdmp,
    compose_wmpd, core_ep_left_oracle, core_ep_right_oracle, drazin_oracle,
    mp_oracle, s_pinv, wdrazin_oracle,
)
from apps.oracle.verification import verify_system
from apps.quaternions.embedding import CMatrix, from_sympy, to_sympy
from apps.quaternions.exceptions import (
    DimensionMismatch, IndexMismatch, NotHermitian, UnknownVariant,
)
from apps.quaternions.literals import format_matrix_text, parse_quaternion
from apps.quaternions.matrices import QMatrix
from apps.quaternions.serializers import load_matrix
from apps.quaternions.strategies import (
    aw_hermitian_pairs, complex_entries, exact_settings, hermitian_matrices,
    hermitian_weighted_pairs, qmatrices, square_matrices, wa_hermitian_pairs, weighted_pairs,
)

FIXTURES = settings.BASE_DIR / 'fixtures'


def load_fixture(name):
    return load_matrix((FIXTURES / name).read_text(encoding='utf-8'))


def M(*rows):
    return QMatrix([[parse_quaternion(cell) if isinstance(cell, str) else cell for cell in row]
                    for row in rows])


def example_pair():
    return WeightedPair(load_fixture('example/A.txt'), load_fixture('example/W.txt'))


class WeightedPairTests(SimpleTestCase):
    """Test suite for WeightedPair."""

    def test_example_products_and_ranks(self):
        pair = example_pair()
        self.assertEqual(pair.U, M(['i', 'j', '0'], ['0', 'k', '0'], ['0', '0', '0']))
        self.assertEqual((pair.m, pair.n), (4, 3))
        self.assertEqual(pair.r, 3)
        self.assertEqual(pair.index_u, 1)
        self.assertEqual(pair.index_v, 2)
        self.assertEqual(pair.k, 2)
        self.assertEqual(pair.r1, 2)
        self.assertEqual(pair.v_power(pair.k).rank(), pair.r1)

    def test_example_powers(self):
        pair = example_pair()
        self.assertEqual(pair.u_power(2), M(['-1', 'i+k', '0'], ['0', '-1', '0'], ['0', '0', '0']))
        self.assertEqual(pair.u_power(5), M(['i', '2+3*j', '0'], ['0', 'k', '0'], ['0', '0', '0']))

    def test_cached_powers_match_direct_powers(self):
        pair = example_pair()
        for p in (3, 1, 7, 4):
            self.assertEqual(pair.u_power(p), pair.U.power(p))
            self.assertEqual(pair.v_power(p), pair.V.power(p))

    def test_power_cache_stays_bounded(self):
        pair = example_pair()
        self.assertEqual(pair.power_cache_limit, 6)
        for p in (9, 12, 20):
            self.assertEqual(pair.u_power(p), pair.U.power(p))
            self.assertEqual(pair.v_power(p), pair.V.power(p))
        self.assertTrue(all(q <= pair.power_cache_limit for _, q in pair._powers))
        self.assertLessEqual(len(pair._powers), 2 * (pair.power_cache_limit + 1))

    def test_weight_shape_checked(self):
        with self.assertRaises(DimensionMismatch):
            WeightedPair(load_fixture('example/A.txt'), load_fixture('example/W_bad_shape.txt'))

    def test_unweighted_needs_square(self):
        with self.assertRaises(DimensionMismatch):
            WeightedPair.unweighted(load_fixture('example/A.txt'))


class WalkthroughTests(SimpleTestCase):
    """The weighted DMP example evaluated step by step."""

    def setUp(self):
        self.pair = example_pair()
        self.trace = {}
        self.result = wdmp(self.pair, 'general', self.trace)

    def test_final_result(self):
        self.assertEqual(self.result, load_fixture('example/wdmp.txt'))
        self.assertEqual(self.result, M(['0', '0', '1', '0'], ['-i', '0', '0', '0'], ['0', '0', '0', '0']))

    def test_steps_in_order(self):
        self.assertEqual(
            list(self.trace), ['U_check', 'Phi', 'Phi_hat', 'Omega', 'Omega_tilde', 'denominator']
        )

    def test_intermediates(self):
        phi = M(['i', '-2-j', '0'], ['0', 'k', '0'], ['0', '0', '0'])
        phi_hat = M(['6*i-k', '1+j', '0'], ['-2+3*j', 'k', '0'], ['0', '0', '0'])
        self.assertEqual(self.trace['Phi'], phi)
        self.assertEqual(self.trace['Phi_hat'], phi_hat)
        self.assertEqual(self.trace['Omega'], phi)
        self.assertEqual(
            self.trace['Omega_tilde'],
            M(['0', '-k', '1', '1'], ['-i', '1', '0', 'k'], ['0', '0', '0', '0']),
        )
        self.assertEqual(self.trace['denominator'], Fraction(2))

    def test_both_orders_of_u_check(self):
        """(U⁵)*U² gives the printed Ǔ; U²(U⁵)* is what feeds Φ."""
        U2, U5 = self.pair.u_power(2), self.pair.u_power(5)
        printed = M(['i', '1+j', '0'], ['-2+3*j', '-i+6*k', '0'], ['0', '0', '0'])
        self.assertEqual(U5.H @ U2, printed)
        self.assertEqual(self.trace['U_check'], U2 @ U5.H)
        self.assertNotEqual(self.trace['U_check'], printed)

    def test_gram_denominators(self):
        pair = self.pair
        self.assertEqual(pair.A.rank(), 3)
        self.assertEqual(pair.W.rank(), 3)
        self.assertEqual(pair.V.rank(), 3)
        self.assertEqual(pair.v_power(2).rank(), 2)
        self.assertEqual(pair.v_power(3).rank(), 2)

    def test_agrees_with_definition_and_system(self):
        self.assertEqual(self.result, compose_wdmp(self.pair))
        self.assertTrue(verify_system('wdmp', self.pair.A, self.pair.W, self.result).holds)

    def test_auto_uses_the_general_formula(self):
        self.assertEqual(choose_variant(self.pair, 'auto', ('general_u', 'hermitian_wa'), 'general_u'),
                         'general_u')
        self.assertEqual(wdmp(self.pair), self.result)

    def test_hermitian_variant_rejected(self):
        with self.assertRaises(NotHermitian):
            wdmp(self.pair, 'hermitian_wa')

    def test_other_inverses_of_the_example(self):
        pair = self.pair
        drazin = wdrazin_oracle(pair)
        self.assertEqual(wdrazin_u(pair), drazin)
        self.assertEqual(wdrazin_v(pair), drazin)
        self.assertEqual(wmpd(pair), compose_wmpd(pair))
        self.assertEqual(wcmp(pair, 'general_u'), compose_wcmp(pair))
        self.assertEqual(wcmp(pair, 'general_v'), compose_wcmp(pair))
        self.assertEqual(wcep_right(pair), compose_wcep_right(pair))
        self.assertEqual(wcep_left(pair), compose_wcep_left(pair))


class MoorePenroseTests(SimpleTestCase):
    """Test suite for mp_inverse and the projectors."""

    def test_identity(self):
        self.assertEqual(mp_inverse(QMatrix.identity(3)), QMatrix.identity(3))

    def test_zero_matrix(self):
        self.assertEqual(mp_inverse(QMatrix.zeros(2, 3)), QMatrix.zeros(3, 2))

    def test_example_matches_oracle(self):
        A = load_fixture('example/A.txt')
        self.assertEqual(mp_inverse(A), mp_oracle(A))
        self.assertEqual(mp_inverse(A, 'row'), mp_inverse(A, 'column'))

    def test_unknown_side(self):
        with self.assertRaises(UnknownVariant):
            mp_inverse(QMatrix.identity(2), 'diagonal')

    def test_trace_records_denominator(self):
        trace = {}
        mp_inverse(QMatrix.diagonal([2, 3]), trace=trace)
        self.assertEqual(trace['denominator'], Fraction(36))

    def test_projectors_of_example(self):
        A = load_fixture('example/A.txt')
        self.assertEqual(projector_p(A) @ A, A)
        self.assertEqual(projector_q(A), QMatrix.identity(3))

    def test_projector_of_identity(self):
        self.assertEqual(projector_q(QMatrix.identity(3)), QMatrix.identity(3))
        self.assertEqual(projector_p(QMatrix.zeros(2, 2)), QMatrix.zeros(2, 2))

    @given(qmatrices())
    @exact_settings(200)
    def test_penrose_equations_and_oracle(self, A):
        X = mp_inverse(A)
        self.assertTrue(verify_system('penrose', A, None, X).holds)
        self.assertEqual(X, mp_oracle(A))
        self.assertEqual(mp_inverse(A, 'column'), mp_inverse(A, 'row'))

    @given(qmatrices())
    @exact_settings(50)
    def test_projectors(self, A):
        X = mp_inverse(A)
        P, Q = projector_p(A), projector_q(A)
        self.assertEqual(P, A @ X)
        self.assertEqual(Q, X @ A)
        self.assertEqual(P @ P, P)
        self.assertEqual(Q.H, Q)


class WeightedDrazinTests(SimpleTestCase):
    """Test suite for the W-weighted Drazin and Drazin inverses."""

    def test_identity_weight_nonsingular(self):
        A = M(['1', 'i'], ['0', '2'])
        pair = WeightedPair.unweighted(A)
        expected = M(['1', '-1/2*i'], ['0', '1/2'])
        self.assertEqual(wdrazin_u(pair), expected)
        self.assertEqual(wdrazin_v(pair), expected)

    def test_nilpotent_gives_zero(self):
        pair = WeightedPair.unweighted(M(['0', '1'], ['0', '0']))
        self.assertEqual(pair.r1, 0)
        self.assertEqual(wdrazin(pair), QMatrix.zeros(2, 2))
        self.assertEqual(wdrazin(pair, 'general_v'), QMatrix.zeros(2, 2))

    def test_drazin_inverse_index_two(self):
        A = M(['2', '0', '0'], ['0', '0', '1'], ['0', '0', '0'])
        self.assertEqual(drazin_inverse(A), QMatrix.diagonal([Fraction(1, 2), 0, 0]))

    def test_identity_with_hermitian_weight(self):
        pair = WeightedPair(QMatrix.identity(3), QMatrix.diagonal([2, 0, 3]))
        self.assertEqual(wdrazin_hermitian(pair, 'WA'), wdrazin_u(pair))
        self.assertEqual(wdrazin_hermitian(pair, 'AW'), wdrazin_v(pair))
        self.assertEqual(wdrazin_u(pair), QMatrix.diagonal([Fraction(1, 4), 0, Fraction(1, 9)]))

    def test_hermitian_side_checked(self):
        pair = example_pair()
        with self.assertRaises(NotHermitian):
            wdrazin_hermitian(pair, 'WA')
        with self.assertRaises(UnknownVariant):
            wdrazin_hermitian(pair, 'both')

    def test_unknown_variant(self):
        with self.assertRaises(UnknownVariant):
            wdrazin(example_pair(), 'cheapest')
        with self.assertRaises(UnknownVariant):
            wdmp(example_pair(), 'general_v')

    @given(weighted_pairs())
    @exact_settings(50)
    def test_both_sides_match_oracle(self, matrices):
        pair = WeightedPair(*matrices)
        X = wdrazin_u(pair)
        self.assertEqual(X, wdrazin_v(pair))
        self.assertEqual(X, wdrazin_oracle(pair))
        self.assertTrue(verify_system('wdrazin', pair.A, pair.W, X).holds)

    @given(hermitian_weighted_pairs())
    @exact_settings(30)
    def test_hermitian_formulas_match_general(self, matrices):
        pair = WeightedPair(*matrices)
        X = wdrazin_u(pair)
        self.assertEqual(wdrazin_hermitian(pair, 'WA'), X)
        self.assertEqual(wdrazin_hermitian(pair, 'AW'), X)
        self.assertEqual(wdrazin(pair), X)

    @given(wa_hermitian_pairs())
    @exact_settings(30)
    def test_hermitian_wa_formula_with_only_wa_hermitian(self, matrices):
        pair = WeightedPair(*matrices)
        self.assertTrue(pair.u_hermitian())
        X = wdrazin_oracle(pair)
        self.assertEqual(wdrazin_hermitian(pair, 'WA'), X)
        self.assertEqual(wdrazin(pair), X)

    @given(aw_hermitian_pairs())
    @exact_settings(30)
    def test_hermitian_aw_formula_with_only_aw_hermitian(self, matrices):
        pair = WeightedPair(*matrices)
        self.assertTrue(pair.v_hermitian())
        X = wdrazin_oracle(pair)
        self.assertEqual(wdrazin_hermitian(pair, 'AW'), X)
        self.assertEqual(wdrazin(pair), X)

    @given(hermitian_matrices(max_dim=3))
    @exact_settings(30)
    def test_hermitian_matrix_drazin(self, A):
        self.assertEqual(wdrazin_hermitian(WeightedPair.unweighted(A), 'AW'), drazin_oracle(A))

    @given(square_matrices(max_dim=3))
    @exact_settings(40)
    def test_drazin_inverse_matches_oracle(self, A):
        X = drazin_inverse(A)
        self.assertEqual(X, drazin_oracle(A))
        self.assertTrue(verify_system('drazin', A, None, X).holds)


class CoreInverseTests(SimpleTestCase):
    """Test suite for the core-EP and core inverses."""

    def test_identity(self):
        identity = QMatrix.identity(3)
        for compute in (core_ep_right, core_ep_left, core_right, core_left):
            self.assertEqual(compute(identity), identity)

    def test_idempotent(self):
        A = M(['1', '1'], ['0', '0'])
        self.assertEqual(core_ep_right(A), M(['1', '0'], ['0', '0']))
        self.assertEqual(core_ep_left(A), M(['1/2', '1/2'], ['1/2', '1/2']))
        self.assertEqual(core_right(A), core_ep_right(A))
        self.assertEqual(core_left(A), core_ep_left(A))

    def test_hermitian_projector_is_its_own_core_inverse(self):
        P = M(['1/2', '1/2'], ['1/2', '1/2'])
        self.assertEqual(core_right(P), P)
        self.assertEqual(core_left(P), P)

    def test_nilpotent_is_zero(self):
        A = M(['0', '1'], ['0', '0'])
        self.assertEqual(core_ep_right(A), QMatrix.zeros(2, 2))

    def test_index_two_rejected_by_core(self):
        with self.assertRaises(IndexMismatch):
            core_right(M(['0', '1'], ['0', '0']))

    def test_square_required(self):
        with self.assertRaises(DimensionMismatch):
            core_ep_left(QMatrix.zeros(2, 3))

    @given(square_matrices())
    @exact_settings(50)
    def test_systems_oracles_and_duality(self, A):
        right, left = core_ep_right(A), core_ep_left(A)
        self.assertTrue(verify_system('core_ep_right', A, None, right).holds)
        self.assertTrue(verify_system('core_ep_left', A, None, left).holds)
        self.assertEqual(right, core_ep_right_oracle(A))
        self.assertEqual(left, core_ep_left_oracle(A))
        self.assertEqual(right.H, core_ep_left(A.H))
        if A.index() <= 1:
            self.assertEqual(core_right(A), right)
            self.assertEqual(core_left(A), left)


class WeightedFamilyTests(SimpleTestCase):
    """Test suite for the weighted core-EP, WDMP, WMPD and WCMP inverses."""

    def test_shapes(self):
        pair = example_pair()
        self.assertEqual(wcep_right(pair).shape, (4, 3))
        self.assertEqual(wcep_left(pair).shape, (4, 3))
        self.assertEqual(wdmp(pair).shape, (3, 4))
        self.assertEqual(wmpd(pair).shape, (3, 4))
        self.assertEqual(wcmp(pair).shape, (3, 4))

    def test_weighted_core_ep_of_nonsingular(self):
        A = M(['1', 'i'], ['0', '2'])
        pair = WeightedPair.unweighted(A)
        self.assertEqual(wcep_right(pair), M(['1', '-1/2*i'], ['0', '1/2']))
        self.assertEqual(wcep_left(pair), M(['1', '-1/2*i'], ['0', '1/2']))

    def test_left_weighted_core_ep_reduces_to_core(self):
        A = M(['1', '1'], ['1', '1'])
        self.assertEqual(wcep_left(WeightedPair.unweighted(A)), core_left(A))

    def test_identity_weight_reductions(self):
        A = M(['1', 'i', '0'], ['0', '0', '1'], ['0', '0', '0'])
        pair = WeightedPair.unweighted(A)
        drazin, dagger = drazin_oracle(A), mp_oracle(A)
        self.assertEqual(wdmp(pair), drazin @ A @ dagger)
        self.assertEqual(wmpd(pair), dagger @ A @ drazin)
        self.assertEqual(wcmp(pair), dagger @ A @ drazin @ A @ dagger)

    def test_zero_matrix(self):
        pair = WeightedPair(QMatrix.zeros(2, 3), QMatrix.zeros(3, 2))
        self.assertEqual(wdmp(pair), QMatrix.zeros(3, 2))
        self.assertEqual(wcmp(pair), QMatrix.zeros(3, 2))
        self.assertEqual(wcep_right(pair), QMatrix.zeros(2, 3))

    @given(weighted_pairs())
    @exact_settings(50)
    def test_weighted_core_ep(self, matrices):
        pair = WeightedPair(*matrices)
        right, left = wcep_right(pair), wcep_left(pair)
        self.assertEqual(right, compose_wcep_right(pair))
        self.assertEqual(left, compose_wcep_left(pair))
        self.assertTrue(verify_system('wcep_right', pair.A, pair.W, right).holds)
        self.assertTrue(verify_system('wcep_left', pair.A, pair.W, left).holds)

    @given(weighted_pairs())
    @exact_settings(30)
    def test_general_formulas(self, matrices):
        pair = WeightedPair(*matrices)
        A, W = pair.A, pair.W
        X = wdmp(pair, 'general')
        self.assertEqual(X, compose_wdmp(pair))
        self.assertTrue(verify_system('wdmp', A, W, X).holds)
        Y = wmpd(pair, 'general')
        self.assertEqual(Y, compose_wmpd(pair))
        self.assertTrue(verify_system('wmpd', A, W, Y).holds)
        Z = wcmp(pair, 'general_u')
        self.assertEqual(Z, wcmp(pair, 'general_v'))
        self.assertEqual(Z, compose_wcmp(pair))
        self.assertTrue(verify_system('wcmp', A, W, Z).holds)

    @given(hermitian_weighted_pairs())
    @exact_settings(30)
    def test_hermitian_variants_agree(self, matrices):
        pair = WeightedPair(*matrices)
        self.assertEqual(wdmp(pair, 'hermitian_wa'), wdmp(pair, 'general_u'))
        self.assertEqual(wmpd(pair, 'hermitian_aw'), wmpd(pair, 'general_v'))
        expected = compose_wcmp(pair)
        for variant in ('general_u', 'general_v', 'hermitian_wa', 'hermitian_aw', 'auto'):
            self.assertEqual(wcmp(pair, variant), expected)

    @given(wa_hermitian_pairs())
    @exact_settings(30)
    def test_hermitian_wa_variants_with_only_wa_hermitian(self, matrices):
        pair = WeightedPair(*matrices)
        self.assertEqual(wdmp(pair, 'hermitian_wa'), compose_wdmp(pair))
        self.assertEqual(wcmp(pair, 'hermitian_wa'), compose_wcmp(pair))

    @given(aw_hermitian_pairs())
    @exact_settings(30)
    def test_hermitian_aw_variants_with_only_aw_hermitian(self, matrices):
        pair = WeightedPair(*matrices)
        self.assertEqual(wmpd(pair, 'hermitian_aw'), compose_wmpd(pair))
        self.assertEqual(wcmp(pair, 'hermitian_aw'), compose_wcmp(pair))


class ComplexSubfieldTests(SimpleTestCase):
    """Complex inputs stay complex and match a direct complex computation."""

    @given(qmatrices(entries=complex_entries))
    @exact_settings(30)
    def test_pseudoinverse(self, A):
        X = mp_inverse(A)
        self.assertTrue(X.is_complex())
        self.assertEqual(X, from_sympy(s_pinv(to_sympy(CMatrix.from_qmatrix(A)))))

    @given(weighted_pairs(entries=complex_entries))
    @exact_settings(20)
    def test_weighted_inverses(self, matrices):
        pair = WeightedPair(*matrices)
        self.assertTrue(wdrazin(pair).is_complex())
        self.assertTrue(wcmp(pair).is_complex())
        self.assertEqual(wcmp(pair), compose_wcmp(pair))


class CommandTests(SimpleTestCase):
    """Test suite for the ginverse management command."""

    def setUp(self):
        self.tmp = Path(tempfile.mkdtemp())
        self.addCleanup(shutil.rmtree, self.tmp)
        self.A = str(FIXTURES / 'example' / 'A.txt')
        self.W = str(FIXTURES / 'example' / 'W.txt')

    def run_command(self, *args, **options):
        out = StringIO()
        call_command('ginverse', *args, stdout=out, **options)
        return out.getvalue()

    def assertExitCode(self, code, *args, **options):
        with self.assertRaises(CommandError) as ctx:
            self.run_command(*args, **options)
        self.assertEqual(ctx.exception.returncode, code)
        return ctx.exception

    def write(self, name, text):
        path = self.tmp / name
        path.write_text(text, encoding='utf-8')
        return str(path)

    def test_wdmp_trace_and_verify(self):
        out = self.run_command('wdmp', a=self.A, w=self.W, trace=True, verify=True)
        self.assertIn('[trace]', out)
        self.assertIn('# U_check', out)
        self.assertIn('# Omega_tilde', out)
        self.assertIn('denominator = 2', out)
        self.assertIn('k = 2', out)
        self.assertIn('holds = true', out)
        self.assertEqual(read_report_results(out)['wdmp'], load_fixture('example/wdmp.txt'))

    def test_mp_of_identity(self):
        out = self.run_command('mp', a=str(FIXTURES / 'identity3.txt'))
        self.assertEqual(read_report_results(out), {'A_dagger': QMatrix.identity(3)})

    def test_json_report(self):
        data = json.loads(self.run_command('wdmp', a=self.A, w=self.W, json=True))
        self.assertEqual(data['command'], 'wdmp')
        self.assertEqual(data['meta']['k'], 2)
        self.assertEqual(data['result']['wdmp']['data'],
                         [['0', '0', '1', '0'], ['-i', '0', '0', '0'], ['0', '0', '0', '0']])
        self.assertEqual(data['verify'], [])

    def test_report_round_trip_through_verify(self):
        report = str(self.tmp / 'mp.txt')
        self.run_command('mp', a=self.A, output=report)
        self.assertEqual(InverseService.read_matrix(report), mp_oracle(load_fixture('example/A.txt')))
        out = self.run_command('verify', a=self.A, x=report, system='penrose')
        self.assertIn('holds = true', out)

    def test_projectors_verified(self):
        out = self.run_command('projectors', a=self.A, verify=True)
        self.assertIn('system = projector_p', out)
        self.assertIn('system = projector_q', out)
        self.assertNotIn('holds = false', out)

    def test_variant_spelling(self):
        out = self.run_command('wcmp', a=self.A, w=self.W, variant='general-v')
        self.assertIn('variant = general_v', out)

    def test_scalars(self):
        identity = str(FIXTURES / 'identity3.txt')
        self.assertIn('rdet_2 = 1', self.run_command('rdet', a=identity, index=2))
        self.assertIn('hdet = 1', self.run_command('hdet', a=identity))
        self.assertIn('rank = 3', self.run_command('rank', a=self.A))
        self.assertIn('index = 0', self.run_command('index', a=identity))

    def test_wrong_weight_shape(self):
        self.assertExitCode(2, 'wdmp', a=self.A, w=str(FIXTURES / 'example' / 'W_bad_shape.txt'))

    def test_missing_weight(self):
        self.assertExitCode(2, 'wdmp', a=self.A)

    def test_missing_side(self):
        self.assertExitCode(2, 'core-ep', a=str(FIXTURES / 'identity3.txt'))

    def test_variant_not_offered(self):
        self.assertExitCode(2, 'wdmp', a=self.A, w=self.W, variant='general-v')

    def test_precondition_failure(self):
        self.assertExitCode(2, 'wdmp', a=self.A, w=self.W, variant='hermitian-wa')
        self.assertExitCode(2, 'index', a=self.A)

    def test_dimension_cap(self):
        error = self.assertExitCode(2, 'mp', a=self.A, max_dim=2)
        self.assertIn('exceeds', str(error))

    def test_bad_literal(self):
        path = self.write('bad.txt', '2 2\n1; q\n0; 1\n')
        self.assertExitCode(1, 'mp', a=path)

    def test_missing_file(self):
        self.assertExitCode(1, 'mp', a=str(self.tmp / 'absent.txt'))

    def test_failed_verification_still_writes_report(self):
        candidate = self.write('star.txt', format_matrix_text(load_fixture('example/A.txt').H))
        report = str(self.tmp / 'report.txt')
        self.assertExitCode(3, 'verify', a=self.A, x=candidate, system='penrose', output=report)
        text = Path(report).read_text(encoding='utf-8')
        self.assertIn('fails', text)
        self.assertIn('holds = false', text)
