"""
Tests for Quaternions App

This module covers the exact scalar and matrix layer:
- Quaternion arithmetic, conjugation, inversion and literals
- QMatrix products, powers, selections, rank and index
- The complex-adjoint embedding and exact complex elimination
- Row/column determinants, Hermitian determinants and minor sums
- The JSON matrix serializer
"""

from fractions import Fraction
from itertools import product
from math import factorial, gcd

from django.conf import settings
from django.test import SimpleTestCase
from hypothesis import given
from hypothesis import strategies as st
from rest_framework import serializers
import sympy

from apps.quaternions import conf
from apps.quaternions.determinants import (
    CycleDecomposition, cdet, cdet_minor_matrix, cdet_minor_sum, column_expansion,
    hdet, index_sets, index_sets_containing, minor_sum, rdet, rdet_minor_matrix,
    rdet_minor_sum, row_expansion,
)
from apps.quaternions.embedding import (
    CMatrix, c_inverse, c_rank, c_rref, complex_embedding, from_complex_embedding, from_sympy,
    to_sympy,
)
from apps.quaternions.exceptions import (
    DimensionLimitExceeded, DimensionMismatch, IndexOutOfRange, LiteralError,
    NotHermitian, ZeroDivisor,
)
from apps.quaternions.literals import (
    format_matrix_text, format_quaternion, parse_matrix_text, parse_quaternion,
)
from apps.quaternions.matrices import IndexSet, QMatrix
from apps.quaternions.scalars import ONE, ZERO, I, J, K, Quaternion
from apps.quaternions.serializers import MatrixSerializer, load_matrix
from apps.quaternions.strategies import (
    exact_settings, hermitian_matrices, qmatrices, quaternions, real_entries,
    square_matrices,
)

FIXTURES = settings.BASE_DIR / 'fixtures'


def load_fixture(name):
    return load_matrix((FIXTURES / name).read_text(encoding='utf-8'))


def Q(text):
    return parse_quaternion(text)


def M(*rows):
    return QMatrix([[Q(cell) if isinstance(cell, str) else cell for cell in row] for row in rows])


def expand_product(a, b):
    """Bilinear expansion of a·b over the 16 basis products."""
    table = {
        (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
        (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
        (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
        (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
    }
    out = [Fraction(0)] * 4
    for p, q in product(range(4), repeat=2):
        sign, unit = table[(p, q)]
        out[unit] += sign * a.components[p] * b.components[q]
    return Quaternion(*out)


def sympy_det(matrix):
    """Determinant of a CMatrix computed by sympy over ℚ(i)."""
    return from_sympy(sympy.Matrix([[to_sympy(matrix).det()]])).data[0][0]


class QuaternionArithmeticTests(SimpleTestCase):
    """Test suite for the Hamilton product and friends."""

    def test_basis_products(self):
        """i² = j² = k² = ijk = −1 and the cyclic products."""
        self.assertEqual(I * I, -ONE)
        self.assertEqual(J * J, -ONE)
        self.assertEqual(K * K, -ONE)
        self.assertEqual(I * J * K, -ONE)
        self.assertEqual(I * J, K)
        self.assertEqual(J * K, I)
        self.assertEqual(K * I, J)
        self.assertEqual(J * I, -K)

    def test_identity_product(self):
        q = Quaternion(1, -2, Fraction(1, 3), 4)
        self.assertEqual(ONE * q, q)
        self.assertEqual(q * 1, q)

    def test_product_matches_bilinear_expansion(self):
        """(i + j)(i − j) = −2k, confirmed against the 16-term expansion."""
        a, b = I + J, I - J
        self.assertEqual(a * b, expand_product(a, b))
        self.assertEqual(a * b, -2 * K)

    def test_conjugate(self):
        q = Quaternion(1, 2, 3, 4)
        self.assertEqual(q.conjugate(), Quaternion(1, -2, -3, -4))
        self.assertEqual(ONE.conjugate(), ONE)

    def test_inverse_examples(self):
        self.assertEqual(I.inverse(), -I)
        self.assertEqual(Quaternion(2).inverse(), Quaternion(Fraction(1, 2)))
        self.assertEqual(Quaternion(1, 1, 1, 1).inverse(), Quaternion(1, -1, -1, -1) / 4)

    def test_inverse_of_zero_raises(self):
        with self.assertRaises(ZeroDivisor):
            ZERO.inverse()

    def test_rational_canonical_form(self):
        q = Quaternion(Fraction(2, 4), Fraction(-6, 9)) * Quaternion(0, 3)
        for value in q.components:
            self.assertGreater(value.denominator, 0)
            self.assertEqual(gcd(value.numerator, value.denominator), 1)
        self.assertEqual(Quaternion(Fraction(0, 5)).w.denominator, 1)

    def test_foreign_rationals_become_fractions(self):
        """Any numbers.Rational is accepted and stored as a Fraction."""
        q = Quaternion(1, 2) * sympy.Rational(1, 2)
        self.assertEqual(q, Quaternion(Fraction(1, 2), 1))
        self.assertTrue(all(type(value) is Fraction for value in q.components))
        self.assertEqual(ONE + sympy.Integer(2), 3)
        self.assertEqual(Quaternion(sympy.Rational(-6, 8)).w, Fraction(-3, 4))
        self.assertIs(type((I / sympy.Integer(2)).x), Fraction)
        self.assertEqual(Quaternion(3) - sympy.Rational(1, 3), Quaternion(Fraction(8, 3)))

    def test_equality_with_rationals(self):
        self.assertEqual(Quaternion(3), 3)
        self.assertNotEqual(Quaternion(3, 1), 3)
        self.assertEqual(hash(Quaternion(Fraction(1, 2))), hash(Fraction(1, 2)))

    @given(quaternions, quaternions)
    @exact_settings(50)
    def test_conjugate_reverses_products(self, a, b):
        self.assertEqual((a * b).conjugate(), b.conjugate() * a.conjugate())

    @given(quaternions, quaternions)
    @exact_settings(50)
    def test_product_agrees_with_expansion(self, a, b):
        self.assertEqual(a * b, expand_product(a, b))

    @given(quaternions, quaternions, quaternions)
    @exact_settings(50)
    def test_associativity(self, a, b, c):
        self.assertEqual((a * b) * c, a * (b * c))

    @given(quaternions, quaternions, quaternions)
    @exact_settings(50)
    def test_distributivity(self, a, b, c):
        self.assertEqual(a * (b + c), a * b + a * c)
        self.assertEqual((b + c) * a, b * a + c * a)

    @given(quaternions, quaternions)
    @exact_settings(50)
    def test_norm_is_multiplicative(self, a, b):
        self.assertEqual((a * b).norm_squared(), a.norm_squared() * b.norm_squared())

    @given(quaternions)
    @exact_settings(50)
    def test_conjugate_product_is_norm(self, q):
        self.assertEqual(q.conjugate() * q, Quaternion(q.norm_squared()))
        self.assertEqual(q * q.conjugate(), Quaternion(q.norm_squared()))
        if q:
            self.assertEqual(q * q.inverse(), ONE)
            self.assertEqual(q.inverse() * q, ONE)


class LiteralTests(SimpleTestCase):
    """Test suite for quaternion literals and the text matrix format."""

    def test_parse_examples(self):
        self.assertEqual(Q('-2+3*j'), Quaternion(-2, 0, 3))
        self.assertEqual(Q('k'), K)
        self.assertEqual(Q('0'), ZERO)
        self.assertEqual(Q('6i-k'), Quaternion(0, 6, 0, -1))
        self.assertEqual(Q('1/2*k'), Quaternion(0, 0, 0, Fraction(1, 2)))
        self.assertEqual(Q('1 + 2*i - 3/4*j + k'), Quaternion(1, 2, Fraction(-3, 4), 1))
        self.assertEqual(Q('-i+k'), Quaternion(0, -1, 0, 1))

    def test_parse_errors(self):
        for text in ['', 'x', '1+', '2i3', '1/0', 'i*', '++i']:
            with self.subTest(text=text):
                with self.assertRaises(LiteralError):
                    Q(text)

    def test_format_is_canonical(self):
        self.assertEqual(format_quaternion(Quaternion(0, -1, 0, Fraction(1, 2))), '-i+1/2*k')
        self.assertEqual(format_quaternion(Quaternion(-2, 0, 3)), '-2+3*j')
        self.assertEqual(format_quaternion(ZERO), '0')
        self.assertEqual(str(Quaternion(0, 6, 0, -1)), '6*i-k')

    @given(quaternions)
    @exact_settings(50)
    def test_format_parses_back(self, q):
        self.assertEqual(Q(format_quaternion(q)), q)

    def test_matrix_text_reads_fixture(self):
        A = load_fixture('example/A.txt')
        self.assertEqual(A.shape, (4, 3))
        self.assertEqual(A.entry(2, 1), K)
        self.assertEqual(A.entry(4, 3), -J)
        self.assertEqual(parse_matrix_text(format_matrix_text(A)), A)

    def test_matrix_text_errors(self):
        for text in ['', '2\n1; 2', '2 2\n1; 2', '1 2\n1; 2; 3', '1 1\nq']:
            with self.subTest(text=text):
                with self.assertRaises(LiteralError):
                    parse_matrix_text(text)


class MatrixSerializerTests(SimpleTestCase):
    """Test suite for the JSON matrix format."""

    def test_valid_payload(self):
        serializer = MatrixSerializer(data={'rows': 1, 'cols': 3, 'data': [['0', 'i', '1/2-k']]})
        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertEqual(serializer.to_matrix(), QMatrix([[ZERO, I, Quaternion(Fraction(1, 2), 0, 0, -1)]]))

    def test_shape_mismatch_is_invalid(self):
        serializer = MatrixSerializer(data={'rows': 2, 'cols': 2, 'data': [['1', '0']]})
        self.assertFalse(serializer.is_valid())

    def test_bad_literal_is_invalid(self):
        serializer = MatrixSerializer(data={'rows': 1, 'cols': 1, 'data': [['2q']]})
        self.assertFalse(serializer.is_valid())
        self.assertIn('data', serializer.errors)

    def test_representation_round_trip(self):
        A = load_fixture('example/A.txt')
        payload = MatrixSerializer(A).data
        self.assertEqual(payload['data'][1], ['k', '1', 'i'])
        again = MatrixSerializer(data=payload)
        self.assertTrue(again.is_valid(), again.errors)
        self.assertEqual(again.to_matrix(), A)

    def test_load_matrix_json(self):
        A = load_matrix('{"rows": 2, "cols": 1, "data": [["j"], ["-1"]]}')
        self.assertEqual(A, QMatrix([[J], [-ONE]]))
        with self.assertRaises(serializers.ValidationError):
            load_matrix('{"rows": 2, "cols": 1, "data": [["j"]]}')


class ExampleMatrixTests(SimpleTestCase):
    """Products, powers and ranks of the worked-example matrices."""

    def setUp(self):
        self.A = load_fixture('example/A.txt')
        self.W = load_fixture('example/W.txt')

    def test_products(self):
        self.assertEqual(self.W @ self.A, M(['i', 'j', '0'], ['0', 'k', '0'], ['0', '0', '0']))
        self.assertEqual(self.A @ self.W, M(
            ['-k', '-j', '0', 'i'],
            ['-1-j', 'i+k', 'j', '1+j'],
            ['k', '0', 'i', '0'],
            ['-i+k', '1-j', 'i', 'i-k'],
        ))
        self.assertEqual(QMatrix.identity(4) @ self.A, self.A)

    def test_gram_matrices(self):
        self.assertEqual(self.A.H @ self.A, M(
            ['3', '-2k', '-2j'], ['2k', '3', '2i'], ['2j', '-2i', '2'],
        ))
        self.assertEqual(self.A @ self.A.H, M(
            ['1', 'i', '0', '-j'],
            ['-i', '3', 'k', '3k'],
            ['0', '-k', '1', '1'],
            ['j', '-3k', '1', '3'],
        ))
        self.assertEqual(self.A.H.H, self.A)

    def test_powers(self):
        U = self.W @ self.A
        self.assertEqual(U.power(2), M(['-1', 'i+k', '0'], ['0', '-1', '0'], ['0', '0', '0']))
        self.assertEqual(U.power(5), M(['i', '2+3j', '0'], ['0', 'k', '0'], ['0', '0', '0']))
        self.assertEqual(U.power(0), QMatrix.identity(3))
        with self.assertRaises(DimensionMismatch):
            self.A.power(2)

    def test_submatrix_and_replacement(self):
        gram = self.A.H @ self.A
        self.assertEqual(gram.submatrix([1, 2], [1, 2]), M(['3', '-2k'], ['2k', '3']))
        self.assertEqual(self.A.submatrix(IndexSet.full(4), IndexSet.full(3)), self.A)
        self.assertEqual(gram.submatrix([2], [3]), M(['2i']))
        self.assertEqual(gram.replace_row(2, gram.row(2)), gram)
        self.assertEqual(
            QMatrix.identity(2).replace_col(1, [ZERO, ONE]), M(['0', '0'], ['1', '1'])
        )
        with self.assertRaises(IndexOutOfRange):
            gram.submatrix([1, 4], [1])
        with self.assertRaises(DimensionMismatch):
            gram.replace_row(1, [ONE])

    def test_rank_ladder(self):
        U = self.W @ self.A
        V = self.A @ self.W
        self.assertEqual(self.A.rank(), 3)
        self.assertEqual(self.W.rank(), 3)
        self.assertEqual(V.rank(), 3)
        self.assertEqual(V.power(2).rank(), 2)
        self.assertEqual(V.power(3).rank(), 2)
        self.assertEqual(U.rank(), 2)
        self.assertEqual(U.power(2).rank(), 2)
        self.assertEqual(QMatrix.zeros(2, 3).rank(), 0)

    def test_index(self):
        self.assertEqual((self.A @ self.W).index(), 2)
        self.assertEqual((self.W @ self.A).index(), 1)
        self.assertEqual(QMatrix.identity(3).index(), 0)
        self.assertEqual(M(['0', '1'], ['0', '0']).index(), 2)
        with self.assertRaises(DimensionMismatch):
            self.A.index()


class MatrixPropertyTests(SimpleTestCase):
    """Algebraic laws of QMatrix on random inputs."""

    @given(st.data())
    @exact_settings(40)
    def test_conjugate_transpose_of_product(self, data):
        A = data.draw(qmatrices(max_dim=3))
        B = data.draw(qmatrices(rows=A.cols, max_dim=3))
        self.assertEqual((A @ B).H, B.H @ A.H)

    @given(qmatrices())
    @exact_settings(40)
    def test_rank_of_gram_matrices(self, A):
        r = A.rank()
        self.assertEqual((A.H @ A).rank(), r)
        self.assertEqual((A @ A.H).rank(), r)

    @given(qmatrices(max_dim=3))
    @exact_settings(30)
    def test_determinantal_rank(self, A):
        """Largest r with a nonzero r×r principal-minor sum of A*A."""
        gram = A.H @ A
        nonzero = [r for r in range(1, gram.rows + 1) if minor_sum(gram, r)]
        self.assertEqual(A.rank(), max(nonzero, default=0))


class EmbeddingTests(SimpleTestCase):
    """Test suite for the complex-adjoint embedding."""

    def test_embedding_of_j(self):
        self.assertEqual(complex_embedding(M(['j'])), M(['0', '1'], ['-1', '0']))

    def test_embedding_of_identity(self):
        self.assertEqual(complex_embedding(QMatrix.identity(3)), QMatrix.identity(6))

    def test_example_product_and_rank(self):
        A = load_fixture('example/A.txt')
        W = load_fixture('example/W.txt')
        self.assertEqual(complex_embedding(A) @ complex_embedding(W), complex_embedding(A @ W))
        self.assertEqual(c_rank(complex_embedding(A)), 6)

    def test_elimination(self):
        self.assertEqual(c_rank(CMatrix.from_qmatrix(QMatrix.identity(4))), 4)
        self.assertEqual(c_rank(CMatrix.from_qmatrix(QMatrix.zeros(2, 3))), 0)
        reduced, pivots = c_rref(CMatrix([[ONE, I], [I, -ONE]]))
        self.assertEqual(pivots, (0,))
        self.assertEqual(reduced, QMatrix([[ONE, I], [ZERO, ZERO]]))
        M2 = CMatrix([[ONE, I], [ZERO, 2 * ONE]])
        self.assertEqual(M2 @ c_inverse(M2), QMatrix.identity(2))
        with self.assertRaises(ZeroDivisor):
            c_inverse(CMatrix([[ONE, I], [I, -ONE]]))

    def test_cmatrix_rejects_quaternions(self):
        with self.assertRaises(DimensionMismatch):
            CMatrix([[J]])

    @given(st.data())
    @exact_settings(40)
    def test_star_algebra_homomorphism(self, data):
        A = data.draw(qmatrices(max_dim=3))
        B = data.draw(qmatrices(rows=A.rows, cols=A.cols))
        C = data.draw(qmatrices(rows=A.cols, max_dim=3))
        self.assertEqual(complex_embedding(A + B), complex_embedding(A) + complex_embedding(B))
        self.assertEqual(complex_embedding(A @ C), complex_embedding(A) @ complex_embedding(C))
        self.assertEqual(complex_embedding(A.H), complex_embedding(A).H)
        self.assertEqual(from_complex_embedding(complex_embedding(A)), A)

    @given(qmatrices())
    @exact_settings(40)
    def test_embedding_rank_is_even(self, A):
        self.assertEqual(c_rank(complex_embedding(A)) % 2, 0)


class CycleDecompositionTests(SimpleTestCase):
    """Left- and right-ordered cycle forms."""

    def test_from_images(self):
        # σ = (1 3)(2)(4 5): images of 1..5
        decomposition = CycleDecomposition.from_images((3, 2, 1, 5, 4))
        self.assertEqual(decomposition.cycles, ((1, 3), (2,), (4, 5)))
        self.assertEqual(decomposition.sign, 1)

    def test_left_ordered(self):
        decomposition = CycleDecomposition.from_images((3, 2, 1, 5, 4))
        self.assertEqual(decomposition.left_ordered(5).cycles, ((5, 4), (1, 3), (2,)))
        self.assertEqual(
            decomposition.left_ordered(5).chain(),
            ((5, 4), (4, 5), (1, 3), (3, 1), (2, 2)),
        )

    def test_right_ordered(self):
        decomposition = CycleDecomposition.from_images((3, 2, 1, 5, 4))
        self.assertEqual(decomposition.right_ordered(3).cycles, ((4, 5), (2,), (3, 1)))

    def test_term_count(self):
        for n in range(1, 6):
            self.assertEqual(len(row_expansion(n, 1)), factorial(n))
            self.assertEqual(len(column_expansion(n, n)), factorial(n))


class DeterminantTests(SimpleTestCase):
    """Test suite for rdet, cdet and hdet."""

    def test_order_one(self):
        a = Quaternion(1, 2, 3, 4)
        self.assertEqual(rdet(QMatrix([[a]]), 1), a)
        self.assertEqual(cdet(QMatrix([[a]]), 1), a)

    def test_order_two(self):
        a11, a12, a21, a22 = I, J + 1, K, Quaternion(2, 0, 1)
        A = QMatrix([[a11, a12], [a21, a22]])
        self.assertEqual(rdet(A, 1), a11 * a22 - a12 * a21)
        self.assertEqual(cdet(A, 1), a22 * a11 - a12 * a21)

    def test_hermitian_examples(self):
        self.assertEqual(hdet(QMatrix.identity(4)), 1)
        self.assertEqual(hdet(M(['3', '-2k'], ['2k', '3'])), 5)
        A = load_fixture('example/A.txt')
        self.assertEqual(hdet(A.H @ A), 2)

    def test_hdet_requires_hermitian(self):
        with self.assertRaises(NotHermitian):
            hdet(M(['1', 'i'], ['i', '1']))

    def test_rejects_bad_anchor_and_shape(self):
        with self.assertRaises(IndexOutOfRange):
            rdet(QMatrix.identity(2), 3)
        with self.assertRaises(DimensionMismatch):
            cdet(QMatrix.zeros(2, 3), 1)

    def test_dimension_cap(self):
        with conf.limits(max_dim=2):
            with self.assertRaises(DimensionLimitExceeded):
                rdet(QMatrix.identity(3), 1)
            with self.assertRaises(DimensionLimitExceeded):
                minor_sum(QMatrix.identity(3), 1)
        self.assertEqual(rdet(QMatrix.identity(3), 1), ONE)

    def test_threaded_evaluation_matches_serial(self):
        A = QMatrix([
            [Quaternion(i - j, (i * j) % 3, i % 2, (i + j) % 4 - 1) for j in range(6)]
            for i in range(6)
        ])
        self.assertEqual(rdet(A, 2, threads=3), rdet(A, 2, threads=1))
        self.assertEqual(cdet(A, 5, threads=4), cdet(A, 5, threads=1))

    def test_threaded_minor_matrices_match_serial(self):
        H = load_fixture('example/A.txt')
        H = H.H @ H
        B = QMatrix.identity(H.rows)
        r = H.rank()
        self.assertEqual(rdet_minor_matrix(H, B, r, threads=4), rdet_minor_matrix(H, B, r, threads=1))
        self.assertEqual(cdet_minor_matrix(H, B, r, threads=4), cdet_minor_matrix(H, B, r, threads=1))

    @given(hermitian_matrices())
    @exact_settings(100)
    def test_hermitian_rdet_equals_cdet(self, A):
        value = rdet(A, 1)
        self.assertTrue(value.is_real())
        for index in range(1, A.rows + 1):
            self.assertEqual(rdet(A, index), value)
            self.assertEqual(cdet(A, index), value)

    @given(hermitian_matrices(max_dim=3))
    @exact_settings(30)
    def test_hdet_squared_is_embedding_determinant(self, A):
        self.assertEqual(sympy_det(complex_embedding(A)), Quaternion(hdet(A) ** 2))

    @given(square_matrices(entries=real_entries))
    @exact_settings(40)
    def test_real_matrices_give_classical_determinant(self, A):
        expected = sympy_det(CMatrix.from_qmatrix(A))
        for index in range(1, A.rows + 1):
            self.assertEqual(rdet(A, index), expected)
            self.assertEqual(cdet(A, index), expected)

    @given(st.data())
    @exact_settings(40)
    def test_row_determinant_is_left_linear(self, data):
        A = data.draw(square_matrices(max_dim=4))
        n = A.rows
        i = data.draw(st.integers(1, n))
        b1 = data.draw(qmatrices(rows=1, cols=n)).row(1)
        b2 = data.draw(qmatrices(rows=1, cols=n)).row(1)
        alpha, beta = data.draw(quaternions), data.draw(quaternions)
        combined = [alpha * x + beta * y for x, y in zip(b1, b2)]
        self.assertEqual(
            rdet(A.replace_row(i, combined), i),
            alpha * rdet(A.replace_row(i, b1), i) + beta * rdet(A.replace_row(i, b2), i),
        )

    @given(st.data())
    @exact_settings(40)
    def test_column_determinant_is_right_linear(self, data):
        A = data.draw(square_matrices(max_dim=4))
        n = A.rows
        j = data.draw(st.integers(1, n))
        c1 = data.draw(qmatrices(rows=n, cols=1)).col(1)
        c2 = data.draw(qmatrices(rows=n, cols=1)).col(1)
        alpha, beta = data.draw(quaternions), data.draw(quaternions)
        combined = [x * alpha + y * beta for x, y in zip(c1, c2)]
        self.assertEqual(
            cdet(A.replace_col(j, combined), j),
            cdet(A.replace_col(j, c1), j) * alpha + cdet(A.replace_col(j, c2), j) * beta,
        )


class MinorSumTests(SimpleTestCase):
    """Test suite for principal-minor sums and their replaced-row variants."""

    def test_index_families(self):
        self.assertEqual(len(index_sets(2, 4)), 6)
        self.assertEqual(
            [tuple(alpha) for alpha in index_sets_containing(2, 3, 2)], [(1, 2), (2, 3)]
        )

    def test_minor_sum_examples(self):
        B = M(['3', '-2k', '-2j'], ['2k', '3', '2i'], ['2j', '-2i', '2'])
        self.assertEqual(minor_sum(B, 3), hdet(B))
        self.assertEqual(minor_sum(B, 1), 8)
        for n, r in [(3, 1), (4, 2), (5, 3)]:
            self.assertEqual(minor_sum(QMatrix.identity(n), r), factorial(n) // (factorial(r) * factorial(n - r)))
        self.assertEqual(minor_sum(B, 0), 0)

    def test_full_size_replacement_is_single_term(self):
        B = M(['2', 'i'], ['-i', '3'])
        b = [J, ONE]
        self.assertEqual(rdet_minor_sum(B, 2, b, 2), rdet(B.replace_row(2, b), 2))
        self.assertEqual(cdet_minor_sum(B, 1, b, 2), cdet(B.replace_col(1, b), 1))

    def test_identity_replacement(self):
        B = M(['2', 'i', '0'], ['-i', '3', 'k'], ['0', '-k', '1'])
        expected = sum(
            (Quaternion(hdet(B.principal(alpha))) for alpha in index_sets_containing(2, 3, 2)), ZERO
        )
        self.assertEqual(rdet_minor_sum(B, 2, B.row(2), 2), expected)
        self.assertEqual(cdet_minor_sum(B, 2, B.col(2), 2), expected)

    def test_example_entry_sum(self):
        """The (1, 1) entry of the worked-example WDMP inverse is 0 over a denominator of 2."""
        A = load_fixture('example/A.txt')
        W = load_fixture('example/W.txt')
        U = W @ A
        gram = A @ A.H
        omega_tilde_row = (Q('0'), Q('-k'), Q('1'), Q('1'))
        replaced = gram.replace_row(1, omega_tilde_row)
        self.assertEqual(replaced.principal([1, 2, 3]), M(['0', '-k', '1'], ['-i', '3', 'k'], ['0', '-k', '1']))
        self.assertEqual(replaced.principal([1, 2, 4]), M(['0', '-k', '1'], ['-i', '3', '3k'], ['j', '-3k', '3']))
        self.assertEqual(rdet_minor_sum(gram, 1, omega_tilde_row, 3), ZERO)
        U5 = U.power(5)
        self.assertEqual(minor_sum(gram, 3) * minor_sum(U5 @ U5.H, 2) ** 2, 2)

    @given(hermitian_matrices(max_dim=3), st.data())
    @exact_settings(40)
    def test_column_sum_is_conjugate_of_row_sum(self, B, data):
        n = B.rows
        i = data.draw(st.integers(1, n))
        r = data.draw(st.integers(1, n))
        c = data.draw(qmatrices(rows=n, cols=1)).col(1)
        self.assertEqual(
            cdet_minor_sum(B, i, c, r),
            rdet_minor_sum(B, i, [q.conjugate() for q in c], r).conjugate(),
        )

    @given(qmatrices(max_dim=3))
    @exact_settings(30)
    def test_minor_matrices_agree_with_pseudoinverse_identity(self, A):
        """R(AA*, A*) and C(A*A, A*) both equal d·A† and so each other after scaling."""
        r = A.rank()
        row_side = rdet_minor_matrix(A @ A.H, A.H, r)
        column_side = cdet_minor_matrix(A.H @ A, A.H, r)
        d_row = minor_sum(A @ A.H, r)
        d_col = minor_sum(A.H @ A, r)
        self.assertEqual(d_row, d_col)
        self.assertEqual(row_side, column_side)
