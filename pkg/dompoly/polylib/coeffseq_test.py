# -*- coding: utf-8; mode: Python -*-
import itertools
import unittest

from dompoly.commons import PolynomialError
from dompoly.polylib.coeffseq import CoeffSeq, poly_add, shift_by_x, \
    monomial, format_poly


class coeffseq_test(unittest.TestCase):
    def test_normalized_equality(self):
        self.assertEqual(CoeffSeq([1, 2, 0, 0]), CoeffSeq([1, 2]))
        self.assertEqual(hash(CoeffSeq([1, 2, 0])), hash(CoeffSeq([1, 2])))
        self.assertNotEqual(CoeffSeq([1, 2]), CoeffSeq([2, 1]))
        self.assertEqual(CoeffSeq([1, 2, 0]).normalized().coeffs, (1, 2))
        self.assertEqual(len(CoeffSeq([1, 2, 0])), 3)

    def test_degree(self):
        cases = [
            ([0, 0, 4, 4, 1], 4),
            ([5], 0),
            ([0, 0, 0], -1),
            ([], -1),
        ]
        for coeffs, expected in cases:
            self.assertEqual(CoeffSeq(coeffs).degree, expected)
        self.assertTrue(CoeffSeq([0, 0]).is_zero())
        self.assertFalse(CoeffSeq([0, 1]).is_zero())

    def test_invalid_coefficients(self):
        self.assertRaises(PolynomialError, CoeffSeq, [1, -1])
        self.assertRaises(PolynomialError, CoeffSeq, ['x'])
        self.assertRaises(PolynomialError, CoeffSeq, [None])

    def test_arithmetic(self):
        cases = [
            (poly_add(CoeffSeq([1, 2]), CoeffSeq([0, 0, 3])), (1, 2, 3)),
            (CoeffSeq([1]) + CoeffSeq([1, 1]), (2, 1)),
            (shift_by_x(CoeffSeq([1, 2])), (0, 1, 2)),
            (monomial(3), (0, 0, 0, 1)),
            (monomial(2, 5), (0, 0, 5)),
            (CoeffSeq([1]).padded(4), (1, 0, 0, 0)),
        ]
        for poly, expected in cases:
            self.assertEqual(poly.coeffs, expected)

    def test_addition_laws(self):
        polys = [CoeffSeq(c) for c in
                 ([], [0], [1], [0, 0, 4, 4, 1], [3, 0, 7, 0, 0],
                  [2 ** 70, 1], [0, 3, 3, 1])]
        for p, q in itertools.product(polys, repeat=2):
            self.assertEqual(poly_add(p, q), poly_add(q, p), (p, q))
            self.assertEqual(shift_by_x(poly_add(p, q)),
                             poly_add(shift_by_x(p), shift_by_x(q)), (p, q))
        for p, q, r in itertools.product(polys, repeat=3):
            self.assertEqual(poly_add(poly_add(p, q), r),
                             poly_add(p, poly_add(q, r)), (p, q, r))

    def test_coeff_access(self):
        p = CoeffSeq([3, 0, 7])
        self.assertEqual(p.coeff(2), 7)
        self.assertEqual(p.coeff(10), 0)
        self.assertEqual(p[0], 3)
        self.assertEqual(list(p), [3, 0, 7])

    def test_evaluation(self):
        p4 = CoeffSeq([0, 0, 4, 4, 1])
        self.assertEqual(p4.value_at_one(), 9)
        self.assertEqual(p4.derivative_at_one(), 24)

    def test_big_coefficients(self):
        big = 2 ** 100 + 1
        p = CoeffSeq([big, 1])
        self.assertEqual(p.as_json(), [str(big), '1'])
        self.assertEqual(CoeffSeq.from_json(p.as_json()), p)
        self.assertEqual((p + p)[0], 2 * big)

    def test_format(self):
        cases = [
            ([0, 0, 4, 4, 1], 'x^4+4x^3+4x^2'),
            ([1, 1], 'x+1'),
            ([0, 3, 3, 1], 'x^3+3x^2+3x'),
            ([7], '7'),
            ([], '0'),
            ([0, 0], '0'),
        ]
        for coeffs, expected in cases:
            self.assertEqual(format_poly(CoeffSeq(coeffs)), expected)
            self.assertEqual(str(CoeffSeq(coeffs)), expected)

    def test_csv_rows(self):
        self.assertEqual(CoeffSeq([0, 2, 1]).csv_rows(),
                         [('degree', 'coefficient'), (0, 0), (1, 2), (2, 1)])
