# -*- coding: utf-8; mode: Python -*-
from fractions import Fraction
import itertools
import math
import unittest

from dompoly import fixtures
from dompoly.commons import PolynomialError
from dompoly.polylib.coeffseq import CoeffSeq
from dompoly.polylib.shape import analyze_shape, is_unimodal_bruteforce, \
    avd_from_poly, floor_ceil


class shape_test(unittest.TestCase):
    def test_reports(self):
        # coefficients, unimodal, mode_set, logconcave, lc_witness, tail_from
        cases = [
            ((0, 0, 4, 4, 1), True, (2, 3), True, None, 2),
            (fixtures.NON_LOGCONCAVE_9_COEFFS, True, (5,), False, 3, 5),
            ((1, 3, 1, 3, 1), False, (1, 3), False, 2, 3),
            ((2, 2, 2), True, (0, 1, 2), True, None, 0),
            ((0, 1), True, (1,), True, None, 1),
            ((0, 0, 3, 14, 15, 6, 1), True, (4,), True, None, 4),
        ]
        for coeffs, unimodal, modes, lc, witness, tail in cases:
            report = analyze_shape(CoeffSeq(coeffs))
            self.assertEqual(report.unimodal, unimodal, coeffs)
            self.assertEqual(report.mode_set, modes, coeffs)
            self.assertEqual(report.mode_max, modes[-1], coeffs)
            self.assertEqual(report.logconcave, lc, coeffs)
            self.assertEqual(report.lc_witness, witness, coeffs)
            self.assertEqual(report.tail_from, tail, coeffs)

    def test_trailing_zeros_ignored(self):
        self.assertEqual(analyze_shape(CoeffSeq([0, 1, 2, 0, 0])),
                         analyze_shape(CoeffSeq([0, 1, 2])))

    def test_zero_polynomial(self):
        for fn in (analyze_shape, is_unimodal_bruteforce, avd_from_poly):
            self.assertRaises(PolynomialError, fn, CoeffSeq([0, 0]))

    def test_unimodal_against_bruteforce(self):
        for coeffs in itertools.product(range(3), repeat=5):
            if not any(coeffs):
                continue
            p = CoeffSeq(coeffs)
            self.assertEqual(analyze_shape(p).unimodal,
                             is_unimodal_bruteforce(p), coeffs)

    def test_logconcave_implies_unimodal_without_gaps(self):
        for coeffs in itertools.product(range(1, 4), repeat=4):
            report = analyze_shape(CoeffSeq(coeffs))
            if report.logconcave:
                self.assertTrue(report.unimodal, coeffs)

    def test_avd(self):
        cases = [
            ((0, 0, 4, 4, 1), Fraction(8, 3)),
            ((0, 3, 3, 1), Fraction(12, 7)),
            ((0, 1), Fraction(1)),
        ]
        for coeffs, expected in cases:
            self.assertEqual(avd_from_poly(CoeffSeq(coeffs)), expected)

    def test_avd_of_binomial_powers(self):
        for n in range(1, 31):
            binomial = CoeffSeq(math.comb(n, i) for i in range(n + 1))
            self.assertEqual(avd_from_poly(binomial), Fraction(n, 2), n)

    def test_floor_ceil(self):
        cases = [
            (Fraction(8, 3), (2, 3)),
            (Fraction(4), (4, 4)),
            (Fraction(12, 7), (1, 2)),
        ]
        for q, expected in cases:
            self.assertEqual(floor_ceil(q), expected)

    def test_serialization(self):
        report = analyze_shape(CoeffSeq([0, 0, 4, 4, 1]))
        self.assertEqual(report.as_dict()['mode_set'], [2, 3])
        rows = dict(report.csv_rows()[1:])
        self.assertEqual(rows['mode_set'], '2 3')
        self.assertEqual(rows['lc_witness'], '')
        self.assertEqual(rows['tail_from'], 2)
