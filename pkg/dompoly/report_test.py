# -*- coding: utf-8; mode: Python -*-
from fractions import Fraction
import json
import unittest

import dompoly
from dompoly import report
from dompoly.analysislib import checks
from dompoly.domlib.profile import DominationProfile
from dompoly.experimentlib import tables
from dompoly.polylib.coeffseq import CoeffSeq


class jsonable_test(unittest.TestCase):
    def test_values(self):
        cases = [
            (None, None),
            (True, True),
            (12, 12),
            ('x', 'x'),
            (Fraction(3, 4), {'num': '3', 'den': '4'}),
            (Fraction(-2), {'num': '-2', 'den': '1'}),
            (CoeffSeq([0, 2, 1]), ['0', '2', '1']),
            ((1, Fraction(1, 2)), [1, {'num': '1', 'den': '2'}]),
            ({3: [None]}, {'3': [None]}),
        ]
        for value, expected in cases:
            self.assertEqual(report.jsonable(value), expected)

    def test_reports(self):
        result = checks.CheckResult('prop25', True, {'r': Fraction(1, 3)})
        self.assertEqual(report.jsonable(result), {
            'name': 'prop25', 'ok': True,
            'result': {'r': {'num': '1', 'den': '3'}}})

    def test_unknown_type(self):
        self.assertRaises(TypeError, report.jsonable, object())
        self.assertRaises(TypeError, report.jsonable, 0.5)


class render_test(unittest.TestCase):
    def setUp(self):
        self.profile = DominationProfile(2, [0, 2, 1])

    def test_json(self):
        text = report.render_report(self.profile)
        self.assertTrue(text.endswith('\n'))
        self.assertEqual(text, '{"n":2,"gamma":1,"d":["0","2","1"],"r":['
                               '{"num":"0","den":"1"},{"num":"1","den":"1"},'
                               '{"num":"1","den":"1"}]}\n')

    def test_json_meta(self):
        text = report.render_report(self.profile, 'json',
                                    {'tool': 'dompoly', 'version': '1.0'})
        data = json.loads(text)
        self.assertEqual(list(data), ['meta', 'result'])
        self.assertEqual(data['meta']['tool'], 'dompoly')
        self.assertEqual(data['result']['d'], ['0', '2', '1'])

    def test_big_integers_stay_exact(self):
        text = report.render_report(CoeffSeq([2 ** 80, 1]))
        self.assertEqual(json.loads(text), [str(2 ** 80), '1'])

    def test_deterministic(self):
        config = dompoly.Configuration()
        config.threads = 1
        a = report.render_report(tables.reproduce_table('t2L', config))
        b = report.render_report(tables.reproduce_table('t2L', config))
        self.assertEqual(a, b)

    def test_csv(self):
        self.assertEqual(report.render_report(self.profile, 'csv'),
                         'i,d_i,r_i_num,r_i_den\n0,0,0,1\n1,2,1,1\n2,1,1,1\n')

    def test_csv_coefficients(self):
        self.assertEqual(report.render_report(CoeffSeq([0, 2, 1]), 'csv'),
                         'degree,coefficient\n0,0\n1,2\n2,1\n')

    def test_csv_concatenation(self):
        config = dompoly.Configuration()
        config.threads = 1
        reports = [tables.reproduce_table(name, config)
                   for name in ('t1paths', 't1cycles')]
        lines = report.render_report(reports, 'csv').splitlines()
        self.assertEqual(len(lines), 1 + 4 + 4)
        self.assertTrue(lines[0].startswith('table,'))
        self.assertEqual(lines[5], 't1cycles,3,0 3 3 1,2,1')

    def test_errors(self):
        self.assertRaises(ValueError, report.render_report, self.profile,
                          'xml')
        self.assertRaises(ValueError, report.render_report,
                          {'profile': self.profile}, 'csv')
        self.assertFalse(report.supports_csv([self.profile, {}]))
        self.assertTrue(report.supports_csv([self.profile]))
