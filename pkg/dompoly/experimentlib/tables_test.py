# -*- coding: utf-8; mode: Python -*-
import unittest

import dompoly
from dompoly.experimentlib import tables
from dompoly.graphlib import families


class broken_table(tables.GoldenTable):
    name = 'broken'
    title = 'Paths with a wrong row'
    family = families.Path
    golden = [(2, (0, 2, 1), 1), (3, (0, 1, 3, 2), 2)]


class tables_test(unittest.TestCase):
    def setUp(self):
        self.config = dompoly.Configuration()
        self.config.threads = 1

    def test_golden_tables(self):
        cases = [
            ('t1paths', [1, 2, 3, 4], [1, 1, 2, 3]),
            ('t1cycles', [3, 4, 5, 6], [2, 2, 3, 4]),
            ('t2L', [4, 5, 6, 7], [2, 3, 4, 4]),
        ]
        for name, orders, modes in cases:
            report = tables.reproduce_table(name, self.config)
            self.assertTrue(report.match, name)
            self.assertEqual([row.n for row in report.rows], orders)
            self.assertEqual([row.mode_max for row in report.rows], modes)

    def test_mismatch_is_reported(self):
        with self.assertLogs('dompoly', level='ERROR'):
            report = broken_table().reproduce(self.config)
        self.assertFalse(report.match)
        self.assertEqual([row.match for row in report.rows], [True, False])

    def test_registry(self):
        self.assertEqual([t.name for t in tables.get_tables()],
                         ['t1paths', 't1cycles', 't2L'])
        self.assertRaises(LookupError, tables.reproduce_table, 't3')

    def test_serialization(self):
        report = tables.reproduce_table('t1paths', self.config)
        rows = report.csv_rows()
        self.assertEqual(rows[0], ('table', 'n', 'coefficients', 'mode_max',
                                   'match'))
        self.assertEqual(rows[4], ('t1paths', 4, '0 0 4 4 1', 3, 1))

        data = report.as_dict()
        self.assertEqual(data['table'], 't1paths')
        self.assertTrue(data['match'])
        self.assertEqual(data['rows'][3].as_dict()['text'], 'x^4+4x^3+4x^2')
