# -*- coding: utf-8; mode: Python -*-
import os
import tempfile
import unittest

import dompoly


class configuration_test(unittest.TestCase):
    def _write(self, text):
        fd, path = tempfile.mkstemp(suffix='.conf')
        with os.fdopen(fd, 'w', encoding='utf-8') as f:
            f.write(text)
        self.addCleanup(os.remove, path)
        return path

    def test_defaults(self):
        config = dompoly.Configuration()
        self.assertEqual(config.cap, 26)
        self.assertEqual(config.inner_bits, 16)
        self.assertEqual(config.offender_cap, 100)
        self.assertEqual(config.progress_every, 10000)
        self.assertFalse(config.long_run)
        self.assertGreaterEqual(config.threads, 1)

    def test_missing_files_are_skipped(self):
        config = dompoly.load_configuration(['/nonexistent/dompoly.conf'])
        self.assertEqual(config.cap, 26)

    def test_required_missing_file(self):
        self.assertRaises(IOError, dompoly.load_configuration,
                          '/nonexistent/dompoly.conf', True)

    def test_values_from_file(self):
        path = self._write('[enumeration]\ncap = 20\nthreads = 3\n'
                           'inner_bits = 12\n\n[experiments]\n'
                           'offender_cap = 5\nprogress_every = 50\n')
        config = dompoly.load_configuration(path, required=True)
        self.assertEqual(config.cap, 20)
        self.assertEqual(config.threads, 3)
        self.assertEqual(config.inner_bits, 12)
        self.assertEqual(config.offender_cap, 5)
        self.assertEqual(config.progress_every, 50)

    def test_invalid_values_keep_defaults(self):
        path = self._write('[enumeration]\ncap = lots\nthreads = 0\n')
        with self.assertLogs('dompoly', level='WARNING'):
            config = dompoly.load_configuration([path])
        self.assertEqual(config.cap, 26)
        self.assertGreaterEqual(config.threads, 1)
