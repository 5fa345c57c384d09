# -*- coding: utf-8; mode: Python -*-
from fractions import Fraction
import unittest

import dompoly
from dompoly import fixtures
from dompoly.analysislib import certificates
from dompoly.commons import GraphError, PreconditionError, SoundnessError
from dompoly.domlib.enumeration import brute_force_profile
from dompoly.domlib.multipartite import multipartite_profile
from dompoly.domlib.profile import DominationProfile
from dompoly.graphlib import families
from dompoly.graphlib.graph import complete_graph


def serial_config():
    config = dompoly.Configuration()
    config.threads = 1
    return config

def profile_of(g):
    return brute_force_profile(g, serial_config())


class certificate_test(unittest.TestCase):
    def test_verified_needs_applicable(self):
        self.assertRaises(ValueError, certificates.Certificate,
                          certificates.PROP25, False, True)

    def test_holds(self):
        cases = [
            ((True, True), True),
            ((False, False), True),
            ((True, False), False),
        ]
        for (applicable, verified), expected in cases:
            cert = certificates.Certificate(certificates.THM32, applicable,
                                            verified)
            self.assertEqual(cert.holds, expected)

    def test_require_sound(self):
        failed = certificates.Certificate(certificates.LEMMA31, True, False,
                                          {'k': 2})
        with self.assertLogs('dompoly', level='ERROR'):
            self.assertRaises(SoundnessError, certificates.require_sound,
                              failed)
        empirical = certificates.Certificate(
            certificates.TAIL_THREE_QUARTERS, True, False)
        self.assertIs(certificates.require_sound(empirical), empirical)

    def test_as_dict(self):
        cert = certificates.prop25_check(DominationProfile(2, [0, 2, 1]))
        self.assertEqual(cert.as_dict(), {
            'kind': 'Prop25', 'applicable': True, 'verified': True,
            'details': {'violation': None}})


class lemma31_test(unittest.TestCase):
    def test_certificates(self):
        # profile, k, applicable, verified
        cases = [
            (profile_of(complete_graph(6)), None, True, True),
            (profile_of(fixtures.non_logconcave_9()), None, True, True),
            (profile_of(families.generate(families.Path(6))), None, False,
             False),
            (DominationProfile(4, [0, 0, 4, 2, 3]), 2, True, False),
        ]
        for profile, k, applicable, verified in cases:
            cert = certificates.lemma31_certificate(profile, k)
            self.assertEqual(cert.kind, certificates.LEMMA31)
            self.assertEqual(cert.applicable, applicable, profile)
            self.assertEqual(cert.verified, verified, profile)

    def test_details(self):
        cert = certificates.lemma31_certificate(
            profile_of(families.generate(families.Path(6))))
        self.assertEqual(cert.details['k'], 3)
        self.assertEqual(cert.details['r_k'], Fraction(1, 2))
        self.assertEqual(cert.details['threshold'], Fraction(3, 4))

        cert = certificates.lemma31_certificate(
            DominationProfile(4, [0, 0, 4, 2, 3]), 2)
        self.assertEqual(cert.details['violation'], 3)

    def test_index_range(self):
        profile = profile_of(families.generate(families.Path(6)))
        self.assertRaises(PreconditionError,
                          certificates.lemma31_certificate, profile, 2)
        self.assertRaises(PreconditionError,
                          certificates.lemma31_certificate, profile, 7)

    def test_sound_on_random_graphs(self):
        for n in range(5, 13):
            for seed in range(6):
                g = families.generate(families.ErdosRenyi(n, '1/2', seed))
                profile = profile_of(g)
                for k in range((n + 1) // 2, n + 1):
                    certificates.require_sound(
                        certificates.lemma31_certificate(profile, k))


class thm32_test(unittest.TestCase):
    def test_certificates(self):
        cases = [
            (complete_graph(7), True, True),
            (complete_graph(6), False, False),
            (families.generate(families.Path(4)), False, False),
        ]
        for g, applicable, verified in cases:
            cert = certificates.thm32_certificate(g, profile_of(g))
            self.assertEqual(cert.applicable, applicable, g)
            self.assertEqual(cert.verified, verified, g)

    def test_balanced_bipartite(self):
        g = families.generate(families.CompleteMultipartite((8, 8)))
        cert = certificates.thm32_certificate(g, multipartite_profile((8, 8)))
        self.assertTrue(cert.applicable)
        self.assertTrue(cert.verified)
        self.assertEqual(cert.details['half'], 8)
        self.assertEqual(cert.details['mode_set'], [8])

    def test_complete_graphs(self):
        for n in range(7, 40):
            cert = certificates.thm32_certificate(
                complete_graph(n), multipartite_profile([1] * n))
            self.assertTrue(certificates.require_sound(cert).verified, n)

    def test_brute_force_soundness(self):
        graphs = [complete_graph(n) for n in range(7, 23)]
        graphs += [families.generate(families.CompleteMultipartite((m, m)))
                   for m in (8, 9, 10)]
        for g in graphs:
            profile = profile_of(g)
            cert = certificates.require_sound(
                certificates.thm32_certificate(g, profile))
            self.assertTrue(cert.applicable, g)
            self.assertTrue(cert.verified, g)
            avd = certificates.require_sound(
                certificates.thm32_avd_check(g, profile))
            self.assertTrue(avd.verified, g)

    def test_order_mismatch(self):
        self.assertRaises(GraphError, certificates.thm32_certificate,
                          complete_graph(7), multipartite_profile([1] * 6))
        self.assertRaises(GraphError, certificates.thm32_avd_check,
                          complete_graph(7), multipartite_profile([1] * 6))


class thm32_avd_test(unittest.TestCase):
    def test_qualified_graphs(self):
        cert = certificates.thm32_avd_check(complete_graph(7),
                                            multipartite_profile([1] * 7))
        self.assertTrue(cert.applicable)
        self.assertTrue(cert.verified)
        self.assertEqual(cert.details['avd'], Fraction(448, 127))

    def test_not_applicable(self):
        p4 = families.generate(families.Path(4))
        cert = certificates.thm32_avd_check(p4, profile_of(p4))
        self.assertFalse(cert.applicable)
        self.assertFalse(cert.verified)
        self.assertIs(certificates.require_sound(cert), cert)

    def test_failure_is_unsound(self):
        # avd 7 is above (n+1)/2 = 4
        profile = DominationProfile(7, [0, 0, 0, 0, 0, 0, 0, 1])
        cert = certificates.thm32_avd_check(complete_graph(7), profile)
        self.assertTrue(cert.applicable)
        self.assertFalse(cert.verified)
        with self.assertLogs('dompoly', level='ERROR'):
            self.assertRaises(SoundnessError, certificates.require_sound,
                              cert)


class property_checks_test(unittest.TestCase):
    def test_prop25(self):
        cert = certificates.prop25_check(DominationProfile(4, [0, 0, 4, 4, 1]))
        self.assertTrue(cert.verified)
        cert = certificates.prop25_check(DominationProfile(4, [0, 2, 1, 1, 1]))
        self.assertFalse(cert.verified)
        self.assertEqual(cert.details['violation'], 1)
        with self.assertLogs('dompoly', level='ERROR'):
            self.assertRaises(SoundnessError, certificates.require_sound, cert)

    def test_prop25_on_random_graphs(self):
        for n in (9, 12):
            for p in ('1/5', '1/2', '4/5'):
                for seed in range(4):
                    g = families.generate(families.ErdosRenyi(n, p, seed))
                    certificates.require_sound(
                        certificates.prop25_check(profile_of(g)))

    def test_tail(self):
        p4 = DominationProfile(4, [0, 0, 4, 4, 1])
        cert = certificates.tail_nonincreasing_check(p4)
        self.assertTrue(cert.verified)
        self.assertEqual(cert.details['from'], 3)

        cert = certificates.tail_nonincreasing_check(p4, isolated_free=False)
        self.assertFalse(cert.applicable)
        self.assertTrue(cert.holds)

        cert = certificates.tail_nonincreasing_check(
            DominationProfile(4, [0, 0, 1, 1, 2]))
        self.assertFalse(cert.holds)
        self.assertIs(certificates.require_sound(cert), cert)

    def test_universal_vertex(self):
        for spec in (families.Friendship(3), families.UniversalMatching(3),
                     families.Complete(5)):
            g = families.generate(spec)
            cert = certificates.universal_vertex_ratio_check(g, profile_of(g))
            self.assertTrue(cert.verified, spec)
            self.assertEqual(cert.details['universal'],
                             g.universal_vertices())

        star = families.generate(families.CompleteMultipartite((1, 3)))
        cert = certificates.universal_vertex_ratio_check(
            star, DominationProfile(4, [0, 1, 0, 0, 1]))
        self.assertEqual(cert.details['violation'], 2)
        with self.assertLogs('dompoly', level='ERROR'):
            self.assertRaises(SoundnessError, certificates.require_sound, cert)

        p4 = families.generate(families.Path(4))
        self.assertRaises(GraphError, certificates.universal_vertex_ratio_check,
                          p4, profile_of(p4))

    def test_avd_bounds(self):
        cert = certificates.avd_bounds_check(multipartite_profile([1] * 7))
        self.assertTrue(cert.verified)
        self.assertEqual(cert.details['avd'], Fraction(448, 127))
        self.assertEqual(cert.details['low'], Fraction(7, 2))

        cert = certificates.avd_bounds_check(
            DominationProfile(4, [0, 0, 4, 4, 1]))
        self.assertTrue(cert.applicable)
        self.assertFalse(cert.verified)
        self.assertIs(certificates.require_sound(cert), cert)
