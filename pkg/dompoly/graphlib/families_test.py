# -*- coding: utf-8; mode: Python -*-
from fractions import Fraction
import unittest

import numpy as np

from dompoly.commons import GraphError
from dompoly.graphlib import families
from dompoly.graphlib.graph import complete_graph, empty_graph


class families_test(unittest.TestCase):
    def test_small_members(self):
        cases = [
            (families.Path(1), 1, []),
            (families.Path(4), 4, [(0, 1), (1, 2), (2, 3)]),
            (families.Cycle(4), 4, [(0, 1), (0, 3), (1, 2), (2, 3)]),
            (families.LGraph(4), 4, [(0, 1), (0, 2), (1, 2), (2, 3)]),
            (families.LGraph(6), 6, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4),
                                     (4, 5)]),
            (families.MatchingUnion(2), 4, [(0, 1), (2, 3)]),
            (families.Friendship(2), 5, [(0, 1), (0, 2), (0, 3), (0, 4),
                                         (1, 2), (3, 4)]),
            (families.UniversalMatching(1), 4, [(0, 1), (0, 2), (0, 3),
                                                (1, 2)]),
            (families.Empty(3), 3, []),
        ]
        for spec, n, edges in cases:
            g = families.generate(spec)
            self.assertEqual(spec.order(), n, spec)
            self.assertEqual(g.n, n, spec)
            self.assertEqual(g.edges(), edges, spec)

    def test_complete_multipartite(self):
        g = families.generate(families.CompleteMultipartite([2, 3]))
        self.assertEqual(g.n, 5)
        self.assertEqual(g.edge_count(), 6)
        self.assertEqual(g.degree_sequence(), [3, 3, 2, 2, 2])
        self.assertEqual(
            families.generate(families.CompleteMultipartite((1, 1, 1, 1))),
            complete_graph(4))
        self.assertEqual(
            families.generate(families.CompleteMultipartite((3,))),
            empty_graph(3))

    def test_corona(self):
        g = families.generate(families.Corona(3, 2))
        self.assertEqual(g.n, 9)
        self.assertEqual(g.edge_count(), 11)
        self.assertEqual(g.degree_sequence(), [4, 3, 3, 2, 2, 2, 2, 2, 2])

    def test_friendship_and_universal_matching(self):
        for k in range(1, 6):
            g = families.generate(families.Friendship(k))
            self.assertEqual(g.universal_vertices(), [0])
            self.assertEqual(g.edge_count(), 3 * k)
            g = families.generate(families.UniversalMatching(k))
            self.assertEqual(g.universal_vertices(), [0])
            self.assertEqual(g.degree(2 * k + 1), 1)

    def test_invalid_parameters(self):
        bad = [
            families.Path(0),
            families.Path(65),
            families.Cycle(2),
            families.LGraph(3),
            families.CompleteMultipartite(()),
            families.CompleteMultipartite((0, 2)),
            families.CompleteMultipartite((40, 30)),
            families.Complete(0),
            families.MatchingUnion(0),
            families.Friendship(32),
            families.UniversalMatching(32),
            families.Corona(8, 8),
            families.ErdosRenyi(5, '1/2', -1),
            families.ErdosRenyi(5, '1/2', 1 << 64),
            families.ErdosRenyi(65, '1/2', 0),
        ]
        for spec in bad:
            self.assertRaises(GraphError, families.generate, spec)

    def test_registry(self):
        self.assertIs(families.get_family_class_by_name('L'),
                      families.LGraph)
        self.assertIs(families.get_family_class_by_name('gnp'),
                      families.ErdosRenyi)
        self.assertRaises(LookupError, families.get_family_class_by_name,
                          'petersen')
        names = [f.name for f in families.get_families()]
        self.assertEqual(len(names), len(set(names)))


class erdos_renyi_test(unittest.TestCase):
    def test_probability_parsing(self):
        cases = [
            ('1/2', Fraction(1, 2)),
            ('0.25', Fraction(1, 4)),
            (Fraction(4, 5), Fraction(4, 5)),
            (1, Fraction(1)),
            (0, Fraction(0)),
        ]
        for value, expected in cases:
            self.assertEqual(families.parse_probability(value), expected)
        for value in (0.5, '3/2', '-1/3', 'half', '1/0'):
            self.assertRaises(GraphError, families.parse_probability, value)

    def test_deterministic(self):
        a = families.generate(families.ErdosRenyi(12, '1/2', 42))
        b = families.generate(families.ErdosRenyi(12, Fraction(1, 2), 42))
        self.assertEqual(a, b)

    def test_pair_draws(self):
        # each pair, in lexicographic order, consumes one raw 64-bit word
        n, seed = 9, 7
        draws = np.random.PCG64(seed).random_raw(n * (n - 1) // 2).tolist()
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        expected = [pair for pair, u in zip(pairs, draws) if u < 1 << 63]
        g = families.generate(families.ErdosRenyi(n, '1/2', seed))
        self.assertEqual(g.edges(), expected)

    def test_extreme_probabilities(self):
        self.assertEqual(families.generate(families.ErdosRenyi(8, 0, 3)),
                         empty_graph(8))
        self.assertEqual(families.generate(families.ErdosRenyi(8, 1, 3)),
                         complete_graph(8))
        self.assertEqual(families.generate(families.ErdosRenyi(0, '1/2', 3)),
                         empty_graph(0))
