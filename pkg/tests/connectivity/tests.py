from unittest import mock

from tempocover.connectivity import (BACKWARD, BOTH, FORWARD, ConnectivityGraph,
                                     connectivity_graph, earliest_arrival, foremost_path,
                                     max_temporal_antichain, maximum_independent_set,
                                     reach_masks, reach_set)
from tempocover.core import GraphClass, NEG_INF, TemporalDigraph, TemporalPath, validate_path
from tempocover.gen import (line, random_instance, rooted_example, star,
                            transitive_tournament)
from tempocover.treesolve import tpc_oriented_tree
from tempocover.weakchord import StaticGraph, exhaustive_independent_set

from ..utils import TestCase


class ReachabilityTests(TestCase):
    def test_strictly_increasing(self):
        D = line([1, 1])
        self.assertEqual(reach_set(D, 0), set([1]))
        D = line([1, 2])
        self.assertEqual(reach_set(D, 0), set([1, 2]))
        self.assertEqual(reach_set(D, 2), set())

    def test_earliest_arrival(self):
        D = TemporalDigraph(4, [(0, 1, [2, 5]), (1, 2, [3, 6]), (0, 3, 9), (3, 2, 1)])
        self.assertEqual(earliest_arrival(D, 0), {0: NEG_INF, 1: 2, 2: 3, 3: 9})
        self.assertEqual(earliest_arrival(D, 3), {3: NEG_INF, 2: 1})

    def test_foremost_path(self):
        D = TemporalDigraph(4, [(0, 1, [2, 5]), (1, 2, [3, 6]), (0, 3, 1), (3, 2, 4)])
        self.assertEqual(foremost_path(D, 0, 2), TemporalPath([(0, 1, 2), (1, 2, 3)]))
        self.assertEqual(foremost_path(D, 2, 2), TemporalPath.single(2))
        self.assertIsNone(foremost_path(D, 2, 0))

    def test_tournament_is_complete(self):
        D = transitive_tournament(5)
        G = connectivity_graph(D)
        self.assertEqual(len(G.edges), 10)
        # but only direct arcs realize the connections
        self.assertEqual(reach_set(D, 0), set([1, 2, 3, 4]))
        self.assertEqual(foremost_path(D, 0, 4), TemporalPath([(0, 4, 1)]))

    def test_parallel_masks(self):
        for seed in range(3):
            D = random_instance(GraphClass.GENERAL, 8, 2, 4, seed=seed)
            self.assertEqual(reach_masks(D, jobs=2), reach_masks(D))


class ConnectivityGraphTests(TestCase):
    def test_direction(self):
        G = connectivity_graph(TemporalDigraph(3, [(0, 1, 1), (1, 0, 2), (1, 2, 3)]))
        self.assertEqual(G.direction(0, 1), BOTH)
        self.assertEqual(G.direction(0, 2), FORWARD)
        self.assertEqual(G.direction(2, 1), BACKWARD)
        self.assertEqual(ConnectivityGraph(2, [0, 0]).direction(0, 1), None)

    def test_star(self):
        G = connectivity_graph(star(2))
        self.assertEqual(G.edges, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4),
                                   (2, 3), (2, 4)])
        self.assertEqual(G.neighbors(3), set([0, 1, 2]))
        self.assertEqual(sorted(G.to_networkx().edges()), G.edges)

    def test_foremost_paths_validate(self):
        for seed in range(10):
            D = random_instance(GraphClass.ORIENTED_TREE, 9, 2, 5, seed=seed)
            for u in D.vertices:
                for v in reach_set(D, u):
                    path = foremost_path(D, u, v)
                    self.assertTrue(validate_path(D, path))
                    self.assertEqual((path.source, path.sink), (u, v))


class AntichainTests(TestCase):
    def test_known_values(self):
        self.assertEqual(len(max_temporal_antichain(transitive_tournament(6))), 1)
        self.assertEqual(len(max_temporal_antichain(star(3))), 3)
        self.assertEqual(len(max_temporal_antichain(rooted_example())), 3)

    def test_antichain_is_independent(self):
        for seed in range(15):
            D = random_instance(GraphClass.DAG, 9, 2, 4, seed=seed)
            G = connectivity_graph(D)
            antichain = max_temporal_antichain(D)
            static = StaticGraph(G.vertex_count, G.edges)
            self.assertTrue(static.is_independent(antichain))
            self.assertEqual(len(antichain), len(exhaustive_independent_set(static)))

    def test_oriented_tree_skips_recognition(self):
        T = random_instance(GraphClass.ORIENTED_TREE, 60, 2, 5, seed=3)
        with mock.patch('tempocover.weakchord.is_weakly_chordal') as recognize:
            antichain = max_temporal_antichain(T)
        self.assertFalse(recognize.called)
        G = connectivity_graph(T)
        self.assertTrue(StaticGraph(G.vertex_count, G.edges).is_independent(antichain))
        # antichain and path cover sizes agree on oriented trees
        self.assertEqual(len(antichain), tpc_oriented_tree(T).size)

    def test_branch_and_bound(self):
        # 5-cycle plus a pendant vertex
        static = StaticGraph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (4, 5)])
        result = maximum_independent_set(6, static.adjacency)
        self.assertEqual(len(result), 3)
        self.assertTrue(static.is_independent(result))
        self.assertEqual(maximum_independent_set(1, [0]), set([0]))
