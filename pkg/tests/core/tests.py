"""
Temporal digraphs, paths, disjointness, covers and graph classes.
"""
from tempocover.core import (GraphClass, Interval, PathCover, TemporalDigraph, TemporalPath,
                             NEG_INF, POS_INF, PLAIN, TEMPORALLY_DISJOINT, CLASS_RANK,
                             are_temporally_disjoint, belongs_to, classify, occupation,
                             require_class, temporally_disjoint_by_arcs, validate_path,
                             verify_cover)
from tempocover.exceptions import DomainError, GraphClassError, MalformedInput
from tempocover.gen import (line, random_instance, rooted_example, star,
                            transitive_tournament)

from ..utils import TestCase


def P(*steps):
    return TemporalPath(steps)


class TemporalDigraphTests(TestCase):
    def test_merge_records(self):
        D = TemporalDigraph(3, [(0, 1, 3), (0, 1, [1, 3]), (1, 2, 2)])
        self.assertEqual(D.labels(0, 1), (1, 3))
        self.assertEqual(len(D.arcs), 2)
        self.assertEqual(D.t_max, 3)
        self.assertEqual(D.max_labels, 2)
        self.assertEqual(D.label_count, 3)

    def test_arcless(self):
        D = TemporalDigraph(2)
        self.assertEqual(D.t_max, 0)
        self.assertEqual(D.max_labels, 0)
        self.assertEqual(D.arc_events(), [])

    def test_malformed(self):
        self.assertRaisesRegex(MalformedInput, "Self-loops",
                               TemporalDigraph, 2, [(1, 1, 1)])
        self.assertRaisesRegex(MalformedInput, "positive integers",
                               TemporalDigraph, 2, [(0, 1, 0)])
        self.assertRaisesRegex(MalformedInput, r"Head id must be an integer in \[0, 2\)",
                               TemporalDigraph, 2, [(0, 2, 1)])
        self.assertRaisesRegex(MalformedInput, "must not be empty",
                               TemporalDigraph, 2, [(0, 1, [])])
        self.assertRaises(MalformedInput, TemporalDigraph, 0)

    def test_queries(self):
        D = TemporalDigraph(3, [(0, 1, [1, 2]), (2, 1, 5)])
        self.assertTrue(D.has_arc(0, 1))
        self.assertTrue(D.has_arc(0, 1, 2))
        self.assertFalse(D.has_arc(0, 1, 3))
        self.assertFalse(D.has_arc(1, 0))
        self.assertEqualLists([arc.tail for arc in D.in_arcs(1)], [0, 2])
        self.assertEqual(D.arc_events(), [(1, 0, 1), (2, 0, 1), (5, 2, 1)])
        self.assertEqual(sorted(D.underlying_graph().edges()), [(0, 1), (1, 2)])

    def test_reverse(self):
        D = star(2)
        R = D.reverse()
        self.assertEqual(R.labels(2, 0), (2,))
        self.assertEqual(R.labels(3, 2), (1,))
        self.assertEqual(R.reverse(), D)

    def test_from_steps(self):
        D = TemporalDigraph.from_steps(3, [(0, 1, 1), (1, 2, 2), (0, 1, 4)])
        self.assertEqual(D.labels(0, 1), (1, 4))


class PathTests(TestCase):
    def setUp(self):
        super(PathTests, self).setUp()
        self.D = TemporalDigraph(4, [(0, 1, [1, 3]), (1, 2, 2), (2, 3, 1)])

    def test_validate(self):
        self.assertTrue(validate_path(self.D, P((0, 1, 1), (1, 2, 2))))
        self.assertFalse(validate_path(self.D, P((0, 1, 3), (1, 2, 2))))
        self.assertFalse(validate_path(self.D, P((1, 2, 2), (2, 3, 1))))
        self.assertTrue(validate_path(self.D, TemporalPath.single(3)))
        self.assertFalse(validate_path(self.D, P((0, 1, 2))))
        self.assertRaises(MalformedInput, validate_path, self.D, TemporalPath.single(7))

    def test_chaining(self):
        self.assertRaisesRegex(MalformedInput, "do not chain", P, (0, 1, 1), (2, 3, 2))
        self.assertRaises(MalformedInput, TemporalPath)

    def test_accessors(self):
        path = P((0, 1, 1), (1, 2, 2))
        self.assertEqual(path.vertices, (0, 1, 2))
        self.assertEqual((path.source, path.sink, path.length), (0, 2, 2))
        self.assertEqual(path.times, (1, 2))
        self.assertIn(1, path)
        self.assertEqual(path.suffix_from(1), P((1, 2, 2)))
        self.assertEqual(path.suffix_from(2), TemporalPath.single(2))

    def test_occupation(self):
        self.assertEqual(occupation(P((0, 1, 1), (1, 2, 2))),
                         {0: Interval(NEG_INF, 1), 1: Interval(1, 2), 2: Interval(2, POS_INF)})
        self.assertEqual(occupation(TemporalPath.single(5)), {5: Interval(NEG_INF, POS_INF)})
        self.assertRaises(DomainError, occupation, P((0, 1, 2), (1, 2, 1)))

    def test_disjointness(self):
        self.assertFalse(are_temporally_disjoint(P((0, 1, 1)), P((1, 2, 3))))
        self.assertTrue(are_temporally_disjoint(P((0, 1, 1), (1, 2, 2)),
                                                P((3, 1, 3), (1, 4, 4))))
        self.assertFalse(are_temporally_disjoint(P((0, 1, 1), (1, 2, 3)),
                                                 P((3, 1, 2), (1, 4, 4))))
        self.assertFalse(are_temporally_disjoint(TemporalPath.single(1), P((0, 1, 1))))
        self.assertTrue(are_temporally_disjoint(TemporalPath.single(5), P((0, 1, 1))))

    def test_disjointness_by_arcs(self):
        # ends are occupied forever, arcs only at their time
        self.assertTrue(temporally_disjoint_by_arcs(P((0, 1, 1)), P((1, 2, 3))))
        self.assertFalse(temporally_disjoint_by_arcs(P((0, 1, 1)), P((1, 2, 1))))
        inner1 = P((0, 1, 1), (1, 2, 2))
        inner2 = P((3, 1, 3), (1, 4, 4))
        self.assertEqual(temporally_disjoint_by_arcs(inner1, inner2),
                         are_temporally_disjoint(inner1, inner2))


class CoverTests(TestCase):
    def test_verify(self):
        D = transitive_tournament(4)
        good = PathCover([P((0, 1, 3)), P((2, 3, 1))], TEMPORALLY_DISJOINT)
        self.assertTrue(verify_cover(D, good))
        self.assertTrue(good.is_vertex_disjoint())
        self.assertEqual(good.covered(), set([0, 1, 2, 3]))
        self.assertFalse(verify_cover(D, PathCover([P((0, 1, 3))])))
        self.assertFalse(verify_cover(D, PathCover([P((0, 1, 2)), P((2, 3, 1))])))

    def test_overlap_allowed_in_plain_mode(self):
        D = star(2)
        paths = [P((0, 2, 1), (2, 3, 2)), P((1, 2, 1), (2, 4, 2))]
        self.assertTrue(verify_cover(D, PathCover(paths, PLAIN)))
        self.assertFalse(verify_cover(D, PathCover(paths, TEMPORALLY_DISJOINT)))

    def test_equality_ignores_order(self):
        a = PathCover([P((0, 1, 3)), TemporalPath.single(2)])
        b = PathCover([TemporalPath.single(2), P((0, 1, 3))])
        self.assertEqual(a, b)
        self.assertNotEqual(a, PathCover(a.paths, TEMPORALLY_DISJOINT))
        self.assertRaises(MalformedInput, PathCover, [], 'other')


class ClassTests(TestCase):
    def test_classify(self):
        self.assertEqual(classify(TemporalDigraph(3, [(0, 1, 1), (1, 2, 1), (2, 0, 1)])),
                         GraphClass.GENERAL)
        self.assertEqual(classify(transitive_tournament(4)), GraphClass.DAG)
        self.assertEqual(classify(star(3)), GraphClass.ORIENTED_TREE)
        self.assertEqual(classify(rooted_example()), GraphClass.ROOTED_DIRECTED_TREE)
        self.assertEqual(classify(line([1, 2, 3], [True, False, True])),
                         GraphClass.ORIENTED_LINE)
        self.assertEqual(classify(TemporalDigraph(2, [(0, 1, 1), (1, 0, 2)])),
                         GraphClass.GENERAL)

    def test_membership_is_nested(self):
        D = line([1, 2])
        for graph_class in GraphClass.ALL:
            self.assertTrue(belongs_to(D, graph_class))
        self.assertFalse(belongs_to(star(2), GraphClass.ROOTED_DIRECTED_TREE))
        self.assertTrue(belongs_to(star(2), GraphClass.DAG))
        self.assertFalse(belongs_to(transitive_tournament(3), GraphClass.ORIENTED_TREE))

    def test_forests(self):
        D = TemporalDigraph(4, [(0, 1, 1), (2, 3, 1)])
        self.assertEqual(classify(D), GraphClass.ORIENTED_LINE)
        self.assertFalse(belongs_to(D, GraphClass.ROOTED_DIRECTED_TREE))

    def test_arc_deletion_keeps_rank(self):
        for seed in range(20):
            D = random_instance(GraphClass.GENERAL, 7, 2, 4, seed=seed)
            if not D.arcs:
                continue
            smaller = TemporalDigraph(D.vertex_count, D.arcs[1:])
            self.assertGreaterEqual(CLASS_RANK[classify(smaller)], CLASS_RANK[classify(D)])

    def test_require_class(self):
        require_class(star(2), GraphClass.ORIENTED_TREE)
        with self.assertRaises(GraphClassError) as cm:
            require_class(star(2), GraphClass.ROOTED_DIRECTED_TREE, GraphClass.ORIENTED_LINE)
        self.assertEqual(cm.exception.actual, GraphClass.ORIENTED_TREE)
        self.assertEqual(str(cm.exception),
                         "Expected a temporal digraph of class oriented_line or "
                         "rooted_directed_tree (got oriented_tree instead)")
