from django.test.utils import override_settings

from tempocover import oracle, treesolve, twdp
from tempocover.core import GraphClass, PLAIN, TEMPORALLY_DISJOINT
from tempocover.exceptions import GraphClassError, MalformedInput, ResourceLimitExceeded
from tempocover.gen import rooted_example, star, transitive_tournament
from tempocover.router import DP, ORACLE, TDPC, TPC, TREE, SolverRouter, solve

from ..utils import TestCase


class RoutingTests(TestCase):
    def test_tree_solvable(self):
        router = SolverRouter()
        self.assertTrue(router.is_tree_solvable(TPC, GraphClass.ORIENTED_TREE))
        self.assertTrue(router.is_tree_solvable(TDPC, GraphClass.ROOTED_DIRECTED_TREE))
        self.assertTrue(router.is_tree_solvable(TDPC, GraphClass.ORIENTED_LINE))
        self.assertFalse(router.is_tree_solvable(TDPC, GraphClass.ORIENTED_TREE))
        self.assertFalse(router.is_tree_solvable(TPC, GraphClass.DAG))

    def test_default_routes(self):
        router = SolverRouter()
        self.assertEqual(router.solver_for(TPC, GraphClass.ORIENTED_LINE),
                         (TREE, treesolve.solve_oriented_line))
        self.assertEqual(router.solver_for(TPC, GraphClass.ORIENTED_TREE),
                         (TREE, treesolve.tpc_oriented_tree))
        self.assertEqual(router.solver_for(TDPC, GraphClass.ORIENTED_TREE),
                         (DP, twdp.tdpc_dp))
        self.assertEqual(router.solver_for(TPC, GraphClass.GENERAL), (DP, twdp.tpc_dp))
        self.assertEqual(router.solver_for(TPC, GraphClass.GENERAL, ORACLE),
                         (ORACLE, oracle.exact_tpc))

    def test_configured_routes(self):
        router = SolverRouter(routes={(TDPC, GraphClass.DAG): ORACLE})
        self.assertEqual(router.solver_for(TDPC, GraphClass.DAG), (ORACLE, oracle.exact_tdpc))
        with override_settings(SOLVER_ROUTES={(TPC, GraphClass.ORIENTED_TREE): DP}):
            self.assertEqual(SolverRouter().solver_for(TPC, GraphClass.ORIENTED_TREE),
                             (DP, twdp.tpc_dp))
        self.assertEqual(SolverRouter().solver_for(TPC, GraphClass.ORIENTED_TREE)[0], TREE)

    def test_errors(self):
        router = SolverRouter()
        with self.assertRaises(GraphClassError) as cm:
            router.solver_for(TDPC, GraphClass.ORIENTED_TREE, TREE)
        self.assertEqual(cm.exception.actual, GraphClass.ORIENTED_TREE)
        self.assertRaisesRegex(MalformedInput, "Problem must be one of",
                               router.solver_for, 'cover', GraphClass.DAG)
        self.assertRaisesRegex(MalformedInput, "Method must be one of",
                               router.solver_for, TPC, GraphClass.DAG, 'fast')


class SolveTests(TestCase):
    def test_star(self):
        graph_class, method_used, cover = solve(star(3), TPC)
        self.assertEqual((graph_class, method_used, cover.size),
                         (GraphClass.ORIENTED_TREE, TREE, 3))
        self.assertEqual(cover.mode, PLAIN)
        graph_class, method_used, cover = solve(star(3), TDPC)
        self.assertEqual((method_used, cover.size), (DP, 5))
        self.assertDisjointCover(star(3), cover)

    def test_disjoint_tree_covers_relabelled(self):
        D = rooted_example()
        _, method_used, cover = solve(D, TPC)
        self.assertEqual((method_used, cover.mode, cover.size), (TREE, PLAIN, 3))
        self.assertValidCover(D, cover)
        _, _, cover = solve(D, TDPC)
        self.assertEqual(cover.mode, TEMPORALLY_DISJOINT)

    def test_oracle_fallback(self):
        D = transitive_tournament(4)
        with override_settings(DP_STATE_BUDGET=1):
            graph_class, method_used, cover = solve(D, TDPC)
            self.assertEqual((graph_class, method_used, cover.size), (GraphClass.DAG, ORACLE, 2))
            self.assertRaises(ResourceLimitExceeded, solve, D, TDPC, DP)
