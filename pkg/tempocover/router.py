import logging

from .conf import setting
from .core import GraphClass, PathCover, PLAIN, TEMPORALLY_DISJOINT, belongs_to, classify
from .exceptions import GraphClassError, MalformedInput, ResourceLimitExceeded

logger = logging.getLogger('tempocover.solvers')

TPC = 'tpc'
TDPC = 'tdpc'
PROBLEMS = (TPC, TDPC)

AUTO = 'auto'
TREE = 'tree'
DP = 'dp'
ORACLE = 'oracle'
METHODS = (AUTO, TREE, DP, ORACLE)

MODE_FOR = {TPC: PLAIN, TDPC: TEMPORALLY_DISJOINT}


def _tree_solver(problem, graph_class):
    from . import treesolve
    if graph_class == GraphClass.ORIENTED_LINE:
        return treesolve.solve_oriented_line
    if graph_class == GraphClass.ROOTED_DIRECTED_TREE:
        return treesolve.solve_rooted_tree
    if problem == TPC and graph_class == GraphClass.ORIENTED_TREE:
        return treesolve.tpc_oriented_tree
    return None


def _dp_solver(problem):
    from . import twdp
    return twdp.tpc_dp if problem == TPC else twdp.tdpc_dp


def _oracle_solver(problem):
    from . import oracle
    return oracle.exact_tpc if problem == TPC else oracle.exact_tdpc


class SolverRouter(object):
    """
    Picks the solver for a problem on a digraph.

    With the ``auto`` method, the ``SOLVER_ROUTES`` setting (a dict mapping
    ``(problem, graph_class)`` to a method) is consulted first; otherwise the
    polynomial tree solvers are preferred, then the treewidth DP, then the
    exact oracle when the DP runs out of states.
    """
    def __init__(self, routes=None):
        self.routes = dict(setting('SOLVER_ROUTES') if routes is None else routes)

    def is_tree_solvable(self, problem, graph_class):
        """ Returns True if a polynomial tree solver handles `problem` on `graph_class`. """
        return _tree_solver(problem, graph_class) is not None

    def solver_for(self, problem, graph_class, method=AUTO):
        """ ``(method_used, solver)`` for `problem` on a digraph of `graph_class`. """
        if problem not in PROBLEMS:
            raise MalformedInput("Problem must be one of %s (got %r instead)"
                                 % (', '.join(PROBLEMS), problem))
        if method not in METHODS:
            raise MalformedInput("Method must be one of %s (got %r instead)"
                                 % (', '.join(METHODS), method))
        if method == AUTO:
            method = self.routes.get((problem, graph_class))
            if method is None:
                method = TREE if self.is_tree_solvable(problem, graph_class) else DP
        if method == TREE:
            solver = _tree_solver(problem, graph_class)
            if solver is None:
                expected = GraphClass.TREES if problem == TPC else \
                    (GraphClass.ROOTED_DIRECTED_TREE, GraphClass.ORIENTED_LINE)
                raise GraphClassError(expected, graph_class)
            return TREE, solver
        if method == DP:
            return DP, _dp_solver(problem)
        return ORACLE, _oracle_solver(problem)

    def solve(self, D, problem, method=AUTO):
        """
        ``(graph_class, method_used, cover)``. The cover is in the mode of
        `problem`; the tree solvers' disjoint covers are relabelled as plain
        covers for the plain problem.
        """
        graph_class = classify(D)
        method_used, solver = self.solver_for(problem, graph_class, method)
        try:
            cover = solver(D)
        except ResourceLimitExceeded:
            if method != AUTO or method_used != DP:
                raise
            logger.info("DP budget exhausted, falling back to the exact oracle")
            method_used, solver = ORACLE, _oracle_solver(problem)
            cover = solver(D)
        if cover.mode != MODE_FOR[problem]:
            cover = PathCover(cover.paths, MODE_FOR[problem])
        return graph_class, method_used, cover


def solve(D, problem, method=AUTO):
    return SolverRouter().solve(D, problem, method)
