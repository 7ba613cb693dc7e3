"""
Polynomial solvers on temporal oriented trees.

* :func:`tpc_oriented_tree`: minimum temporal path cover through a minimum
  clique cover of the (weakly chordal) connectivity graph.
* :func:`solve_oriented_line` and :func:`solve_rooted_tree`: greedy covers
  that are minimum for both the plain and the temporally disjoint problem.
"""
from collections import deque

from .connectivity import connectivity_graph, foremost_path
from .core import (GraphClass, PathCover, TemporalPath, PLAIN, TEMPORALLY_DISJOINT,
                   require_class)
from .exceptions import DomainError
from .utils import debug_timed, first, popcount
from .weakchord import StaticGraph, min_clique_cover_wc


def realize_clique_as_path(T, S, G=None):
    """
    A temporal path of the oriented tree `T` through every vertex of `S`,
    where `S` is a clique of the connectivity graph.
    """
    require_class(T, GraphClass.ORIENTED_TREE)
    S = sorted(set(S))
    if not S:
        raise DomainError("Cannot realize an empty clique")
    if G is None:
        G = connectivity_graph(T)
    for i, u in enumerate(S):
        for v in S[i + 1:]:
            if not G.has_edge(u, v):
                raise DomainError("Vertices %d and %d are not temporally connected"
                                  % (u, v), witness=(u, v))
    if len(S) == 1:
        return TemporalPath.single(S[0])
    members = sum(1 << v for v in S)
    # transitive tournament: the first vertex reaches all others
    order = sorted(S, key=lambda v: (-popcount(G.reaches[v] & members), v))
    path = foremost_path(T, order[0], order[-1])
    if path is None or not set(S) <= set(path.vertices):
        raise DomainError("Vertices %r do not lie on a common temporal path" % (S,),
                          witness=S)
    return path


@debug_timed
def tpc_oriented_tree(T):
    require_class(T, GraphClass.ORIENTED_TREE)
    G = connectivity_graph(T)
    # connectivity graphs of oriented trees are weakly chordal
    cliques = min_clique_cover_wc(StaticGraph(G.vertex_count, G.edges), check=False)
    return PathCover([realize_clique_as_path(T, clique, G) for clique in cliques], PLAIN)


def _neighbors(L, v):
    return [arc.head for arc in L.out_arcs(v)] + [arc.tail for arc in L.in_arcs(v)]


def _alive_degree(L, v, alive):
    return sum(1 for w in _neighbors(L, v) if w in alive)


def _line_order(L, start, alive):
    """ Vertices of the line component containing `start`, leaf to leaf. """
    order = [start]
    previous = None
    current = start
    while True:
        nxt = [w for w in _neighbors(L, current) if w != previous and w in alive]
        if not nxt:
            return order
        previous, current = current, nxt[0]
        order.append(current)


def _grow_from_leaf(L, sequence):
    """
    Longest temporal path starting or ending at ``sequence[0]`` and running
    along `sequence`.
    """
    leaf = sequence[0]
    if len(sequence) == 1:
        return TemporalPath.single(leaf)
    if L.has_arc(sequence[1], leaf):
        # backward: the path ends at the leaf; take the largest label each time
        steps = []
        bound = None
        for near, far in zip(sequence, sequence[1:]):
            labels = [t for t in L.labels(far, near) if bound is None or t < bound]
            if not labels:
                break
            bound = labels[-1]
            steps.append((far, near, bound))
        return TemporalPath(reversed(steps))
    steps = []
    bound = None
    for near, far in zip(sequence, sequence[1:]):
        labels = [t for t in L.labels(near, far) if bound is None or t > bound]
        if not labels:
            break
        bound = labels[0]
        steps.append((near, far, bound))
    return TemporalPath(steps)


@debug_timed
def solve_oriented_line(L):
    """
    Minimum (temporally disjoint) path cover of an oriented line: repeatedly
    grow a longest temporal path from the lowest leaf of what is left and
    remove its vertices. The paths are vertex-disjoint.
    """
    require_class(L, GraphClass.ORIENTED_LINE)
    alive = set(L.vertices)
    paths = []
    while alive:
        leaf = min(v for v in alive if _alive_degree(L, v, alive) <= 1)
        path = _grow_from_leaf(L, _line_order(L, leaf, alive))
        paths.append(path)
        alive.difference_update(path.vertices)
    return PathCover(paths, TEMPORALLY_DISJOINT)


def _root_and_depths(T):
    root = first(lambda v: not T.in_arcs(v), T.vertices)
    depth = {root: 0}
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for arc in T.out_arcs(v):
            depth[arc.head] = depth[v] + 1
            queue.append(arc.head)
    return root, depth


def _longest_path_ending_at(T, v):
    steps = []
    bound = None
    while T.in_arcs(v):
        arc = T.in_arcs(v)[0]
        labels = [t for t in arc.labels if bound is None or t < bound]
        if not labels:
            break
        bound = labels[-1]
        steps.append((arc.tail, v, bound))
        v = arc.tail
    if not steps:
        return TemporalPath.single(v)
    return TemporalPath(reversed(steps))


def rooted_tree_phase_one(T):
    """
    Greedy cover of a rooted directed tree: visit vertices deepest first
    (ties by id) and, for each one not yet covered, take a longest temporal
    path ending there. The sinks of the paths form a temporal antichain.
    """
    require_class(T, GraphClass.ROOTED_DIRECTED_TREE)
    _, depth = _root_and_depths(T)
    covered = set()
    paths = []
    for v in sorted(T.vertices, key=lambda v: (-depth[v], v)):
        if v in covered:
            continue
        path = _longest_path_ending_at(T, v)
        paths.append(path)
        covered.update(path.vertices)
    return paths


def _trim_prefix(path, shared):
    """ Drops the leading vertices of `path` that are in `shared`. """
    index = 0
    while index < len(path.vertices) - 1 and path.vertices[index] in shared:
        index += 1
    return path.suffix_from(index)


@debug_timed
def solve_rooted_tree(T):
    """
    Minimum temporally disjoint path cover of a rooted directed tree: phase
    one, then every intersecting pair is made vertex-disjoint by trimming
    the shared vertices off the path that starts lower (the later one on
    ties). Shared vertices always form a prefix of that path.
    """
    paths = rooted_tree_phase_one(T)
    _, depth = _root_and_depths(T)
    changed = True
    while changed:
        changed = False
        for i in range(len(paths)):
            for j in range(i + 1, len(paths)):
                shared = set(paths[i].vertices) & set(paths[j].vertices)
                if not shared:
                    continue
                if depth[paths[j].source] >= depth[paths[i].source]:
                    paths[j] = _trim_prefix(paths[j], shared)
                else:
                    paths[i] = _trim_prefix(paths[i], shared)
                changed = True
    return PathCover(paths, TEMPORALLY_DISJOINT)
