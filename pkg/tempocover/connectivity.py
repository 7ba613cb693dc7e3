"""
Temporal reachability and the connectivity graph.

Two vertices are temporally connected when a strict temporal path leads from
one to the other. Reachability is computed by one earliest-arrival sweep per
source over the arcs' ``(time, tail, head)`` events in time order.
"""
from concurrent.futures import ProcessPoolExecutor

import networkx as nx

from .core import GraphClass, TemporalPath, NEG_INF, POS_INF, belongs_to
from .utils import debug_timed, bitmask, iter_bits, popcount
from .weakchord import StaticGraph, max_independent_set_wc

FORWARD = 'forward'
BACKWARD = 'backward'
BOTH = 'both'


def _sweep(D, u, events=None):
    arrival = [POS_INF] * D.vertex_count
    parent = [None] * D.vertex_count
    arrival[u] = NEG_INF
    for t, tail, head in (events if events is not None else D.arc_events()):
        # strict: leave `tail` only after arriving there
        if arrival[tail] < t < arrival[head]:
            arrival[head] = t
            parent[head] = (tail, t)
    return arrival, parent


def earliest_arrival(D, u):
    """
    Maps every vertex reachable from `u` to the earliest time a strict
    temporal path from `u` can arrive there (``u`` itself maps to ``-inf``).
    """
    arrival, _ = _sweep(D, u)
    return dict((v, t) for v, t in enumerate(arrival) if t != POS_INF)


def foremost_path(D, u, v):
    """ A temporal path from `u` to `v` arriving as early as possible, or None. """
    arrival, parent = _sweep(D, u)
    if arrival[v] == POS_INF:
        return None
    if u == v:
        return TemporalPath.single(u)
    steps = []
    while v != u:
        tail, t = parent[v]
        steps.append((tail, v, t))
        v = tail
    return TemporalPath(reversed(steps))


def reach_set(D, u):
    """ All vertices other than `u` reachable from `u` by a strict temporal path. """
    arrival, _ = _sweep(D, u)
    return set(v for v, t in enumerate(arrival) if t != POS_INF and v != u)


def _reach_row(args):
    D, u, events = args
    arrival, _ = _sweep(D, u, events)
    return bitmask(v for v, t in enumerate(arrival) if t != POS_INF and v != u)


def reach_masks(D, jobs=1):
    """ ``masks[u]`` is the bitmask of :func:`reach_set` ``(D, u)``. """
    events = D.arc_events()
    work = [(D, u, events) for u in D.vertices]
    if jobs > 1 and D.vertex_count > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_reach_row, work))
    return [_reach_row(item) for item in work]


class ConnectivityGraph(object):
    """
    Undirected graph with an edge between every pair of temporally connected
    vertices. ``reaches[u]`` is the bitmask of vertices `u` reaches, which
    gives the direction of every edge.
    """
    def __init__(self, vertex_count, reaches):
        self.vertex_count = vertex_count
        self.reaches = list(reaches)
        self.adjacency = [0] * vertex_count
        for u in range(vertex_count):
            for v in iter_bits(self.reaches[u]):
                self.adjacency[u] |= 1 << v
                self.adjacency[v] |= 1 << u

    def __repr__(self):
        return '<ConnectivityGraph n=%d edges=%d>' % (self.vertex_count, len(self.edges))

    @property
    def edges(self):
        return sorted((u, v) for u in range(self.vertex_count)
                      for v in iter_bits(self.adjacency[u]) if u < v)

    def neighbors(self, u):
        return set(iter_bits(self.adjacency[u]))

    def has_edge(self, u, v):
        return bool(self.adjacency[u] >> v & 1)

    def direction(self, u, v):
        """ FORWARD if u reaches v, BACKWARD if v reaches u, BOTH, or None. """
        forward = bool(self.reaches[u] >> v & 1)
        backward = bool(self.reaches[v] >> u & 1)
        if forward and backward:
            return BOTH
        if forward:
            return FORWARD
        if backward:
            return BACKWARD
        return None

    def to_networkx(self):
        graph = nx.Graph()
        graph.add_nodes_from(range(self.vertex_count))
        graph.add_edges_from(self.edges)
        return graph


@debug_timed
def connectivity_graph(D, jobs=1):
    return ConnectivityGraph(D.vertex_count, reach_masks(D, jobs=jobs))


def maximum_independent_set(n, adjacency):
    """
    Exact maximum independent set by branch and bound over bitmasks.
    Branches on a vertex of maximum degree among the candidates; vertices of
    degree 0 or 1 are taken greedily. Ties go to the lowest id.
    """
    best = [-1, 0]

    def bound(candidates):
        # greedy clique cover of the candidates bounds the independent set
        count = 0
        while candidates:
            low = candidates & -candidates
            v = low.bit_length() - 1
            clique = low
            rest = candidates & adjacency[v]
            while rest:
                w_bit = rest & -rest
                w = w_bit.bit_length() - 1
                clique |= w_bit
                rest &= adjacency[w]
            candidates &= ~clique
            count += 1
        return count

    def search(candidates, chosen):
        taken = 0
        changed = True
        while changed:
            changed = False
            for v in iter_bits(candidates):
                if popcount(adjacency[v] & candidates) <= 1:
                    taken |= 1 << v
                    candidates &= ~((1 << v) | adjacency[v])
                    changed = True
                    break
        chosen |= taken
        size = popcount(chosen)
        if not candidates:
            if size > best[0]:
                best[:] = [size, chosen]
            return
        if size + bound(candidates) <= best[0]:
            return
        v = max(iter_bits(candidates),
                key=lambda w: (popcount(adjacency[w] & candidates), -w))
        search(candidates & ~((1 << v) | adjacency[v]), chosen | (1 << v))
        search(candidates & ~(1 << v), chosen)

    search((1 << n) - 1, 0)
    return set(iter_bits(best[1]))


@debug_timed
def max_temporal_antichain(D):
    """
    A maximum set of pairwise not temporally connected vertices, i.e. a
    maximum independent set of the connectivity graph.
    """
    G = connectivity_graph(D)
    if belongs_to(D, GraphClass.ORIENTED_TREE):
        # connectivity graphs of oriented trees are weakly chordal
        return max_independent_set_wc(StaticGraph(G.vertex_count, G.edges), check=False)
    return maximum_independent_set(G.vertex_count, G.adjacency)
