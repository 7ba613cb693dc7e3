"""
Temporal digraphs, strict temporal paths and path covers.

Vertices are the integers ``0 .. n-1``. Every arc carries a nonempty sorted
tuple of positive integer time labels; a temporal path uses one label per arc
and its times strictly increase.
"""
from collections import namedtuple

import networkx as nx

from .exceptions import MalformedInput, DomainError, GraphClassError

NEG_INF = float('-inf')
POS_INF = float('inf')

Arc = namedtuple('Arc', 'tail head labels')
Step = namedtuple('Step', 'tail head time')


class GraphClass(object):
    GENERAL = 'general'
    DAG = 'dag'
    ORIENTED_TREE = 'oriented_tree'
    ROOTED_DIRECTED_TREE = 'rooted_directed_tree'
    ORIENTED_LINE = 'oriented_line'

    ALL = (GENERAL, DAG, ORIENTED_TREE, ROOTED_DIRECTED_TREE, ORIENTED_LINE)
    TREES = (ORIENTED_TREE, ROOTED_DIRECTED_TREE, ORIENTED_LINE)


PLAIN = 'plain'
TEMPORALLY_DISJOINT = 'temporally_disjoint'
MODES = (PLAIN, TEMPORALLY_DISJOINT)


def _check_vertex(n, v, what='vertex'):
    if isinstance(v, bool) or not isinstance(v, int) or not 0 <= v < n:
        raise MalformedInput("%s id must be an integer in [0, %d) (got %r instead)"
                             % (what.capitalize(), n, v))


def _normalize_labels(labels):
    if isinstance(labels, int):
        labels = (labels,)
    try:
        labels = tuple(labels)
    except TypeError:
        raise MalformedInput("Arc labels must be an integer or a collection of "
                             "integers (got %r instead)" % (labels,))
    if not labels:
        raise MalformedInput("Arc label sets must not be empty")
    for t in labels:
        if isinstance(t, bool) or not isinstance(t, int) or t < 1:
            raise MalformedInput("Time labels must be positive integers (got %r instead)"
                                 % (t,))
    return labels


class TemporalDigraph(object):
    """
    An immutable temporal digraph.

    :param vertex_count: number of vertices ``n``
    :param arcs: iterable of ``(tail, head, labels)`` where `labels` is an int
                 or a collection of ints. Records for the same ordered pair
                 are merged.
    """
    __slots__ = ('vertex_count', 'arcs', 't_max', '_labels', '_out', '_in')

    def __init__(self, vertex_count, arcs=()):
        if isinstance(vertex_count, bool) or not isinstance(vertex_count, int) \
                or vertex_count < 1:
            raise MalformedInput("Vertex count must be a positive integer (got %r instead)"
                                 % (vertex_count,))
        merged = {}
        for record in arcs:
            try:
                tail, head, labels = record
            except (TypeError, ValueError):
                raise MalformedInput("Arcs must be (tail, head, labels) triples (got %r instead)"
                                     % (record,))
            _check_vertex(vertex_count, tail, 'tail')
            _check_vertex(vertex_count, head, 'head')
            if tail == head:
                raise MalformedInput("Self-loops are not allowed (vertex %d)" % tail)
            merged.setdefault((tail, head), set()).update(_normalize_labels(labels))

        self.vertex_count = vertex_count
        self.arcs = tuple(Arc(u, v, tuple(sorted(merged[u, v])))
                          for u, v in sorted(merged))
        self.t_max = max([arc.labels[-1] for arc in self.arcs] or [0])
        self._labels = dict(((arc.tail, arc.head), arc.labels) for arc in self.arcs)
        self._out = [[] for _ in range(vertex_count)]
        self._in = [[] for _ in range(vertex_count)]
        for arc in self.arcs:
            self._out[arc.tail].append(arc)
            self._in[arc.head].append(arc)

    @classmethod
    def from_steps(cls, vertex_count, steps):
        """ Builds a digraph from single-label ``(u, v, t)`` triples. """
        return cls(vertex_count, [(u, v, (t,)) for u, v, t in steps])

    def __eq__(self, other):
        return isinstance(other, TemporalDigraph) and \
            (self.vertex_count, self.arcs) == (other.vertex_count, other.arcs)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.vertex_count, self.arcs))

    def __repr__(self):
        return '<TemporalDigraph n=%d arcs=%d t_max=%d>' % (
            self.vertex_count, len(self.arcs), self.t_max)

    @property
    def vertices(self):
        return range(self.vertex_count)

    @property
    def max_labels(self):
        """ The largest number of labels on a single arc (often called l). """
        return max([len(arc.labels) for arc in self.arcs] or [0])

    @property
    def label_count(self):
        return sum(len(arc.labels) for arc in self.arcs)

    def labels(self, tail, head):
        return self._labels.get((tail, head), ())

    def has_arc(self, tail, head, time=None):
        labels = self._labels.get((tail, head))
        if labels is None:
            return False
        return time is None or time in labels

    def out_arcs(self, v):
        return self._out[v]

    def in_arcs(self, v):
        return self._in[v]

    def arc_events(self):
        """ All ``(time, tail, head)`` triples sorted by time. """
        return sorted((t, arc.tail, arc.head) for arc in self.arcs for t in arc.labels)

    def underlying_digraph(self):
        graph = nx.DiGraph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from((arc.tail, arc.head) for arc in self.arcs)
        return graph

    def underlying_graph(self):
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from((arc.tail, arc.head) for arc in self.arcs)
        return graph

    def reverse(self):
        """
        Time reversal: ``u -> v @ t`` becomes ``v -> u @ (t_max + 1 - t)``.
        Temporal paths map onto temporal paths.
        """
        return TemporalDigraph(self.vertex_count, [
            (arc.head, arc.tail, [self.t_max + 1 - t for t in arc.labels])
            for arc in self.arcs])


class TemporalPath(object):
    """
    A temporal path: either a sequence of ``(tail, head, time)`` steps that
    chain up, or a single vertex with no steps. Construction only checks that
    the steps chain; times and distinctness are checked by
    :func:`validate_path`.
    """
    __slots__ = ('steps', 'vertices')

    def __init__(self, steps=(), vertex=None):
        steps = tuple(Step(*step) for step in steps)
        if steps:
            if vertex is not None and vertex != steps[0].tail:
                raise MalformedInput("Path with steps must not name a separate vertex")
            for before, after in zip(steps, steps[1:]):
                if before.head != after.tail:
                    raise MalformedInput("Steps %r and %r do not chain" % (tuple(before),
                                                                          tuple(after)))
            vertices = (steps[0].tail,) + tuple(step.head for step in steps)
        elif vertex is None:
            raise MalformedInput("Empty temporal path")
        else:
            vertices = (vertex,)
        self.steps = steps
        self.vertices = vertices

    @classmethod
    def single(cls, vertex):
        return cls(vertex=vertex)

    @property
    def source(self):
        return self.vertices[0]

    @property
    def sink(self):
        return self.vertices[-1]

    @property
    def length(self):
        return len(self.steps)

    @property
    def times(self):
        return tuple(step.time for step in self.steps)

    def __len__(self):
        return len(self.vertices)

    def __contains__(self, vertex):
        return vertex in self.vertices

    def __eq__(self, other):
        return isinstance(other, TemporalPath) and \
            (self.steps, self.vertices) == (other.steps, other.vertices)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.steps, self.vertices))

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def sort_key(self):
        return (self.vertices, self.times)

    def __repr__(self):
        if not self.steps:
            return '<TemporalPath [%d]>' % self.source
        return '<TemporalPath %s>' % ' '.join('%d-%d@%d' % step for step in self.steps)

    def suffix_from(self, index):
        """ The subpath starting at ``self.vertices[index]``. """
        if index >= len(self.steps):
            return TemporalPath.single(self.vertices[index])
        return TemporalPath(self.steps[index:])


Interval = namedtuple('Interval', 'start end')


def _intervals_overlap(a, b):
    return a.start <= b.end and b.start <= a.end


def _is_well_formed(P):
    times = P.times
    return len(set(P.vertices)) == len(P.vertices) and \
        all(t1 < t2 for t1, t2 in zip(times, times[1:]))


def validate_path(D, P):
    """
    True iff every step of `P` is an arc of `D` carrying the step's time,
    vertices are pairwise distinct and times strictly increase.
    """
    for v in P.vertices:
        _check_vertex(D.vertex_count, v)
    for step in P.steps:
        if not D.has_arc(step.tail, step.head, step.time):
            return False
    return _is_well_formed(P)


def occupation(P):
    """
    Maps every vertex of `P` to the closed interval during which `P` occupies
    it. The source is occupied from ``-inf`` and the sink until ``+inf``.
    """
    if not _is_well_formed(P):
        raise DomainError("Cannot compute the occupation of invalid path %r" % (P,))
    if not P.steps:
        return {P.source: Interval(NEG_INF, POS_INF)}
    times = (NEG_INF,) + P.times + (POS_INF,)
    return dict((v, Interval(times[i], times[i + 1])) for i, v in enumerate(P.vertices))


def are_temporally_disjoint(P1, P2):
    occ1 = occupation(P1)
    occ2 = occupation(P2)
    for v, interval in occ1.items():
        if v in occ2 and _intervals_overlap(interval, occ2[v]):
            return False
    return True


def temporally_disjoint_by_arcs(P1, P2):
    """
    Arc-based variant: any two arcs of `P1` and `P2` sharing an end-vertex
    carry distinct times. Agrees with :func:`are_temporally_disjoint`
    whenever every shared vertex is interior to both paths.
    """
    for e1 in P1.steps:
        for e2 in P2.steps:
            if set((e1.tail, e1.head)) & set((e2.tail, e2.head)) and e1.time == e2.time:
                return False
    return True


class PathCover(object):
    __slots__ = ('paths', 'mode')

    def __init__(self, paths, mode=PLAIN):
        if mode not in MODES:
            raise MalformedInput("Cover mode must be one of %s (got %r instead)"
                                 % (', '.join(MODES), mode))
        self.paths = tuple(paths)
        self.mode = mode

    @property
    def size(self):
        return len(self.paths)

    def __len__(self):
        return len(self.paths)

    def __iter__(self):
        return iter(self.paths)

    def __eq__(self, other):
        return isinstance(other, PathCover) and \
            (self.mode, sorted(self.paths)) == (other.mode, sorted(other.paths))

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return '<PathCover %s size=%d>' % (self.mode, self.size)

    def covered(self):
        return set(v for path in self.paths for v in path.vertices)

    def is_vertex_disjoint(self):
        seen = set()
        for path in self.paths:
            if seen.intersection(path.vertices):
                return False
            seen.update(path.vertices)
        return True

    def sorted(self):
        return PathCover(sorted(self.paths), self.mode)


def verify_cover(D, C):
    """
    True iff every path of `C` is valid in `D`, the paths cover all vertices
    and, in temporally disjoint mode, the paths are pairwise disjoint.
    """
    try:
        if not all(validate_path(D, P) for P in C.paths):
            return False
    except MalformedInput:
        return False
    if C.covered() != set(D.vertices):
        return False
    if C.mode == TEMPORALLY_DISJOINT:
        for i, P1 in enumerate(C.paths):
            for P2 in C.paths[i + 1:]:
                if not are_temporally_disjoint(P1, P2):
                    return False
    return True


# Rank along general > dag > oriented_tree > oriented_line; deleting arcs
# never lowers it.
CLASS_RANK = {
    GraphClass.GENERAL: 0,
    GraphClass.DAG: 1,
    GraphClass.ORIENTED_TREE: 2,
    GraphClass.ROOTED_DIRECTED_TREE: 2,
    GraphClass.ORIENTED_LINE: 3,
}


def _shape(D):
    """ (is_acyclic, is_forest, is_connected, source_count, max_degree) """
    if not nx.is_directed_acyclic_graph(D.underlying_digraph()):
        return False, False, False, None, None
    graph = D.underlying_graph()
    if not nx.is_forest(graph):
        return True, False, False, None, None
    sources = sum(1 for v in D.vertices if not D.in_arcs(v))
    max_degree = max([d for _, d in graph.degree()] or [0])
    return True, True, nx.is_connected(graph), sources, max_degree


def belongs_to(D, graph_class):
    """
    Whether `D` is in `graph_class`. Oriented trees and lines may be forests;
    a rooted directed tree is connected with a unique source.
    """
    acyclic, forest, connected, sources, max_degree = _shape(D)
    if graph_class == GraphClass.GENERAL:
        return True
    if graph_class == GraphClass.DAG:
        return acyclic
    if graph_class == GraphClass.ORIENTED_TREE:
        return forest
    if graph_class == GraphClass.ROOTED_DIRECTED_TREE:
        return forest and connected and sources == 1
    if graph_class == GraphClass.ORIENTED_LINE:
        return forest and max_degree <= 2
    raise MalformedInput("Unknown graph class %r" % (graph_class,))


def classify(D):
    """ The most specific :class:`GraphClass` `D` belongs to. """
    acyclic, forest, connected, sources, max_degree = _shape(D)
    if not acyclic:
        return GraphClass.GENERAL
    if not forest:
        return GraphClass.DAG
    if max_degree <= 2:
        return GraphClass.ORIENTED_LINE
    if connected and sources == 1:
        return GraphClass.ROOTED_DIRECTED_TREE
    return GraphClass.ORIENTED_TREE


def require_class(D, *graph_classes):
    """ Raises GraphClassError unless `D` belongs to one of `graph_classes`. """
    if not any(belongs_to(D, cls) for cls in graph_classes):
        raise GraphClassError(graph_classes, classify(D))
