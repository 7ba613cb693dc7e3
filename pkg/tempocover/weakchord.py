"""
Weakly chordal graphs: no hole (induced cycle of length at least 5) and no
antihole (complement of a hole).

Clique covers and independent sets are computed with two-pair contractions
on the complement graph. A two-pair is a nonadjacent pair ``{x, y}`` every
chordless path between which has exactly two edges. Contracting a two-pair
keeps a graph weakly chordal without changing its clique number, so
contracting the complement until it is a clique gives an optimal coloring
of the complement (a minimum clique cover of the graph). Undoing the
contractions lifts the final clique to a maximum clique of the complement
(a maximum independent set of the graph).
"""
import itertools
import random

import networkx as nx

from .exceptions import DomainError, ResourceLimitExceeded
from .utils import iter_bits, popcount, debug_timed

EXHAUSTIVE_MAX_N = 12


class StaticGraph(object):
    __slots__ = ('vertex_count', 'adjacency')

    def __init__(self, vertex_count, edges=()):
        self.vertex_count = vertex_count
        self.adjacency = [0] * vertex_count
        for u, v in edges:
            if u == v:
                raise DomainError("Self-loop on vertex %d" % u)
            self.adjacency[u] |= 1 << v
            self.adjacency[v] |= 1 << u

    @classmethod
    def from_networkx(cls, graph):
        nodes = sorted(graph.nodes())
        if nodes != list(range(len(nodes))):
            graph = nx.convert_node_labels_to_integers(graph, ordering='sorted')
        return cls(graph.number_of_nodes(), graph.edges())

    @classmethod
    def complete(cls, n):
        return cls(n, itertools.combinations(range(n), 2))

    @classmethod
    def cycle(cls, n):
        return cls(n, [(i, (i + 1) % n) for i in range(n)])

    def __repr__(self):
        return '<StaticGraph n=%d edges=%d>' % (self.vertex_count, len(self.edges))

    def __eq__(self, other):
        return isinstance(other, StaticGraph) and \
            (self.vertex_count, self.adjacency) == (other.vertex_count, other.adjacency)

    def __ne__(self, other):
        return not self == other

    @property
    def edges(self):
        return [(u, v) for u in range(self.vertex_count)
                for v in iter_bits(self.adjacency[u]) if u < v]

    def has_edge(self, u, v):
        return bool(self.adjacency[u] >> v & 1)

    def neighbors(self, u):
        return set(iter_bits(self.adjacency[u]))

    def is_clique(self, vertices):
        vertices = list(vertices)
        return all(self.has_edge(u, v) for u, v in itertools.combinations(vertices, 2))

    def is_independent(self, vertices):
        vertices = list(vertices)
        return not any(self.has_edge(u, v) for u, v in itertools.combinations(vertices, 2))

    def complement(self):
        full = (1 << self.vertex_count) - 1
        graph = StaticGraph(self.vertex_count)
        graph.adjacency = [full & ~adj & ~(1 << v) for v, adj in enumerate(self.adjacency)]
        return graph

    def to_networkx(self):
        graph = nx.Graph()
        graph.add_nodes_from(range(self.vertex_count))
        graph.add_edges_from(self.edges)
        return graph


def _canonical_cycle(cycle):
    i = cycle.index(min(cycle))
    cycle = cycle[i:] + cycle[:i]
    if len(cycle) > 2 and cycle[-1] < cycle[1]:
        cycle = [cycle[0]] + cycle[:0:-1]
    return cycle


def find_hole(G):
    """
    A shortest induced cycle of length at least 5, as a vertex list starting
    at its lowest vertex, or None.
    """
    graph = G.to_networkx()
    for length in range(5, G.vertex_count + 1):
        holes = [_canonical_cycle(list(cycle))
                 for cycle in nx.chordless_cycles(graph, length_bound=length)
                 if len(cycle) == length]
        if holes:
            return min(holes)
    return None


def find_antihole(G):
    return find_hole(G.complement())


def is_weakly_chordal(G):
    return find_hole(G) is None and find_antihole(G) is None


def _not_weakly_chordal(G):
    hole = find_hole(G)
    if hole is not None:
        return DomainError("Graph is not weakly chordal: hole %r" % (hole,), witness=hole)
    antihole = find_antihole(G)
    return DomainError("Graph is not weakly chordal: antihole %r" % (antihole,),
                       witness=antihole)


def _reachable(adjacency, source, allowed):
    seen = 1 << source
    frontier = seen
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= adjacency[v] & allowed
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def find_two_pair(adjacency, alive):
    """
    The lexicographically smallest two-pair among the vertices in the bitmask
    `alive`, or None. ``{x, y}`` is a two-pair iff `y` cannot be reached from
    `x` once their common neighbours are removed.
    """
    for x in iter_bits(alive):
        for y in iter_bits(alive & ~adjacency[x] & ~((2 << x) - 1)):
            common = adjacency[x] & adjacency[y]
            if not _reachable(adjacency, x, alive & ~common) >> y & 1:
                return x, y
    return None


def _contract(G):
    """
    Contracts two-pairs of `G` until it is a clique. Returns
    ``(classes, history, adjacency)`` where ``classes`` maps every surviving
    vertex to the original vertices merged into it.
    """
    adjacency = list(G.adjacency)
    alive = (1 << G.vertex_count) - 1
    classes = dict((v, [v]) for v in range(G.vertex_count))
    history = []
    while True:
        if all(popcount(adjacency[v]) == popcount(alive) - 1 for v in iter_bits(alive)):
            return classes, history, adjacency
        pair = find_two_pair(adjacency, alive)
        if pair is None:
            return None
        x, y = pair
        history.append((x, y, adjacency[x], adjacency[y]))
        merged = (adjacency[x] | adjacency[y]) & ~((1 << x) | (1 << y))
        for w in iter_bits(adjacency[y]):
            adjacency[w] &= ~(1 << y)
        for w in iter_bits(merged):
            adjacency[w] |= 1 << x
        adjacency[x] = merged
        adjacency[y] = 0
        alive &= ~(1 << y)
        classes[x] = classes[x] + classes.pop(y)


def _solve(G, check):
    if check and not is_weakly_chordal(G):
        raise _not_weakly_chordal(G)
    result = _contract(G.complement())
    if result is None:
        raise _not_weakly_chordal(G)
    return result


@debug_timed
def min_clique_cover_wc(G, check=True):
    """
    A minimum clique cover of the weakly chordal graph `G`, as a list of
    sorted vertex lists ordered by their lowest vertex.
    """
    classes, _, _ = _solve(G, check)
    return sorted(sorted(clique) for clique in classes.values())


@debug_timed
def max_independent_set_wc(G, check=True):
    """ A maximum independent set of the weakly chordal graph `G`. """
    classes, history, _ = _solve(G, check)
    clique = set(classes)
    for x, y, x_adjacency, y_adjacency in reversed(history):
        if x not in clique:
            continue
        clique.discard(x)
        mask = sum(1 << v for v in clique)
        if mask & x_adjacency == mask:
            clique.add(x)
        else:
            clique.add(y)
    return clique


def exhaustive_clique_cover(G):
    """ A minimum clique cover by exhaustive search, for small graphs only. """
    n = G.vertex_count
    if n > EXHAUSTIVE_MAX_N:
        raise ResourceLimitExceeded("Exhaustive clique cover is limited to %d vertices"
                                    % EXHAUSTIVE_MAX_N, bound=EXHAUSTIVE_MAX_N)
    cliques = [sum(1 << v for v in clique) for clique in nx.find_cliques(G.to_networkx())]
    full = (1 << n) - 1

    def cover(uncovered, budget):
        if not uncovered:
            return []
        if budget == 0:
            return None
        v = (uncovered & -uncovered).bit_length() - 1
        for clique in cliques:
            if clique >> v & 1:
                rest = cover(uncovered & ~clique, budget - 1)
                if rest is not None:
                    return [clique & uncovered] + rest
        return None

    for k in range(1, n + 1):
        result = cover(full, k)
        if result is not None:
            return sorted(sorted(iter_bits(mask)) for mask in result)


def exhaustive_independent_set(G):
    n = G.vertex_count
    if n > EXHAUSTIVE_MAX_N:
        raise ResourceLimitExceeded("Exhaustive independent set is limited to %d vertices"
                                    % EXHAUSTIVE_MAX_N, bound=EXHAUSTIVE_MAX_N)
    for size in range(n, 0, -1):
        for subset in itertools.combinations(range(n), size):
            if G.is_independent(subset):
                return set(subset)


def _middle_of_p4(adjacency, u, v):
    """ Whether edge uv is the middle edge of an induced P4. """
    for a in iter_bits(adjacency[u] & ~adjacency[v] & ~(1 << v)):
        if adjacency[v] & ~adjacency[u] & ~adjacency[a] & ~(1 << u) & ~(1 << a):
            return True
    return False


def random_weakly_chordal(n, seed=None, edge_count=None):
    """
    A random weakly chordal graph on `n` vertices, grown from the edgeless
    graph by adding edges that are never the middle edge of an induced P4.
    """
    rng = random.Random(seed)
    pairs = list(itertools.combinations(range(n), 2))
    if edge_count is None:
        edge_count = rng.randint(0, len(pairs))
    adjacency = [0] * n
    added = 0
    progress = True
    while added < edge_count and progress:
        progress = False
        rng.shuffle(pairs)
        for u, v in pairs:
            if added >= edge_count:
                break
            if adjacency[u] >> v & 1:
                continue
            adjacency[u] |= 1 << v
            adjacency[v] |= 1 << u
            if _middle_of_p4(adjacency, u, v):
                adjacency[u] &= ~(1 << v)
                adjacency[v] &= ~(1 << u)
            else:
                added += 1
                progress = True
    return StaticGraph(n, [(u, v) for u in range(n) for v in iter_bits(adjacency[u]) if u < v])
