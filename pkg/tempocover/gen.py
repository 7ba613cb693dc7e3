"""
Instance families: separating examples, hardness gadgets and seeded random
digraphs of a requested class.
"""
import itertools
import random

import networkx as nx

from .core import GraphClass, TemporalDigraph, belongs_to
from .exceptions import MalformedInput


def transitive_tournament(n):
    """
    ``u_i -> u_j`` for all ``i < j`` with label ``n - j``: no temporal path
    has more than two vertices, yet all vertices are pairwise connected.
    """
    if n < 2:
        raise MalformedInput("A transitive tournament needs at least 2 vertices (got %r)" % n)
    return TemporalDigraph(n, [(i, j, n - j) for i, j in itertools.combinations(range(n), 2)])


def star(k):
    """
    Sources ``0 .. k-1`` reach the center ``k`` at time 1, which reaches
    the sinks ``k+1 .. 2k`` at time 2.
    """
    if k < 1:
        raise MalformedInput("A star needs k >= 1 (got %r)" % k)
    return TemporalDigraph(2 * k + 1, [(s, k, 1) for s in range(k)] +
                           [(k, k + 1 + i, 2) for i in range(k)])


def line(labels, forward=None):
    """
    An oriented line on ``len(labels) + 1`` vertices. ``labels[i]`` labels
    the arc between ``i`` and ``i + 1``, which points forward unless
    ``forward[i]`` is false.
    """
    if forward is None:
        forward = [True] * len(labels)
    if len(forward) != len(labels):
        raise MalformedInput("Need one direction per arc")
    return TemporalDigraph(len(labels) + 1, [(i, i + 1, t) if ahead else (i + 1, i, t)
                                             for i, (t, ahead) in enumerate(zip(labels,
                                                                                forward))])


def rooted_example():
    """ Rooted tree covered by three paths, one of them trimmed. """
    return TemporalDigraph(6, [(0, 1, 2), (1, 2, 3), (1, 3, 1), (3, 4, 2), (3, 5, 2)])


def rooted_multilabel_example():
    """ Rooted tree with a two-label arc; covered by one path and two singletons. """
    return TemporalDigraph(6, [(0, 1, 1), (1, 2, (1, 2)), (2, 3, 2), (2, 4, 1), (2, 5, 3)])


def _check_triples(triples, q):
    if q < 1:
        raise MalformedInput("q must be positive (got %r)" % (q,))
    for triple in triples:
        if len(triple) != 3 or not all(isinstance(c, int) and 0 <= c < q for c in triple):
            raise MalformedInput("Triples must have three coordinates in [0, %d) (got %r)"
                                 % (q, triple))


def gadget_3dm(triples, q):
    """
    Temporal digraph with labels 1 and 2 whose minimum temporal path cover
    has ``3p + q`` paths iff the ``p`` triples contain a perfect matching
    of ``X, Y, Z = range(q)``.

    Triple ``i`` owns vertices ``9i .. 9i+8``: three paths ``a1 -> a2 -> a3``
    (``a1 = 9i + 3r``), a path through the three ``a3`` vertices and arcs
    from the ``a2`` vertices into its three elements. Elements are numbered
    ``x = 9p + j``, ``y = 9p + q + j``, ``z = 9p + 2q + j``.
    """
    _check_triples(triples, q)
    p = len(triples)
    arcs = []
    for i, triple in enumerate(triples):
        base = 9 * i
        a3 = [base + 3 * r + 2 for r in range(3)]
        for r in range(3):
            a1, a2 = base + 3 * r, base + 3 * r + 1
            arcs.append((a1, a2, 1))
            arcs.append((a2, a1 + 2, 2))
            arcs.append((a2, 9 * p + r * q + triple[r], 2))
        arcs.append((a3[0], a3[1], 1))
        arcs.append((a3[1], a3[2], 2))
    return TemporalDigraph(9 * p + 3 * q, arcs)


def is_perfect_matching_instance(triples, q):
    """ Whether `q` of the triples cover every coordinate value exactly once. """
    _check_triples(triples, q)
    for chosen in itertools.combinations(triples, q):
        if all(len(set(triple[r] for triple in chosen)) == q for r in range(3)):
            return True
    return False


def _check_packing(sizes, b, B):
    if b < 1 or B < 1 or not sizes or any(x < 1 for x in sizes):
        raise MalformedInput("Bin packing needs positive sizes, b and B")
    if max(sizes) > B:
        raise MalformedInput("Every item must fit into a bin of size B = %d (got %d)"
                             % (B, max(sizes)))
    if sum(sizes) != b * B:
        raise MalformedInput("Item sizes must sum to b * B = %d (got %d)"
                             % (b * B, sum(sizes)))


def _every_other(low, high):
    return range(low, high + 1, 2)


def gadget_binpacking(sizes, b, B):
    """
    Temporal oriented tree whose minimum temporally disjoint path cover has
    ``b(bB - n) + n`` paths iff the items fit exactly into `b` bins of
    size `B`. The sizes must sum to ``bB`` and none may exceed `B`.

    Vertex ``0`` is the center; bin ``j`` has hubs ``s = 1 + 2j`` and
    ``t = 2 + 2j``, then come the `B` leaves ``r -> s`` and ``t -> u`` of
    every bin and finally the ``(x_i - 1)(b - 1)`` pairs ``v -> c -> w`` of
    every item. Item ``i`` owns a layer of ``2b x_i + 4`` consecutive labels.
    """
    _check_packing(sizes, b, B)
    labels = {}

    def add(tail, head, times):
        labels.setdefault((tail, head), set()).update(times)

    center = 0
    hubs = [(1 + 2 * j, 2 + 2 * j) for j in range(b)]
    leaves = [[(1 + 2 * b + 2 * (j * B + k), 2 + 2 * b + 2 * (j * B + k)) for k in range(B)]
              for j in range(b)]
    next_vertex = 1 + 2 * b + 2 * b * B
    offset = 0
    for x in sizes:
        firsts, lasts = [], []
        for j, (s, t) in enumerate(hubs):
            low = offset + 2 * j * x
            into_center = _every_other(low + 2, low + 2 * x)
            out_of_center = _every_other(low + 3, low + 2 * x + 1)
            add(s, center, into_center)
            add(center, t, out_of_center)
            for r, u in leaves[j]:
                add(r, s, _every_other(low + 1, low + 2 * x - 1))
                add(t, u, _every_other(low + 4, low + 2 * x + 2))
            firsts.extend(list(out_of_center)[:x - 1])
            lasts.extend(list(into_center)[len(into_center) - (x - 1):] if x > 1 else [])
        for _ in range((x - 1) * (b - 1)):
            add(next_vertex, center, firsts)
            add(center, next_vertex + 1, lasts)
            next_vertex += 2
        offset += 2 * b * x + 4
    return TemporalDigraph(next_vertex, [(u, v, sorted(times))
                                         for (u, v), times in labels.items()])


def binpacking_target(sizes, b, B):
    """ Cover size that certifies a packing: ``b(bB - n) + n``. """
    return b * (b * B - len(sizes)) + len(sizes)


def is_packable(sizes, b, B):
    """ Whether the items fill `b` bins of size `B` exactly. """
    _check_packing(sizes, b, B)
    sizes = sorted(sizes, reverse=True)
    loads = [0] * b

    def place(i):
        if i == len(sizes):
            return all(load == B for load in loads)
        tried = set()
        for j in range(b):
            if loads[j] in tried or loads[j] + sizes[i] > B:
                continue
            tried.add(loads[j])
            loads[j] += sizes[i]
            if place(i + 1):
                return True
            loads[j] -= sizes[i]
        return False

    return place(0)


def _random_labels(rng, max_labels, t_max):
    return sorted(rng.sample(range(1, t_max + 1), rng.randint(1, max_labels)))


def _random_tree(rng, n):
    if n == 1:
        return nx.empty_graph(1)
    if n == 2:
        return nx.path_graph(2)
    return nx.from_prufer_sequence([rng.randrange(n) for _ in range(n - 2)])


def _partial_ktree(rng, n, width):
    """ Random subgraph of a random `width`-tree on ``range(n)``. """
    order = list(range(n))
    rng.shuffle(order)
    core = order[:width + 1]
    edges = set(itertools.combinations(sorted(core), 2))
    cliques = [tuple(core)]
    for v in order[width + 1:]:
        clique = rng.choice(cliques)
        attach = rng.sample(clique, width)
        for u in attach:
            edges.add((min(u, v), max(u, v)))
        cliques.append(tuple(attach) + (v,))
    return [edge for edge in sorted(edges) if rng.random() < 0.7]


def random_instance(graph_class, n, max_labels, t_max, seed=None, width=None):
    """
    A seeded random temporal digraph on `n` vertices belonging to
    `graph_class`, with at most `max_labels` labels per arc drawn from
    ``1 .. t_max``. For ``dag`` and ``general`` a `width` bounds the
    treewidth of the underlying graph.
    """
    if graph_class not in GraphClass.ALL:
        raise MalformedInput("Unknown graph class %r" % (graph_class,))
    if n < 1 or max_labels < 1 or t_max < max_labels:
        raise MalformedInput("Need n >= 1 and 1 <= max_labels <= t_max (got n=%r, "
                             "max_labels=%r, t_max=%r)" % (n, max_labels, t_max))
    rng = random.Random(seed)
    arcs = []
    if graph_class in GraphClass.TREES:
        if graph_class == GraphClass.ORIENTED_LINE:
            order = list(range(n))
            rng.shuffle(order)
            tree = nx.Graph()
            tree.add_nodes_from(order)
            tree.add_edges_from(zip(order, order[1:]))
        else:
            tree = _random_tree(rng, n)
        if graph_class == GraphClass.ROOTED_DIRECTED_TREE:
            root = rng.randrange(n)
            pairs = list(nx.bfs_edges(tree, root))
        else:
            pairs = [(u, v) if rng.random() < 0.5 else (v, u) for u, v in sorted(tree.edges())]
    else:
        if width is not None:
            edges = _partial_ktree(rng, n, width)
        else:
            edges = [edge for edge in itertools.combinations(range(n), 2)
                     if rng.random() < 0.35]
        if graph_class == GraphClass.DAG:
            rank = list(range(n))
            rng.shuffle(rank)
            pairs = [(u, v) if rank[u] < rank[v] else (v, u) for u, v in edges]
        else:
            pairs = [(u, v) if rng.random() < 0.5 else (v, u) for u, v in edges]
    for u, v in pairs:
        arcs.append((u, v, _random_labels(rng, max_labels, t_max)))
    D = TemporalDigraph(n, arcs)
    assert belongs_to(D, graph_class)
    return D

