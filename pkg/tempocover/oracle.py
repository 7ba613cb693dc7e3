"""
Exhaustive baselines for small instances.

Every temporal path is enumerated explicitly, so these functions refuse
digraphs with more vertices than the ``ORACLE_MAX_N`` setting allows.
"""
import logging

from .conf import setting
from .connectivity import connectivity_graph, maximum_independent_set
from .core import (PathCover, TemporalPath, NEG_INF, PLAIN, TEMPORALLY_DISJOINT,
                   are_temporally_disjoint)
from .exceptions import ResourceLimitExceeded
from .utils import bitmask, debug_timed, iter_bits, popcount

logger = logging.getLogger('tempocover.solvers')


def _check_size(D, max_n=None):
    if max_n is None:
        max_n = setting('ORACLE_MAX_N')
    if D.vertex_count > max_n:
        raise ResourceLimitExceeded("The exact oracles accept at most %d vertices (got %d)"
                                    % (max_n, D.vertex_count), bound=max_n)


def all_temporal_paths(D, max_n=None):
    """ Every strict temporal path of `D`, single vertices included. """
    _check_size(D, max_n)
    paths = []

    def extend(steps, visited, vertex, last):
        for arc in D.out_arcs(vertex):
            if arc.head in visited:
                continue
            visited.add(arc.head)
            for t in arc.labels:
                if t > last:
                    longer = steps + [(vertex, arc.head, t)]
                    paths.append(TemporalPath(longer))
                    extend(longer, visited, arc.head, t)
            visited.discard(arc.head)

    for v in D.vertices:
        paths.append(TemporalPath.single(v))
        extend([], set([v]), v, NEG_INF)
    return paths


def _is_maximal(D, P):
    vertices = set(P.vertices)
    last, first_time = P.times[-1], P.times[0]
    if any(arc.head not in vertices and arc.labels[-1] > last for arc in D.out_arcs(P.sink)):
        return False
    if any(arc.tail not in vertices and arc.labels[0] < first_time
           for arc in D.in_arcs(P.source)):
        return False
    return True


def enumerate_temporal_paths(D, max_n=None):
    """
    The maximal temporal paths of `D` (no arc can be added at either end)
    and every single-vertex path, sorted.
    """
    return sorted(P for P in all_temporal_paths(D, max_n)
                  if not P.steps or _is_maximal(D, P))


@debug_timed
def exact_antichain(D, max_n=None):
    """ A maximum temporal antichain, as a sorted list. """
    _check_size(D, max_n)
    G = connectivity_graph(D)
    return sorted(maximum_independent_set(G.vertex_count, G.adjacency))


@debug_timed
def exact_tpc(D, max_n=None):
    """
    A minimum temporal path cover: set cover over the vertex sets of all
    temporal paths, keeping only sets not strictly contained in another,
    memoized on the bitmask of uncovered vertices.
    """
    witnesses = {}
    for P in all_temporal_paths(D, max_n):
        witnesses.setdefault(bitmask(P.vertices), P)
    masks = sorted(witnesses)
    masks = [m for m in masks if not any(m != other and m & other == m for other in masks)]
    memo = {0: (0, None)}

    def cover(uncovered):
        if uncovered in memo:
            return memo[uncovered][0]
        v = min(iter_bits(uncovered),
                key=lambda w: (sum(1 for m in masks if m >> w & 1), w))
        best, choice = D.vertex_count + 1, None
        for m in masks:
            if m >> v & 1:
                size = 1 + cover(uncovered & ~m)
                if size < best:
                    best, choice = size, m
        memo[uncovered] = (best, choice)
        return best

    uncovered = (1 << D.vertex_count) - 1
    cover(uncovered)
    paths = []
    while uncovered:
        choice = memo[uncovered][1]
        paths.append(witnesses[choice])
        uncovered &= ~choice
    logger.debug("exact_tpc: %d candidate vertex sets, %d subproblems", len(masks), len(memo))
    return PathCover(paths, PLAIN)


@debug_timed
def exact_tdpc(D, max_n=None):
    """
    A minimum temporally disjoint path cover by branch and bound over all
    temporal paths. Branches on the uncovered vertex with the fewest
    compatible candidates; a greedy antichain of the uncovered vertices
    bounds the number of paths still needed.
    """
    candidates = all_temporal_paths(D, max_n)
    masks = [bitmask(P.vertices) for P in candidates]
    count = len(candidates)
    compatible = [0] * count
    for i in range(count):
        for j in range(i + 1, count):
            if not masks[i] & masks[j] or \
                    are_temporally_disjoint(candidates[i], candidates[j]):
                compatible[i] |= 1 << j
                compatible[j] |= 1 << i
    containing = [bitmask(i for i in range(count) if masks[i] >> v & 1) for v in D.vertices]
    adjacency = connectivity_graph(D).adjacency

    def lower_bound(uncovered):
        size = 0
        while uncovered:
            v = min(iter_bits(uncovered), key=lambda w: (popcount(adjacency[w] & uncovered), w))
            uncovered &= ~((1 << v) | adjacency[v])
            size += 1
        return size

    # singletons always form a disjoint cover
    best = [[i for i, P in enumerate(candidates) if not P.steps]]

    def search(uncovered, allowed, chosen):
        if not uncovered:
            if len(chosen) < len(best[0]):
                best[0] = list(chosen)
            return
        if len(chosen) + lower_bound(uncovered) >= len(best[0]):
            return
        v = min(iter_bits(uncovered), key=lambda w: (popcount(containing[w] & allowed), w))
        options = sorted(iter_bits(containing[v] & allowed),
                         key=lambda i: (-popcount(masks[i] & uncovered), i))
        for i in options:
            chosen.append(i)
            search(uncovered & ~masks[i], allowed & compatible[i], chosen)
            chosen.pop()

    search((1 << D.vertex_count) - 1, (1 << count) - 1, [])
    return PathCover([candidates[i] for i in best[0]], TEMPORALLY_DISJOINT)


def dilworth_report(D, max_n=None):
    """
    Exact minimum cover sizes, the maximum antichain size and whether each
    cover size meets the antichain bound.
    """
    tpc = exact_tpc(D, max_n).size
    tdpc = exact_tdpc(D, max_n).size
    antichain = len(exact_antichain(D, max_n))
    return {
        'tpc': tpc,
        'tdpc': tdpc,
        'antichain': antichain,
        'dilworth_holds': tpc == antichain,
        'td_dilworth_holds': tdpc == antichain,
    }
