"""
Exact path covers by dynamic programming over a nice tree decomposition.

A solution is described locally by *visits*: each time a path passes
through a vertex it arrives at ``t_in`` (or starts there, ``SOURCE``) and
leaves at ``t_out`` (or ends there, ``SINK``). Every visit has an in-slot
and an out-slot that must be matched with an out-slot (resp. in-slot) of a
visit at a neighbour, through an arc carrying the same time. A table entry
for a node of the decomposition is a canonical tuple of *fragments*: the
visits at bag vertices grouped by the partial path they belong to below the
node, plus the forgotten vertices those partial paths already contain when
another fragment contains them too.

Arcs are decided when the first of their endpoints is forgotten; the cost
of a state is the number of path starts below the node.

In the temporally disjoint problem the visits at one vertex have pairwise
disjoint occupation intervals. In the plain problem a vertex has either one
visit or several visits that all pass through it: any cover can be trimmed
into that shape without growing.
"""
import itertools
import logging
from collections import namedtuple, defaultdict

from .conf import setting
from .connectivity import connectivity_graph
from .core import (PathCover, TemporalPath, NEG_INF, POS_INF, PLAIN,
                   TEMPORALLY_DISJOINT, verify_cover)
from .decomposition import build_nice_decomposition, LEAF, INTRODUCE, FORGET, JOIN
from .exceptions import DomainError, ResourceLimitExceeded, TempoCoverError
from .utils import debug_timed, iter_bits, popcount

logger = logging.getLogger('tempocover.solvers')

SOURCE = NEG_INF
SINK = POS_INF

# slot states
NO_SLOT = 0
ABOVE = 1   # still to be matched outside the subtree
BELOW = 2   # matched inside the subtree

Visit = namedtuple('Visit', 'vertex t_in t_out in_slot out_slot')


class TemporalMultiDigraph(object):
    """ One ``(tail, head, time)`` arc per label of a temporal digraph. """
    def __init__(self, vertex_count, arcs):
        self.vertex_count = vertex_count
        self.arcs = tuple(sorted(set(arcs)))
        self._arcs = frozenset(self.arcs)
        self.t_max = max([t for _, _, t in self.arcs] or [0])
        self.in_times = [set() for _ in range(vertex_count)]
        self.out_times = [set() for _ in range(vertex_count)]
        for u, v, t in self.arcs:
            self.out_times[u].add(t)
            self.in_times[v].add(t)

    def __repr__(self):
        return '<TemporalMultiDigraph n=%d arcs=%d>' % (self.vertex_count, len(self.arcs))

    def has_arc(self, tail, head, time):
        return (tail, head, time) in self._arcs


def expand_multiarcs(D):
    """ Splits every arc with label set L into |L| single-label arcs. """
    return TemporalMultiDigraph(D.vertex_count, [(arc.tail, arc.head, t)
                                                 for arc in D.arcs for t in arc.labels])


def _visit(vertex, t_in, t_out):
    return Visit(vertex, t_in, t_out,
                 NO_SLOT if t_in == SOURCE else ABOVE,
                 NO_SLOT if t_out == SINK else ABOVE)


def visit_options(M, x, mode, cap):
    """ Every admissible tuple of visits at vertex `x`. """
    ins = [SOURCE] + sorted(M.in_times[x])
    outs = sorted(M.out_times[x]) + [SINK]
    kinds = [(a, b) for a in ins for b in outs if a < b]
    options = [(_visit(x, a, b),) for a, b in kinds]
    if mode == TEMPORALLY_DISJOINT:
        kinds.sort()

        def chains(start, last_end):
            for i in range(start, len(kinds)):
                a, b = kinds[i]
                if a > last_end:
                    yield [(a, b)]
                    for rest in chains(i + 1, b):
                        yield [(a, b)] + rest

        for chain in chains(0, NEG_INF):
            if len(chain) > 1:
                options.append(tuple(_visit(x, a, b) for a, b in chain))
    else:
        through = [(a, b) for a, b in kinds if a != SOURCE and b != SINK]
        for size in range(2, cap + 1):
            for multiset in itertools.combinations_with_replacement(through, size):
                options.append(tuple(_visit(x, a, b) for a, b in multiset))
    return options


def _unpack(state):
    """ Flat visit list, matching positions and ``(indices, tags)`` groups. """
    visits, positions, groups = [], [], []
    for gi, (group_visits, tags) in enumerate(state):
        indices = []
        for vi, visit in enumerate(group_visits):
            indices.append(len(visits))
            visits.append(visit)
            positions.append((gi, vi))
        groups.append((indices, tags))
    return visits, positions, groups


def _canonical(visits, groups):
    """
    Canonical state for `groups` (lists of indices into `visits` with tag
    sets) and the position of every index in it.
    """
    tag_count = defaultdict(int)
    for indices, tags in groups:
        if not indices:
            continue
        for tag in tags:
            tag_count[tag] += 1
    keyed = []
    for indices, tags in groups:
        if not indices:
            continue
        ordered = sorted(indices, key=lambda i: visits[i])
        key = (tuple(visits[i] for i in ordered),
               tuple(sorted(tag for tag in tags if tag_count[tag] > 1)))
        keyed.append((key, ordered))
    keyed.sort()
    where = {}
    for gi, (_, ordered) in enumerate(keyed):
        for vi, i in enumerate(ordered):
            where[i] = (gi, vi)
    return tuple(key for key, _ in keyed), where


def _merge_groups(visits, members, groups, find):
    """
    Merges groups by the union-find `find`; returns the merged
    ``(indices, tags)`` list or None when a merged path would visit a
    vertex twice.
    """
    merged = defaultdict(lambda: ([], []))
    for g, (indices, tags) in enumerate(groups):
        root = find(g)
        merged[root][0].extend(indices)
        merged[root][1].extend(tags)
    result = []
    for indices, tags in merged.values():
        vertices = [visits[i].vertex for i in indices if i in members]
        if len(set(vertices)) != len(vertices) or len(set(tags)) != len(tags):
            return None
        result.append((indices, set(tags)))
    return result


class _UnionFind(object):
    def __init__(self, size):
        self.parent = list(range(size))

    def find(self, a):
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    def union(self, a, b):
        a, b = self.find(a), self.find(b)
        if a != b:
            self.parent[max(a, b)] = min(a, b)


def paths_needed(state, value):
    """
    Lower bound on the size of any cover completing `state`, where `value`
    paths start below the node. Paths whose fragments are gone are closed;
    the open ones include one per started fragment and one per visit at any
    single bag vertex.
    """
    started = 0
    per_vertex = defaultdict(int)
    for visits, _ in state:
        if min(visits, key=lambda visit: visit.t_in).in_slot != ABOVE:
            started += 1
        for visit in visits:
            per_vertex[visit.vertex] += 1
    return value - started + max([started] + list(per_vertex.values()))


class _Table(object):
    def __init__(self, run):
        self.run = run
        self.entries = {}

    def offer(self, state, value, back):
        if paths_needed(state, value) > self.run.bound:
            return
        current = self.entries.get(state)
        if current is None:
            self.run.count += 1
            if self.run.count > self.run.budget:
                self.run.exhausted()
            self.entries[state] = (value, back)
        elif value < current[0]:
            self.entries[state] = (value, back)


class _Run(object):
    """ One bottom-up pass with a fixed bound on the number of paths. """
    def __init__(self, M, nice, mode, bound, caps, budget):
        self.M = M
        self.nice = nice
        self.mode = mode
        self.bound = bound
        self.caps = caps
        self.budget = budget
        self.count = 0
        self.tables = {}
        self._options = {}

    def exhausted(self):
        bag = self.nice.width + 1
        p = bag * (bag - 1) // 2 * self.M.t_max
        raise ResourceLimitExceeded(
            "DP state budget of %d exhausted (bag size %d, t_max %d, p = C(%d, 2) * %d = %d)"
            % (self.budget, bag, self.M.t_max, bag, self.M.t_max, p), bound=p)

    def options(self, x):
        if x not in self._options:
            self._options[x] = visit_options(self.M, x, self.mode, self.caps[x])
        return self._options[x]

    def solve(self):
        for node_id in self.nice.postorder():
            node = self.nice.nodes[node_id]
            table = _Table(self)
            getattr(self, 'do_' + node.kind)(node, table)
            self.tables[node_id] = table.entries
        return self.tables[self.nice.root]

    def do_leaf(self, node, table):
        table.offer((), 0, None)

    def do_introduce(self, node, table):
        x = node.vertex
        for state, (value, _) in self.tables[node.children[0]].items():
            visits, positions, groups = _unpack(state)
            for option in self.options(x):
                starts = sum(1 for visit in option if visit.t_in == SOURCE)
                if value + starts > self.bound:
                    continue
                all_visits = visits + list(option)
                new_groups = groups + [([len(visits) + k], set()) for k in range(len(option))]
                new_state, where = _canonical(all_visits, new_groups)
                links = tuple((where[i], positions[i]) for i in range(len(visits)))
                table.offer(new_state, value + starts, (state, links))

    def _slot_partners(self, visits, x, i, kind):
        visit = visits[i]
        partners = []
        for j, other in enumerate(visits):
            if other.vertex == x:
                continue
            if kind == 'in' and other.out_slot == ABOVE and other.t_out == visit.t_in \
                    and self.M.has_arc(other.vertex, x, visit.t_in):
                partners.append(j)
            elif kind == 'out' and other.in_slot == ABOVE and other.t_in == visit.t_out \
                    and self.M.has_arc(x, other.vertex, visit.t_out):
                partners.append(j)
        return partners

    def _matchings(self, slots, candidates, index=0, used=None):
        if used is None:
            used = set()
        if index == len(slots):
            yield []
            return
        i, kind = slots[index]
        for j in candidates[index]:
            if (j, kind) in used:
                continue
            used.add((j, kind))
            for rest in self._matchings(slots, candidates, index + 1, used):
                yield [(i, kind, j)] + rest
            used.discard((j, kind))

    def do_forget(self, node, table):
        x = node.vertex
        for state, (value, _) in self.tables[node.children[0]].items():
            visits, positions, groups = _unpack(state)
            group_of = {}
            for g, (indices, _) in enumerate(groups):
                for i in indices:
                    group_of[i] = g
            mine = [i for i, visit in enumerate(visits) if visit.vertex == x]
            slots = []
            for i in mine:
                if visits[i].in_slot == ABOVE:
                    slots.append((i, 'in'))
                if visits[i].out_slot == ABOVE:
                    slots.append((i, 'out'))
            candidates = [self._slot_partners(visits, x, i, kind) for i, kind in slots]
            if not all(candidates):
                continue
            for matching in self._matchings(slots, candidates):
                uf = _UnionFind(len(groups))
                for i, _, j in matching:
                    uf.union(group_of[i], group_of[j])
                merged = _merge_groups(visits, set(range(len(visits))), groups, uf.find)
                if merged is None:
                    continue
                updated = list(visits)
                for _, kind, j in matching:
                    if kind == 'in':
                        updated[j] = updated[j]._replace(out_slot=BELOW)
                    else:
                        updated[j] = updated[j]._replace(in_slot=BELOW)
                remaining = []
                for indices, tags in merged:
                    kept = [i for i in indices if updated[i].vertex != x]
                    if len(kept) != len(indices):
                        tags = tags | set([x])
                    remaining.append((kept, tags))
                new_state, where = _canonical(updated, remaining)
                links = tuple((where[i], positions[i]) for i in where)
                matches = tuple((positions[i], kind, positions[j]) for i, kind, j in matching)
                table.offer(new_state, value, (state, links, matches))

    def do_join(self, node, table):
        left_table = self.tables[node.children[0]]
        right_table = self.tables[node.children[1]]
        by_signature = defaultdict(list)
        for state in right_table:
            by_signature[_signature(state)].append(state)
        for left, (left_value, _) in left_table.items():
            lvisits, lpositions, lgroups = _unpack(left)
            for right in by_signature.get(_signature(left), ()):
                right_value = right_table[right][0]
                rvisits, rpositions, rgroups = _unpack(right)
                starts = sum(1 for visit in lvisits if visit.t_in == SOURCE)
                value = left_value + right_value - starts
                if value > self.bound:
                    continue
                for pairs in _bijections(lvisits, rvisits):
                    self._join_pair(table, left, right, value, lvisits, lpositions, lgroups,
                                    rvisits, rpositions, rgroups, pairs)

    def _join_pair(self, table, left, right, value, lvisits, lpositions, lgroups,
                   rvisits, rpositions, rgroups, pairs):
        visits = []
        for i, j in pairs:
            a, b = lvisits[i], rvisits[j]
            slots = []
            for sa, sb in ((a.in_slot, b.in_slot), (a.out_slot, b.out_slot)):
                if sa == BELOW and sb == BELOW:
                    return
                slots.append(join_slots(sa, sb))
            visits.append(a._replace(in_slot=slots[0], out_slot=slots[1]))
        lgroup_of = {}
        for g, (indices, _) in enumerate(lgroups):
            for i in indices:
                lgroup_of[i] = g
        rgroup_of = {}
        for g, (indices, _) in enumerate(rgroups):
            for j in indices:
                rgroup_of[j] = len(lgroups) + g
        # groups over pair indices: left groups first, then right groups
        groups = []
        for g, (indices, tags) in enumerate(lgroups):
            groups.append(([k for k, (i, _) in enumerate(pairs) if lgroup_of[i] == g], tags))
        for _, tags in rgroups:
            groups.append(([], tags))
        uf = _UnionFind(len(groups))
        for k, (i, j) in enumerate(pairs):
            uf.union(lgroup_of[i], rgroup_of[j])
        merged = _merge_groups(visits, set(range(len(visits))), groups, uf.find)
        if merged is None:
            return
        new_state, where = _canonical(visits, merged)
        left_links = tuple((where[k], lpositions[i]) for k, (i, _) in enumerate(pairs))
        right_links = tuple((where[k], rpositions[j]) for k, (_, j) in enumerate(pairs))
        table.offer(new_state, value, (left, right, left_links, right_links))


def join_slots(left, right):
    """
    Slot state after a join. ``(BELOW, BELOW)`` would match one slot twice
    and is rejected by the caller.
    """
    if left == NO_SLOT:
        return NO_SLOT
    if left == BELOW or right == BELOW:
        return BELOW
    return ABOVE


def _signature(state):
    return tuple(sorted((visit.vertex, visit.t_in, visit.t_out)
                        for visits, _ in state for visit in visits))


def _bijections(lvisits, rvisits):
    """ All pairings of equal visits (same vertex and times) across two states. """
    lkeys = defaultdict(list)
    rkeys = defaultdict(list)
    for i, visit in enumerate(lvisits):
        lkeys[visit[:3]].append(i)
    for j, visit in enumerate(rvisits):
        rkeys[visit[:3]].append(j)
    keys = sorted(lkeys)
    choices = [[list(zip(lkeys[key], perm)) for perm in itertools.permutations(rkeys[key])]
               for key in keys]
    for combination in itertools.product(*choices):
        yield [pair for part in combination for pair in part]


def check_state(M, bag, state, mode):
    """
    Consistency problems of a DP state (empty if consistent): every bag
    vertex has a visit and nothing else does, each fragment visits distinct
    vertices in time order with distinct labels, slots agree with path
    ends, and in the disjoint problem visits at a vertex do not overlap.
    """
    problems = []
    per_vertex = defaultdict(list)
    for visits, tags in state:
        vertices = [visit.vertex for visit in visits]
        if len(set(vertices)) != len(vertices):
            problems.append("fragment %r visits a vertex twice" % (visits,))
        if set(tags) & set(bag):
            problems.append("fragment %r is tagged with bag vertices" % (visits,))
        ordered = sorted(visits, key=lambda visit: (visit.t_in, visit.t_out))
        for visit in ordered:
            per_vertex[visit.vertex].append(visit)
            if not visit.t_in < visit.t_out:
                problems.append("visit %r does not move forward in time" % (visit,))
            if (visit.in_slot == NO_SLOT) != (visit.t_in == SOURCE) or \
                    (visit.out_slot == NO_SLOT) != (visit.t_out == SINK):
                problems.append("visit %r has inconsistent slots" % (visit,))
            if visit.t_in != SOURCE and visit.t_in not in M.in_times[visit.vertex] or \
                    visit.t_out != SINK and visit.t_out not in M.out_times[visit.vertex]:
                problems.append("visit %r uses a label of no arc" % (visit,))
        for before, after in zip(ordered, ordered[1:]):
            if before.t_out > after.t_in:
                problems.append("visits %r and %r overlap in one fragment" % (before, after))
        ins = [visit.t_in for visit in visits if visit.t_in != SOURCE]
        outs = [visit.t_out for visit in visits if visit.t_out != SINK]
        if len(set(ins)) != len(ins) or len(set(outs)) != len(outs):
            problems.append("fragment %r repeats a label" % (visits,))
        if sum(1 for visit in visits if visit.t_in == SOURCE) > 1 or \
                sum(1 for visit in visits if visit.t_out == SINK) > 1:
            problems.append("fragment %r has two ends on one side" % (visits,))
    if set(per_vertex) != set(bag):
        problems.append("visited vertices %r differ from bag %r"
                        % (sorted(per_vertex), sorted(bag)))
    for vertex, visits in per_vertex.items():
        if mode == TEMPORALLY_DISJOINT:
            visits = sorted(visits, key=lambda visit: visit.t_in)
            for before, after in zip(visits, visits[1:]):
                if before.t_out >= after.t_in:
                    problems.append("visits at %d overlap" % vertex)
        elif len(visits) > 1 and any(visit.t_in == SOURCE or visit.t_out == SINK
                                     for visit in visits):
            problems.append("vertex %d has several visits and a path end" % vertex)
    return problems


def _reconstruct(run, M):
    """ Rebuilds the cover of the best root entry from back-pointers. """
    records = {}
    successor = {}
    has_predecessor = set()
    counter = itertools.count()
    stack = [(run.nice.root, (), {})]
    while stack:
        node_id, state, ids = stack.pop()
        node = run.nice.nodes[node_id]
        back = run.tables[node_id][state][1]
        if node.kind == LEAF:
            continue
        if node.kind == INTRODUCE:
            child_state, links = back
            stack.append((node.children[0], child_state,
                          dict((child, ids[parent]) for parent, child in links)))
        elif node.kind == FORGET:
            child_state, links, matches = back
            child_ids = dict((child, ids[parent]) for parent, child in links)
            for gi, (visits, _) in enumerate(child_state):
                for vi, visit in enumerate(visits):
                    if visit.vertex == node.vertex:
                        gid = next(counter)
                        child_ids[gi, vi] = gid
                        records[gid] = visit
            for mine, kind, partner in matches:
                visit = child_state[mine[0]][0][mine[1]]
                if kind == 'in':
                    successor[child_ids[partner]] = (child_ids[mine], visit.t_in)
                    has_predecessor.add(child_ids[mine])
                else:
                    successor[child_ids[mine]] = (child_ids[partner], visit.t_out)
                    has_predecessor.add(child_ids[partner])
            stack.append((node.children[0], child_state, child_ids))
        else:
            left, right, left_links, right_links = back
            stack.append((node.children[0], left,
                          dict((child, ids[parent]) for parent, child in left_links)))
            stack.append((node.children[1], right,
                          dict((child, ids[parent]) for parent, child in right_links)))
    paths = []
    for gid in sorted(records):
        if gid in has_predecessor:
            continue
        vertex = records[gid].vertex
        steps = []
        while gid in successor:
            gid, time = successor[gid]
            steps.append((vertex, records[gid].vertex, time))
            vertex = records[gid].vertex
        paths.append(TemporalPath(steps) if steps else TemporalPath.single(vertex))
    return paths


def greedy_disjoint_cover(D):
    """
    Vertex-disjoint temporal paths covering `D`: from the lowest uncovered
    vertex, follow the earliest usable arc into an uncovered vertex.
    """
    covered = set()
    paths = []
    for v in D.vertices:
        if v in covered:
            continue
        covered.add(v)
        steps = []
        current, last = v, NEG_INF
        while True:
            options = [(t, arc.head) for arc in D.out_arcs(current) if arc.head not in covered
                       for t in arc.labels if t > last]
            if not options:
                break
            last, head = min(options)
            steps.append((current, head, last))
            covered.add(head)
            current = head
        paths.append(TemporalPath(steps) if steps else TemporalPath.single(v))
    return PathCover(paths, TEMPORALLY_DISJOINT)


def _lower_bound(G):
    """ Size of a greedy temporal antichain of the connectivity graph `G`. """
    alive = (1 << G.vertex_count) - 1
    size = 0
    while alive:
        v = min(iter_bits(alive), key=lambda w: (popcount(G.adjacency[w] & alive), w))
        alive &= ~((1 << v) | G.adjacency[v])
        size += 1
    return size


def _solve(D, mode, k_bound=None):
    G = connectivity_graph(D)
    fallback = greedy_disjoint_cover(D)
    upper = fallback.size
    if _lower_bound(G) == upper:
        logger.debug("%s: greedy cover meets the antichain bound %d", mode, upper)
        return PathCover(fallback.paths, mode)
    if k_bound is None:
        k_bound = setting('DP_MULTIPLICITY_CAP') or D.vertex_count
    # several paths through x each need a private vertex connected to x
    caps = [max(1, min(k_bound, upper, popcount(G.adjacency[v]))) for v in D.vertices]
    M = expand_multiarcs(D)
    run = _Run(M, build_nice_decomposition(D), mode, upper, caps, setting('DP_STATE_BUDGET'))
    root = run.solve()
    logger.debug("%s DP with bound %d: %d states, root %s", mode, upper, run.count,
                 'solved' if () in root else 'infeasible')
    if () not in root:
        raise ResourceLimitExceeded(
            "No %s cover with at most %d paths and at most %d visits per vertex"
            % (mode, upper, max(caps)), bound=upper)
    cover = PathCover(_reconstruct(run, M), mode)
    if cover.size != root[()][0] or not verify_cover(D, cover):
        raise TempoCoverError("DP witness does not match its table value")
    return cover


@debug_timed
def tdpc_dp(D):
    """ A minimum temporally disjoint path cover of `D`. """
    return _solve(D, TEMPORALLY_DISJOINT)


@debug_timed
def tpc_dp(D, k_bound=None):
    """
    A minimum temporal path cover of `D`. At most `k_bound` (default ``n``)
    paths may pass through one vertex.
    """
    if k_bound is not None and not 1 <= k_bound <= D.vertex_count:
        raise DomainError("k_bound must lie in [1, n] (got %r instead)" % (k_bound,))
    return _solve(D, PLAIN, k_bound)
