"""
Tree decompositions of the underlying undirected graph.

Small graphs get an optimal-width decomposition from an exact search over
elimination orderings; larger ones use networkx's min-fill-in heuristic.
Either one is then normalized into a nice tree decomposition with leaf,
introduce, forget and join nodes, empty leaves and an empty root.
"""
import itertools

import networkx as nx
from networkx.algorithms.approximation import treewidth_min_fill_in

from .exceptions import DomainError
from .utils import iter_bits, popcount

EXACT_MAX_N = 12

LEAF = 'leaf'
INTRODUCE = 'introduce'
FORGET = 'forget'
JOIN = 'join'


class TreeDecomposition(object):
    """
    :param bags: dict mapping node ids to frozensets of vertices
    :param edges: tree edges between node ids
    """
    def __init__(self, bags, edges):
        self.bags = dict((node, frozenset(bag)) for node, bag in bags.items())
        self.edges = [tuple(edge) for edge in edges]

    @property
    def nodes(self):
        return sorted(self.bags)

    @property
    def width(self):
        return max(len(bag) for bag in self.bags.values()) - 1

    def tree(self):
        tree = nx.Graph()
        tree.add_nodes_from(self.bags)
        tree.add_edges_from(self.edges)
        return tree


def validate_decomposition(td, graph):
    """
    Returns the list of violated tree-decomposition axioms (empty if valid):
    the nodes form a tree, every vertex and every edge is in some bag, and
    the bags holding a vertex are connected.
    """
    problems = []
    tree = td.tree()
    if not td.bags or not nx.is_tree(tree):
        problems.append("decomposition is not a tree")
        return problems
    covered = set().union(*td.bags.values())
    for v in graph.nodes():
        if v not in covered:
            problems.append("vertex %r is in no bag" % (v,))
    for u, v in graph.edges():
        if not any(u in bag and v in bag for bag in td.bags.values()):
            problems.append("edge %r is in no bag" % ((u, v),))
    for v in covered:
        holders = [node for node, bag in td.bags.items() if v in bag]
        if not nx.is_connected(tree.subgraph(holders)):
            problems.append("bags holding %r are not connected" % (v,))
    return problems


def treewidth_exact(graph):
    """
    ``(width, order)``: an optimal elimination ordering by branch and bound
    over vertex subsets. A set ``S`` eliminated first costs the size of the
    set of outside vertices reachable from the last eliminated vertex
    through ``S``.
    """
    nodes = sorted(graph.nodes())
    n = len(nodes)
    if n > EXACT_MAX_N:
        raise DomainError("Exact treewidth is limited to %d vertices" % EXACT_MAX_N)
    index = dict((v, i) for i, v in enumerate(nodes))
    adjacency = [0] * n
    for u, v in graph.edges():
        adjacency[index[u]] |= 1 << index[v]
        adjacency[index[v]] |= 1 << index[u]

    def q_size(eliminated, v):
        visited = frontier = 1 << v
        reach = 0
        while frontier:
            step = 0
            for w in iter_bits(frontier):
                step |= adjacency[w]
            step &= ~visited
            visited |= step
            reach |= step & ~eliminated
            frontier = step & eliminated
        return popcount(reach)

    upper = _min_fill_order(graph)[0]
    memo = {0: (-1, None)}

    def best(subset):
        if subset in memo:
            return memo[subset][0]
        value, choice = upper + 1, None
        for v in iter_bits(subset):
            rest = subset & ~(1 << v)
            cost = q_size(rest, v)
            if cost >= value:
                continue
            cost = max(cost, best(rest))
            if cost < value:
                value, choice = cost, v
        memo[subset] = (value, choice)
        return value

    width = best((1 << n) - 1)
    order = []
    subset = (1 << n) - 1
    while subset:
        v = memo[subset][1]
        order.append(nodes[v])
        subset &= ~(1 << v)
    order.reverse()
    return max(width, 0), order


def _min_fill_order(graph):
    graph = graph.copy()
    width = 0
    order = []
    while graph:
        v = min(graph, key=lambda u: (_fill_in(graph, u), u))
        neighbors = list(graph[v])
        width = max(width, len(neighbors))
        graph.add_edges_from(itertools.combinations(neighbors, 2))
        graph.remove_node(v)
        order.append(v)
    return width, order


def _fill_in(graph, v):
    return sum(1 for a, b in itertools.combinations(graph[v], 2) if b not in graph[a])


def decomposition_from_order(graph, order):
    """ The tree decomposition induced by eliminating vertices in `order`. """
    graph = graph.copy()
    position = dict((v, i) for i, v in enumerate(order))
    bags = {}
    edges = []
    for i, v in enumerate(order):
        neighbors = list(graph[v])
        bags[i] = frozenset([v] + neighbors)
        graph.add_edges_from(itertools.combinations(neighbors, 2))
        graph.remove_node(v)
        if neighbors:
            edges.append((i, min(position[w] for w in neighbors)))
    # link the component roots
    roots = [i for i in bags if not any(a == i for a, _ in edges)]
    for a, b in zip(roots, roots[1:]):
        edges.append((a, b))
    return TreeDecomposition(bags, edges)


def tree_decomposition(graph):
    if graph.number_of_nodes() <= EXACT_MAX_N:
        _, order = treewidth_exact(graph)
        return decomposition_from_order(graph, order)
    _, decomposition = treewidth_min_fill_in(graph)
    nodes = sorted(decomposition.nodes(), key=lambda bag: sorted(bag))
    index = dict((bag, i) for i, bag in enumerate(nodes))
    return TreeDecomposition(dict((i, bag) for bag, i in index.items()),
                             [(index[a], index[b]) for a, b in decomposition.edges()])


class NiceNode(object):
    __slots__ = ('id', 'kind', 'bag', 'vertex', 'children')

    def __init__(self, id, kind, bag, vertex=None, children=()):
        self.id = id
        self.kind = kind
        self.bag = frozenset(bag)
        self.vertex = vertex
        self.children = tuple(children)

    def __repr__(self):
        return '<NiceNode %d %s %s%s>' % (self.id, self.kind, sorted(self.bag),
                                         '' if self.vertex is None else ' v=%d' % self.vertex)


class NiceTreeDecomposition(object):
    def __init__(self):
        self.nodes = []
        self.root = None

    def add(self, kind, bag, vertex=None, children=()):
        node = NiceNode(len(self.nodes), kind, bag, vertex, children)
        self.nodes.append(node)
        return node.id

    @property
    def width(self):
        return max(len(node.bag) for node in self.nodes) - 1

    def postorder(self):
        """ Node ids, children before parents. """
        order = []
        stack = [(self.root, False)]
        while stack:
            node_id, expanded = stack.pop()
            if expanded:
                order.append(node_id)
                continue
            stack.append((node_id, True))
            for child in reversed(self.nodes[node_id].children):
                stack.append((child, False))
        return order

    def as_tree_decomposition(self):
        bags = dict((node.id, node.bag) for node in self.nodes)
        edges = [(node.id, child) for node in self.nodes for child in node.children]
        return TreeDecomposition(bags, edges)

    def check(self):
        """ Violations of the leaf/introduce/forget/join rules (empty if nice). """
        problems = []
        if self.nodes[self.root].bag:
            problems.append("root bag is not empty")
        for node in self.nodes:
            children = [self.nodes[c] for c in node.children]
            if node.kind == LEAF:
                if children or node.bag:
                    problems.append("%r: leaves have no children and an empty bag" % node)
            elif node.kind == INTRODUCE:
                if len(children) != 1 or node.vertex in children[0].bag or \
                        node.bag != children[0].bag | set([node.vertex]):
                    problems.append("%r: bad introduce node" % node)
            elif node.kind == FORGET:
                if len(children) != 1 or node.vertex not in children[0].bag or \
                        node.bag != children[0].bag - set([node.vertex]):
                    problems.append("%r: bad forget node" % node)
            elif node.kind == JOIN:
                if len(children) != 2 or any(child.bag != node.bag for child in children):
                    problems.append("%r: bad join node" % node)
            else:
                problems.append("%r: unknown kind" % node)
        return problems


def nicify(td):
    """ Turns a tree decomposition into a nice one. """
    nice = NiceTreeDecomposition()
    tree = td.tree()
    top = td.nodes[0]
    parents = dict(nx.bfs_predecessors(tree, top))
    order = list(nx.dfs_postorder_nodes(tree, top))
    built = {}

    def chain(child_id, target):
        bag = nice.nodes[child_id].bag
        for v in sorted(bag - target):
            bag = bag - set([v])
            child_id = nice.add(FORGET, bag, v, [child_id])
        for v in sorted(target - bag):
            bag = bag | set([v])
            child_id = nice.add(INTRODUCE, bag, v, [child_id])
        return child_id

    for node in order:
        bag = td.bags[node]
        children = [chain(built[c], bag) for c in sorted(tree[node])
                    if parents.get(c) == node]
        if not children:
            children = [chain(nice.add(LEAF, ()), bag)]
        while len(children) > 1:
            left, right = children.pop(0), children.pop(0)
            children.append(nice.add(JOIN, bag, None, [left, right]))
        built[node] = children[0]
    nice.root = chain(built[top], frozenset())
    return nice


def build_nice_decomposition(D):
    """ A nice tree decomposition of the underlying graph of `D`. """
    return nicify(tree_decomposition(D.underlying_graph()))
