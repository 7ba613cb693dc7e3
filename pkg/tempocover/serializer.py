"""
Text and JSON formats.

* ``.tg``: ``tg <n> <arc_count>`` header, then one ``u v t1,t2,...`` line per
  arc (0-based ids); ``#`` starts a comment.
* JSON mirror ``{"n": n, "arcs": [{"u": u, "v": v, "labels": [...]}]}``.
* Covers: ``{"mode": mode, "paths": [[[u, v, t], ...], [[v]]]}``.
* Static graphs: DIMACS-like ``p edge n m`` / ``e u v`` with 1-based ids.
* Tree decompositions: PACE ``.td``.
* DOT for visualization.
"""
import json
import os

from .core import TemporalDigraph, TemporalPath, PathCover, MODES
from .exceptions import MalformedInput


def _int(token, lineno, what):
    try:
        return int(token)
    except ValueError:
        raise MalformedInput("%s must be an integer (got %r instead)" % (what, token),
                             lineno=lineno)


def _content_lines(text):
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split('#', 1)[0].strip()
        if line:
            yield lineno, line


def loads_tg(text):
    lines = _content_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise MalformedInput("Empty .tg input")
    fields = header.split()
    if len(fields) != 3 or fields[0] != 'tg':
        raise MalformedInput("Expected header 'tg <n> <arc_count>' (got %r instead)" % header,
                             lineno=lineno)
    n = _int(fields[1], lineno, 'Vertex count')
    arc_count = _int(fields[2], lineno, 'Arc count')
    arcs = []
    for lineno, line in lines:
        fields = line.split()
        if len(fields) != 3:
            raise MalformedInput("Expected 'u v t1,t2,...' (got %r instead)" % line,
                                 lineno=lineno)
        labels = [_int(t, lineno, 'Time label') for t in fields[2].split(',') if t]
        try:
            arcs.append((_int(fields[0], lineno, 'Tail'), _int(fields[1], lineno, 'Head'),
                         labels))
            TemporalDigraph(n, arcs[-1:])
        except MalformedInput as exc:
            if exc.lineno is not None:
                raise
            raise MalformedInput(str(exc), lineno=lineno)
    if len(arcs) != arc_count:
        raise MalformedInput("Header announces %d arcs but %d were given"
                             % (arc_count, len(arcs)))
    return TemporalDigraph(n, arcs)


def dumps_tg(D, comment=None):
    lines = []
    if comment:
        lines.extend('# ' + line for line in comment.splitlines())
    lines.append('tg %d %d' % (D.vertex_count, len(D.arcs)))
    for arc in D.arcs:
        lines.append('%d %d %s' % (arc.tail, arc.head, ','.join(map(str, arc.labels))))
    return '\n'.join(lines) + '\n'


def graph_to_json(D):
    return {
        'n': D.vertex_count,
        'arcs': [{'u': arc.tail, 'v': arc.head, 'labels': list(arc.labels)}
                 for arc in D.arcs],
    }


def graph_from_json(payload):
    try:
        return TemporalDigraph(payload['n'], [(arc['u'], arc['v'], arc['labels'])
                                              for arc in payload['arcs']])
    except (KeyError, TypeError):
        raise MalformedInput("Graph JSON must look like {n, arcs: [{u, v, labels}]}")


def path_to_json(P):
    if not P.steps:
        return [[P.source]]
    return [list(step) for step in P.steps]


def path_from_json(payload):
    try:
        if len(payload) == 1 and len(payload[0]) == 1:
            return TemporalPath.single(payload[0][0])
        return TemporalPath([tuple(step) for step in payload])
    except TypeError:
        raise MalformedInput("Paths must be lists of [u, v, t] steps or [[v]] (got %r)"
                             % (payload,))


def cover_to_json(C):
    return {'mode': C.mode, 'paths': [path_to_json(P) for P in C.paths]}


def cover_from_json(payload):
    try:
        mode, paths = payload['mode'], payload['paths']
    except (KeyError, TypeError):
        raise MalformedInput("Cover JSON must look like {mode, paths}")
    if mode not in MODES:
        raise MalformedInput("Cover mode must be one of %s (got %r instead)"
                             % (', '.join(MODES), mode))
    return PathCover([path_from_json(path) for path in paths], mode)


class TransformTempoCover(object):
    """
    Recursive converters between domain objects and JSON-ready values.
    """
    def transform_incoming(self, value):
        if isinstance(value, (TemporalDigraph, TemporalPath, PathCover)):
            return self.transform_incoming(self._outgoing_object(value))
        if isinstance(value, (set, frozenset)):
            return [self.transform_incoming(item) for item in sorted(value)]
        if isinstance(value, (list, tuple)):
            return [self.transform_incoming(item) for item in value]
        if isinstance(value, dict):
            return dict((key, self.transform_incoming(subvalue))
                        for key, subvalue in value.items())
        return value

    def _outgoing_object(self, value):
        if isinstance(value, TemporalDigraph):
            return graph_to_json(value)
        if isinstance(value, TemporalPath):
            return path_to_json(value)
        return cover_to_json(value)

    def transform_outgoing(self, son):
        if isinstance(son, dict):
            if set(son) == set(['n', 'arcs']):
                return graph_from_json(son)
            if set(son) == set(['mode', 'paths']):
                return cover_from_json(son)
            return dict((key, self.transform_outgoing(value))
                        for key, value in son.items())
        if isinstance(son, list):
            return [self.transform_outgoing(value) for value in son]
        return son


_transform = TransformTempoCover()
to_jsonable = _transform.transform_incoming
from_jsonable = _transform.transform_outgoing


def dumps_json(value, **kwargs):
    kwargs.setdefault('indent', 2)
    return json.dumps(to_jsonable(value), **kwargs)


def loads_json(text):
    try:
        return from_jsonable(json.loads(text))
    except ValueError as exc:
        if isinstance(exc, MalformedInput):
            raise
        raise MalformedInput("Invalid JSON: %s" % exc)


def loads_graph(text):
    """ Parses a digraph in either .tg or JSON form. """
    if text.lstrip().startswith('{'):
        graph = loads_json(text)
        if not isinstance(graph, TemporalDigraph):
            raise MalformedInput("JSON document does not describe a temporal digraph")
        return graph
    return loads_tg(text)


def read_graph(path):
    try:
        with open(path) as fp:
            return loads_graph(fp.read())
    except (IOError, OSError) as exc:
        raise MalformedInput("Cannot read %s: %s" % (path, exc))


def read_cover(path):
    try:
        with open(path) as fp:
            cover = loads_json(fp.read())
    except (IOError, OSError) as exc:
        raise MalformedInput("Cannot read %s: %s" % (path, exc))
    if not isinstance(cover, PathCover):
        raise MalformedInput("%s does not describe a path cover" % path)
    return cover


def write_text(path, text):
    directory = os.path.dirname(path)
    if directory and not os.path.isdir(directory):
        os.makedirs(directory)
    with open(path, 'w') as fp:
        fp.write(text)


def dumps_dot(D, name='D'):
    lines = ['digraph %s {' % name]
    for v in D.vertices:
        lines.append('  %d;' % v)
    for arc in D.arcs:
        lines.append('  %d -> %d [label="%s"];' % (arc.tail, arc.head,
                                                  ','.join(map(str, arc.labels))))
    lines.append('}')
    return '\n'.join(lines) + '\n'


def dumps_static_dot(n, edges, name='G'):
    lines = ['graph %s {' % name]
    for v in range(n):
        lines.append('  %d;' % v)
    for u, v in sorted(edges):
        lines.append('  %d -- %d;' % (u, v))
    lines.append('}')
    return '\n'.join(lines) + '\n'


def dumps_dimacs(n, edges):
    edges = sorted(tuple(sorted(edge)) for edge in edges)
    lines = ['p edge %d %d' % (n, len(edges))]
    lines.extend('e %d %d' % (u + 1, v + 1) for u, v in edges)
    return '\n'.join(lines) + '\n'


def loads_dimacs(text):
    """ Returns ``(n, edges)`` with 0-based ids. """
    n = None
    edges = set()
    for lineno, line in enumerate(text.splitlines(), 1):
        fields = line.split()
        if not fields or fields[0] == 'c':
            continue
        if fields[0] == 'p':
            if len(fields) != 4:
                raise MalformedInput("Expected 'p edge <n> <m>'", lineno=lineno)
            n = _int(fields[2], lineno, 'Vertex count')
        elif fields[0] == 'e':
            if n is None:
                raise MalformedInput("Edge before problem line", lineno=lineno)
            u, v = (_int(f, lineno, 'Vertex') - 1 for f in fields[1:3])
            if not (0 <= u < n and 0 <= v < n) or u == v:
                raise MalformedInput("Bad edge %r" % line, lineno=lineno)
            edges.add((min(u, v), max(u, v)))
        else:
            raise MalformedInput("Unknown line %r" % line, lineno=lineno)
    if n is None:
        raise MalformedInput("Missing problem line")
    return n, edges


def clique_cover_to_json(cliques):
    return [sorted(clique) for clique in cliques]


def dumps_td(decomposition, vertex_count):
    """ PACE ``.td`` text for a :class:`~tempocover.decomposition.TreeDecomposition`. """
    index = dict((node, i) for i, node in enumerate(decomposition.nodes, 1))
    lines = ['s td %d %d %d' % (len(index), decomposition.width + 1, vertex_count)]
    for node in decomposition.nodes:
        lines.append(' '.join(['b', str(index[node])] +
                              [str(v + 1) for v in sorted(decomposition.bags[node])]))
    for a, b in decomposition.edges:
        lines.append('%d %d' % (index[a], index[b]))
    return '\n'.join(lines) + '\n'


def loads_td(text):
    """ Parses PACE ``.td`` text into ``(vertex_count, TreeDecomposition)``. """
    from .decomposition import TreeDecomposition
    header = None
    bags = {}
    edges = []
    for lineno, line in enumerate(text.splitlines(), 1):
        fields = line.split()
        if not fields or fields[0] == 'c':
            continue
        if fields[0] == 's':
            if len(fields) != 5 or fields[1] != 'td':
                raise MalformedInput("Expected 's td <bags> <width+1> <n>'", lineno=lineno)
            header = [_int(f, lineno, 'Header field') for f in fields[2:]]
        elif fields[0] == 'b':
            if header is None:
                raise MalformedInput("Bag before solution line", lineno=lineno)
            node = _int(fields[1], lineno, 'Bag id') - 1
            bags[node] = frozenset(_int(f, lineno, 'Vertex') - 1 for f in fields[2:])
        else:
            if len(fields) != 2:
                raise MalformedInput("Expected a tree edge (got %r instead)" % line,
                                     lineno=lineno)
            edges.append(tuple(_int(f, lineno, 'Bag id') - 1 for f in fields))
    if header is None:
        raise MalformedInput("Missing solution line")
    bag_count, _, vertex_count = header
    if sorted(bags) != list(range(bag_count)):
        raise MalformedInput("Expected bags 1..%d" % bag_count)
    return vertex_count, TreeDecomposition(bags, edges)
