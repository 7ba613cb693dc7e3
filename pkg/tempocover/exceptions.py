class TempoCoverError(Exception):
    """ Base class of everything this package raises on purpose """


class MalformedInput(TempoCoverError, ValueError):
    """
    Raised for input that does not describe a temporal digraph (or path,
    cover, decomposition...) at all: unknown vertex ids, non-positive labels,
    unparsable files, malformed gadget parameters.
    """
    def __init__(self, msg, lineno=None):
        if lineno is not None:
            msg = "line %d: %s" % (lineno, msg)
        super(MalformedInput, self).__init__(msg)
        self.lineno = lineno


class DomainError(TempoCoverError, ValueError):
    """
    Well-formed input that violates an operation's precondition. `witness`
    holds the offending structure if there is one (e.g. a hole).
    """
    def __init__(self, msg, witness=None):
        super(DomainError, self).__init__(msg)
        self.witness = witness


class GraphClassError(DomainError):
    def __init__(self, expected, actual):
        if not isinstance(expected, (list, tuple, set, frozenset)):
            expected = [expected]
        self.expected = sorted(expected)
        self.actual = actual
        super(GraphClassError, self).__init__(
            "Expected a temporal digraph of class %s (got %s instead)"
            % (' or '.join(self.expected), actual))


class ResourceLimitExceeded(TempoCoverError):
    def __init__(self, msg, bound=None):
        super(ResourceLimitExceeded, self).__init__(msg)
        self.bound = bound

