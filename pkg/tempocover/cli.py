"""
Command-line interface::

    tempocover solve instance.tg --problem tdpc
    tempocover gap instance.tg
    tempocover generate star 3 --out star3.tg
    tempocover verify instance.tg cover.json
    tempocover convert instance.tg --format dot

Exit codes: 0 success, 1 invalid cover (``verify``), 2 malformed input,
3 solver not applicable to the graph class, 4 resource limit exceeded.
"""
import argparse
import logging
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from functools import wraps

from django.conf import settings
from django.core.exceptions import ImproperlyConfigured

from . import gen, serializer
from .conf import configure
from .core import GraphClass, classify, verify_cover
from .decomposition import tree_decomposition
from .exceptions import (DomainError, GraphClassError, MalformedInput,
                         ResourceLimitExceeded, TempoCoverError)
from .oracle import dilworth_report
from .router import AUTO, METHODS, PROBLEMS, TPC, SolverRouter

logger = logging.getLogger('tempocover.cli')

SCHEMA = 1

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_MALFORMED = 2
EXIT_CLASS = 3
EXIT_RESOURCE = 4

FORMATS = ('tg', 'json', 'dot', 'td')


def safe_call(func):
    """ Turns parsing failures of plain Python types into MalformedInput. """
    @wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except TempoCoverError:
            raise
        except (IOError, OSError, ValueError, IndexError) as exc:
            raise MalformedInput(str(exc))
    return wrapper


def solve_report(D, problem, method=AUTO):
    start = time.time()
    graph_class, method_used, cover = SolverRouter().solve(D, problem, method)
    runtime_ms = int(round((time.time() - start) * 1000))
    return {
        'schema': SCHEMA,
        'class': graph_class,
        'problem': problem,
        'method_used': method_used,
        'cover_size': cover.size,
        'cover': cover,
        'runtime_ms': runtime_ms,
    }


def _solve_file(job):
    path, problem, method = job
    logger.debug("solving %s (%s, %s)", path, problem, method)
    return solve_report(serializer.read_graph(path), problem, method)


def gap_report(D):
    report = {'schema': SCHEMA, 'class': classify(D)}
    report.update(dilworth_report(D))
    return report


def _ints(text):
    return [int(token) for token in text.split(',') if token]


@safe_call
def generate(family, params, seed=None, width=None):
    """ Builds an instance of `family` from its string parameters. """
    if family == 'tournament':
        return gen.transitive_tournament(int(params[0]))
    if family == 'star':
        return gen.star(int(params[0]))
    if family == 'line':
        return gen.line(_ints(params[0]))
    if family == 'rooted':
        return gen.rooted_example()
    if family == 'rooted-multilabel':
        return gen.rooted_multilabel_example()
    if family == '3dm':
        return gen.gadget_3dm([tuple(_ints(triple)) for triple in params[1:]], int(params[0]))
    if family == 'binpacking':
        return gen.gadget_binpacking(_ints(params[2]), int(params[0]), int(params[1]))
    if family == 'random':
        graph_class, n, max_labels, t_max = params[0], int(params[1]), int(params[2]), \
            int(params[3])
        return gen.random_instance(graph_class, n, max_labels, t_max, seed=seed, width=width)
    raise MalformedInput("Unknown family %r" % (family,))


GENERATE_HELP = """families and parameters:
  tournament N
  star K
  line T1,T2,...
  rooted
  rooted-multilabel
  3dm Q X,Y,Z [X,Y,Z ...]
  binpacking BINS BIN_SIZE S1,S2,...
  random CLASS N MAX_LABELS T_MAX   (CLASS one of %s)
""" % ', '.join(GraphClass.ALL)


def render(D, fmt):
    if fmt == 'tg':
        return serializer.dumps_tg(D)
    if fmt == 'json':
        return serializer.dumps_json(D) + '\n'
    if fmt == 'dot':
        return serializer.dumps_dot(D)
    return serializer.dumps_td(tree_decomposition(D.underlying_graph()), D.vertex_count)


def _emit(text, out=None, stdout=None):
    if out:
        serializer.write_text(out, text)
    else:
        (stdout or sys.stdout).write(text)


def build_parser():
    parser = argparse.ArgumentParser(prog='tempocover',
                                     description="Temporal path covers of temporal digraphs.")
    parser.add_argument('--verbose', '-v', action='store_true',
                        help="log solver activity to stderr")
    commands = parser.add_subparsers(dest='command')
    commands.required = True

    solve = commands.add_parser('solve', help="compute a minimum path cover")
    solve.add_argument('files', nargs='+', metavar='FILE')
    solve.add_argument('--problem', choices=PROBLEMS, default=TPC)
    solve.add_argument('--method', choices=METHODS, default=AUTO)
    solve.add_argument('--jobs', type=int, default=1,
                       help="solve several files in parallel")
    solve.add_argument('--out')

    gap = commands.add_parser('gap', help="compare cover sizes with the maximum antichain")
    gap.add_argument('file')
    gap.add_argument('--out')

    generate_cmd = commands.add_parser('generate', help="write an instance of a family",
                                       epilog=GENERATE_HELP,
                                       formatter_class=argparse.RawDescriptionHelpFormatter)
    generate_cmd.add_argument('family')
    generate_cmd.add_argument('params', nargs='*')
    generate_cmd.add_argument('--seed', type=int)
    generate_cmd.add_argument('--width', type=int,
                              help="treewidth bound for random dag/general instances")
    generate_cmd.add_argument('--format', choices=FORMATS, default='tg')
    generate_cmd.add_argument('--out')

    verify = commands.add_parser('verify', help="check a cover against an instance")
    verify.add_argument('instance')
    verify.add_argument('cover')

    convert = commands.add_parser('convert', help="convert an instance to another format")
    convert.add_argument('file')
    convert.add_argument('--format', choices=FORMATS, default='json')
    convert.add_argument('--out')
    return parser


def _configure_logging(verbose):
    # django.setup() applies the LOGGING setting
    configure()
    if verbose:
        settings.DEBUG = True
        logging.getLogger('tempocover').setLevel(logging.DEBUG)


def run(args, stdout=None):
    if args.command == 'solve':
        jobs = [(path, args.problem, args.method) for path in args.files]
        if args.jobs > 1 and len(jobs) > 1:
            with ProcessPoolExecutor(max_workers=args.jobs) as pool:
                reports = list(pool.map(_solve_file, jobs))
        else:
            reports = [_solve_file(job) for job in jobs]
        result = reports[0] if len(reports) == 1 else reports
        _emit(serializer.dumps_json(result) + '\n', args.out, stdout)
        return EXIT_OK
    if args.command == 'gap':
        report = gap_report(serializer.read_graph(args.file))
        _emit(serializer.dumps_json(report) + '\n', args.out, stdout)
        return EXIT_OK
    if args.command == 'generate':
        D = generate(args.family, args.params, seed=args.seed, width=args.width)
        _emit(render(D, args.format), args.out, stdout)
        return EXIT_OK
    if args.command == 'verify':
        D = serializer.read_graph(args.instance)
        cover = serializer.read_cover(args.cover)
        valid = verify_cover(D, cover)
        _emit('%s\n' % ('valid' if valid else 'invalid'), stdout=stdout)
        return EXIT_OK if valid else EXIT_INVALID
    D = serializer.read_graph(args.file)
    _emit(render(D, args.format), args.out, stdout)
    return EXIT_OK


def main(argv=None, stdout=None, stderr=None):
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        _configure_logging(args.verbose)
        return run(args, stdout)
    except GraphClassError as exc:
        code, message = EXIT_CLASS, str(exc)
    except ResourceLimitExceeded as exc:
        code, message = EXIT_RESOURCE, str(exc)
    except (MalformedInput, DomainError, ImproperlyConfigured) as exc:
        code, message = EXIT_MALFORMED, str(exc)
    stderr.write("tempocover: error: %s\n" % message)
    return code
