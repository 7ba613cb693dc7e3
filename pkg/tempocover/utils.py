import logging
import time
from functools import wraps

from .conf import setting

logger = logging.getLogger('tempocover.solvers')


def first(test_func, iterable):
    for item in iterable:
        if test_func(item):
            return item


def bitmask(vertices):
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def iter_bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask):
    return bin(mask).count('1')


def debug_timed(func):
    """
    Logs the wall time of every call of `func` to ``tempocover.solvers``
    when the ``DEBUG`` setting is on.
    """
    @wraps(func)
    def wrapper(*args, **kwargs):
        if not setting('DEBUG'):
            return func(*args, **kwargs)
        start = time.time()
        try:
            return func(*args, **kwargs)
        finally:
            duration = time.time() - start
            msg = '%s (%.3f)' % (func.__name__, duration)
            if args and hasattr(args[0], 'vertex_count'):
                msg += ' n=%d' % args[0].vertex_count
            logger.debug(msg, extra={'duration': duration})
    return wrapper
