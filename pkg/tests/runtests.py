#!/usr/bin/env python
"""
Runs the test suite::

    ./runtests.py            # quick randomized runs
    ./runtests.py full       # acceptance-sized randomized runs
    ./runtests.py debug      # log solver timings while testing
"""
import os
import sys

HERE = os.path.dirname(os.path.abspath(__file__))


def main(argv):
    if 'full' in argv:
        os.environ['TEMPOCOVER_FULL_SUITE'] = '1'
    if 'debug' in argv:
        os.environ['TEMPOCOVER_TEST_DEBUG'] = '1'
    root = os.path.dirname(HERE)
    sys.path.insert(0, root)
    from django.conf import settings
    from django.test.utils import get_runner
    from tempocover.conf import configure

    configure(TEST_DEBUG='debug' in argv)
    runner = get_runner(settings)(pattern='tests.py', top_level=root, verbosity=2,
                                  failfast='short' in argv)
    return 1 if runner.run_tests([HERE]) else 0


if __name__ == '__main__':
    sys.exit(main(sys.argv[1:]))
