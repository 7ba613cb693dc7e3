import json
import os

from django.conf import settings
from django.test import SimpleTestCase

from tempocover.conf import configure
from tempocover.core import TEMPORALLY_DISJOINT, are_temporally_disjoint, verify_cover
from tempocover.serializer import read_graph

FIXTURES = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'fixtures')

# the acceptance-sized randomized runs take minutes
FULL_SUITE = os.environ.get('TEMPOCOVER_FULL_SUITE') == '1'

configure(TEST_DEBUG=bool(os.environ.get('TEMPOCOVER_TEST_DEBUG')))


def sample_count(quick, full):
    return full if FULL_SUITE else quick


def fixture_path(name):
    return os.path.join(FIXTURES, name)


def load_fixture(name):
    return read_graph(fixture_path(name))


def expected_values():
    with open(fixture_path('expected.json')) as fp:
        return json.load(fp)


class TestCase(SimpleTestCase):
    def setUp(self):
        super(TestCase, self).setUp()
        if getattr(settings, 'TEST_DEBUG', False):
            settings.DEBUG = True

    def assertEqualLists(self, a, b):
        self.assertEqual(list(a), list(b))

    def assertValidCover(self, D, cover):
        self.assertTrue(verify_cover(D, cover), "%r is not a valid cover of %r" % (cover, D))

    def assertDisjointCover(self, D, cover):
        self.assertEqual(cover.mode, TEMPORALLY_DISJOINT)
        self.assertValidCover(D, cover)
        for i, P1 in enumerate(cover.paths):
            for P2 in cover.paths[i + 1:]:
                self.assertTrue(are_temporally_disjoint(P1, P2),
                                "%r and %r overlap in time" % (P1, P2))
