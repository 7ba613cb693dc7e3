import io
import json
import os
import shutil
import tempfile

from django.test.utils import override_settings

from tempocover.cli import (EXIT_CLASS, EXIT_INVALID, EXIT_MALFORMED, EXIT_OK, EXIT_RESOURCE,
                            main)
from tempocover.gen import star
from tempocover.serializer import dumps_tg, loads_graph, read_graph

from ..utils import TestCase, fixture_path, load_fixture


class CommandTestCase(TestCase):
    def setUp(self):
        super(CommandTestCase, self).setUp()
        self.tmpdir = tempfile.mkdtemp(prefix='tempocover-')

    def tearDown(self):
        shutil.rmtree(self.tmpdir)
        super(CommandTestCase, self).tearDown()

    def call(self, *argv):
        stdout, stderr = io.StringIO(), io.StringIO()
        code = main(list(argv), stdout=stdout, stderr=stderr)
        return code, stdout.getvalue(), stderr.getvalue()

    def tmpfile(self, name, text=None):
        path = os.path.join(self.tmpdir, name)
        if text is not None:
            with open(path, 'w') as fp:
                fp.write(text)
        return path


class SolveCommandTests(CommandTestCase):
    def test_solve(self):
        code, out, _ = self.call('solve', fixture_path('star_3.tg'), '--problem', 'tdpc')
        self.assertEqual(code, EXIT_OK)
        report = json.loads(out)
        self.assertEqual(list(report), ['schema', 'class', 'problem', 'method_used',
                                        'cover_size', 'cover', 'runtime_ms'])
        self.assertEqual((report['class'], report['method_used'], report['cover_size']),
                         ('oriented_tree', 'dp', 5))
        self.assertEqual(report['cover']['mode'], 'temporally_disjoint')
        self.assertEqual(len(report['cover']['paths']), 5)

    def test_solve_several_files(self):
        out_path = self.tmpfile('reports.json')
        code, out, _ = self.call('solve', fixture_path('tournament_4.tg'),
                                 fixture_path('rooted.tg'), '--out', out_path)
        self.assertEqual((code, out), (EXIT_OK, ''))
        with open(out_path) as fp:
            reports = json.load(fp)
        self.assertEqual([r['cover_size'] for r in reports], [2, 3])
        self.assertEqual([r['method_used'] for r in reports], ['dp', 'tree'])

    def test_class_error(self):
        code, out, err = self.call('solve', fixture_path('tournament_4.tg'),
                                   '--method', 'tree')
        self.assertEqual((code, out), (EXIT_CLASS, ''))
        self.assertIn("got dag instead", err)

    def test_malformed_input(self):
        path = self.tmpfile('broken.tg', 'tg 2 1\n0 1 0\n')
        code, _, err = self.call('solve', path)
        self.assertEqual(code, EXIT_MALFORMED)
        self.assertIn("line 2", err)
        code, _, _ = self.call('solve', self.tmpfile('missing.tg'))
        self.assertEqual(code, EXIT_MALFORMED)

    def test_resource_limit(self):
        with override_settings(DP_STATE_BUDGET=1):
            code, _, err = self.call('solve', fixture_path('tournament_4.tg'),
                                     '--method', 'dp', '--problem', 'tdpc')
        self.assertEqual(code, EXIT_RESOURCE)
        self.assertIn("budget", err)

    def test_bad_setting(self):
        with override_settings(DP_STATE_BUDGET='lots'):
            code, _, err = self.call('solve', fixture_path('tournament_4.tg'),
                                     '--method', 'dp', '--problem', 'tdpc')
        self.assertEqual(code, EXIT_MALFORMED)
        self.assertIn("DP_STATE_BUDGET must be an integer", err)

    def test_gap(self):
        code, out, _ = self.call('gap', fixture_path('star_3.tg'))
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(json.loads(out), {
            'schema': 1, 'class': 'oriented_tree', 'tpc': 3, 'tdpc': 5, 'antichain': 3,
            'dilworth_holds': True, 'td_dilworth_holds': False,
        })


class GenerateCommandTests(CommandTestCase):
    def test_star(self):
        code, out, _ = self.call('generate', 'star', '3')
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(out, dumps_tg(star(3)))

    def test_formats(self):
        code, out, _ = self.call('generate', 'tournament', '4', '--format', 'json')
        self.assertEqual(loads_graph(out), load_fixture('tournament_4.tg'))
        code, out, _ = self.call('generate', 'rooted', '--format', 'dot')
        self.assertTrue(out.startswith('digraph D {'))
        code, out, _ = self.call('generate', 'rooted', '--format', 'td')
        self.assertTrue(out.startswith('s td '))

    def test_random_is_seeded(self):
        path = self.tmpfile('random.tg')
        args = ('generate', 'random', 'dag', '8', '2', '5', '--seed', '11', '--width', '2')
        self.assertEqual(self.call(*(args + ('--out', path)))[0], EXIT_OK)
        self.assertEqual(read_graph(path), loads_graph(self.call(*args)[1]))

    def test_gadgets(self):
        code, out, _ = self.call('generate', '3dm', '1', '0,0,0')
        self.assertEqual(loads_graph(out).vertex_count, 12)
        code, out, _ = self.call('generate', 'binpacking', '1', '2', '1,1')
        self.assertEqual(loads_graph(out).vertex_count, 7)

    def test_bad_parameters(self):
        self.assertEqual(self.call('generate', 'tournament', 'four')[0], EXIT_MALFORMED)
        self.assertEqual(self.call('generate', 'star')[0], EXIT_MALFORMED)
        self.assertEqual(self.call('generate', 'binpacking', '1', '3', '1,1')[0],
                         EXIT_MALFORMED)
        code, _, err = self.call('generate', 'wheel', '5')
        self.assertEqual(code, EXIT_MALFORMED)
        self.assertIn("Unknown family", err)


class VerifyConvertCommandTests(CommandTestCase):
    def test_verify(self):
        code, out, _ = self.call('verify', fixture_path('tournament_4.tg'),
                                 fixture_path('tournament_4_cover.json'))
        self.assertEqual((code, out), (EXIT_OK, 'valid\n'))

    def test_verify_invalid(self):
        cover = self.tmpfile('cover.json', json.dumps({
            'mode': 'temporally_disjoint', 'paths': [[[0, 1, 3]], [[2, 3, 1]], [[1]]]}))
        code, out, _ = self.call('verify', fixture_path('tournament_4.tg'), cover)
        self.assertEqual((code, out), (EXIT_INVALID, 'invalid\n'))
        not_a_cover = self.tmpfile('graph.json', '{"n": 1, "arcs": []}')
        code, _, _ = self.call('verify', fixture_path('tournament_4.tg'), not_a_cover)
        self.assertEqual(code, EXIT_MALFORMED)

    def test_convert(self):
        out_path = self.tmpfile('rooted.json')
        code, out, _ = self.call('convert', fixture_path('rooted.tg'), '--out', out_path)
        self.assertEqual((code, out), (EXIT_OK, ''))
        self.assertEqual(read_graph(out_path), load_fixture('rooted.tg'))
        code, out, _ = self.call('convert', out_path, '--format', 'tg')
        self.assertEqual(out, dumps_tg(load_fixture('rooted.tg')))

    def test_unknown_command(self):
        with self.assertRaises(SystemExit) as cm:
            main(['frobnicate'], stdout=io.StringIO(), stderr=io.StringIO())
        self.assertEqual(cm.exception.code, 2)
