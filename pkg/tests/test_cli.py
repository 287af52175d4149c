import pytest
import sys
import os
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import json
from fractions import Fraction

from cli import main
from utils.serialization import parse_rational

SAMPLES = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), 'dataset', 'samples')
SIX = os.path.join(SAMPLES, 'six_vertex.w')
UNIT6 = os.path.join(SAMPLES, 'unit6.w')
C5 = os.path.join(SAMPLES, 'c5.g')
K24 = os.path.join(SAMPLES, 'k24.g')


def run_json(capsys, argv):
    code = main(argv + ['--json'])
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip() else None


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return str(path)
    return _write


class TestExtremalCommand:
    def test_sum_example(self, capsys):
        """Six-vertex sum optimum as one-based JSON"""
        code, payload = run_json(capsys, ['extremal', '--weights', SIX, '--forbid', 'K3'])
        assert code == 0
        assert payload['value'] == '416/1'
        assert payload['blocks'] == [[1, 2], [3, 4, 5, 6]]
        assert payload['kind'] == 'sum'
        assert payload['leading_term_only'] is False

    def test_witness_round_trip(self, capsys):
        """Witness edges add up to the reported value"""
        weights = [41, 33, 29, 13, 11, 7]
        for objective in ('sum', 'product'):
            code, payload = run_json(capsys, ['extremal', '--weights', SIX, '--objective', objective])
            assert code == 0
            if objective == 'sum':
                total = sum(weights[u - 1] + weights[v - 1] for u, v in payload['edges'])
            else:
                total = sum(weights[u - 1] * weights[v - 1] for u, v in payload['edges'])
            assert parse_rational(payload['value']) == Fraction(total)

    def test_product_example(self, capsys):
        """Six-vertex product optimum"""
        code, payload = run_json(capsys, ['extremal', '--weights', SIX, '--forbid', 'K3',
                                          '--objective', 'product'])
        assert code == 0
        assert payload['value'] == '4485/1'
        assert payload['kind'] == 'product'

    def test_heuristic_flag(self, capsys):
        """Heuristic runs never beat the exact value"""
        code, payload = run_json(capsys, ['extremal', '--weights', SIX, '--objective', 'product',
                                          '--heuristic-only'])
        assert code == 0
        assert parse_rational(payload['value']) <= 4485

    def test_general_pattern_is_leading_term(self, capsys):
        """C5 reports a leading term"""
        code, payload = run_json(capsys, ['extremal', '--weights', UNIT6, '--forbid', 'C5'])
        assert code == 0
        assert payload['leading_term_only'] is True
        assert payload['value'] == '18/1'

    def test_erdos_stone_treats_cliques_as_graphs(self, capsys):
        """erdos-stone marks cliques as leading terms"""
        code, payload = run_json(capsys, ['erdos-stone', '--weights', SIX, '--forbid', 'K3'])
        assert code == 0
        assert payload['leading_term_only'] is True
        assert payload['value'] == '416/1'

    def test_table_output(self, capsys):
        """Table lists the value, blocks and witness edges"""
        assert main(['extremal', '--weights', SIX]) == 0
        out = capsys.readouterr().out
        assert 'value: 416/1' in out
        assert 'block' in out
        assert "edges (8): " in out
        assert "1-3" in out

    def test_json_and_table_conflict(self):
        """--json and --table exclude each other"""
        assert main(['extremal', '--weights', SIX, '--json', '--table']) == 2

    def test_byte_identical_output(self, capsys):
        """Repeated runs print identical JSON"""
        main(['extremal', '--weights', SIX, '--objective', 'product', '--json'])
        first = capsys.readouterr().out
        main(['extremal', '--weights', SIX, '--objective', 'product', '--json'])
        assert capsys.readouterr().out == first

    def test_parse_errors_exit_2(self, capsys, write):
        """Bad inputs exit with code 2"""
        bad = write('bad.w', '1\n-2\n')
        assert main(['extremal', '--weights', bad]) == 2
        assert 'line 2' in capsys.readouterr().err
        assert main(['extremal', '--weights', SIX, '--forbid', 'K9']) == 2
        assert main(['extremal', '--weights', SIX, '--forbid', 'C6']) == 2
        assert main(['extremal', '--weights', os.path.join(SAMPLES, 'absent.w')]) == 2
        assert main(['extremal']) == 2
        assert main(['extremal', '--weights', SIX, '--objective', 'max']) == 2


class TestOracleCommand:
    def test_random_weights_pass(self, capsys):
        """Seeded random weights certify"""
        code, payload = run_json(capsys, ['oracle', '--n', '5', '--forbid', 'K3', '--seed', '4'])
        assert code == 0
        assert payload['pass'] is True
        assert len(payload['weights']) == 5

    def test_seed_reproducible(self, capsys):
        """Same seed gives the same output at any thread count"""
        main(['oracle', '--n', '4', '--forbid', 'K4', '--seed', '9', '--json'])
        first = capsys.readouterr().out
        main(['oracle', '--n', '4', '--forbid', 'K4', '--seed', '9', '--json', '--threads', '2'])
        assert capsys.readouterr().out == first

    def test_cap_exit_3(self, capsys):
        """Oversized oracle runs exit with code 3"""
        assert main(['oracle', '--n', '9', '--forbid', 'K3']) == 3
        assert 'error:' in capsys.readouterr().err

    def test_zero_weights(self, capsys, write):
        """Zero weights certify at zero"""
        zeros = write('zeros.w', '0\n0\n0\n0\n0\n')
        code, payload = run_json(capsys, ['oracle', '--weights', zeros, '--forbid', 'K4'])
        assert code == 0
        assert all(r['oracle_value'] == '0/1' for r in payload['results'])

    def test_n_mismatch(self):
        """--n must match the weight file"""
        assert main(['oracle', '--weights', SIX, '--n', '5']) == 2

    def test_needs_weights_or_n(self):
        """Oracle needs weights or a vertex count"""
        assert main(['oracle', '--forbid', 'K3']) == 2

    def test_table_output(self, capsys):
        """Table lists the value, blocks and witness edges"""
        assert main(['oracle', '--weights', SIX, '--forbid', 'K3']) == 0
        assert capsys.readouterr().out.count('PASS') == 2


class TestStabilityCommand:
    def test_five_cycle(self, capsys):
        """C5 file peels with deficit two"""
        code, payload = run_json(capsys, ['stability', '--graph', C5, '--l', '2'])
        assert code == 0
        assert payload['removed_weight'] == '2/1'
        assert payload['deficit'] == '2/1'
        assert payload['pass'] is True

    def test_extremal_input_has_no_deficit(self, capsys):
        """The extremal witness has no deficit"""
        code, payload = run_json(capsys, ['stability', '--graph', K24, '--weights', SIX, '--l', '2'])
        assert code == 0
        assert payload['deficit'] == '0/1'

    def test_clique_exit_4(self, write):
        """Graphs holding the clique exit with code 4"""
        k4 = write('k4.g', 'n 4\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n')
        assert main(['stability', '--graph', k4, '--l', '2']) == 4

    def test_weights_must_match(self):
        """Weight count must match the graph"""
        assert main(['stability', '--graph', C5, '--weights', SIX, '--l', '2']) == 2

    def test_needs_l(self):
        """--l is required"""
        assert main(['stability', '--graph', C5]) == 2

    def test_named_graph(self, capsys):
        """A catalogue name stands in for a graph file"""
        code, payload = run_json(capsys, ['stability', '--graph', 'C5', '--l', '2'])
        assert code == 0
        assert payload['deficit'] == '2/1'
        assert payload['pass'] is True


class TestUpgradeCommand:
    def test_five_cycle(self, capsys):
        """C5 upgrades to two blocks without losing degree"""
        code, payload = run_json(capsys, ['upgrade', '--graph', C5, '--l', '3'])
        assert code == 0
        assert all(after >= before for before, after in payload['degrees'])
        assert payload['blocks'] == [[1, 3, 4], [2, 5]]

    def test_complete_bipartite_unchanged(self, capsys):
        """Complete bipartite input keeps its degrees"""
        code, payload = run_json(capsys, ['upgrade', '--graph', K24, '--l', '3'])
        assert code == 0
        assert all(after == before for before, after in payload['degrees'])
        assert payload['weight_before'] == payload['weight_after']

    def test_empty_graph(self, capsys, write):
        """Edgeless input stays edgeless"""
        empty = write('empty.g', 'n 3\n')
        code, payload = run_json(capsys, ['upgrade', '--graph', empty, '--l', '3'])
        assert code == 0
        assert payload['edges'] == []

    def test_clique_exit_4(self, write):
        """Graphs holding the clique exit with code 4"""
        triangle = write('k3.g', 'n 3\ne 1 2\ne 2 3\ne 1 3\n')
        assert main(['upgrade', '--graph', triangle, '--l', '3']) == 4

    def test_small_l(self):
        """l below three exits with code 2"""
        assert main(['upgrade', '--graph', C5, '--l', '2']) == 2

    def test_named_graph(self, capsys):
        """Petersen upgrades to at most three blocks with no degree lost"""
        code, payload = run_json(capsys, ['upgrade', '--graph', 'petersen', '--l', '4'])
        assert code == 0
        assert len(payload['degrees']) == 10
        assert all(after >= before for before, after in payload['degrees'])
        assert len(payload['blocks']) <= 3

    def test_non_ascii_digit_exit_2(self, capsys, write):
        """A superscript digit in a graph file is a parse error"""
        bad = write('bad.g', 'n ²\n')
        assert main(['upgrade', '--graph', bad, '--l', '3']) == 2
        assert 'line 1' in capsys.readouterr().err
