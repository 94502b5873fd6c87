"""Tests for the qln command line."""

import json

import pytest


TREE_MODULE = '[[1,1],[1,3],[3,3],[1,5],[5,5]]'


def _invoke(runner, *args):
    from cli import cli
    return runner.invoke(cli, list(args))


# ---------------------------------------------------------------------------
# input handling
# ---------------------------------------------------------------------------

class TestInput:
    def test_inline_algebra(self, runner):
        result = _invoke(runner, 'indecs', '--inline', '3:2', '--format', 'text')
        assert result.exit_code == 0
        assert result.output == '[1,1]\n[1,2]\n[2,2]\n[2,3]\n[3,3]\n'

    def test_algebra_file(self, runner, tmp_path):
        path = tmp_path / 'algebra.json'
        path.write_text('{"vertices": 3, "relations": []}')
        result = _invoke(runner, 'tilt', 'count', '--algebra', str(path))
        assert result.exit_code == 0
        assert result.output == '5\n'

    def test_needs_exactly_one_algebra(self, runner):
        result = _invoke(runner, 'tilt', 'count')
        assert result.exit_code == 2
        assert 'exactly one' in result.output

    def test_malformed_inline(self, runner):
        result = _invoke(runner, 'tilt', 'count', '--inline', 'three')
        assert result.exit_code == 1
        assert result.output.startswith('error: ParseError:')

    def test_relation_out_of_range(self, runner):
        result = _invoke(runner, 'tilt', 'count', '--inline', '3:3')
        assert result.exit_code == 1
        assert 'error: RelationOutOfRange:' in result.output

    def test_value_from_file(self, runner, tmp_path):
        path = tmp_path / 'module.json'
        path.write_text(TREE_MODULE)
        result = _invoke(runner, 'qhs', 'of-tilting', '--inline', '5:', '--modules', f"@{path}",
                         '--format', 'text')
        assert result.exit_code == 0
        assert result.output == '2>1 2>3 4>2 4>5\n'

    def test_dot_needs_a_graph(self, runner):
        result = _invoke(runner, 'tilt', 'count', '--inline', '3:', '--format', 'dot')
        assert result.exit_code == 2


# ---------------------------------------------------------------------------
# tilting
# ---------------------------------------------------------------------------

class TestTiltCommands:
    @pytest.mark.parametrize('strategy', ['recursion', 'mutation', 'exhaustive'])
    def test_count_strategies(self, runner, strategy):
        result = _invoke(runner, 'tilt', 'count', '--inline', '5:', '--strategy', strategy)
        assert result.output == '42\n'

    def test_list(self, runner):
        result = _invoke(runner, 'tilt', 'list', '--inline', '2:')
        assert json.loads(result.output) == [[[1, 1], [1, 2]], [[1, 2], [2, 2]]]

    def test_hasse_dot(self, runner):
        result = _invoke(runner, 'tilt', 'hasse', '--inline', '3:2', '--format', 'dot')
        assert result.exit_code == 0
        lines = result.output.splitlines()
        assert lines[0] == 'digraph tilt {'
        assert len([line for line in lines if '[label=' in line and '->' not in line]) == 3
        assert len([line for line in lines if '->' in line]) == 2

    def test_hasse_json(self, runner):
        result = _invoke(runner, 'tilt', 'hasse', '--inline', '2:')
        payload = json.loads(result.output)
        assert payload['nodes'][0] == [[1, 2], [2, 2]]
        assert payload['edges'] == [[0, 1, [2, 2]]]

    def test_mutate(self, runner):
        result = _invoke(runner, 'tilt', 'mutate', '--inline', '3:', '--modules', '[[1,3],[2,3],[3,3]]',
                         '--summand', '[3,3]', '--format', 'text')
        assert result.output == '[1,3] [2,2] [2,3]\n'

    def test_mutate_projective_injective(self, runner):
        result = _invoke(runner, 'tilt', 'mutate', '--inline', '3:', '--modules', '[[1,3],[2,3],[3,3]]',
                         '--summand', '[1,3]')
        assert result.exit_code == 1
        assert 'error: NotMutable:' in result.output

    def test_mutate_needs_modules(self, runner):
        result = _invoke(runner, 'tilt', 'mutate', '--inline', '3:', '--summand', '[1,3]')
        assert result.exit_code == 2
        assert '--modules is required' in result.output

    def test_mutate_rejects_interval_outside_algebra(self, runner):
        result = _invoke(runner, 'tilt', 'mutate', '--inline', '3:2', '--modules', '[[1,3],[2,3],[3,3]]',
                         '--summand', '[3,3]')
        assert result.exit_code == 1
        assert 'error: InvalidInterval: [1,3]' in result.output

    def test_mutate_rejects_non_tilting(self, runner):
        result = _invoke(runner, 'tilt', 'mutate', '--inline', '3:', '--modules', '[[1,1],[2,2],[3,3]]',
                         '--summand', '[3,3]')
        assert result.exit_code == 1
        assert 'error: NotTilting:' in result.output

    def test_mutate_summand_must_belong_to_module(self, runner):
        result = _invoke(runner, 'tilt', 'mutate', '--inline', '3:', '--modules', '[[1,3],[2,3],[3,3]]',
                         '--summand', '[2,2]')
        assert result.exit_code == 1
        assert 'error: NotMutable: [2,2] is not a summand' in result.output


# ---------------------------------------------------------------------------
# quasi-hereditary structures
# ---------------------------------------------------------------------------

class TestQhsCommands:
    def test_running_example_count(self, runner):
        result = _invoke(runner, 'qhs', 'count', '--inline', '10:5,6,7,9')
        assert result.exit_code == 0
        assert result.output == '266\n'

    def test_count_via_tilting(self, runner):
        result = _invoke(runner, 'qhs', 'count', '--inline', '4:2', '--strategy', 'via_tilting')
        assert result.output == '7\n'

    def test_list_text(self, runner):
        result = _invoke(runner, 'qhs', 'list', '--inline', '3:2', '--format', 'text')
        assert result.exit_code == 0
        assert len(result.output.splitlines()) == 3

    def test_of_tilting(self, runner):
        result = _invoke(runner, 'qhs', 'of-tilting', '--inline', '5:', '--modules', TREE_MODULE,
                         '--check-branches')
        payload = json.loads(result.output)
        assert payload['order'] == {'n': 5, 'covers': [[2, 1], [2, 3], [4, 2], [4, 5]]}
        assert payload['labels']['4'] == [1, 5]

    def test_of_tilting_rejects_non_tilting(self, runner):
        result = _invoke(runner, 'qhs', 'of-tilting', '--inline', '3:', '--modules', '[[1,1],[2,2],[3,3]]')
        assert result.exit_code == 1
        assert 'error: NotTilting:' in result.output

    def test_chtilt(self, runner):
        result = _invoke(runner, 'qhs', 'chtilt', '--inline', '3:2', '--order', '1>2>3', '--format', 'text')
        assert result.output == '[1,2] [2,3] [3,3]\n'

    def test_chtilt_not_quasi_hereditary(self, runner):
        result = _invoke(runner, 'qhs', 'chtilt', '--inline', '3:2', '--order', '2>3>1')
        assert result.exit_code == 1
        assert 'error: NotQuasiHereditary:' in result.output

    @pytest.mark.parametrize('order', ['{"n": 2, "covers": []}', '{"range": [2, 3], "covers": [[3, 2]]}'])
    def test_chtilt_order_on_other_vertices(self, runner, order):
        result = _invoke(runner, 'qhs', 'chtilt', '--inline', '3:', '--order', order)
        assert result.exit_code == 1
        assert 'error: RangeMismatch:' in result.output

    def test_chtilt_cover_outside_algebra(self, runner):
        result = _invoke(runner, 'qhs', 'chtilt', '--inline', '3:', '--order', '4>1')
        assert result.exit_code == 1
        assert 'error: RangeMismatch:' in result.output

    def test_of_tilting_rejects_interval_outside_algebra(self, runner):
        result = _invoke(runner, 'qhs', 'of-tilting', '--inline', '3:2', '--modules', '[[1,3],[2,3],[3,3]]')
        assert result.exit_code == 1
        assert 'error: InvalidInterval:' in result.output

    def test_oracle(self, runner):
        result = _invoke(runner, 'qhs', 'oracle', '--inline', '3:')
        assert json.loads(result.output) == {'qh_total_orders': 6, 'classes': 5}


# ---------------------------------------------------------------------------
# blocks, trees and gluing
# ---------------------------------------------------------------------------

class TestGluingCommands:
    def test_blocks(self, runner, read_fixture):
        result = _invoke(runner, 'blocks', '--inline', '10:5,6,7,9', '--format', 'text')
        assert result.output == read_fixture('running_example_blocks.txt')

    def test_tree_of_tilting(self, runner, read_fixture):
        result = _invoke(runner, 'trees', 'of-tilting', '--inline', '5:', '--modules', TREE_MODULE)
        assert result.exit_code == 0
        assert result.output == read_fixture('tree_root4.json')

    def test_sequence_of_tilting(self, runner, read_fixture):
        modules = '[[1,1],[1,3],[3,3],[1,5],[5,6],[6,6],[6,7],[7,9],[9,10],[10,10]]'
        result = _invoke(runner, 'trees', 'of-tilting', '--inline', '10:5,6,7,9', '--modules', modules)
        assert result.output == read_fixture('sequence.json')

    def test_tree_to_tilting(self, runner, read_fixture):
        result = _invoke(runner, 'trees', 'to-tilting', '--inline', '5:',
                         '--tree', read_fixture('tree_root4.json'), '--format', 'text')
        assert result.output == '[1,1] [1,3] [1,5] [3,3] [5,5]\n'

    def test_tree_needs_a_path_algebra(self, runner, read_fixture):
        result = _invoke(runner, 'trees', 'to-tilting', '--inline', '5:3',
                         '--tree', read_fixture('tree_root4.json'))
        assert result.exit_code == 1
        assert 'error: RangeMismatch: a single tree describes path algebras only' in result.output

    def test_to_tilting_needs_one_source(self, runner):
        result = _invoke(runner, 'trees', 'to-tilting', '--inline', '5:')
        assert result.exit_code == 2

    def test_glue(self, runner, read_fixture):
        result = _invoke(runner, 'glue', '--inline', '10:5,6,7,9',
                         '--sequence', read_fixture('sequence.json'), '--format', 'text')
        order, module = result.output.splitlines()
        assert order + '\n' == read_fixture('glued_covers.txt')
        assert module == '[1,1] [1,3] [1,5] [3,3] [5,6] [6,6] [6,7] [7,9] [9,10] [10,10]'

    def test_glue_dot(self, runner, read_fixture):
        result = _invoke(runner, 'glue', '--inline', '10:5,6,7,9',
                         '--sequence', read_fixture('sequence.json'), '--format', 'dot')
        assert result.output.startswith('digraph order {')
        assert '  "5" -> "6";' in result.output.splitlines()

    def test_glue_inadmissible(self, runner, read_fixture):
        sequence = read_fixture('sequence.json').replace('"apex": 6', '"apex": 9')
        result = _invoke(runner, 'glue', '--inline', '10:5,6,7,9', '--sequence', sequence)
        assert result.exit_code == 1
        assert 'error: InadmissibleSequence: A0:' in result.output


# ---------------------------------------------------------------------------
# counting and verification
# ---------------------------------------------------------------------------

class TestCountingCommands:
    def test_decompose(self, runner):
        result = _invoke(runner, 'decompose', '--inline', '3:')
        assert json.loads(result.output) == {'1': 2, '2': 1, '3': 2}

    def test_decompose_one_module(self, runner):
        result = _invoke(runner, 'decompose', '--inline', '3:', '--modules', '[[1,3],[2,3],[3,3]]')
        assert result.output == '3\n'

    def test_decompose_rejects_interval_outside_algebra(self, runner):
        result = _invoke(runner, 'decompose', '--inline', '3:2', '--modules', '[[1,3],[2,3],[3,3]]')
        assert result.exit_code == 1
        assert 'error: InvalidInterval:' in result.output

    def test_counts_csv(self, runner):
        result = _invoke(runner, 'counts', '--max-n', '3')
        assert result.exit_code == 0
        assert result.output == (
            'n,relations,tilt_count,qhs_count\n'
            '1,,1,1\n'
            '2,,2,2\n'
            '3,,5,5\n'
            '3,2,3,3\n'
        )

    def test_counts_store(self, runner):
        from store import CountRecord
        result = _invoke(runner, 'counts', '--max-n', '4', '--store')
        assert result.exit_code == 0
        record = CountRecord.get_by_label('4:2,3')
        assert (record.tilt_count, record.qhs_count) == (4, 4)
        assert len(CountRecord.get_all()) == 1 + 1 + 2 + 4

    def test_verify(self, runner):
        result = _invoke(runner, 'verify', '--max-n', '3')
        assert result.exit_code == 0
        assert 'checks passed (max n = 3)' in result.output

    def test_verify_all_lists_passing_checks(self, runner):
        result = _invoke(runner, 'verify', '--max-n', '2', '--all')
        assert result.output.startswith('ok [')

    def test_verbose_logs_to_stderr(self, runner):
        from tilting import tilt_hasse
        tilt_hasse.cache_clear()
        result = _invoke(runner, '--verbose', 'tilt', 'count', '--inline', '3:2', '--strategy', 'mutation')
        assert '[Tilt] 3:2: 3 tilting modules' in result.output


class TestRunCommand:
    def test_exit_codes(self, capsys):
        from cli import run_command
        assert run_command(['tilt', 'count', '--inline', '4:']) == 0
        assert capsys.readouterr().out == '14\n'
        assert run_command(['tilt', 'count']) == 2
        assert run_command(['tilt', 'count', '--inline', '0:']) == 1
