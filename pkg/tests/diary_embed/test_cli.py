import json

from click.testing import CliRunner

from diary_embed import cli  # pylint: disable=import-error
from diary_embed import defaults  # pylint: disable=import-error


def test_reduce_prints_the_normal_form():
    result = CliRunner().invoke(cli.cli, ['reduce', 'a1 b2 a1'])

    assert result.exit_code == defaults.EXIT_OK
    assert result.output.strip() == 'b2'


def test_diary_prints_alice_diary_of_the_worked_example():
    result = CliRunner().invoke(cli.cli, ['diary', '--kappa', '3', 'abac|cb|accc|bcbc|a'])

    assert result.exit_code == defaults.EXIT_OK
    assert result.output.strip() == 'cab|bca|ccc|cbc|aba'


def test_ball_prints_the_summary():
    result = CliRunner().invoke(cli.cli, ['ball', '--radius', '2'])
    summary = json.loads(result.output.strip().splitlines()[-1])

    assert result.exit_code == defaults.EXIT_OK
    assert summary['records'] == 31
    assert summary['details']['spheres'] == [1, 6, 24]


def test_ball_writes_the_records(tmp_path):
    prefix = tmp_path / 'ball'
    result = CliRunner().invoke(cli.cli, ['ball', '--radius', '1', '--out', str(prefix), '--format', 'csv'])

    assert result.exit_code == defaults.EXIT_OK
    assert (tmp_path / 'ball.csv').exists()
    assert (tmp_path / 'ball.summary.json').exists()


def test_config_file_values_are_used(tmp_path):
    path = tmp_path / 'config.yaml'
    path.write_text('radius: 1\n', encoding='utf-8')

    result = CliRunner().invoke(cli.cli, ['ball', '-c', str(path)])

    assert json.loads(result.output.strip().splitlines()[-1])['records'] == 7


def test_invalid_config_exits_with_two(tmp_path):
    path = tmp_path / 'config.yaml'
    path.write_text('depth: 3\n', encoding='utf-8')

    result = CliRunner().invoke(cli.cli, ['ball', '-c', str(path)])

    assert result.exit_code == defaults.EXIT_CONFIG_ERROR


def test_kappa_in_paper_mode_exits_with_two():
    result = CliRunner().invoke(cli.cli, ['embed', '--kappa', '5', 'a1'])

    assert result.exit_code == defaults.EXIT_CONFIG_ERROR


def test_run_hands_the_flags_to_the_pipeline(mocker):
    mock_execute = mocker.patch.object(cli.pipeline, 'execute',
                                       return_value=cli.pipeline.ExperimentOutcome(lines=['done']))

    result = CliRunner().invoke(cli.cli, ['distort', '--radius', '2', '--format', 'csv', '--mode', 'custom'])

    assert result.exit_code == defaults.EXIT_OK
    _, kwargs = mock_execute.call_args
    assert kwargs['radius'] == 2
    assert kwargs['format'] == 'csv'
    assert kwargs['mode'] == 'custom'
    assert kwargs['configuration_file'] is None
