import pytest

from diary_embed import defaults  # pylint: disable=import-error
from diary_embed import exceptions  # pylint: disable=import-error
from diary_embed import experiments  # pylint: disable=import-error
from diary_embed import pipeline  # pylint: disable=import-error
from diary_embed.datastore import BufferedRecordStore, CsvRecordStore  # pylint: disable=import-error
from diary_embed.executor import LocalExecutor, LocalParallelExecutor  # pylint: disable=import-error


@pytest.fixture
def config_file(tmp_path):
    path = tmp_path / 'config.yaml'
    path.write_text('radius: 2\nmode: custom\nfailures-file: fails.txt\n', encoding='utf-8')
    return str(path)


def test_load_configuration_file_of_nothing_is_empty():
    assert pipeline.load_configuration_file(None) == {}


def test_load_configuration_file_normalizes_dashes(config_file):
    assert pipeline.load_configuration_file(config_file) == {'radius': 2, 'mode': 'custom',
                                                             'failures_file': 'fails.txt'}


def test_load_configuration_file_raises_if_missing(tmp_path):
    with pytest.raises(exceptions.ConfigurationError):
        pipeline.load_configuration_file(str(tmp_path / 'missing.yaml'))


def test_load_configuration_file_raises_on_nested_mappings(tmp_path):
    path = tmp_path / 'config.yaml'
    path.write_text('executor:\n  type: local\n', encoding='utf-8')

    with pytest.raises(exceptions.ConfigurationError):
        pipeline.load_configuration_file(str(path))


def test_prepare_configurations_uses_the_defaults(monkeypatch):
    monkeypatch.delenv(defaults.ENV_CONFIG_FILE, raising=False)

    config, executor, record_store = pipeline.prepare_configurations('ball')

    assert config.radius == defaults.RADIUS
    assert config.mode == defaults.MODE_PAPER
    assert isinstance(executor, LocalExecutor)
    assert isinstance(record_store, BufferedRecordStore)


def test_distortion_commands_default_to_custom_mode():
    for command in ('distort', 'classify'):
        config, _, _ = pipeline.prepare_configurations(command)
        assert config.mode == defaults.MODE_CUSTOM
        assert config.embedding_config().kappa == defaults.CUSTOM_KAPPA

    assert pipeline.prepare_configurations('embed')[0].mode == defaults.MODE_PAPER
    assert pipeline.prepare_configurations('distort', mode='paper')[0].mode == defaults.MODE_PAPER
    assert pipeline.ExperimentConfig(command='classify').mode == defaults.MODE_CUSTOM


def test_mode_from_the_file_wins_over_the_command_default(tmp_path):
    path = tmp_path / 'config.yaml'
    path.write_text('mode: paper\n', encoding='utf-8')

    config, _, _ = pipeline.prepare_configurations('distort', str(path))

    assert config.mode == defaults.MODE_PAPER


def test_prepare_configurations_flags_win_over_the_file(config_file):
    config, _, _ = pipeline.prepare_configurations('ball', config_file, radius=3, seed=None)

    assert config.radius == 3
    assert config.mode == defaults.MODE_CUSTOM
    assert config.seed == defaults.SEED
    assert config.failures_file == 'fails.txt'


def test_prepare_configurations_reads_the_file_from_the_environment(monkeypatch, config_file):
    monkeypatch.setenv(defaults.ENV_CONFIG_FILE, config_file)

    config, _, _ = pipeline.prepare_configurations('ball')

    assert config.radius == 2


def test_prepare_configurations_resolves_the_services(tmp_path):
    _, executor, record_store = pipeline.prepare_configurations('distort', processes=2, out=str(tmp_path / 'run'),
                                                                format='csv')

    assert isinstance(executor, LocalParallelExecutor)
    assert executor.config.processes == 2
    assert isinstance(record_store, CsvRecordStore)
    assert record_store.config.prefix == str(tmp_path / 'run')


def test_prepare_configurations_raises_on_unknown_keys():
    with pytest.raises(exceptions.ConfigurationError):
        pipeline.prepare_configurations('ball', depth=3)


def test_embedding_config_raises_on_kappa_in_paper_mode():
    config = pipeline.ExperimentConfig(command='embed', kappa=5)

    with pytest.raises(exceptions.ConfigurationError):
        config.embedding_config()


def test_execute_reduce():
    outcome = pipeline.execute('reduce', arguments=['a1 b2 a1'])

    assert outcome.status == defaults.EXIT_OK
    assert outcome.lines == ['b2']


def test_execute_maps_configuration_errors_to_status_two():
    outcome = pipeline.execute('embed', arguments=['a1'], kappa=5)

    assert outcome.status == defaults.EXIT_CONFIG_ERROR


def test_execute_maps_bad_input_to_status_two():
    assert pipeline.execute('reduce', arguments=['a1 c7']).status == defaults.EXIT_CONFIG_ERROR
    assert pipeline.execute('no-such-command').status == defaults.EXIT_CONFIG_ERROR


def test_execute_maps_invariant_violations_to_status_one(mocker):
    mocker.patch.object(experiments.ReduceExperiment, 'run',
                        side_effect=exceptions.InvariantViolationError('isometry', 'broken'))

    outcome = pipeline.execute('reduce', arguments=['a1'])

    assert outcome.status == defaults.EXIT_INVARIANT_VIOLATION
