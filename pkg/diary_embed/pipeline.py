import logging
import os
from typing import List, Literal, Optional, Sequence, Tuple

from pydantic import BaseModel, ValidationError, conint, validator

from diary_embed import defaults, exceptions, utils
from diary_embed.datastore import BaseRecordStore
from diary_embed.embed import EmbeddingConfig
from diary_embed.executor import BaseExecutor

logger = logging.getLogger(defaults.NAME)


def default_mode(command: str) -> str:
    """
    The embedding mode of a command when neither the flags nor the config file set one.
    """
    return defaults.MODE_CUSTOM if command in defaults.CUSTOM_MODE_COMMANDS else defaults.MODE_PAPER


class ExperimentConfig(BaseModel):
    """
    Everything a harness run depends on. Together with the seed it fully determines the records of the run.
    """
    command: str
    arguments: List[str] = []
    radius: conint(ge=0) = defaults.RADIUS  # type: ignore
    samples: conint(ge=0) = defaults.SAMPLES  # type: ignore
    seed: int = defaults.SEED
    mode: Optional[Literal['paper', 'custom']] = None
    kappa: Optional[conint(ge=1)] = None  # type: ignore
    out: Optional[str] = None
    format: Literal['jsonl', 'csv'] = defaults.OUTPUT_FORMAT
    processes: conint(ge=1) = 1  # type: ignore
    side: Optional[Literal['a', 'b']] = None
    diary: Literal['alice', 'appendix'] = 'alice'
    failures_file: Optional[str] = None
    log_level: Optional[Literal['INFO', 'DEBUG', 'WARNING', 'ERROR', 'FATAL']] = None

    class Config:
        extra = 'forbid'

    @validator('mode', always=True)
    def resolve_mode(cls, mode, values):  # pylint: disable=no-self-argument
        if mode is not None:
            return mode
        return default_mode(values.get('command', ''))

    def embedding_config(self) -> EmbeddingConfig:
        """
        Raises:
            ConfigurationError: If kappa is given in paper mode
        """
        try:
            return EmbeddingConfig(mode=self.mode, kappa=self.kappa)
        except ValidationError as _e:
            raise exceptions.ConfigurationError(str(_e)) from _e


class ExperimentOutcome(BaseModel):
    """
    The exit status of a run and the lines it prints.
    """
    status: int = defaults.EXIT_OK
    lines: List[str] = []


def load_configuration_file(configuration_file: Optional[str]) -> dict:
    """
    Read the flat key-value config file, a YAML mapping of flag names (dashes or underscores) to values.

    Raises:
        ConfigurationError: If the file is missing or is not a flat mapping
    """
    if not configuration_file:
        return {}
    if not utils.does_file_exist(configuration_file):
        raise exceptions.ConfigurationError(f'The config file {configuration_file} does not exist')

    configuration = utils.load_yaml(configuration_file)
    if not isinstance(configuration, dict):
        raise exceptions.ConfigurationError(f'The config file {configuration_file} should hold a mapping')
    flat = {}
    for key, value in configuration.items():
        if isinstance(value, dict):
            raise exceptions.ConfigurationError(f'The config file should be flat, {key} holds a mapping')
        flat[str(key).replace('-', '_')] = value
    return flat


def prepare_configurations(command: str, configuration_file: str = None, arguments: Sequence[str] = (),
                           **flags) -> Tuple[ExperimentConfig, BaseExecutor, BaseRecordStore]:
    """
    Merge the defaults, the config file and the flags (in increasing precedence) and resolve the services
    of the run.

    Args:
        command (str): The subcommand to run
        configuration_file (str, optional): The config file, DIARY_EMBED_CONFIG_FILE if not given
        arguments (Sequence[str]): The positional inputs of the subcommand
        flags: The command line flags, None for flags that were not given

    Raises:
        ConfigurationError: If the merged configuration does not validate

    Returns:
        The experiment config, the executor and the record store
    """
    configuration_file = configuration_file or os.environ.get(defaults.ENV_CONFIG_FILE)
    configuration = load_configuration_file(configuration_file)
    configuration.update({key: value for key, value in flags.items() if value is not None})

    try:
        config = ExperimentConfig(command=command, arguments=list(arguments), **configuration)
    except (ValidationError, TypeError) as _e:
        raise exceptions.ConfigurationError(str(_e)) from _e

    if config.log_level:
        logger.setLevel(config.log_level)
    logger.info(f'Running {command} with {config.dict()}')

    executor_config = defaults.DEFAULT_EXECUTOR
    if config.processes > 1:
        executor_config = {'type': 'local-parallel', 'config': {'processes': config.processes}}
    executor = utils.get_provider_by_name_and_type('executor', executor_config)

    record_store_config = defaults.DEFAULT_RECORD_STORE
    if config.out:
        record_store_config = {'type': config.format, 'config': {'prefix': config.out}}
    record_store = utils.get_provider_by_name_and_type('record_store', record_store_config)

    return config, executor, record_store


def execute(command: str, configuration_file: str = None, arguments: Sequence[str] = (),
            **flags) -> ExperimentOutcome:
    """
    Run a subcommand and map failures to exit statuses: 2 for configuration and input errors, 1 when an
    invariant violation is detected.
    """
    try:
        config, executor, record_store = prepare_configurations(command, configuration_file, arguments, **flags)
        experiment = utils.get_provider_by_name_and_type('experiment', {'type': command})
        return experiment.run(config, executor, record_store)
    except exceptions.InvariantViolationError as _e:
        logger.error(_e.message)
        return ExperimentOutcome(status=defaults.EXIT_INVARIANT_VIOLATION, lines=[_e.message])
    except (exceptions.ConfigurationError, exceptions.PreconditionError, exceptions.BallCapExceededError,
            exceptions.BudgetExceededError, exceptions.CodecError, exceptions.AlphabetMismatchError) as _e:
        logger.error(_e.message)
        return ExperimentOutcome(status=defaults.EXIT_CONFIG_ERROR, lines=[_e.message])
