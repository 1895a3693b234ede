from __future__ import annotations

import json
import logging
import os
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Union

from pydantic import ValidationError
from ruamel.yaml import YAML  # type: ignore
from stevedore import driver
from stevedore.exception import NoMatches

from diary_embed import defaults, exceptions

logger = logging.getLogger(defaults.NAME)

Number = Union[int, float, str, Fraction]


def does_file_exist(file_path: str) -> bool:
    """
    Check if a file exists.

    Args:
        file_path (str): The file path to check

    Returns:
        bool: False if it does not otherwise True
    """
    my_file = Path(file_path)
    return my_file.is_file()


def safe_make_dir(directory: Union[str, Path]):
    """
    Safely make the directory.
    Ignore if it exists and create the parents if necessary.

    Args:
        directory (str): The directory path to create
    """
    Path(directory).mkdir(parents=True, exist_ok=True)


def load_yaml(file_path: str, load_type: str = 'safe') -> dict:
    """
    Loads an yaml and returns the dictionary

    Args:
        file_path (str): The path of the yamlfile
        load_type (str, optional): The load type as understood by ruamel. Defaults to 'safe'.

    Returns:
        dict: The mapping as defined in the yaml file
    """
    with open(file_path, encoding='utf-8') as f:
        yaml = YAML(typ=load_type, pure=True)
        yaml_config = yaml.load(f)
    return yaml_config or {}


def write_jsonl(file_path: Union[str, Path], rows: Iterable[dict]):
    """
    Writes one JSON document per line, keys in insertion order.

    Args:
        file_path (str): The file to write to, parents are created
        rows (Iterable[dict]): The documents
    """
    path = Path(file_path)
    safe_make_dir(path.parent)
    with path.open('w', encoding='utf-8') as fw:
        for row in rows:
            fw.write(json.dumps(row, ensure_ascii=False) + '\n')


def as_fraction(value: Number) -> Fraction:
    """
    Exact rational of a config value, floats are read through their shortest repr so 0.1 is 1/10.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        return Fraction(repr(value))
    return Fraction(value)


def get_bfs_cap() -> int:
    """
    The largest ball radius the harness agrees to build.

    The environment variable DIARY_EMBED_BFS_CAP overrides the default.

    Raises:
        ConfigurationError: If the environment variable is not a non negative integer

    Returns:
        int: The radius cap
    """
    raw = os.environ.get(defaults.ENV_BFS_CAP)
    if raw is None:
        return defaults.BFS_CAP
    try:
        cap = int(raw)
    except ValueError as _e:
        raise exceptions.ConfigurationError(f'{defaults.ENV_BFS_CAP} should be an integer, got {raw}') from _e
    if cap < 0:
        raise exceptions.ConfigurationError(f'{defaults.ENV_BFS_CAP} should not be negative, got {cap}')
    return cap


def get_service_namespace(service_type: str) -> str:
    """
    Return the namespace of the service type

    Args:
        service_type (str): One of statistic, diary, record_store, executor, experiment

    Raises:
        ConfigurationError: If the service type is not one of the accepted values

    Returns:
        str: The name space of the base class
    """
    namespaces = {
        'statistic': 'diary_embed.statistics.BaseStatistic',
        'diary': 'diary_embed.diary.BaseDiary',
        'record_store': 'diary_embed.datastore.BaseRecordStore',
        'executor': 'diary_embed.executor.BaseExecutor',
        'experiment': 'diary_embed.experiments.BaseExperiment',
    }
    if service_type not in namespaces:
        raise exceptions.ConfigurationError(f'Service type {service_type} is not understood')
    return namespaces[service_type]


def _reraise(manager, entrypoint, exception):  # pylint: disable=unused-argument
    raise exception


def get_provider_by_name_and_type(service_type: str, service_details: dict, **kwargs):
    """
    Given a service type and its descriptor, return the instantiated plugin implementing the service.
    We use stevedore to do the work for us.

    The descriptor is a mapping {'type': name, 'config': {...}}; extra keyword arguments are
    handed to the plugin along with the config.

    Args:
        service_type (str): One of statistic, diary, record_store, executor, experiment
        service_details (dict): The descriptor used to instantiate the service.

    Raises:
        UnknownServiceError: If the service by that name does not exist
        ConfigurationError: If the config does not validate

    Returns:
        object: A service object
    """
    namespace = get_service_namespace(service_type=service_type)

    if 'type' not in service_details:
        raise exceptions.ConfigurationError(f'A {service_type} descriptor needs a type: {service_details}')
    service_name = service_details['type']
    service_config = service_details.get('config', None) or {}

    logger.debug(f'Trying to get a service of {service_type} of the name {service_name} with config: {service_config}')
    try:
        mgr = driver.DriverManager(
            namespace=namespace,
            name=service_name,
            invoke_on_load=True,
            invoke_kwds={'config': service_config, **kwargs},
            on_load_failure_callback=_reraise,
        )
        return mgr.driver
    except NoMatches as _e:
        raise exceptions.UnknownServiceError(service_type, service_name) from _e
    except ValidationError as _e:
        raise exceptions.ConfigurationError(f'{service_type} {service_name}: {_e}') from _e
