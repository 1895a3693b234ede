import pytest

from diary_embed import defaults  # pylint: disable=import-error


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    monkeypatch.delenv(defaults.ENV_CONFIG_FILE, raising=False)
    monkeypatch.delenv(defaults.ENV_BFS_CAP, raising=False)
