import logging
import os

import pytest

from src import config


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    # empty counts as unset
    for name in ("HOURGLASS_THREADS", "HOURGLASS_GOLDEN_DIR", "HOURGLASS_LOG_LEVEL"):
        monkeypatch.setenv(name, "")
    monkeypatch.setattr(config, "PROJECT_ROOT", "/nonexistent-project-root")


def test_defaults():
    assert config.get_threads() == config.DEFAULT_THREADS
    assert config.get_golden_dir() == os.path.join("/nonexistent-project-root", "tests", "golden")
    assert config.get_log_level() == logging.WARNING


def test_environment_wins(monkeypatch):
    monkeypatch.setenv("HOURGLASS_THREADS", "8")
    monkeypatch.setenv("HOURGLASS_GOLDEN_DIR", "/tmp/golden")
    monkeypatch.setenv("HOURGLASS_LOG_LEVEL", "debug")
    assert config.get_threads() == 8
    assert config.get_golden_dir() == "/tmp/golden"
    assert config.get_log_level() == logging.DEBUG


@pytest.mark.parametrize("raw", ["0", "-2", "many"])
def test_bad_thread_count(monkeypatch, raw):
    monkeypatch.setenv("HOURGLASS_THREADS", raw)
    with pytest.raises(ValueError, match="Please set it in .env or environment variables"):
        config.get_threads()


def test_bad_log_level(monkeypatch):
    monkeypatch.setenv("HOURGLASS_LOG_LEVEL", "chatty")
    with pytest.raises(ValueError, match="HOURGLASS_LOG_LEVEL"):
        config.get_log_level()


def test_dotenv_fallback(monkeypatch, tmp_path):
    (tmp_path / ".env").write_text("# settings\nexport HOURGLASS_THREADS=3\nHOURGLASS_LOG_LEVEL='ERROR'\n")
    monkeypatch.setattr(config, "PROJECT_ROOT", str(tmp_path))
    assert config.get_threads() == 3
    assert config.get_log_level() == logging.ERROR
    assert os.environ["HOURGLASS_THREADS"] == "3"
