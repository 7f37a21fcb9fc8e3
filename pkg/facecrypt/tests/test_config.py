import logging
import sys

import pytest
from pydantic import ValidationError

from facecrypt.config import Settings, get_settings
from facecrypt.core.logging_config import (
    HANDLER_NAME,
    PACKAGE_LOGGER,
    configure_logging,
    remove_package_handler,
)


def test_defaults():
    s = get_settings()
    assert s.APP_NAME == "facecrypt"
    assert s.CONTAINER_EXTENSION == ".face"
    assert s.DEFAULT_REPORT_FORMAT == "text"
    assert s.ANALYZE_MAX_CONCURRENCY == 4
    assert s.effective_log_level == "WARNING"


def test_environment_prefix(monkeypatch):
    monkeypatch.setenv("FACE_DEFAULT_REPORT_FORMAT", "kv")
    monkeypatch.setenv("FACE_ANALYZE_MAX_CONCURRENCY", "2")
    s = Settings()
    assert s.DEFAULT_REPORT_FORMAT == "kv"
    assert s.ANALYZE_MAX_CONCURRENCY == 2


def test_invalid_values_rejected(monkeypatch):
    monkeypatch.setenv("FACE_DEFAULT_IMAGE_FORMAT", "jpeg")
    with pytest.raises(ValidationError):
        Settings()


def test_debug_forces_debug_level(monkeypatch):
    monkeypatch.setenv("FACE_DEBUG", "true")
    assert Settings().effective_log_level == "DEBUG"


def test_get_settings_is_cached():
    assert get_settings() is get_settings()


def package_handlers(logger: logging.Logger) -> list[logging.Handler]:
    return [h for h in logger.handlers if h.get_name() == HANDLER_NAME]


def test_configure_logging_installs_one_handler():
    settings = get_settings()
    configure_logging(settings)
    logger = configure_logging(settings, verbose=True)
    assert logger.name == PACKAGE_LOGGER
    assert logger.level == logging.DEBUG
    handlers = package_handlers(logger)
    assert len(handlers) == 1
    assert isinstance(handlers[0], logging.StreamHandler)
    configure_logging(settings)
    assert logger.level == logging.WARNING
    assert len(package_handlers(logger)) == 1


def test_handler_writes_to_stderr(capsys):
    logger = configure_logging(get_settings(), verbose=True)
    assert package_handlers(logger)[0].stream is sys.stderr
    logging.getLogger("facecrypt.tests").debug("hello from the test")
    captured = capsys.readouterr()
    assert "DEBUG [facecrypt.tests] hello from the test" in captured.err
    assert captured.out == ""


def test_level_follows_settings(caplog):
    configure_logging(get_settings())
    log = logging.getLogger("facecrypt.tests")
    log.info("hidden")
    log.warning("shown")
    assert [r.getMessage() for r in caplog.records] == ["shown"]

    caplog.clear()
    configure_logging(get_settings(), verbose=True)
    log.debug("now visible")
    assert [r.levelname for r in caplog.records] == ["DEBUG"]


def test_remove_package_handler():
    logger = configure_logging(get_settings())
    remove_package_handler(logger)
    assert package_handlers(logger) == []
