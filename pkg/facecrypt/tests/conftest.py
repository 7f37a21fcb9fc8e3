"""Shared fixtures: synthetic images, keys and settings isolation."""

import logging

import pytest

from facecrypt.config import get_settings
from facecrypt.core.logging_config import PACKAGE_LOGGER, remove_package_handler
from facecrypt.models.image import GrayImage
from facecrypt.tests.factories import KEY, OTHER_KEY, natural_image


@pytest.fixture(autouse=True)
def _fresh_settings(monkeypatch):
    """Settings are cached process-wide; every test starts from the defaults."""
    for name in ("FACE_LOG_LEVEL", "FACE_DEBUG", "FACE_DEFAULT_REPORT_FORMAT"):
        monkeypatch.delenv(name, raising=False)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()
    # the handler holds this test's captured stderr
    remove_package_handler(logging.getLogger(PACKAGE_LOGGER))


@pytest.fixture
def key() -> bytes:
    return KEY


@pytest.fixture
def other_key() -> bytes:
    return OTHER_KEY


@pytest.fixture(scope="session")
def cameraman_like() -> GrayImage:
    return natural_image(256, 256, seed=1)


@pytest.fixture(scope="session")
def natural_corpus() -> list[GrayImage]:
    return [natural_image(256, 256, seed=s) for s in (1, 2, 3)]


@pytest.fixture
def small_image() -> GrayImage:
    return natural_image(40, 37, seed=7)
