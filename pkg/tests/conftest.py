"""
Shared fixtures
The environment is set before any app module is imported so that the
settings singleton is built in testing mode with quiet logs.
"""
import os

os.environ.setdefault("ENVIRONMENT", "testing")
os.environ.setdefault("LOG_LEVEL", "WARNING")

import pytest
from hypothesis import settings as hypothesis_settings

from app.sequences.zoo import builtin
from app.words.core import BINARY, Alphabet

hypothesis_settings.register_profile("palctl", max_examples=60, deadline=None)
hypothesis_settings.load_profile("palctl")


@pytest.fixture
def budget() -> int:
    """Small prefix budget keeping every stabilization under a second"""
    return 1 << 14


@pytest.fixture
def binary_alphabet() -> Alphabet:
    return BINARY


@pytest.fixture
def ab() -> Alphabet:
    return Alphabet(letters=("a", "b"))


@pytest.fixture
def period_doubling():
    return builtin("period-doubling")


@pytest.fixture
def fibonacci():
    return builtin("fibonacci")


@pytest.fixture
def morphism_file(tmp_path):
    def write(text: str):
        path = tmp_path / "morphism.txt"
        path.write_text(text, encoding="utf-8")
        return path
    return write
