"""Shared fixtures"""

from pathlib import Path
from typing import Iterator

import pytest
from typer.testing import CliRunner

from quandle_lab.cohomology.builtins import resolve_cocycle
from quandle_lab.cohomology.cochains import Cochain
from quandle_lab.quandle.catalog import resolve_quandle
from quandle_lab.quandle.core import Quandle
from quandle_lab.utils.config_loader import reset_config_loader


@pytest.fixture
def r3() -> Quandle:
    return resolve_quandle("R3")


@pytest.fixture
def r4() -> Quandle:
    return resolve_quandle("R4")


@pytest.fixture
def s4() -> Quandle:
    return resolve_quandle("S4")


@pytest.fixture
def t2() -> Quandle:
    return resolve_quandle("T2")


@pytest.fixture
def eta1(r3: Quandle) -> Cochain:
    return resolve_cocycle("eta1", r3)


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


@pytest.fixture(autouse=True)
def isolated_config(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> Iterator[Path]:
    """Point configuration at an empty temp directory and clear overrides"""
    config_path = tmp_path / "config.yaml"
    monkeypatch.setenv("QUANDLE_LAB_CONFIG", str(config_path))
    monkeypatch.delenv("QUANDLE_LAB_LOG_LEVEL", raising=False)
    monkeypatch.delenv("QUANDLE_LAB_THREADS", raising=False)
    reset_config_loader()
    yield config_path
    reset_config_loader()
