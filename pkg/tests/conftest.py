"""Shared test fixtures for cyclocode tests."""

from __future__ import annotations

import pytest

from cyclocode.core.code import build_cyclotomic_code
from cyclocode.core.field import FieldCtx, build_field
from cyclocode.core.models import CodeSpec, LinearCode
from cyclocode.data.store import DataStore


@pytest.fixture
def flagship_spec() -> CodeSpec:
    """Binary [21, 6] two-weight code: Q=64, h=3, t=[0]."""
    return CodeSpec(p=2, e=1, m=6, h=3, t=(0,))


@pytest.fixture
def flagship_field() -> FieldCtx:
    return build_field(2, 1, 6)


@pytest.fixture
def flagship_code(flagship_spec) -> LinearCode:
    return build_cyclotomic_code(flagship_spec)


@pytest.fixture
def gap_spec() -> CodeSpec:
    """[5, 4] code over F_2 whose hierarchy has an uncovered r."""
    return CodeSpec(p=2, e=1, m=4, h=3, t=(0,))


@pytest.fixture
def simplex_spec() -> CodeSpec:
    """s = h: the simplex code [15, 4]."""
    return CodeSpec(p=2, e=1, m=4, h=3, t=(0, 1, 2))


@pytest.fixture
def ternary_spec() -> CodeSpec:
    """[2, 2] MDS code over F_3."""
    return CodeSpec(p=3, e=1, m=2, h=2, t=(0,))


@pytest.fixture
def f16() -> FieldCtx:
    return build_field(2, 1, 4)


@pytest.fixture
def f9() -> FieldCtx:
    return build_field(3, 1, 2)


@pytest.fixture
def temp_db(tmp_path):
    """DataStore with a temporary SQLite database."""
    db_path = str(tmp_path / "test.db")
    store = DataStore(db_path=db_path)
    yield store
    store.close()
