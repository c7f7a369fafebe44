import time

import pytest
from hypothesis import HealthCheck, settings

from qmds.audit import audit_tables
from qmds.field import build_field

settings.register_profile(
    "suite",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)
settings.load_profile("suite")

_AUDIT_CACHE: dict = {}


@pytest.fixture(scope="session")
def audit_report():
    """The full nine-table audit (the expensive part of the suite); computed
    once and shared by the audit unit tests and the acceptance criteria."""
    if "report" not in _AUDIT_CACHE:
        t0 = time.monotonic()
        _AUDIT_CACHE["report"] = audit_tables()
        _AUDIT_CACHE["seconds"] = time.monotonic() - t0
    return _AUDIT_CACHE["report"]


@pytest.fixture(scope="session")
def audit_seconds(audit_report):
    """Wall-clock seconds the shared full audit took (for the runtime gate)."""
    return _AUDIT_CACHE["seconds"]


@pytest.fixture(scope="session")
def gf9():
    return build_field(3, 1)


@pytest.fixture(scope="session")
def gf25():
    return build_field(5, 1)


@pytest.fixture(scope="session")
def gf49():
    return build_field(7, 1)


@pytest.fixture(scope="session")
def gf64():
    return build_field(2, 3)


@pytest.fixture(scope="session")
def gf169():
    return build_field(13, 1)
