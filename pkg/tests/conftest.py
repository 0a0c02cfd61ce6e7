from __future__ import annotations

import pytest

from kerdock_lab.codes import build_binary_kerdock, build_full_z4_kerdock, build_shortened_kerdock
from kerdock_lab.mub.config import build_X, build_Y, build_Z
from kerdock_lab.mub.lines import code_to_lines


class Artifacts:
    """Lazily built objects for one ``m``, shared across a test session."""

    def __init__(self, m: int):
        self.m = m
        self.N = 2 ** (m + 1)
        self._cache = {}

    def _get(self, key, build):
        if key not in self._cache:
            self._cache[key] = build()
        return self._cache[key]

    @property
    def short(self):
        return self._get("short", lambda: build_shortened_kerdock(self.m))

    @property
    def full(self):
        return self._get("full", lambda: build_full_z4_kerdock(self.m))

    @property
    def binary(self):
        return self._get("binary", lambda: build_binary_kerdock(self.m))

    @property
    def lines(self):
        return self._get("lines", lambda: code_to_lines(self.binary))

    @property
    def X(self):
        return self._get("X", lambda: build_X(self.lines))

    @property
    def Y(self):
        return self._get("Y", lambda: build_Y(self.X))

    @property
    def Z(self):
        return self._get("Z", lambda: build_Z(self.X))


@pytest.fixture(scope="session")
def m3():
    return Artifacts(3)


@pytest.fixture(scope="session")
def m5():
    return Artifacts(5)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS, summary_line
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(RESULTS):
        terminalreporter.write_line(summary_line(k))
