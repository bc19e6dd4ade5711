from __future__ import annotations

import pytest
from hypothesis import settings

from symx.construction import DEFAULT_TRIPLES, build_groups, default_params
from symx.local import LocalAnalysis

settings.register_profile("symx", deadline=None, max_examples=60)
settings.load_profile("symx")

_built = {}
_analyses = {}


def built(name: str):
    if name not in _built:
        _built[name] = build_groups(default_params(name))
    return _built[name]


def analysis(name: str) -> LocalAnalysis:
    if name not in _analyses:
        _analyses[name] = LocalAnalysis.of(built(name).spec)
    return _analyses[name]


@pytest.fixture(scope="session")
def c2c2m3():
    return built("c2c2m3")


@pytest.fixture(scope="session")
def s3c2m3():
    return built("s3c2m3")


@pytest.fixture(params=sorted(DEFAULT_TRIPLES))
def triple(request):
    return built(request.param)


# -- acceptance reporting ------------------------------------------------------

ACCEPTANCE = {}


def record(criterion: int, ok: bool, detail: str = "") -> None:
    ACCEPTANCE[criterion] = (ok, detail)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
