from functools import lru_cache

import pytest

from ffhyper.field import build_field, parse_q
from ffhyper.value_domain import make_backend


@lru_cache(maxsize=None)
def field(q):
    return build_field(*parse_q(q))


@lru_cache(maxsize=None)
def backend(kind, q, seed=0):
    ctx = field(q)
    return make_backend(kind, ctx.p, q - 1, seed=seed)


@pytest.fixture(params=["complex", "modular"])
def kind(request):
    return request.param


# one line per acceptance criterion, filled in by test_acceptance.py
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[n])
