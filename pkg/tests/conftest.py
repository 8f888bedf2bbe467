import functools

import pytest

from projcoh.arrangement import build_arrangement
from projcoh.cli import RunOptions, run
from projcoh.config import PRESET_NAMES, load_preset
from projcoh.wedgelat import group_closure


@functools.lru_cache(maxsize=None)
def preset_arrangement(name):
    cfg = load_preset(name)
    group = group_closure(cfg.generator_matrices(), bound=cfg.group_order_bound)
    return build_arrangement(list(group), cfg.seed_subtori())


@functools.lru_cache(maxsize=None)
def preset_report(name, verify=False):
    return run(load_preset(name), RunOptions(verify=verify))


@pytest.fixture(params=PRESET_NAMES)
def preset_name(request):
    return request.param


# acceptance criteria report one line each at the end of the run
ACCEPTANCE_LINES: dict[str, str] = {}


def record_criterion(key, passed, detail):
    ACCEPTANCE_LINES[key] = f"{'PASS' if passed else 'FAIL'}  {key}: {detail}"


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[key])
