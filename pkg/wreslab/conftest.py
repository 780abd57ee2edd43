from pathlib import Path

import numpy as np
import pytest

import wreslab.core.context
from wreslab.core.context import get_context
from wreslab.helpers.args import init as init_args
from wreslab.types import WreslabArgs

_testdir = Path(__file__).parent / "data/tests"


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: exact lifts at depth 6 and other long runs")


@pytest.fixture
def config_file(tmp_path_factory):
    """Fixture to create a temporary wreslab.cfg file."""
    tmp_path = tmp_path_factory.mktemp("wreslab")

    out_file = tmp_path / "wreslab.cfg"
    workdir = tmp_path / "work"
    workdir.mkdir()

    file = _testdir / "wreslab.cfg"
    print(f"CONFIG: {out_file}")
    contents = open(file).read().format(workdir)

    open(out_file, "w").write(contents)
    return out_file


@pytest.fixture(autouse=True)
def logfile(tmp_path_factory):
    """Setup logging for all tests."""
    from wreslab.helpers import logging

    tmp_path = tmp_path_factory.getbasetemp()
    logfile = tmp_path / "log_testsuite.txt"
    logging.init(logfile, verbose=True)

    return logfile


@pytest.fixture
def rng():
    return np.random.default_rng(20251018)


@pytest.fixture
def mock_context(monkeypatch):
    """Let set_context() replace an existing context. Every module imports
    get_context() by name, so the context itself has to be swapped in the
    module namespace instead of mocking get_context()."""

    def mock_set_context(ctx):
        print(f"mock_set_context({ctx})")
        monkeypatch.setattr(wreslab.core.context, "__context", ctx, raising=False)

    monkeypatch.setattr("wreslab.core.context.set_context", mock_set_context)


def make_args(config_file: Path, logfile: Path, action: str = "", **kwargs) -> WreslabArgs:
    """Parsed-arguments namespace as wreslab.parse.arguments would produce it."""
    args = WreslabArgs()
    args.config = config_file
    args.details_to_stdout = False
    args.quiet = True
    args.verbose = True
    args.log = logfile
    args.action = action
    for key, value in kwargs.items():
        setattr(args, key, value)
    return args


@pytest.fixture
def wreslab_args(config_file, mock_context, logfile):
    """Initialize the runtime context from the test config file."""
    args = make_args(config_file, logfile)
    init_args(args)
    print(f"WORK: {get_context().config.work}")
    return args
