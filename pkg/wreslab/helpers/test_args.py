import pytest

from wreslab.conftest import make_args
from wreslab.core.context import ENV_CAP_J, get_context
from wreslab.core.scalar import Mode
from wreslab.helpers.args import init
from wreslab.helpers.exceptions import NonBugError


def test_config_file_values(wreslab_args):
    config = get_context().config
    assert config.mode == Mode.F64
    assert config.depth == 4
    assert config.jobs == 2
    # merged options are not left on args
    assert not hasattr(wreslab_args, "depth")


def test_cap_j_precedence(config_file, logfile, mock_context, monkeypatch):
    init(make_args(config_file, logfile))
    assert get_context().config.cap_j == 64

    monkeypatch.setenv(ENV_CAP_J, "40")
    init(make_args(config_file, logfile))
    assert get_context().config.cap_j == 40

    init(make_args(config_file, logfile, cap_j=12))
    assert get_context().config.cap_j == 12

    monkeypatch.setenv(ENV_CAP_J, "many")
    with pytest.raises(NonBugError):
        init(make_args(config_file, logfile))


def test_command_line_overrides_file(config_file, logfile, mock_context):
    init(make_args(config_file, logfile, mode="exact", depth=2, action="residue"))
    context = get_context()
    assert context.config.mode == Mode.EXACT
    assert context.config.depth == 2
    assert context.config.seed == 7
    assert context.command == "residue"


@pytest.mark.parametrize("option", [{"grid": 32}, {"depth": -1}, {"jobs": 0}, {"mode": "f32"}])
def test_invalid_options(config_file, logfile, mock_context, option):
    with pytest.raises(NonBugError):
        init(make_args(config_file, logfile, **option))


def test_missing_config(tmp_path, logfile, mock_context):
    with pytest.raises(NonBugError):
        init(make_args(tmp_path / "missing.cfg", logfile))
