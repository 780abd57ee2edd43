import json
import sys

import pytest

import wreslab
from wreslab.cocycle.fixtures import quaternion_nerve
from wreslab.commands import Cocycle, Compose, ConfigCommand, DiracExperiment, Log, Residue, Suite, VerifyTrace
from wreslab.core import EXACT, TrigPoly
from wreslab.core.context import get_context
from wreslab.core.scalar import Mode
from wreslab.filtered import MatrixJet, unit_conjugate
from wreslab.helpers import logging
from wreslab.helpers.exceptions import StructuralError
from wreslab.parse import get_parser
from wreslab.parse.symbolfile import (
    decode_symbol,
    encode_jet,
    encode_nerve,
    encode_symbol,
    save_symbol,
    write_json,
)
from wreslab.projection import PrincipalProjection, algebraic_lift
from wreslab.symbol import ClassicalSymbol


@pytest.fixture
def szego_file(tmp_path):
    path = tmp_path / "szego.json"
    save_symbol(path, algebraic_lift(PrincipalProjection.szego(EXACT), -4))
    return path


def test_residue(wreslab_args, szego_file, tmp_path):
    out = tmp_path / "residue.json"
    Residue(szego_file, False, out).run()
    doc = json.loads(out.read_text())
    assert doc["r"] == {"re": "0", "im": "0"}
    assert doc["density_max_abs"] == 0

    # 2πr needs floats
    with pytest.raises(StructuralError):
        Residue(szego_file, True, None).run()


def test_compose(wreslab_args, tmp_path, capsys):
    e = TrigPoly.monomial(EXACT, 1, EXACT.eye(1))
    save_symbol(tmp_path / "a.json", ClassicalSymbol.xi(EXACT, 1))
    save_symbol(tmp_path / "b.json", ClassicalSymbol.multiplication(e))
    Compose(tmp_path / "a.json", tmp_path / "b.json", None).run()

    # ξ # e^{ix} = e^{ix}ξ + e^{ix}
    result = decode_symbol(json.loads(capsys.readouterr().out))
    assert result.m == 1
    assert result.component(0) == ClassicalSymbol.multiplication(e).component(0)
    assert result.component(1) == ClassicalSymbol.xi(EXACT, 1).left_mul(e).component(1)


def test_verify_trace(wreslab_args, tmp_path):
    p = MatrixJet.constant(EXACT, 5, EXACT.matrix([[1, 0, 0], [0, 0, 0], [0, 0, 0]]))
    ptilde = unit_conjugate(p, EXACT.matrix([[0, 1, 2], ["1/2", 0, -1], [1, 1, 0]]))
    write_json(tmp_path / "p.json", encode_jet(p))
    write_json(tmp_path / "ptilde.json", encode_jet(ptilde))
    out = tmp_path / "traces.json"
    VerifyTrace(tmp_path / "p.json", tmp_path / "ptilde.json", None, out).run()
    doc = json.loads(out.read_text())
    assert doc["ok"]
    assert [c["j"] for c in doc["checks"]] == [0, 1, 2, 3, 4]

    VerifyTrace(tmp_path / "p.json", tmp_path / "ptilde.json", 3, out).run()
    assert [c["j"] for c in json.loads(out.read_text())["checks"]] == [3]


def test_cocycle(wreslab_args, tmp_path):
    path = tmp_path / "nerve.json"
    write_json(path, encode_nerve(*quaternion_nerve()))
    report = tmp_path / "report.json"
    Cocycle(path, report).run()
    doc = json.loads(report.read_text())
    assert doc["ok"]
    (triple,) = doc["cocycle"]["triples"]
    assert triple["charts"] == [1, 2, 3]
    assert triple["root"] == 1


def test_dirac_experiment(wreslab_args, tmp_path):
    config = get_context().config
    config.trials = 2
    config.jobs = 1
    out = tmp_path / "dirac.csv"
    DiracExperiment(3, out).run()
    header, *rows = [line.split(",") for line in out.read_text().splitlines()]
    assert header[:3] == ["trial", "wres_r", "density_max_abs"]
    assert [int(row[0]) for row in rows] == [0, 1]
    assert all(abs(float(row[1])) <= 1e-8 for row in rows)

    args = get_parser().parse_args(["dirac-experiment", "--k", "3"])
    assert args.size == 3
    assert get_parser().parse_args(["dirac-experiment"]).size == 2

def test_suite_without_trials(wreslab_args, capsys):
    config = get_context().config
    config.trials = 0
    Suite("trace", None, None, None, None).run()
    path = config.work / "suites" / "trace-f64-seed7.json"
    assert capsys.readouterr().out.strip() == str(path)
    doc = json.loads(path.read_text())
    assert doc["ok"]
    assert doc["results"] == []


def test_config(wreslab_args, config_file, capsys):
    ConfigCommand(config_file, "depth", None, False).run()
    assert capsys.readouterr().out.strip() == "4"

    ConfigCommand(config_file, "nodes", "96", False).run()
    ConfigCommand(config_file, "nodes", None, False).run()
    assert capsys.readouterr().out.strip() == "96"

    ConfigCommand(config_file, "nodes", None, True).run()
    ConfigCommand(config_file, None, None, False).run()
    assert "nodes = 128" in capsys.readouterr().out


def test_log(wreslab_args, capsys):
    log = get_context().log
    logging.init(log, verbose=True, quiet=True)
    logging.info("first line")
    logging.info("second line")
    Log(False, 1).run()
    assert "second line" in capsys.readouterr().out

    Log(True, 1).run()
    assert log.read_text() == ""


def run_main(monkeypatch, config_file, logfile, *argv):
    monkeypatch.setattr(sys, "argv", ["wreslab", "--config", str(config_file), "--log", str(logfile), *argv])
    return wreslab.main()


def test_main_exit_codes(mock_context, monkeypatch, config_file, logfile, szego_file, tmp_path):
    assert run_main(monkeypatch, config_file, logfile, "residue", str(szego_file)) == 0
    assert get_context().config.mode == Mode.F64

    assert run_main(monkeypatch, config_file, logfile, "residue", str(tmp_path / "missing.json")) == 2

    doc = encode_symbol(ClassicalSymbol.identity(EXACT, 1))
    doc["floor"] = 2
    write_json(tmp_path / "bad.json", doc)
    assert run_main(monkeypatch, config_file, logfile, "residue", str(tmp_path / "bad.json")) == 2

    assert run_main(monkeypatch, config_file, logfile, "--depth", "-1", "residue", str(szego_file)) == 2
