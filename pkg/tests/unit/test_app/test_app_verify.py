# SPDX-License-Identifier: Apache-2.0
import json

from click.testing import CliRunner

import descentcodes.verify
from descentcodes.app.__main__ import main
from descentcodes.qpoly import QPoly
from descentcodes.utils import load_json


def _run(*args):
    return CliRunner().invoke(main, ["verify", *args])


def test_verify_dm():
    result = _run("dm", "--max", "6")
    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert lines[0].startswith("PASS dm")
    assert lines[-1] == "15 passed, 0 failed"


def test_verify_sphere_json():
    result = _run("sphere", "--max-gamma", "3", "--format", "json")
    assert result.exit_code == 0
    lines = [json.loads(line) for line in result.output.splitlines()]
    assert all(line["passed"] for line in lines[:-1])
    assert lines[-1] == {"summary": {"passed": 12, "failed": 0}}


def test_verify_roots_tolerance():
    result = _run("roots", "--max", "3", "--tolerance", "1e-9", "--format", "json")
    assert result.exit_code == 0
    first = json.loads(result.output.splitlines()[0])
    assert first["tolerance"] == 1e-9


def test_verify_output(tmp_path):
    path = tmp_path / "reports.json"
    result = _run("vt", "--max", "4", "--output", str(path))
    assert result.exit_code == 0
    reports = load_json(path)
    assert reports
    assert all(report["passed"] for report in reports)


def test_verify_failure(monkeypatch):
    monkeypatch.setattr(descentcodes.verify, "q_binomial", lambda i, j: QPoly((1,)))
    result = _run("dm", "--max", "3")
    assert result.exit_code == 1
    assert "3 failed" in result.output


def test_verify_usage_errors():
    assert _run("all", "--max", "3").exit_code == 2
    assert _run("dm", "--max", "1").exit_code == 2
    assert _run("sphere", "--max-gamma", "0").exit_code == 2
    assert _run("roots", "--tolerance", "0").exit_code == 2
    assert _run("nope").exit_code == 2
