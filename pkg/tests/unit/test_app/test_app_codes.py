# SPDX-License-Identifier: Apache-2.0
import json

from click.testing import CliRunner

from descentcodes.app import codes as test_module
from descentcodes.app.__main__ import main
from descentcodes.exceptions import IntegrityError, UniquenessViolationError


def _run(*args):
    return CliRunner().invoke(main, list(args))


def test_code_list():
    result = _run("code", "2", "2", "--m", "0", "--list")
    assert result.exit_code == 0
    assert result.output == "AABB BABA\n"

    assert _run("code", "2", "2", "--m", "3").output == "ABBA\n"


def test_code_card():
    result = _run("code", "2", "2", "--m", "1", "--card")
    assert result.exit_code == 0
    assert result.output == "closed_form=1 enumerated=1\n"


def test_code_card_integrity_failure(monkeypatch):
    monkeypatch.setattr(test_module, "cardinality_closed_form", lambda spec: 5)
    result = _run("code", "2", "2", "--m", "1", "--card")
    assert result.exit_code == 1
    assert "closed_form=5 enumerated=1" in result.output


def test_code_dm():
    result = _run("code", "2", "2", "--m", "0", "--dm")
    assert result.exit_code == 0
    assert result.output == "1 + q^4\n"


def test_code_sphere():
    result = _run("code", "2", "2", "--m", "0", "--sphere")
    assert result.exit_code == 0
    assert result.output == "sphere=6 ratio=3\n"


def test_code_sphere_unequal_weights():
    result = _run("code", "2", "3", "--m", "1", "--sphere")
    assert result.exit_code == 0
    assert result.output == "sphere=7 ratio=7/2\n"


def test_code_sphere_reports_ratio_of_empty_code(monkeypatch):
    monkeypatch.setattr(test_module, "sphere_ratio", lambda spec: None)
    result = _run("code", "2", "3", "--m", "0", "--sphere")
    assert result.exit_code == 0
    assert result.output == "sphere=6 ratio=n/a\n"


def test_code_sphere_integrity_failure(monkeypatch):
    def broken(spec):
        raise IntegrityError("broken")

    monkeypatch.setattr(test_module, "sphere_cardinality", broken)
    assert _run("code", "2", "2", "--sphere").exit_code == 1


def test_code_json():
    result = _run("code", "2", "2", "--m", "1", "--card", "--format", "json")
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data == {"code": "C_(2,2,1)", "closed_form": "1", "enumerated": "1"}


def test_code_bad_arguments():
    assert _run("code", "0", "2").exit_code == 2
    assert _run("code", "2").exit_code == 2


def test_decode():
    result = _run("decode", "2", "2", "1", "AAB")
    assert result.exit_code == 0
    assert result.output == "BAAB\n"

    result = _run("decode", "2", "2", "1", "001")
    assert result.exit_code == 0
    assert result.output == "BAAB\n"


def test_decode_not_found():
    result = _run("decode", "2", "2", "0", "AAA")
    assert result.exit_code == 3
    assert result.output == "NOT_FOUND\n"


def test_decode_bad_word():
    assert _run("decode", "2", "2", "0", "AA").exit_code == 2
    assert _run("decode", "2", "2", "0", "AXB").exit_code == 2


def test_decode_uniqueness_violation(monkeypatch):
    def ambiguous(received, spec):
        raise UniquenessViolationError("ambiguous")

    monkeypatch.setattr(test_module, "decode_single_deletion", ambiguous)
    assert _run("decode", "2", "2", "1", "AAB").exit_code == 4


def test_vt():
    result = _run("vt", "3", "0")
    assert result.exit_code == 0
    assert result.output == "000 101\n"

    result = _run("vt", "3", "0", "--card")
    assert result.exit_code == 0
    assert result.output == "2\n"


def test_vt_decode():
    result = _run("vt", "3", "0", "--decode", "01")
    assert result.exit_code == 0
    assert result.output == "101\n"

    result = _run("vt", "3", "0", "--decode", "AB", "--format", "json")
    assert json.loads(result.output) == {"received": "01", "codeword": "101"}

    assert _run("vt", "3", "0", "--decode", "0").exit_code == 2


def test_vt_decode_rejects_listing_modes():
    result = _run("vt", "3", "0", "--decode", "01", "--card")
    assert result.exit_code == 2
    assert "--decode cannot be combined with --card" in result.output

    result = _run("vt", "3", "0", "--list", "--decode", "01")
    assert result.exit_code == 2
    assert "--decode cannot be combined with --list" in result.output

    assert _run("vt", "3", "0", "--list").output == "000 101\n"
