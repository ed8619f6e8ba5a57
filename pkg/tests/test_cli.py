import json

import pytest

from main import main


def _report(tmp_path, argv):
    path = tmp_path / "report.json"
    code = main(argv + ["--json", str(path)])
    return code, json.loads(path.read_text(encoding="utf-8"))


def test_blocks_command(tmp_path, capsys):
    code, rep = _report(tmp_path, ["blocks", "--group", "S3", "--field", "F2"])
    assert code == 0
    assert rep["status"] == "ok"
    assert len(rep["data"]["blocks"]) == 2
    assert rep["data"]["oracle"]["center"]["idempotents"] == 4
    assert "S3 over Fp:2" in capsys.readouterr().out


@pytest.mark.parametrize("suite", ["adjunctions", "decat", "mackey-axioms", "blocks"])
def test_verify_suites_pass_on_s3(tmp_path, suite):
    code, rep = _report(tmp_path, ["verify", "--group", "S3", "--field", "Q", "--suite", suite, "--samples", "3"])
    assert code == 0, [c for c in rep["data"]["checks"] if c["status"] == "fail"]
    assert rep["data"]["summary"]["fail"] == 0


def test_verify_skips_separability_when_index_vanishes(tmp_path):
    code, rep = _report(tmp_path, ["verify", "--group", "S3", "--field", "F3", "--suite", "adjunctions"])
    assert code == 0
    skipped = [c["name"] for c in rep["data"]["checks"] if c["status"] == "skipped"]
    assert any(name.startswith("adjunctions:separability") for name in skipped)


def test_verify_yoshida_on_c2(tmp_path):
    code, rep = _report(tmp_path, ["verify", "--group", "C2", "--suite", "yoshida", "--samples", "2"])
    assert code == 0
    names = {c["name"] for c in rep["data"]["checks"]}
    assert "yoshida:delta-kernel Id_G" in names
    status = {c["name"]: c["status"] for c in rep["data"]["checks"]}
    assert status["yoshida:interchange"] == "pass"
    assert status["yoshida:P-horizontal-compatibility"] == "pass"


def test_verify_biequivalence(tmp_path):
    code, rep = _report(tmp_path, ["verify", "--group", "C1", "--suite", "biequivalence", "--samples", "40"])
    assert code == 0
    assert rep["meta"]["suites"] == ["biequivalence"]


@pytest.mark.parametrize("kind,key", [("xburnside", "tensor_shape"), ("center", "tensor_shape"),
                                      ("burnside", "tensor_shape"), ("group", "presentation")])
def test_export_kinds(tmp_path, kind, key):
    code, rep = _report(tmp_path, ["export", kind, "--group", "S3"])
    assert code == 0
    assert key in rep["data"]


def test_export_shapes(tmp_path):
    _, rep = _report(tmp_path, ["export", "xburnside", "--group", "S3"])
    assert rep["data"]["tensor_shape"] == [8, 8, 8]
    _, rep = _report(tmp_path, ["export", "rho", "--group", "S3", "--field", "Q"])
    assert rep["data"]["rho"]["shape"] == [3, 8]
    _, rep = _report(tmp_path, ["export", "mackey", "--group", "C2", "--coset", "0"])
    assert rep["data"]["mackey"]["X"] == 2


def test_reports_are_reproducible(tmp_path):
    argv = ["verify", "--group", "C3", "--suite", "biequivalence", "--samples", "2", "--seed", "5"]
    _, a = _report(tmp_path, argv)
    _, b = _report(tmp_path, argv)
    assert a == b


def test_usage_errors(capsys):
    assert main(["verify", "--group", "S3"]) == 2
    assert main(["verify", "--group", "S3", "--suite", "bogus"]) == 2
    assert main(["export", "nothing", "--group", "S3"]) == 2
    assert main(["blocks", "--group", "S3", "--field", "F6"]) == 2
    assert main(["blocks", "--group", "Nope"]) == 2
    assert main(["blocks"]) == 2
    assert "[ERROR]" in capsys.readouterr().err


def test_argparse_errors():
    assert main([]) == 2
    assert main(["frobnicate"]) == 2
