import io
import json
import subprocess
import sys

import pytest

from quadcover.cli import main, run

QQ = {"kind": "rational"}


def call(command, payload, seed=0):
    doc, code = run(command, payload, seed)
    return json.loads(json.dumps(doc)), code


def test_form_to_cover_example():
    doc, code = call("form-to-cover", {"ring": QQ, "a": 2, "b": 0, "c": 2})
    assert code == 0
    assert (doc["d"], doc["presentation"], doc["etale"]) == ("-1", "T^2+4", True)


def test_roundtrip_count():
    doc, code = call("roundtrip", {"ring": {"kind": "modular", "m": 97}, "count": 200})
    assert code == 0
    assert (doc["pass"], doc["fail"]) == (200, 0)


def test_roundtrip_single_form():
    doc, code = call("roundtrip", {"ring": QQ, "a": 2, "b": 1, "c": 0})
    assert code == 0 and doc["pass"] is True


def test_discriminant_example():
    doc, code = call("discriminant", {"n": 2})
    assert code == 0 and doc["discriminant"] == "S1^2-4*S2"


def test_dual_output_feeds_form_to_cover():
    dual, _ = call("dual", {"a": 1, "b": 0, "c": 1})
    assert (dual["a"], dual["b"], dual["c"]) == ("2", "0", "2")
    cover, code = call("form-to-cover", dual)
    assert code == 0 and cover["d"] == "-1"


def test_cover_output_feeds_cover_to_form():
    cover, _ = call("form-to-cover", {"ring": {"kind": "modular", "m": 97}, "a": 5, "b": 7, "c": 11})
    back, code = call("cover-to-form", {"ring": cover["ring"], "M": cover["action"]})
    assert code == 0
    assert (back["a"], back["b"], back["c"]) == ("5", "7", "11")
    assert back["d"] == cover["d"]


def test_split_ring_is_reusable():
    doc, code = call("split", {"ring": {"kind": "modular", "m": 5}, "d1": 3, "d2": 2, "t": 4})
    assert code == 0
    again, code = call("differentials", {"ring": doc["ring"], "d": "U"})
    assert code == 0


def test_proj_check_and_kernel():
    doc, code = call("proj-check", {"a": 1, "b": 0, "c": 0})
    assert code == 0 and doc["pass"] and doc["generator"] == ["0", "1"]
    doc, code = call("kernel-gen", {"a": 1, "b": 0, "c": 1})
    assert doc["kernel"] == ["-1", "0", "-1"]


def test_standard_and_pinch():
    F7 = {"kind": "modular", "m": 7}
    assert call("standard", {"ring": F7, "d": 2, "w": 3})[0]["u"] == "3"
    doc, code = call("standard", {"ring": F7, "d": 2, "w": 1})
    assert code == 2 and "error" in doc
    assert call("standard", {"ring": F7, "d": 3})[0]["standard"] is False
    assert call("standard", {"u": 3})[0]["embed_alpha"] == ["-3", "3"]
    assert call("pinch", {"d": 1, "t": 5})[0]["d"] == "25"


def test_differentials_mod_15():
    doc, code = call("differentials", {"ring": {"kind": "modular", "m": 15}, "d": 6})
    assert code == 0 and doc["annihilator"] == "6" and doc["etale"] is False


@pytest.mark.parametrize(
    "command,payload",
    [
        ("form-to-cover", {"a": 1}),
        ("form-to-cover", {"ring": {"kind": "modular", "m": 4}, "a": 1, "b": 0, "c": 0}),
        ("form-to-cover", {"a": "1 +", "b": 0, "c": 0}),
        ("discriminant", {"n": 1}),
        ("pinch", ["not", "an", "object"]),
    ],
)
def test_malformed_input_exit_1(command, payload):
    doc, code = call(command, payload)
    assert code == 1
    assert set(doc["error"]) == {"code", "message", "location"}


def test_domain_error_exit_2():
    doc, code = call("proj-check", {"ring": {"kind": "modular", "m": 15}, "a": 3, "b": 0, "c": 6})
    assert code == 2
    doc, code = call("pinch", {"ring": {"kind": "modular", "m": 15}, "d": 1, "t": 3})
    assert code == 2


def test_group_size_cap(monkeypatch):
    monkeypatch.setenv("QUADCOVER_MAX_N", "3")
    assert call("discriminant", {"n": 4})[1] == 2
    assert call("discriminant", {"n": 3})[1] == 0


def test_seed_reproducible():
    p = {"ring": QQ, "count": 5}
    assert call("roundtrip", p, seed=3) == call("roundtrip", p, seed=3)


def test_main_reads_and_writes_files(tmp_path, capsys):
    src = tmp_path / "in.json"
    out = tmp_path / "out.json"
    src.write_text(json.dumps({"n": 3}))
    assert main(["discriminant", "--input", str(src), "--output", str(out)]) == 0
    assert json.loads(out.read_text())["n"] == 3
    assert main(["discriminant", "--n", "2", "--format", "text"]) == 0
    assert "discriminant: S1^2-4*S2" in capsys.readouterr().out


def test_main_bad_json(monkeypatch, capsys):
    monkeypatch.setattr(sys, "stdin", io.StringIO("{oops"))
    assert main(["dual", "--input", "-"]) == 1
    assert json.loads(capsys.readouterr().out)["error"]["code"] == "malformed"


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "quadcover.cli", "form-to-cover", "--input", "-"],
        input=json.dumps({"a": 2, "b": 0, "c": 2}),
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["presentation"] == "T^2+4"


def test_verify_identities_command():
    doc, code = call("verify-identities", {})
    assert code == 0 and doc["fail"] == 0
