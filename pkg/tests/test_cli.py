import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from gaussqc.cli import main
from gaussqc.documents import dump_document

SPECS = Path(__file__).resolve().parent.parent / "demos" / "specs"

C1_SPEC = {"pi": [4, 1], "p": 17, "n": 8, "modulus": "+1", "generator_poly": "1+2i, -1+1i, -1i, 1"}
C2_SPEC = {"pi": [4, 1], "p": 17, "n": 8, "modulus": "+1",
           "generator_poly": [[1, -1], [2, -1], [-1, 1], [0, -1], [0, -1], [1, 0]]}
P5 = {"pi": [2, 1], "n": 4, "modulus": "-1"}


def run(argv):
    out = io.StringIO()
    status = main(argv, out=out)
    return status, out.getvalue()


def write(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(json.dumps(doc) if not isinstance(doc, str) else doc)
    return str(path)


def test_field_lists_residues():
    status, out = run(["field", "--spec", str(SPECS / "field_4+i.json"), "--format", "structured"])
    doc = json.loads(out)
    assert status == 0 and doc["p"] == 17
    assert sorted(doc["residues"]) == sorted(
        ["0", "1", "-1", "1i", "-1i", "2", "-2", "2i", "-2i", "1+1i", "-1-1i", "1-1i", "-1+1i",
         "2-1i", "-2+1i", "1+2i", "-1-2i"]
    )
    assert (doc["alpha1"], doc["alpha2"]) == ("-1-1i", "2-1i")


def test_code_length2():
    status, out = run(["code", "--spec", str(SPECS / "code_length2.json"), "--format", "structured"])
    doc = json.loads(out)
    assert (doc["n"], doc["k"], doc["d_M"], doc["d_H"]) == (2, 1, 3, 2)
    assert doc["dual"]["k"] == 1


def test_css_8_2_5_text():
    status, out = run(["css", "--spec", str(SPECS / "css_8_2_5.json")])
    assert status == 0
    assert "mannheim_params: [[8,2,5]]_4+1i" in out
    assert "counts.mannheim.count: 480" in out
    assert "counts.hamming.count: 128" in out
    assert "singleton.attains: True" in out


@pytest.mark.parametrize("command, spec", [("field", "field_4+i.json"), ("code", "code_length2.json"),
                                           ("css", "css_8_2_5.json")])
def test_structured_round_trip(command, spec):
    _, out = run([command, "--spec", str(SPECS / spec), "--format", "structured"])
    assert dump_document(json.loads(out)) == out


def test_worker_count_does_not_change_report():
    spec = str(SPECS / "css_8_2_5.json")
    _, one = run(["css", "--spec", spec, "--format", "structured", "--workers", "1"])
    _, two = run(["css", "--spec", spec, "--format", "structured", "--workers", "2"])
    assert one == two


def test_simulate_8_2_5_syndrome_only():
    status, out = run(["simulate", "--spec", str(SPECS / "run_8_2_5.json"), "--format", "structured"])
    doc = json.loads(out)
    assert status == 0 and doc["corrected"]
    assert doc["recovered_e1"] == ["0", "0", "0", "1", "1", "0", "0", "0"]
    assert (doc["t1"], doc["t2"]) == (2, 2)


def test_simulate_zero_error_full(tmp_path):
    c1 = dict(P5, generator_matrix=[[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    del c1["modulus"]
    c2 = dict(P5, generator_poly="-1, 1")
    spec = {"css": {"c1": c1, "c2": c2}, "x": ["1", "0", "0", "0"], "e1": ["0"] * 4, "e2": ["0"] * 4}
    status, out = run(["simulate", "--spec", write(tmp_path, "run.json", spec), "--format", "structured"])
    doc = json.loads(out)
    assert status == 0 and doc["fidelity"] == 1.0 and doc["mode"] == "full"


def test_simulate_weight3_error_fails(tmp_path):
    spec = json.loads((SPECS / "run_8_2_5.json").read_text())
    spec["e1"] = ["0", "1", "0", "1", "1", "0", "0", "0"]
    status, out = run(["simulate", "--spec", write(tmp_path, "run.json", spec), "--format", "structured"])
    doc = json.loads(out)
    assert status != 0 and doc["corrected"] is False and doc["within_capacity"] is False


def test_simulate_full_mode_beyond_cap(tmp_path, capsys):
    spec = json.loads((SPECS / "run_8_2_5.json").read_text())
    spec["mode"] = "full"
    status, _ = run(["simulate", "--spec", write(tmp_path, "run.json", spec)])
    err = capsys.readouterr().err
    assert status == 2 and "syndrome-only" in err


def test_parse_error_reports_position(tmp_path, capsys):
    status, _ = run(["field", "--spec", write(tmp_path, "bad.json", '{"pi": [4, 1],\n "p": }')])
    err = capsys.readouterr().err
    assert status == 2 and "line 2" in err


def test_parse_error_reports_field(tmp_path, capsys):
    spec = {"c1": dict(C1_SPEC, generator_poly="1+2i, x, 1"), "c2": C2_SPEC}
    status, _ = run(["css", "--spec", write(tmp_path, "css.json", spec)])
    err = capsys.readouterr().err
    assert status == 2 and "c1.generator_poly[1]" in err


def test_wrong_p_is_reported(tmp_path, capsys):
    status, _ = run(["field", "--spec", write(tmp_path, "f.json", {"pi": [4, 1], "p": 13})])
    assert status == 2 and "spec.p" in capsys.readouterr().err


def test_domain_error_exit(tmp_path, capsys):
    spec = {"c1": C2_SPEC, "c2": C1_SPEC}
    status, _ = run(["css", "--spec", write(tmp_path, "css.json", spec)])
    assert status == 3 and "NotNested" in capsys.readouterr().err


def test_cap_must_be_positive():
    with pytest.raises(SystemExit):
        run(["field", "--spec", "x.json", "--cap", "0"])


def test_table_text_and_structured():
    status, out = run(["table", "--interpretation", "a"])
    assert status == 0
    assert sum(line.startswith("row ") for line in out.splitlines()) == 10
    status, out = run(["table", "--interpretation", "a", "--format", "structured"])
    doc = json.loads(out)
    assert len(doc["rows"]) == 10 and doc["interpretations"] == ["a"]
    assert dump_document(doc) == out


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "gaussqc", "field", "--spec", str(SPECS / "field_4+i.json")],
        capture_output=True, text=True, check=True,
    )
    assert "p: 17" in proc.stdout
