"""Command line behaviour: exit codes, byte stability, the serve loop."""

from __future__ import annotations

import http.client
import json
import re
import subprocess
import sys
import time

from vmlab.cli import main
from vmlab.documents import catalog_doc, dump_bytes, template_bytes
from vmlab.model import InstrumentKind


def test_selftest_passes_quickly_in_a_fresh_process():
    started = time.perf_counter()
    proc = subprocess.run(
        [sys.executable, "-m", "vmlab.cli", "selftest"],
        capture_output=True,
        text=True,
        timeout=10,
    )
    elapsed = time.perf_counter() - started
    assert proc.returncode == 0
    assert proc.stdout == "roundtrip 6804/6804 ok, coincidence 3302/3302 ok\n"
    assert elapsed < 1.0


def test_gen_writes_the_expected_sheet(tmp_path, capsys):
    out = tmp_path / "sheet.csv"
    assert main(["gen", "--instrument", "caliper", "--count", "3",
                 "--seed", "7", "--out", str(out)]) == 0
    assert out.read_text(encoding="utf-8") == (
        "kind,target_ticks,display_answer\n"
        "caliper,988,98.8\n"
        "caliper,805,80.5\n"
        "caliper,847,84.7\n"
    )
    # Stdout output carries the same bytes.
    assert main(["gen", "--instrument", "caliper", "--count", "3",
                 "--seed", "7"]) == 0
    assert capsys.readouterr().out == out.read_text(encoding="utf-8")


def test_gen_is_byte_reproducible_per_seed(tmp_path):
    a = tmp_path / "a.csv"
    b = tmp_path / "b.csv"
    c = tmp_path / "c.csv"
    for out in (a, b):
        assert main(["gen", "--instrument", "dial", "--count", "40",
                     "--seed", "2026", "--out", str(out)]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert main(["gen", "--instrument", "dial", "--count", "40",
                 "--seed", "2027", "--out", str(c)]) == 0
    assert a.read_bytes() != c.read_bytes()


def test_gen_rejects_a_bad_count(tmp_path, capsys):
    assert main(["gen", "--instrument", "caliper", "--count", "0",
                 "--seed", "1", "--out", str(tmp_path / "x.csv")]) == 2
    assert "--count" in capsys.readouterr().err


def test_gen_renders_figures_alongside_the_sheet(tmp_path):
    out = tmp_path / "sheet.csv"
    figures = tmp_path / "figs"
    assert main(["gen", "--instrument", "protractor", "--count", "2",
                 "--seed", "5", "--out", str(out),
                 "--figures-dir", str(figures)]) == 0
    files = sorted(p.name for p in figures.iterdir())
    assert files == ["protractor-000.png", "protractor-001.png"]
    for name in files:
        assert (figures / name).read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_grade_all_correct_exits_zero(tmp_path, capsys):
    sheet = tmp_path / "sheet.csv"
    assert main(["gen", "--instrument", "micrometer", "--count", "4",
                 "--seed", "11", "--out", str(sheet)]) == 0
    answers = tmp_path / "answers.csv"
    lines = sheet.read_text(encoding="utf-8").splitlines()
    rows = ["kind,target_ticks,answer"]
    for line in lines[1:]:
        kind, ticks, display = line.split(",")
        rows.append(f"{kind},{ticks},{display}")
    answers.write_text("\n".join(rows) + "\n", encoding="utf-8")
    assert main(["grade", "--answers", str(answers)]) == 0
    out = capsys.readouterr().out
    assert out.count("row ") == 4
    assert "Well done" in out
    assert out.endswith("4/4 correct\n")


def test_grade_reports_wrong_and_malformed_rows(tmp_path, capsys):
    answers = tmp_path / "answers.csv"
    answers.write_text(
        "kind,target_ticks,answer\n"
        "caliper,123,12.3\n"
        "caliper,123,12.4\n"
        "caliper,123,twelve\n",
        encoding="utf-8",
    )
    assert main(["grade", "--answers", str(answers)]) == 1
    out = capsys.readouterr().out
    assert "row 2: Well done\n" in out
    assert "row 3: Sorry, wrong answer!\n" in out
    assert "row 4: malformed answer" in out
    assert out.endswith("1/3 correct\n")


def test_grade_tolerance_flag_loosens_the_match(tmp_path, capsys):
    answers = tmp_path / "answers.csv"
    answers.write_text(
        "kind,target_ticks,answer\ncaliper,123,12.4\n", encoding="utf-8"
    )
    assert main(["grade", "--answers", str(answers),
                 "--tolerance-ticks", "1"]) == 0
    assert capsys.readouterr().out.endswith("1/1 correct\n")


def test_grade_structural_errors_exit_two(tmp_path, capsys):
    bad_header = tmp_path / "h.csv"
    bad_header.write_text("kind,oops\n", encoding="utf-8")
    assert main(["grade", "--answers", str(bad_header)]) == 2
    assert "row 1" in capsys.readouterr().err

    bad_kind = tmp_path / "k.csv"
    bad_kind.write_text("kind,target_ticks,answer\nharp,12,1.0\n", encoding="utf-8")
    assert main(["grade", "--answers", str(bad_kind)]) == 2
    assert "row 2, column 1" in capsys.readouterr().err

    bad_ticks = tmp_path / "t.csv"
    bad_ticks.write_text("kind,target_ticks,answer\ncaliper,abc,1.0\n", encoding="utf-8")
    assert main(["grade", "--answers", str(bad_ticks)]) == 2
    assert "row 2, column 2" in capsys.readouterr().err

    out_of_range = tmp_path / "r.csv"
    out_of_range.write_text("kind,target_ticks,answer\ncaliper,9999,1.0\n", encoding="utf-8")
    assert main(["grade", "--answers", str(out_of_range)]) == 2
    assert "row 2, column 2" in capsys.readouterr().err

    short_row = tmp_path / "s.csv"
    short_row.write_text("kind,target_ticks,answer\ncaliper,12\n", encoding="utf-8")
    assert main(["grade", "--answers", str(short_row)]) == 2
    assert "expected 3 columns" in capsys.readouterr().err

    assert main(["grade", "--answers", str(tmp_path / "missing.csv")]) == 2
    assert "cannot read" in capsys.readouterr().err


def test_render_geometry_document(tmp_path, capsys):
    assert main(["render", "--instrument", "caliper", "--ticks", "123"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["kind"] == "caliper"
    assert doc["ticks"] == 123
    assert doc["template"]["layout"] == "linear"
    assert doc["transform"] == {"kind": "translation", "unit": "mm",
                                "amount": {"num": 123, "den": 10}}
    assert "reading_text" not in doc

    assert main(["render", "--instrument", "caliper", "--ticks", "123",
                 "--show-reading"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["reading_text"] == "main 12 mm + vernier 3 × 0.1 mm = 12.3 mm"


def test_render_is_byte_stable(tmp_path):
    for fmt in ("geometry", "svg"):
        a = tmp_path / f"a.{fmt}"
        b = tmp_path / f"b.{fmt}"
        for out in (a, b):
            assert main(["render", "--instrument", "dial", "--ticks", "935",
                         "--format", fmt, "--out", str(out)]) == 0
        assert a.read_bytes() == b.read_bytes()
    svg = (tmp_path / "a.svg").read_text(encoding="utf-8")
    assert svg.startswith("<svg ")
    assert re.search(r"\d{4}-\d{2}-\d{2}", svg) is None  # no dates baked in


def test_render_rejects_out_of_range_ticks(capsys):
    assert main(["render", "--instrument", "protractor", "--ticks", "1801"]) == 2
    assert "outside [0, 1800]" in capsys.readouterr().err


def test_svg_marks_the_coincident_line_only_when_asked(capsys):
    # The stylesheet always defines the class; only --show-reading applies it.
    applied = re.compile(r'class="[^"]*\bcoincide"')
    assert main(["render", "--instrument", "caliper", "--ticks", "123",
                 "--format", "svg"]) == 0
    plain = capsys.readouterr().out
    assert applied.search(plain) is None
    assert main(["render", "--instrument", "caliper", "--ticks", "123",
                 "--format", "svg", "--show-reading"]) == 0
    shown = capsys.readouterr().out
    assert applied.search(shown) is not None


def test_export_writes_a_complete_offline_bundle(tmp_path, capsys):
    out = tmp_path / "bundle"
    assert main(["export", "--out", str(out)]) == 0
    capsys.readouterr()
    expected = {
        "index.html",
        "safety.html",
        "lab/caliper.html",
        "lab/micrometer.html",
        "lab/dial.html",
        "lab/protractor.html",
        "static/app.css",
        "static/app.js",
        "api/instruments.json",
        "api/templates/caliper.json",
        "api/templates/micrometer.json",
        "api/templates/dial.json",
        "api/templates/protractor.json",
    }
    found = {str(p.relative_to(out)) for p in out.rglob("*") if p.is_file()}
    assert found == expected
    assert (out / "api" / "instruments.json").read_bytes() == dump_bytes(catalog_doc())
    assert (out / "api" / "templates" / "dial.json").read_bytes() == template_bytes(
        InstrumentKind.DIAL_INDICATOR
    )
    lab = (out / "lab" / "caliper.html").read_text(encoding="utf-8")
    assert '"offline": true' in lab
    assert "../api/templates/caliper.json" in lab
    assert "../static/app.js" in lab

    # A second export produces the same bytes everywhere.
    again = tmp_path / "bundle2"
    assert main(["export", "--out", str(again)]) == 0
    capsys.readouterr()
    for name in expected:
        assert (out / name).read_bytes() == (again / name).read_bytes()


def test_serve_answers_requests_over_a_real_socket(tmp_path):
    proc = subprocess.Popen(
        [sys.executable, "-m", "vmlab.cli", "serve", "--port", "0",
         "--data-dir", str(tmp_path / "data"), "--seed", "7"],
        stdout=subprocess.PIPE,
        stderr=subprocess.STDOUT,
        text=True,
    )
    try:
        line = proc.stdout.readline()
        match = re.search(r"http://127\.0\.0\.1:(\d+)", line)
        assert match is not None, line
        port = int(match.group(1))
        deadline = time.time() + 10
        catalog = None
        while time.time() < deadline:
            try:
                conn = http.client.HTTPConnection("127.0.0.1", port, timeout=2)
                conn.request("GET", "/api/v1/instruments")
                catalog = json.loads(conn.getresponse().read())
                break
            except OSError:
                time.sleep(0.1)
        assert catalog is not None
        assert [entry["kind"] for entry in catalog] == [
            "caliper", "micrometer", "dial", "protractor"
        ]

        conn = http.client.HTTPConnection("127.0.0.1", port, timeout=5)
        conn.request("POST", "/api/v1/sessions")
        session = json.loads(conn.getresponse().read())["session_id"]
        body = json.dumps({"kind": "caliper"})
        conn.request(
            "POST", f"/api/v1/sessions/{session}/exercises", body=body,
            headers={"Content-Type": "application/json"},
        )
        issued = json.loads(conn.getresponse().read())
        # Seed 7, first draw: 988 ticks.
        assert issued["transform"]["amount"] == {"num": 494, "den": 5}
        conn.request(
            "POST",
            f"/api/v1/sessions/{session}/exercises/{issued['exercise_id']}/answer",
            body=json.dumps({"text": "98.8"}),
            headers={"Content-Type": "application/json"},
        )
        graded = json.loads(conn.getresponse().read())
        assert graded == {"verdict": "correct", "message": "Well done"}
    finally:
        proc.terminate()
        proc.wait(timeout=10)


def test_unknown_subcommand_exits_two(capsys):
    try:
        main(["frobnicate"])
    except SystemExit as exc:
        assert exc.code == 2
    else:
        raise AssertionError("argparse should reject unknown subcommands")
    assert "invalid choice" in capsys.readouterr().err
