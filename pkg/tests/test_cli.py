import csv
import json
import re
import subprocess
import sys

import pytest

from nakayama321 import census, cli
from nakayama321.cli import KINDS, ObjectSpec, cmd_convert, load, main
from nakayama321.dyck import enumerate_dyck


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize(
    "src,dst,payload,expected",
    [
        ("dyck", "perm", "UUUDUUUDDDUDDDUD", "4 1 2 7 3 5 8 6"),
        ("perm", "kupisch", "1 2 3", "4,3,2,1"),
        ("kupisch", "dyck", "2,2,2,1", "UDUDUD"),
        ("perm", "dyck", "", ""),
    ],
)
def test_convert_examples(capsys, src, dst, payload, expected):
    code, out, _ = run(capsys, "convert", "--from", src, "--to", dst, payload)
    assert code == 0
    assert out == expected + "\n"


def test_convert_round_trips():
    for n in range(0, 11):
        for path in enumerate_dyck(n):
            triple = load(ObjectSpec("dyck", path.steps))
            for x in KINDS:
                text = triple.text(x)
                assert cmd_convert(ObjectSpec(x, text), x) == text
                for y in KINDS:
                    there = cmd_convert(ObjectSpec(x, text), y)
                    assert cmd_convert(ObjectSpec(y, there), x) == text


@pytest.mark.parametrize(
    "argv",
    [
        ("convert", "--from", "perm", "--to", "dyck", "3 2 1"),
        ("convert", "--from", "dyck", "--to", "perm", "UDDU"),
        ("convert", "--from", "kupisch", "--to", "dyck", "2,2,2"),
        ("convert", "--from", "nope", "--to", "dyck", "UD"),
        ("stats",),
        ("stats", "--dyck", "UD", "--perm", "1"),
        ("resolve", "--kupisch", "2,2,1", "--module", "M(0,3)"),
        ("census", "--n", "-1"),
        ("census", "--n", "2", "--checks", "theorem1,bogus"),
        (),
    ],
)
def test_usage_and_parse_errors_exit_1(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        sys.exit(main(list(argv)))
    assert exc.value.code == 1
    assert capsys.readouterr().err


def test_stats_examples(capsys):
    code, out, _ = run(capsys, "stats", "--perm", "4 1 2 7 3 5 8 6")
    rep = json.loads(out)
    assert code == 0
    assert (rep["fixed_points"], rep["support_size"], rep["dim_ext1_JJ"], rep["proj_id1"]) == (0, 7, 7, 0)
    assert rep["kupisch"] == [4, 6, 5, 4, 4, 3, 2, 2, 1]
    assert rep["d"] == [1, 2, 3, 4, 4, 5, 6, 4, 2]
    assert rep["gldim"] == 4
    assert rep["formulas"] == {
        "P": 0, "PP": 2, "corollaryP": 0, "corollaryPP": 2, "theoremP": 0, "theoremPP": 1,
    }

    rep = json.loads(run(capsys, "stats", "--kupisch", "4,3,2,1")[1])
    assert rep["dim_ext1_JJ"] == 0 and rep["gldim"] == 1
    assert rep["formulas"]["theoremPP"] is None

    rep = json.loads(run(capsys, "stats", "--dyck", "UDUDUD")[1])
    assert rep["dim_ext1_JJ"] == 2 and rep["fixed_points"] == 0


def test_stats_consistency_failure_exits_2(capsys, monkeypatch):
    monkeypatch.setattr(cli, "support_size", lambda p: -1)
    code, out, err = run(capsys, "stats", "--dyck", "UDUD")
    assert code == 2
    assert "violate" in err


def test_stats_consistent_everywhere():
    for n in range(0, 7):
        for path in enumerate_dyck(n):
            assert cli.stats_consistent(cli.cmd_stats(ObjectSpec("dyck", path.steps)))


def test_resolve_examples(capsys):
    code, out, _ = run(
        capsys, "resolve", "--kupisch", "4,6,5,4,4,3,2,2,1", "--module", "M(1,3)", "--direction", "injective"
    )
    assert code == 0
    assert out.splitlines() == ["0 -> M(1,3) -> M(0,4) -> M(0,1) -> 0", "id=1"]

    code, out, _ = run(capsys, "resolve", "--kupisch", "2,2,2,1", "--module", "M(0,1)", "--direction", "injective")
    assert out.splitlines()[-1] == "id=0"

    res = json.loads(run(capsys, "resolve", "--kupisch", "2,2,2,1", "--module", "M(1,2)", "--json")[1])
    assert res["terms"] == ["M(1,2)"] and res["pd"] == 0

    res = json.loads(run(capsys, "resolve", "--kupisch", "2,2,2,1", "--module", "M(0,1)", "--json")[1])
    assert res["pd"] == 3
    assert res["chain"] == "0 -> M(3,1) -> M(2,2) -> M(1,2) -> M(0,2) -> M(0,1) -> 0"


def test_resolve_every_projective_has_pd_zero(capsys):
    c = "4,6,5,4,4,3,2,2,1"
    for i, ci in enumerate(map(int, c.split(","))):
        res = json.loads(run(capsys, "resolve", "--kupisch", c, "--module", f"M({i},{ci})", "--json")[1])
        assert res["pd"] == 0 and res["terms"] == [f"M({i},{ci})"]


def test_census_examples(capsys):
    code, out, _ = run(capsys, "census", "--n", "3")
    rep = json.loads(out)
    assert code == 0 and rep["passed"]
    assert rep["distribution"] == {"0": 1, "1": 2, "2": 2}

    code, out, _ = run(capsys, "census", "--n", "0")
    rep = json.loads(out)
    assert code == 0 and rep["total"] == 1


def test_census_csv_and_files(capsys, tmp_path):
    table, report = tmp_path / "c.csv", tmp_path / "r.json"
    code, out, _ = run(
        capsys, "census", "--n", "4", "--format", "csv", "--output", str(table), "--report", str(report)
    )
    assert code == 0 and out == ""
    rows = list(csv.reader(table.open(encoding="utf-8")))
    assert rows[0] == "path,kupisch,perm,fixed_points,support,proj_id1,dim_ext1_jj".split(",")
    assert len(rows) == 1 + 14
    assert json.loads(report.read_text(encoding="utf-8"))["total"] == 14


def test_census_failure_exits_2(capsys, monkeypatch):
    monkeypatch.setattr(census, "support_size", lambda p: 0)
    code, out, err = run(capsys, "census", "--n", "3", "--checks", "theorem2")
    assert code == 2
    assert json.loads(out)["checks"]["theorem2"]["status"] == "fail"
    assert "theorem2" in err


def test_render_ascii(capsys):
    code, out, _ = run(capsys, "render", "--dyck", "UUDD", "--format", "ascii")
    assert code == 0
    assert out.splitlines()[:3] == [" /\\", "/  \\", "____"]
    assert "peaks (x@level): 2@3" in out


def test_render_svg_valleys(capsys, tmp_path):
    target = tmp_path / "p.svg"
    code, _, _ = run(capsys, "render", "--perm", "4 1 2 7 3 5 8 6", "--format", "svg", "--output", str(target))
    assert code == 0
    svg = target.read_text(encoding="utf-8")
    assert svg.startswith("<svg") and svg.rstrip().endswith("</svg>")
    valleys = re.findall(r'<circle class="valley" cx="(\d+)" cy="(\d+)"', svg)
    # unit 30, margin 30, height 6 levels: level L sits at y = 30 + (7 - L) * 30
    levels = [7 - (int(cy) - 30) // 30 for _, cy in valleys]
    assert levels == [3, 3, 1]


def test_render_homology(capsys):
    _, out, _ = run(capsys, "render", "--kupisch", "2,2,2,1", "--homology")
    assert out.splitlines()[0] == "/\\/\\/\\"
    assert "R marks (2): 0@1 6@1" in out
    _, svg, _ = run(capsys, "render", "--kupisch", "2,2,2,1", "--homology", "--format", "svg")
    assert svg.count('class="mark-R"') == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "nakayama321", "convert", "--from", "kupisch", "--to", "perm", "3,2,1"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "1 2"
