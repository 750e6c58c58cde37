"""Command line surface, driven through main() with explicit argv."""

import subprocess
import sys

import pytest

from tuttekit.cli import main
from tuttekit.rational import Rat, parse_rational

TRIANGLE = "graph 3\ne 0 0 1 1/1\ne 1 1 2 1/1\ne 2 2 0 1/1\n"
THETA = "graph 2\ne 0 0 1 1/1\ne 1 0 1 1/1\ne 2 0 1 1/1\n"
K4 = (
    "graph 4\n"
    "e 0 0 1 1/1\ne 1 0 2 1/1\ne 2 0 3 1/1\n"
    "e 3 1 2 1/1\ne 4 1 3 1/1\ne 5 2 3 1/1\n"
)
PATH3 = "graph 3\ne 0 0 1 1/1\ne 1 1 2 1/1\n"

# decisive tolerances for the theta reduction
EPS = "1/1099511627776"
DELTA = f"1/{2 ** 560}"


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text, encoding="utf-8")
    return str(p)


def lines_of(capsys):
    return capsys.readouterr().out.splitlines()


def test_eval_partition_function(tmp_path, capsys):
    g = write(tmp_path, "tri.graph", TRIANGLE)
    assert main(["eval", g, "--q", "2"]) == 0
    assert lines_of(capsys) == ["28/1"]


def test_eval_tutte_point(tmp_path, capsys):
    g = write(tmp_path, "tri.graph", TRIANGLE)
    assert main(["eval", g, "--x", "2", "--y", "2"]) == 0
    assert lines_of(capsys) == ["8/1"]


def test_eval_weight_overrides(tmp_path, capsys):
    g = write(tmp_path, "tri.graph", TRIANGLE)
    assert main(["eval", g, "--q", "3", "--weights", "-1"]) == 0
    assert lines_of(capsys) == ["6/1"]  # proper 3-colourings
    assert main(["eval", g, "--q", "2", "--weights", "1", "2", "3"]) == 0
    assert lines_of(capsys) == ["66/1"]
    assert main(["eval", g, "--q", "2", "--weights", "1", "2"]) == 2


def test_eval_mode_errors(tmp_path, capsys):
    g = write(tmp_path, "tri.graph", TRIANGLE)
    assert main(["eval", g]) == 2
    assert main(["eval", g, "--q", "2", "--x", "2", "--y", "2"]) == 2
    assert main(["eval", g, "--x", "2"]) == 2
    assert main(["eval", str(tmp_path / "missing.graph"), "--q", "2"]) == 2


def cert_fields(out_lines):
    fields = {}
    for line in out_lines:
        key, _, rest = line.partition(" ")
        fields.setdefault(key, rest)
    return fields


def test_gadget_walk(capsys):
    rc = main(
        [
            "gadget", "--q", "6", "--target", "5", "--tol", "1/100",
            "--base", "y1=2", "--base", "y3=-2",
        ]
    )
    assert rc == 0
    out = lines_of(capsys)
    fields = cert_fields(out)
    y = parse_rational(fields["effective-y"])
    assert Rat(5) - Rat(1, 100) <= y <= Rat(5)
    assert fields["terminals"] == "0 1"
    n_edges = int(fields["edges"])
    assert sum(1 for line in out if line.startswith("e ")) == n_edges


def test_gadget_negative_target(capsys):
    rc = main(
        [
            "gadget", "--q", "6", "--target", "-5", "--tol", "1/100",
            "--base", "y1=2", "--base", "y3=-2",
        ]
    )
    assert rc == 0
    y = parse_rational(cert_fields(lines_of(capsys))["effective-y"])
    assert Rat(-5) <= y <= Rat(-5) + Rat(1, 100)


def test_gadget_unreachable_target(capsys):
    rc = main(
        [
            "gadget", "--q", "6", "--target", "-3/2", "--tol", "1/100",
            "--base", "y1=2", "--base", "y3=-2",
        ]
    )
    assert rc == 2
    assert "unreachable" in capsys.readouterr().err


def test_gadget_bad_base(capsys):
    args = ["gadget", "--q", "6", "--target", "5", "--tol", "1/100"]
    assert main(args + ["--base", "y9=2"]) == 2
    assert main(args + ["--base", "nokey"]) == 2


def test_reduce_mis_theta(tmp_path, capsys):
    g = write(tmp_path, "theta.graph", THETA)
    prefix = str(tmp_path / "inst")
    rc = main(
        [
            "reduce", "mis", g, "--K", "1",
            "--relaxed-eps", EPS, "--relaxed-delta", DELTA,
            "--out", prefix,
        ]
    )
    assert rc == 0
    assert lines_of(capsys)[-1] == "MIS >= 1: YES"
    cert = dict(
        line.split(" ", 1)
        for line in (tmp_path / "inst.cert").read_text().splitlines()
    )
    assert cert["verdict"] == "YES"
    assert cert["q"] == "6/1"
    assert cert["K-stretched"] == "4"
    assert cert["relaxed"] == "true"
    lo = parse_rational(cert["interval-lo"])
    hi = parse_rational(cert["interval-hi"])
    psi = parse_rational(cert["psi"])
    assert lo >= 3 * psi / 4  # the YES side of the gap
    assert hi - lo == 2 * parse_rational(cert["slack"])
    instance = (tmp_path / "inst.graph").read_text()
    assert instance.startswith("graph ")


def test_reduce_mis_refuses_oversized(tmp_path, capsys):
    g = write(tmp_path, "p3.graph", PATH3)
    rc = main(
        [
            "reduce", "mis", g, "--K", "1",
            "--relaxed-eps", "1/1024", "--relaxed-delta", "1/1073741824",
        ]
    )
    assert rc == 2
    assert "gadget sites" in capsys.readouterr().err


def test_reduce_colouring(tmp_path, capsys):
    g = write(tmp_path, "tri.graph", TRIANGLE)
    prefix = str(tmp_path / "col")
    rc = main(
        ["reduce", "colouring", g, "--x", "-5", "--y", "1/2", "--out", prefix]
    )
    assert rc == 0
    assert lines_of(capsys)[-1] == "3-colourable"
    cert = dict(
        line.split(" ", 1)
        for line in (tmp_path / "col.cert").read_text().splitlines()
    )
    assert cert["k"] == "8"
    assert cert["verdict"] == "3-colourable"

    g4 = write(tmp_path, "k4.graph", K4)
    rc = main(
        [
            "reduce", "colouring", g4, "--x", "-5", "--y", "1/2",
            "--out", str(tmp_path / "col4"),
        ]
    )
    assert rc == 0
    assert lines_of(capsys)[-1] == "not-3-colourable"
    cert4 = dict(
        line.split(" ", 1)
        for line in (tmp_path / "col4.cert").read_text().splitlines()
    )
    assert cert4["threshold"] == "81/1024"


def test_classify_record_line(capsys):
    assert main(["classify", "--x", "-2", "--y", "-2"]) == 0
    out = lines_of(capsys)
    assert len(out) == 1
    cols = out[0].split("\t")
    assert cols[:5] == ["-2/1", "-2/1", "9/1", "#P-hard", "no-FPRAS(negQ-q>5)"]


def test_classify_certificate_block(capsys):
    assert main(["classify", "--x", "-2", "--y", "-2", "--certificate"]) == 0
    out = lines_of(capsys)
    assert "certificate region negQ-q>5" in out
    assert sum(1 for line in out if line.startswith("shift ")) == 3

    assert main(["classify", "--x", "-5", "--y", "1/2", "--certificate"]) == 0
    assert "no shift certificate" in lines_of(capsys)


def test_map_writes_tsv(tmp_path, capsys):
    out = tmp_path / "records.tsv"
    rc = main(
        [
            "map", "--xmin", "-1", "--xmax", "1", "--ymin", "-1",
            "--ymax", "1", "--step", "1", "--out", str(out),
        ]
    )
    assert rc == 0
    assert lines_of(capsys)[-1] == "9 records"
    body = out.read_text(encoding="utf-8")
    assert len(body.splitlines()) == 9
    assert body.splitlines()[0].startswith("-1/1\t-1/1\t4/1\tFP-easy")


def test_verify_single_suite(capsys):
    assert main(["verify", "tutte"]) == 0
    assert lines_of(capsys) == ["tutte: ok (47 checks)"]


def test_verify_unknown_suite():
    with pytest.raises(SystemExit):
        main(["verify", "bogus"])


def test_module_entry_point(tmp_path):
    g = write(tmp_path, "tri.graph", TRIANGLE)
    proc = subprocess.run(
        [sys.executable, "-m", "tuttekit", "eval", g, "--q", "2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "28/1"
