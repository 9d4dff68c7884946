import pytest

from dpcolor import (Multigraph, build_bad_complete, format_cover,
                     format_multigraph, parse_cover, solve)
from dpcolor.cli import main


def write(path, text):
    path.write_text(text)
    return str(path)


@pytest.fixture
def k3_file(tmp_path):
    return write(tmp_path / "k3.graph", format_multigraph(Multigraph.complete(3)))


def test_validate_good_cover(tmp_path, capsys):
    cover = build_bad_complete(3, 2)
    cov = write(tmp_path / "c.cover", format_cover(cover))
    gra = write(tmp_path / "g.graph", format_multigraph(cover.base))
    assert main(["validate", cov, "--graph", gra]) == 0
    assert "valid" in capsys.readouterr().out


def test_validate_violation_exit_1(tmp_path, capsys):
    gra = write(tmp_path / "g.graph", "2\n1 2 1\n")
    cov = write(tmp_path / "c.cover", "2\n1 2\n1 1 2 1\n1 1 2 2\n")
    assert main(["validate", cov, "--graph", gra]) == 1
    out = capsys.readouterr().out
    assert out.count("bipartite degree") >= 1


def test_validate_strict_rejects(tmp_path, capsys):
    gra = write(tmp_path / "g.graph", "2\n1 2 1\n")
    cov = write(tmp_path / "c.cover", "2\n1 2\n1 1 2 1\n1 1 2 2\n")
    assert main(["--strict", "validate", cov, "--graph", gra]) == 2


def test_validate_parse_error_exit_2(tmp_path, capsys):
    cov = write(tmp_path / "c.cover", "")
    assert main(["validate", cov]) == 2
    assert "parse error" in capsys.readouterr().err


def test_solve_round_trip(tmp_path, capsys):
    cover = build_bad_complete(3, 1)
    gra = write(tmp_path / "g.graph", format_multigraph(cover.base))
    cov = write(tmp_path / "c.cover", format_cover(cover))
    assert main(["solve", gra, cov]) == 1
    assert "UNCOLORABLE" in capsys.readouterr().out


def test_chi_dp_cycle(tmp_path, capsys):
    gra = write(tmp_path / "c5.graph", format_multigraph(Multigraph.cycle(5)))
    assert main(["chi-dp", gra]) == 0
    assert capsys.readouterr().out.strip() == "3"


def test_degree_colorable_witness_pipeline(tmp_path, capsys):
    bowtie = Multigraph.from_edges(
        5, [(1, 2), (1, 3), (2, 3), (1, 4), (1, 5), (4, 5)])
    gra = write(tmp_path / "bow.graph", format_multigraph(bowtie))
    wit = str(tmp_path / "bow.cover")
    assert main(["degree-colorable", gra, "--witness", wit]) == 1
    assert "NOT-DEGREE-COLORABLE" in capsys.readouterr().out
    # witness round-trips through validate and solve
    assert main(["validate", wit, "--graph", gra]) == 0
    capsys.readouterr()
    assert main(["solve", gra, wit]) == 1
    assert "UNCOLORABLE" in capsys.readouterr().out
    # and the exhaustive oracle agrees
    assert main(["degree-colorable", gra, "--oracle"]) == 1


def test_degree_colorable_positive(tmp_path, capsys):
    diamond = Multigraph.from_edges(4, [(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)])
    gra = write(tmp_path / "d.graph", format_multigraph(diamond))
    assert main(["degree-colorable", gra]) == 0
    assert "DEGREE-COLORABLE" in capsys.readouterr().out


def test_check_critical(tmp_path, capsys):
    gra = write(tmp_path / "k4.graph", format_multigraph(Multigraph.complete(4)))
    assert main(["check-critical", gra, "--k", "4"]) == 0
    out = capsys.readouterr().out
    assert "CRITICAL" in out and "chi_dp = 4" in out
    assert main(["check-critical", gra, "--k", "3"]) == 1


def test_reduce_then_solve(tmp_path, capsys, k3_file):
    c4 = Multigraph.cycle(4)
    gra = write(tmp_path / "c4.graph", format_multigraph(c4))
    lists = write(tmp_path / "c4.lists", "1 1 2\n2 1 2\n3 1 2\n4 1 2\n")
    out_cover = str(tmp_path / "c4.cover")
    assert main(["reduce", gra, lists, "-o", out_cover]) == 0
    assert main(["solve", gra, out_cover]) == 0
    assert "COLORABLE" in capsys.readouterr().out


def test_reduce_stdout_parses_back(tmp_path, capsys, k3_file):
    lists = write(tmp_path / "k3.lists", "1 a b\n2 a b\n3 a b\n")
    assert main(["reduce", k3_file, lists]) == 0
    text = capsys.readouterr().out
    cover = parse_cover(text, base=Multigraph.complete(3))
    assert not solve(cover).colorable  # triangle is not 2-choosable


def test_reduce_bad_lists(tmp_path, k3_file):
    lists = write(tmp_path / "bad.lists", "1 a a\n2 a\n3 a\n")
    assert main(["reduce", k3_file, lists]) == 2


def test_census_lines(capsys):
    assert main(["--format", "lines", "census", "--max-n", "3", "--max-mult", "1"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 4  # K1, K2, P3, K3
    for line in lines:
        parts = line.split()
        assert len(parts) == 6
    # K1 line: chi 1, degree-uncolorable
    assert lines[0] == "g0 1 0 1 0/1 not-degree-colorable"
    # K3 line: chi 3, slack 2*3-2*3=0
    assert lines[3].endswith("not-degree-colorable")


def test_census_text_header(capsys):
    assert main(["census", "--max-n", "2", "--max-mult", "2"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("# id n 2E chi_dp slack verdict")


def test_missing_file_is_parse_error(capsys):
    assert main(["chi-dp", "/nonexistent/file.graph"]) == 2


def test_node_budget_flag(tmp_path, capsys):
    gra = write(tmp_path / "k33.graph",
                format_multigraph(Multigraph.complete(4, 2)))
    assert main(["--node-budget", "1", "chi-dp", gra]) == 3
    assert "resource cap" in capsys.readouterr().err


def test_env_override(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("DPCOLOR_NODE_BUDGET", "1")
    gra = write(tmp_path / "k4.graph", format_multigraph(Multigraph.complete(4, 2)))
    assert main(["chi-dp", gra]) == 3
