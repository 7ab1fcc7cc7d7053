"""End-to-end checks of the command line interface.

Every test drives main() in process and inspects stdout plus the exit
code, so the file formats, report rendering, and error mapping are all
exercised exactly as a shell user would see them.
"""

import json
from fractions import Fraction

import pytest

from toricgb.cli import (
    main,
    parse_matrix,
    parse_vectors,
    write_matrix,
    write_vectors,
    ParseFailure,
)
from toricgb.exactmath import IntMatrix

TWISTED_TEXT = "2 4\n1 1 1 1\n0 1 2 3\n"
LINE_TEXT = "1 2\n1 1\n"
B_TEXT = "2 5\n1 3 4 6 0\n0 0 0 -5 1\n"


@pytest.fixture
def twisted(tmp_path):
    p = tmp_path / "twisted.mat"
    p.write_text(TWISTED_TEXT)
    return str(p)


def wfile(tmp_path, entries, name="w.vec"):
    p = tmp_path / name
    p.write_text(f"1 {len(entries)}\n" + " ".join(str(x) for x in entries) + "\n")
    return str(p)


def run(capsys, argv):
    rc = main(argv)
    out = capsys.readouterr()
    return rc, out.out, out.err


# -- file formats -----------------------------------------------------------


def test_matrix_round_trip():
    M = IntMatrix(((1, -2, 3), (0, 5, -7)))
    assert parse_matrix(write_matrix(M)).entries == M.entries


def test_vector_list_round_trip_with_rationals():
    rows = [(Fraction(1, 2), Fraction(-3), Fraction(7, 3))]
    parsed = parse_vectors(write_vectors(rows), rational=True)
    assert parsed == [tuple(rows[0])]


def test_parse_errors_carry_line_numbers():
    with pytest.raises(ParseFailure, match="line 3: expected 3 entries, found 2"):
        parse_matrix("2 3\n1 2 3\n4 5\n")
    with pytest.raises(ParseFailure, match="line 4: trailing data"):
        parse_matrix("2 2\n1 2\n3 4\n5 6\n")
    with pytest.raises(ParseFailure, match="line 3: expected 2 rows, file ends early"):
        parse_matrix("2 2\n1 2\n")
    with pytest.raises(ParseFailure, match="line 1: matrix header"):
        parse_matrix("2\n1 2\n")
    with pytest.raises(ParseFailure, match="line 2: malformed entry"):
        parse_matrix("1 2\n1 x\n")


def test_cli_reports_parse_failure_with_line(tmp_path, capsys):
    bad = tmp_path / "bad.mat"
    bad.write_text("2 3\n1 2 3\n4 5\n")
    rc, _, err = run(capsys, ["graver", str(bad)])
    assert rc == 1
    assert "line 3: expected 3 entries, found 2" in err


def test_cli_missing_file(capsys):
    rc, _, err = run(capsys, ["graver", "/nonexistent/path.mat"])
    assert rc == 1
    assert "cannot read" in err


# -- groebner ---------------------------------------------------------------


def test_groebner_with_unit_weight(twisted, tmp_path, capsys):
    w = wfile(tmp_path, [1, 1, 1, 1])
    rc, out, _ = run(capsys, ["groebner", twisted, "--weight", w])
    assert rc == 0
    assert out.startswith("3 4\n")
    assert "elements: 3" in out
    assert "max_degree: 2" in out


def test_groebner_pretty_rendering(twisted, tmp_path, capsys):
    rc, out, _ = run(capsys, ["groebner", twisted, "--pretty", "--out",
                              str(tmp_path / "gb.txt")])
    assert rc == 0
    text = (tmp_path / "gb.txt").read_text()
    lines = text.strip().splitlines()
    assert len(lines) == 3
    assert all(" - " in ln and ln.count("x") >= 2 for ln in lines)


def test_groebner_json_matches_text_report(twisted, tmp_path, capsys):
    sink = str(tmp_path / "v.out")
    rc, out_t, _ = run(capsys, ["groebner", twisted, "--out", sink])
    rc2, out_j, _ = run(capsys, ["groebner", twisted, "--out", sink, "--json"])
    assert rc == rc2 == 0
    report = json.loads(out_j)
    text = dict(
        ln.split(": ", 1) for ln in out_t.strip().splitlines()
    )
    assert report["elements"] == int(text["elements"])
    assert report["max_degree"] == int(text["max_degree"])
    assert " ".join(report["initial_ideal"]) == text["initial_ideal"]


def test_groebner_rational_weight(twisted, tmp_path, capsys):
    w = wfile(tmp_path, ["1/2", "1/2", "1/2", "1/2"])
    rc, out, _ = run(capsys, ["groebner", twisted, "--weight", w])
    assert rc == 0
    assert "elements: 3" in out


def test_groebner_weight_length_mismatch(twisted, tmp_path, capsys):
    w = wfile(tmp_path, [1, 2, 3])
    rc, _, err = run(capsys, ["groebner", twisted, "--weight", w])
    assert rc == 1
    assert "one row of 4 entries" in err


def test_groebner_non_pointed_is_domain_error(tmp_path, capsys):
    p = tmp_path / "np.mat"
    p.write_text("1 2\n1 -1\n")
    rc, _, err = run(capsys, ["groebner", str(p)])
    assert rc == 2
    assert "pointed" in err


def test_output_is_byte_deterministic(twisted, capsys):
    rc1, out1, _ = run(capsys, ["universal", twisted])
    rc2, out2, _ = run(capsys, ["universal", twisted])
    assert rc1 == rc2 == 0
    assert out1 == out2


# -- graver, circuits, universal --------------------------------------------


def test_graver_of_short_line(tmp_path, capsys):
    p = tmp_path / "line.mat"
    p.write_text("1 2\n1 2\n")
    rc, out, _ = run(capsys, ["graver", str(p)])
    assert rc == 0
    assert out.startswith("1 2\n2 -1\n")


def test_graver_of_lawrence_lifted_matrix(tmp_path, capsys):
    b = tmp_path / "B.mat"
    b.write_text(B_TEXT)
    lifted = tmp_path / "LB.mat"
    rc, _, _ = run(capsys, ["gen", "lawrence", str(b), "--out", str(lifted)])
    assert rc == 0
    M = parse_matrix(lifted.read_text())
    assert (M.nrows, M.ncols) == (7, 10)
    rc, out, _ = run(capsys, ["graver", str(lifted)])
    assert rc == 0
    assert "elements: 16" in out


def test_graver_degree_cap_is_resource_limit(tmp_path, capsys):
    b = tmp_path / "B.mat"
    b.write_text(B_TEXT)
    rc, _, err = run(capsys, ["graver", str(b), "--max-degree", "2"])
    assert rc == 4
    assert "max-degree" in err


def test_circuits_of_twisted_cubic(twisted, capsys):
    rc, out, _ = run(capsys, ["circuits", twisted, "--json"])
    assert rc == 0
    vectors, report = out.split("\n{", 1)
    report = json.loads("{" + report)
    assert report["elements"] == 4
    assert report["max_true_degree"] == 3
    assert vectors.splitlines()[0] == "4 4"


def test_universal_of_twisted_cubic(twisted, capsys):
    rc, out, _ = run(capsys, ["universal", twisted])
    assert rc == 0
    assert out.startswith("5 4\n")
    assert "initial_ideals: 8" in out


# -- solve ------------------------------------------------------------------


def test_solve_reports_optimum(tmp_path, capsys):
    p = tmp_path / "line.mat"
    p.write_text(LINE_TEXT)
    w = wfile(tmp_path, [1, 0])
    rc, out, _ = run(capsys, ["solve", str(p), "--weight", w, "--rhs", "5"])
    assert rc == 0
    assert out == "(0,5) cost 0\n"
    rc, out, _ = run(
        capsys,
        ["solve", str(p), "--weight", w, "--rhs", "5", "--method", "eliminate"],
    )
    assert rc == 0
    assert out == "(0,5) cost 0\n"


def test_solve_json_report(tmp_path, capsys):
    p = tmp_path / "line.mat"
    p.write_text(LINE_TEXT)
    w = wfile(tmp_path, [1, 0])
    rc, out, _ = run(
        capsys, ["solve", str(p), "--weight", w, "--rhs", "5", "--json"]
    )
    assert rc == 0
    assert json.loads(out) == {
        "command": "solve",
        "status": "optimal",
        "point": [0, 5],
        "cost": 0,
    }


def test_solve_infeasible_exit_code(tmp_path, capsys):
    p = tmp_path / "even.mat"
    p.write_text("1 2\n2 4\n")
    w = wfile(tmp_path, [1, 1])
    rc, out, _ = run(capsys, ["solve", str(p), "--weight", w, "--rhs", "5"])
    assert rc == 2
    assert out == "INFEASIBLE\n"
    rc, out, _ = run(
        capsys, ["solve", str(p), "--weight", w, "--rhs", "5", "--json"]
    )
    assert rc == 2
    assert json.loads(out)["status"] == "infeasible"


def test_solve_fiber_budget_exit_code(tmp_path, capsys):
    p = tmp_path / "line.mat"
    p.write_text(LINE_TEXT)
    w = wfile(tmp_path, [1, 0])
    rc, _, err = run(
        capsys,
        ["solve", str(p), "--weight", w, "--rhs", "50", "--max-fiber", "3"],
    )
    assert rc == 4
    assert "exceeded" in err


def test_solve_bad_rhs(tmp_path, capsys):
    p = tmp_path / "line.mat"
    p.write_text(LINE_TEXT)
    w = wfile(tmp_path, [1, 0])
    rc, _, err = run(capsys, ["solve", str(p), "--weight", w, "--rhs", "1,2"])
    assert rc == 1
    assert "right-hand side needs 1" in err


# -- fan --------------------------------------------------------------------


def test_fan_count_twisted(twisted, capsys):
    rc, out, _ = run(capsys, ["fan", "count", twisted])
    assert rc == 0
    assert out == "command: fan\ninitial_ideals: 8\n"


def test_fan_cones_enumerates_all_cells(twisted, capsys):
    rc, out, _ = run(capsys, ["fan", "cones", twisted])
    assert rc == 0
    lines = out.strip().splitlines()
    assert len(lines) == 8
    assert all(ln.startswith("facets ") and " witness " in ln for ln in lines)


def test_fan_single_cone_at_weight(tmp_path, capsys):
    m = tmp_path / "curve.mat"
    m.write_text("1 4\n15 247 248 345\n")
    w = wfile(tmp_path, [111, 0, 341, 1])
    rc, out, _ = run(capsys, ["fan", "cones", str(m), "--weight", w])
    assert rc == 0
    assert out == "facets 5 witness 111,0,341,1\n"


def test_fan_triangulate(tmp_path, capsys):
    m = tmp_path / "seg.mat"
    m.write_text("2 3\n1 1 1\n0 1 2\n")
    w = wfile(tmp_path, [0, 0, 1])
    rc, out, _ = run(capsys, ["fan", "triangulate", str(m), "--weight", w])
    assert rc == 0
    assert out == "command: fan\nfacets: 1,2 2,3\n"


def test_fan_triangulate_degenerate_weight(tmp_path, capsys):
    m = tmp_path / "seg.mat"
    m.write_text("2 3\n1 1 1\n0 1 2\n")
    w = wfile(tmp_path, [0, 0, 0])
    rc, _, err = run(capsys, ["fan", "triangulate", str(m), "--weight", w])
    assert rc == 3
    assert "not generic" in err


def test_fan_triangulate_needs_weight(twisted, capsys):
    rc, _, err = run(capsys, ["fan", "triangulate", twisted])
    assert rc == 1
    assert "needs --weight" in err


# -- gen --------------------------------------------------------------------


def test_gen_segre_shape(capsys):
    rc, out, _ = run(capsys, ["gen", "segre", "3", "3"])
    assert rc == 0
    M = parse_matrix(out)
    assert (M.nrows, M.ncols) == (6, 9)
    assert all(sum(M.col(j)) == 2 for j in range(9))


def test_gen_hypersimplex_shape(capsys):
    rc, out, _ = run(capsys, ["gen", "hypersimplex2", "4"])
    assert rc == 0
    M = parse_matrix(out)
    assert (M.nrows, M.ncols) == (4, 6)
    assert all(sum(M.col(j)) == 2 for j in range(6))


def test_gen_transport_shape(capsys):
    rc, out, _ = run(capsys, ["gen", "transport", "2", "3"])
    assert rc == 0
    M = parse_matrix(out)
    assert (M.nrows, M.ncols) == (5, 6)


def test_gen_tt_graph_shape_and_degrees(capsys):
    rc, out, _ = run(capsys, ["gen", "tt-graph", "3", "3"])
    assert rc == 0
    M = parse_matrix(out)
    assert (M.nrows, M.ncols) == (9, 12)
    # each column is an edge, so every column sums to two
    assert all(sum(M.col(j)) == 2 for j in range(12))
    # central-cycle vertices carry two cycle edges plus two attachment edges
    degrees = [sum(row) for row in M.entries]
    assert degrees[:3] == [4, 4, 4]
    assert all(d == 2 for d in degrees[3:])


def test_gen_tt_graph_rejects_even_attached_cycle(capsys):
    rc, _, err = run(capsys, ["gen", "tt-graph", "3", "4"])
    assert rc == 1
    assert "odd" in err


def test_gen_monomial_curve(capsys):
    rc, out, _ = run(capsys, ["gen", "monomial-curve", "1", "2", "3"])
    assert rc == 0
    assert parse_matrix(out).entries == ((1, 2, 3),)


def test_gen_bad_parameters(capsys):
    rc, _, err = run(capsys, ["gen", "transport", "2"])
    assert rc == 1
    assert "takes 2 parameter" in err


# -- dispatch ---------------------------------------------------------------


def test_help_exits_cleanly(capsys):
    assert main(["--help"]) == 0
    capsys.readouterr()


def test_missing_subcommand_is_usage_error(capsys):
    assert main([]) == 1
    capsys.readouterr()


def test_unknown_generator_kind(capsys):
    assert main(["gen", "mystery", "3"]) == 1
    capsys.readouterr()
