import subprocess
import sys

import pytest

from hvtomo.cli import main
from hvtomo.formats import InstanceError, parse_grid, parse_instance, render, serialize_instance
from hvtomo.grid import BinaryGrid, Projections

FIG2_TEXT = "5 5\n1 4 5 3 1\n2 4 4 2 2\n"
FIG2_GRID = ".#...\n.####\n#####\n###..\n..#..\n"


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return str(path)
    return _write


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


# --- instance files and renderings ---------------------------------------

def test_parse_examples():
    inst = parse_instance("1 1\n1\n1\n")
    assert (inst.m, inst.n) == (1, 1)
    assert inst.projections == Projections([1], [1])
    inst = parse_instance(FIG2_TEXT)
    assert inst.projections == Projections([1, 4, 5, 3, 1], [2, 4, 4, 2, 2])


def test_parse_errors_carry_positions():
    with pytest.raises(InstanceError, match="expected 2 column sums, found 1") as exc:
        parse_instance("2 2\n2 2\n2\n")
    assert exc.value.line == 3
    with pytest.raises(InstanceError) as exc:
        parse_instance("2 2\n2 x\n2 2\n")
    assert (exc.value.line, exc.value.column) == (2, 3)
    with pytest.raises(InstanceError, match="3 non-empty lines"):
        parse_instance("2 2\n2 2\n")
    with pytest.raises(InstanceError, match="negative"):
        parse_instance("1 2\n-1\n1 1\n", strict=False)


def test_out_of_range_sums_warn_or_fail():
    text = "2 2\n3 1\n2 2\n"
    with pytest.raises(InstanceError, match="row sum 3 outside"):
        parse_instance(text)
    inst = parse_instance(text, strict=False)
    assert inst.warnings == ["line 2, column 1: row sum 3 outside [1, 2]"]


def test_comments_and_round_trip():
    text = "# figure\n\n5 5   # size\n1 4 5 3 1\n\n2 4 4 2 2 # cols\n"
    inst = parse_instance(text)
    assert serialize_instance(inst.projections) == FIG2_TEXT
    assert parse_instance(serialize_instance(inst.projections)).projections == inst.projections


def test_render_examples():
    assert render(BinaryGrid.full(1, 1)) == "#\n"
    assert render(BinaryGrid.full(2, 2)) == "##\n##\n"
    g = BinaryGrid.from_strings(FIG2_GRID.split())
    assert render(g) == FIG2_GRID
    assert render(g, "pbm") == (
        "P1\n5 5\n0 1 0 0 0\n0 1 1 1 1\n1 1 1 1 1\n1 1 1 0 0\n0 0 1 0 0\n")
    assert render(BinaryGrid.from_strings(["#..", "##."]), "pbm") == "P1\n3 2\n1 0 0\n1 1 0\n"
    with pytest.raises(ValueError):
        render(g, "png")


def test_parse_grid_both_formats():
    g = BinaryGrid.from_strings(["#..", "##."])
    assert parse_grid(render(g)) == g
    assert parse_grid(render(g, "pbm")) == g
    with pytest.raises(InstanceError):
        parse_grid("#.\n###\n")
    with pytest.raises(InstanceError):
        parse_grid("P1\n2 2\n1 0 1\n")


# --- commands --------------------------------------------------------------

def test_reconstruct_fig2_centered_then_check(write, capsys):
    inst = write("fig2.txt", FIG2_TEXT)
    code, out, err = run(["reconstruct", "--input", inst, "--mode", "centered", "--verify"], capsys)
    assert code == 0 and out == FIG2_GRID and err == ""
    grid = write("out.txt", out)
    code, out, _ = run(["check", "--input", inst, "--grid", grid], capsys)
    assert code == 0
    assert out == "realization\tyes\nhv-convex polyomino\tyes\n"


def test_reconstruct_failure_exit_1(write, capsys):
    inst = write("bad.txt", "2 3\n2 2\n1 1 2\n")
    code, out, err = run(["reconstruct", "--input", inst, "--mode", "hv"], capsys)
    assert code == 1 and out == "" and "no realization" in err


def test_not_centered_exit_2_and_auto_falls_through(write, capsys):
    inst = write("nc.txt", "2 4\n3 3\n1 2 2 1\n")
    code, out, err = run(["reconstruct", "--input", inst, "--mode", "centered"], capsys)
    assert code == 2 and "NotCentered" in err and out == ""
    code, out, _ = run(["reconstruct", "--input", inst], capsys)
    assert code == 0 and out == "###.\n.###\n"


def test_invalid_input_exit_2(write, capsys):
    code, _, err = run(["reconstruct", "--input", write("x.txt", "2 2\n2 2\n2\n")], capsys)
    assert code == 2 and "line 3" in err
    code, _, err = run(["reconstruct", "--input", "/nonexistent/file"], capsys)
    assert code == 2
    with pytest.raises(SystemExit) as exc:
        main(["reconstruct"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_lenient_flag(write, capsys):
    inst = write("l.txt", "2 2\n3 1\n2 2\n")
    code, _, _ = run(["reconstruct", "--input", inst], capsys)
    assert code == 2
    code, _, err = run(["reconstruct", "--input", inst, "--lenient", "--mode", "ryser"], capsys)
    assert "warning" in err and code == 1


def test_modes_and_formats(write, capsys):
    inst = write("fig2.txt", FIG2_TEXT)
    outputs = {}
    for mode in ("hv", "centered", "ryser", "auto"):
        for prune in ("--prune", "--no-prune"):
            code, out, _ = run(["reconstruct", "--input", inst, "--mode", mode, prune,
                                "--format", "pbm", "--verify"], capsys)
            assert code == 0 and out.startswith("P1\n5 5\n")
            outputs[mode, prune] = out
    assert outputs["auto", "--prune"] == outputs["centered", "--prune"]


def test_trace_goes_to_stderr(write, capsys):
    inst = write("fig2.txt", FIG2_TEXT)
    code, out, err = run(["reconstruct", "--input", inst, "--trace"], capsys)
    assert code == 0 and out == FIG2_GRID
    assert err.splitlines()[0].startswith("p=3 q=3 fronts=1")
    assert "p=1 q=5" in err.splitlines()[-1]
    code, _, err = run(["reconstruct", "--input", inst, "--mode", "hv", "--trace"], capsys)
    assert "anchors tried=" in err


def test_generate_then_reconstruct_then_check(write, tmp_path, capsys):
    witness = str(tmp_path / "w.txt")
    code, out, _ = run(["generate", "--rows", "6", "--cols", "8", "--seed", "3",
                        "--witness", witness], capsys)
    assert code == 0
    assert out.splitlines()[:4] == [
        "# generated: rows=6 cols=8 seed=3", "6 8", "7 7 5 3 3 1", "3 6 5 3 3 2 2 2"]
    inst = write("gen.txt", out)
    assert run(["check", "--input", inst, "--grid", witness], capsys)[0] == 0
    code, grid_text, _ = run(["reconstruct", "--input", inst, "--verify"], capsys)
    assert code == 0
    assert run(["check", "--input", inst, "--grid", write("r.txt", grid_text)], capsys)[0] == 0


def test_generate_is_deterministic(capsys):
    a = run(["generate", "--rows", "9", "--cols", "4", "--seed", "5", "--centered"], capsys)
    b = run(["generate", "--rows", "9", "--cols", "4", "--seed", "5", "--centered"], capsys)
    assert a == b and a[0] == 0
    assert run(["generate", "--rows", "0", "--cols", "4"], capsys)[0] == 2


def test_check_rejects_wrong_grid(write, capsys):
    inst = write("fig2.txt", FIG2_TEXT)
    wrong = write("g.txt", "#####\n#####\n.....\n.....\n.....\n")
    code, out, _ = run(["check", "--input", inst, "--grid", wrong], capsys)
    assert code == 1 and "realization\tno" in out
    small = write("s.txt", "##\n##\n")
    assert run(["check", "--input", inst, "--grid", small], capsys)[0] == 2
    # a realization that is not hv-convex
    inst = write("sq.txt", "2 2\n1 1\n1 1\n")
    diag = write("d.txt", "#.\n.#\n")
    code, out, _ = run(["check", "--input", inst, "--grid", diag], capsys)
    assert code == 0 and "hv-convex polyomino\tno" in out
    assert run(["check", "--input", inst, "--grid", diag, "--require-hv"], capsys)[0] == 1


def test_bench_table(capsys):
    code, out, _ = run(["bench", "--mode", "centered", "--sizes", "20,30x40", "--repeat", "1"], capsys)
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "mode\tm\tn\tmillis\tclauses\tanchors\tsteps"
    assert [l.split("\t")[:3] for l in lines[1:]] == [["centered", "20", "20"], ["centered", "30", "40"]]
    code, out, _ = run(["bench", "--mode", "hv", "--sizes", "6", "--repeat", "1"], capsys)
    fields = out.splitlines()[1].split("\t")
    assert fields[0] == "hv" and int(fields[4]) > 0 and int(fields[5]) >= 1
    assert run(["bench", "--sizes", "a,b"], capsys)[0] == 2


def test_module_entry_point(tmp_path):
    path = tmp_path / "fig2.txt"
    path.write_text(FIG2_TEXT)
    proc = subprocess.run([sys.executable, "-m", "hvtomo", "reconstruct", "--input", str(path)],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == FIG2_GRID
    proc = subprocess.run([sys.executable, "-m", "hvtomo", "reconstruct", "--input", "-"],
                          input="2 3\n2 2\n1 1 2\n", capture_output=True, text=True)
    assert proc.returncode == 1
