import pytest

from isofill.cli import main, parse_multicurve_loop, serialize_multicurve_loop
from isofill.complex_core import (CombLoop, count_triangles, fmt_atom, parse_complex,
                                  parse_filling, parse_loop, serialize_filling,
                                  serialize_loop, validate_filling)
from isofill.surface import new_surface
from isofill.tightener import random_loop


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


@pytest.fixture
def suspension(tmp_path, capsys):
    path = tmp_path / "s4.txt"
    assert main(["gen-suspension", "--M", "4", "--out", str(path)]) == 0
    return path


def _loop_file(tmp_path, text, name="loop.txt"):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def test_gen_suspension_has_16_triangles(suspension):
    K, shapes, coords = parse_complex(suspension.read_text())
    assert len(shapes) == 16
    assert set(coords) == set(K.vertices())
    assert suspension.read_text().startswith("# isofill gen-suspension M=4")


def test_fill_suspension_k2(tmp_path, suspension, capsys):
    lp = _loop_file(tmp_path, "loop p 0 q 2\n")
    code, out = run(capsys, "fill", "--complex", str(suspension), "--loop", lp,
                    "--budget", "6")
    assert code == 0
    P, f = parse_filling(out)
    K, _, _ = parse_complex(suspension.read_text())
    assert count_triangles(P) == 4
    assert validate_filling(P, f, CombLoop(["p", 0, "q", 2]), K, "bijective")


def test_fill_infeasible_exits_one(tmp_path, suspension, capsys):
    lp = _loop_file(tmp_path, "loop p 0 q 2\n")
    code, out = run(capsys, "fill", "--complex", str(suspension), "--loop", lp,
                    "--budget", "3")
    assert code == 1
    assert "infeasible-certificate v1" in out
    assert "lower-bound 4" in out and "replay ok" in out


def test_parse_errors_exit_two(tmp_path, suspension, capsys):
    bad = _loop_file(tmp_path, "loop p 0 q\nloop 1 2\n")
    code, _ = run(capsys, "fill", "--complex", str(suspension), "--loop", bad,
                  "--budget", "3")
    assert code == 2
    code, _ = run(capsys, "fill", "--complex", str(tmp_path / "missing"),
                  "--loop", bad, "--budget", "3")
    assert code == 2
    assert run(capsys, "tighten", "--surface", "0;6")[0] == 2
    not_a_loop = _loop_file(tmp_path, "loop p q\n")   # p and q are not adjacent
    assert run(capsys, "fill", "--complex", str(suspension), "--loop", not_a_loop,
               "--budget", "3")[0] == 2


def test_threads_variable(monkeypatch, capsys):
    monkeypatch.setenv("ISOFILL_THREADS", "3")
    code, out = run(capsys, "gen-suspension", "--M", "1")
    assert code == 0 and "threads=3" in out.splitlines()[0]
    monkeypatch.setenv("ISOFILL_THREADS", "0")
    assert run(capsys, "gen-suspension", "--M", "1")[0] == 2


def test_tighten_replays_identically(tmp_path, capsys):
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    assert main(["tighten", "--surface", "0,6", "--seed", "7", "--out", str(a)]) == 0
    assert main(["tighten", "--surface", "0,6", "--seed", "7", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    text = a.read_text()
    assert "verified yes" in text and "status shortcut" in text
    c = tmp_path / "c.txt"
    main(["tighten", "--surface", "0,6", "--seed", "8", "--out", str(c)])
    assert c.read_bytes() != a.read_bytes()


def test_tighten_from_loop_file(tmp_path, capsys):
    lp = tmp_path / "ml.txt"
    assert main(["gen-surface", "--surface", "0,6", "--seed", "2", "--kind", "loop",
                 "--length", "6", "--out", str(lp)]) == 0
    code, out = run(capsys, "tighten", "--surface", "0,6", "--loop", str(lp))
    assert code == 0 and "verified yes" in out
    assert run(capsys, "tighten", "--surface", "0,5", "--loop", str(lp))[0] == 2


def test_multicurve_loop_round_trip():
    T = new_surface(0, 6)
    import random
    loop = random_loop(T, 5, random.Random(1))
    back = parse_multicurve_loop(serialize_multicurve_loop(loop))
    assert back.curves == loop.curves


def test_gen_surface_laminations(capsys):
    code, out = run(capsys, "gen-surface", "--surface", "1,1", "--seed", "3")
    assert code == 0 and "lamination v1" in out
    code, arc = run(capsys, "gen-surface", "--surface", "0,5", "--seed", "3",
                    "--kind", "arc")
    assert code == 0 and "surface 0 5" in arc


def test_square_fill_and_certify(tmp_path, capsys):
    sq, fl = tmp_path / "sq.txt", tmp_path / "fill.txt"
    assert main(["gen-square-loop", "--surface", "0,6", "--k", "2", "--out", str(sq)]) == 0
    assert main(["fill", "--complex", str(sq), "--budget", "8", "--window", "3",
                 "--out", str(fl)]) == 0
    assert "upper-bound-only" in fl.read_text()
    code, out = run(capsys, "certify", "--filling", str(fl), "--spec", str(sq))
    assert code == 0
    assert "gale-certificate" in out and "bound triangles >=" in out


def test_certify_rejects_bad_filling(tmp_path, capsys):
    sq = tmp_path / "sq.txt"
    main(["gen-square-loop", "--surface", "0,6", "--k", "2", "--out", str(sq)])
    rows = dict(r.split(" ", 1) for r in sq.read_text().splitlines()[2:])
    arcs = [",".join(rows[k].split()) for k in ("a_y1", "a_z1", "a_y2", "a_z2")]
    # two triangles across a_y1 - a_y2, which cut each other at k = 2
    fl = _loop_file(tmp_path, "triangle 0 1 2\ntriangle 0 2 3\n" +
                    "".join(f"map {i} {a}\n" for i, a in enumerate(arcs)) +
                    "boundary 0 1 2 3\n", "fill.txt")
    code, out = run(capsys, "certify", "--filling", fl, "--spec", str(sq))
    assert code == 1 and "gale-failure" in out
    assert run(capsys, "gen-square-loop", "--surface", "0,5", "--k", "1")[0] == 2


def test_cat0_grid(tmp_path, capsys):
    from isofill.cat0 import grid_boundary_loop, grid_complex
    from isofill.complex_core import serialize_complex
    K = grid_complex(2)
    cx, emb = tmp_path / "grid.txt", tmp_path / "emb.txt"
    cx.write_text(serialize_complex(K.complex))
    emb.write_text("".join(f"coord {v} {x} {y}\n" for v, (x, y) in K.coords.items()))
    lp = _loop_file(tmp_path, serialize_loop(grid_boundary_loop(2)))
    code, out = run(capsys, "cat0", "--complex", str(cx), "--embedding", str(emb),
                    "--loop", lp)
    assert code == 0 and "# valid yes" in out
    P, f = parse_filling(out)
    assert validate_filling(P, f, grid_boundary_loop(2), K.complex, "bijective")
    assert run(capsys, "cat0", "--complex", str(cx), "--loop", lp)[0] == 2  # no coords


def test_atoms_round_trip():
    from isofill.complex_core import TriangulatedDisc, SimplicialFillingMap
    P = TriangulatedDisc([(("u", 1), "o", (0, 2))], [("u", 1), "o", (0, 2)])
    f = SimplicialFillingMap({("u", 1): (1, -2, 0), "o": (3,), (0, 2): 5})
    Q, g = parse_filling(serialize_filling(P, f))
    assert Q.triangles == P.triangles and g.assignment == f.assignment
    assert fmt_atom((3,)) == "3," and parse_loop("loop 1,2 3,\n").vertices == ((1, 2), (3,))
