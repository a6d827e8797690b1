import subprocess
import sys

import pytest

from branchcover.cli import main, run
from branchcover.constellation import Constellation
from branchcover.formats import format_constellation, format_map, parse_blocks, parse_constellation, parse_map
from branchcover.gallery import cube_quadrangulation, octahedron, one_vertex_torus, tetrahedron, torus_grid
from branchcover.hurwitz import bundle_tuple
from branchcover.surface import edge_flip


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return _write


def test_bundle():
    out = run(["bundle", "--degree", "3"])
    assert out.exit_code == 0
    assert parse_constellation(out.stdout_payload) == bundle_tuple(3)
    assert run(["bundle"]).exit_code == 2
    assert run(["bundle", "--degree", "1"]).exit_code == 1


def test_validate_exit_codes(write):
    bad = write("bad.txt", format_constellation(Constellation.from_cycles(3, ["(1 2)", "(1 3)"])))
    out = run(["validate", bad])
    assert out.exit_code == 1 and "product_is_identity: False" in out.stdout_payload
    good = write("good.txt", format_constellation(bundle_tuple(2)))
    assert run(["validate", good]).exit_code == 0
    assert run(["validate", write("t.txt", format_map(tetrahedron()))]).exit_code == 0
    assert run(["validate", write("g.txt", format_map(torus_grid()))]).exit_code == 0


def test_genus(write):
    out = run(["genus", write("one.txt", "constellation\ndegree 1\nend\n")])
    assert (out.exit_code, out.stdout_payload) == (0, "0\n")
    assert run(["genus", write("b.txt", format_constellation(bundle_tuple(4)))]).stdout_payload == "3\n"
    assert run(["genus", write("t.txt", format_map(one_vertex_torus()))]).stdout_payload == "1\n"


@pytest.mark.parametrize("m, degree", [(tetrahedron(), 12), (one_vertex_torus(), 6)])
def test_belyi_pipeline(write, m, degree):
    out = run(["belyi", write("m.txt", format_map(m))])
    assert out.exit_code == 0
    block, ledger = out.stdout_payload.split("end\n", 1)
    c = parse_constellation(block + "end\n")
    assert c.degree == degree
    assert "[FAIL]" not in ledger and ledger.count("[PASS]") == 6


def test_corrupted_alpha_is_input_error(write):
    text = format_map(tetrahedron()).replace("alpha (1", "alpha (1 99")
    out = run(["belyi", write("m.txt", text)])
    assert out.exit_code == 2 and out.diagnostics


def test_missing_file_and_unknown_command(tmp_path):
    assert run(["belyi", str(tmp_path / "nope.txt")]).exit_code == 2
    assert run(["frobnicate"]).exit_code == 2
    assert run([]).exit_code == 2


def test_orbit_and_cap(write):
    path = write("b.txt", format_constellation(bundle_tuple(2)))
    out = run(["orbit", path])
    assert out.exit_code == 0 and "orbit size 1" in out.stdout_payload
    s3 = write("s3.txt", format_constellation(Constellation.from_cycles(3, ["(1 2)", "(1 2)", "(2 3)", "(2 3)"])))
    out = run(["orbit", s3])
    # 24 tuples, 6 conjugates each
    assert out.exit_code == 0 and "orbit size 4" in out.stdout_payload
    assert len(parse_blocks(out.stdout_payload)) == 4
    out = run(["orbit", s3, "--cap", "2"])
    assert out.exit_code == 3 and "truncated" in out.stdout_payload


def test_braid_plumb_movie(write):
    path = write("b.txt", format_constellation(bundle_tuple(3)))
    out = run(["braid", path, "--word", "1 -1"])
    assert parse_constellation(out.stdout_payload) == bundle_tuple(3)
    assert run(["braid", path, "--word", "1 q"]).exit_code == 2
    assert run(["braid", path, "--word", "9"]).exit_code == 1
    out = run(["plumb", path, "--degree", "2"])
    assert parse_constellation(out.stdout_payload).degree == 5
    out = run(["movie", "--degree", "3", "--word", "4"])
    assert out.exit_code == 0 and "closes up: no" in out.stdout_payload


def test_subdivide_and_flip(write):
    out = run(["subdivide", write("t.txt", format_map(tetrahedron()))])
    assert parse_map(out.stdout_payload).map.dart_count == 72
    path = write("o.txt", format_map(octahedron()))
    out = run(["flip", path, "--edge", "1"])
    assert parse_map(out.stdout_payload) == edge_flip(octahedron(), 1)
    assert run(["flip", path]).exit_code == 2
    assert run(["flip", path, "--edge", "99"]).exit_code == 1


def test_quads_match_merge(write):
    grid = write("g.txt", format_map(torus_grid()))
    assert run(["quads", grid]).exit_code == 0
    out = run(["match", write("c.txt", format_map(cube_quadrangulation()))])
    assert out.exit_code == 0 and out.stdout_payload.count("pair") == 3
    merged = parse_map(run(["merge", grid]).stdout_payload)
    assert len(merged.map.faces) == 2
    assert run(["match", write("t.txt", format_map(tetrahedron()))]).exit_code == 2
    odd = write("odd.txt", format_map(parse_map(
        "map\ndarts 4\nalpha (1 2)(3 4)\nsigma (2 3)\nlabel 1 0\nlabel 2 1\nlabel 4 0\nend\n")))
    out = run(["match", odd])
    assert out.exit_code == 1 and "odd" in out.diagnostics


def test_ledger_command(write):
    path = write("b.txt", format_constellation(bundle_tuple(3)))
    out = run(["ledger", path])
    assert out.exit_code == 0 and out.stdout_payload.count("[PASS]") == 2
    assert run(["ledger", path, "--chi", "2"]).exit_code == 1
    assert run(["ledger", path, "--kind", "quad"]).exit_code == 2
    out = run(["ledger", write("g.txt", format_map(torus_grid())), "--tsv"])
    assert out.exit_code == 0 and all(len(l.split("\t")) == 5 for l in out.stdout_payload.splitlines())
    assert run(["ledger", write("t.txt", format_map(tetrahedron()))]).exit_code == 0


def test_output_flag(tmp_path):
    target = tmp_path / "out.txt"
    out = run(["bundle", "--degree", "2", "--output", str(target)])
    assert out.exit_code == 0 and out.stdout_payload == ""
    assert parse_constellation(target.read_text()) == bundle_tuple(2)


def test_deterministic_output(write):
    path = write("t.txt", format_map(tetrahedron()))
    assert run(["belyi", path]) == run(["belyi", path])


def test_main_writes_streams(capsys):
    assert main(["bundle", "--degree", "2"]) == 0
    assert capsys.readouterr().out == format_constellation(bundle_tuple(2))
    assert main(["genus"]) == 2
    assert capsys.readouterr().err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "branchcover.cli", "bundle", "--degree", "2"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert parse_constellation(proc.stdout) == bundle_tuple(2)
