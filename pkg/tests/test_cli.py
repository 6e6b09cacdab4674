import io
import sys

import pytest

from poisson_atlas.cli import HEADER, main

TORUS = """
vars x, y, z;
bracket exact f = x*y*z - x^2 - y^2 - z^2 + 4;
relation f;
auto theta_x { x -> x; y -> -y; z -> -z; };
"""

A1 = """
vars x, y, z;
bracket exact f = z^2 - x*y;
relation f;
embed pi4(u, v, w) { bracket exact F = w^4/4 - u*v; relation F;
  u -> x^2/8; v -> y^2/8; w -> z/2; };
"""


@pytest.fixture
def torus_file(tmp_path):
    path = tmp_path / "torus.pat"
    path.write_text(TORUS)
    return str(path)


@pytest.fixture
def a1_file(tmp_path):
    path = tmp_path / "a1.pat"
    path.write_text(A1)
    return str(path)


def run(argv):
    buf = io.StringIO()
    old = sys.stdout
    sys.stdout = buf
    try:
        code = main(argv)
    finally:
        sys.stdout = old
    return code, buf.getvalue()


def test_ideals_machine(torus_file):
    code, out = run(["ideals", torus_file, "--format", "machine"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == HEADER
    assert "ideal.count = 5" in lines
    assert "ideal.5.point = (2, 2, 2)" in lines
    assert lines[-1] == "status = ok"


def test_output_determinism(torus_file):
    first = run(["classify", torus_file, "--format", "machine"])
    second = run(["classify", torus_file, "--format", "machine"])
    assert first == second


def test_homogeneity_with_relation(torus_file):
    code, out = run(
        ["homogeneity", torus_file, "--relation", "f", "--format", "machine"]
    )
    assert code == 0
    assert "verdict = 4-homogeneous" in out
    code, out = run(
        ["homogeneity", torus_file, "--relation", "f - 4", "--format", "machine"]
    )
    assert "verdict = 1-homogeneous" in out
    code, out = run(["homogeneity", torus_file, "--format", "machine"])
    assert "verdict = 5-homogeneous" in out


def test_lie_and_module_commands(torus_file):
    code, out = run(["lie", torus_file, "--point", "(2,2,2)"])
    assert code == 0 and "bracket.[x,y]: 2*x + 2*y - 2*z" in out
    code, out = run(
        ["module", torus_file, "--point", "(0,0,0)", "--dim", "2", "--format", "machine"]
    )
    assert code == 0 and "simple = True" in out


def test_verify_command(torus_file):
    code, out = run(
        ["verify", torus_file, "--point", "(2,2,2)", "--dim", "3", "--trials", "8"]
    )
    assert code == 0 and "axioms: pass" in out


def test_twist_command(torus_file):
    code, out = run(
        ["twist", torus_file, "--auto", "theta_x", "--point", "(2,2,2)", "--dim", "2"]
    )
    assert code == 0
    assert "twisted.point: (2, -2, -2)" in out


def test_restrict_command(a1_file):
    code, out = run(
        [
            "restrict", a1_file, "--embed", "pi4",
            "--point", "(0,0,0)", "--dim", "3", "--format", "machine",
        ]
    )
    assert code == 0
    assert "sub.point = (0, 0, 0)" in out
    assert "semisimple = yes, summand dims [1, 1, 1]" in out


def test_parse_error_exit_code(tmp_path):
    bad = tmp_path / "bad.pat"
    bad.write_text("vars x; bracket exact f = x;")
    code, out = run(["ideals", str(bad)])
    assert code == 2


def test_solvable_point_needs_dim_one(tmp_path):
    path = tmp_path / "an3.pat"
    path.write_text("vars x, y, z; bracket exact f = z^3 - x*y;")
    code, out = run(["module", str(path), "--point", "(0,0,0)", "--dim", "2"])
    assert code == 1
    code, out = run(
        ["module", str(path), "--point", "(0,0,0)", "--dim", "1",
         "--character", "0, 0, 7"]
    )
    assert code == 0 and "action.z: [(7)]" in out


def test_catalog_list_and_run():
    code, out = run(["catalog", "list", "--format", "machine"])
    assert code == 0 and "entry = torus-so3" in out
    code, out = run(["catalog", "run", "weyl-a2", "--trials", "4"])
    assert code == 0
    assert "pass [example 5.1]" in out
    assert "proposition 5.2" in out


def test_catalog_file_round_trip(tmp_path):
    code, out = run(["catalog", "file", "kleinian-a1"])
    assert code == 0
    path = tmp_path / "a1.pat"
    path.write_text(out)
    code2, out2 = run(["ideals", str(path), "--format", "machine"])
    assert code2 == 0 and "ideal.count = 1" in out2


def test_extension_error_maps_to_exit_3(monkeypatch, torus_file):
    from poisson_atlas import cli
    from poisson_atlas.errors import ExtensionRequiredError

    def boom(args):
        raise ExtensionRequiredError("extension beyond quadratic required")

    monkeypatch.setattr(cli, "cmd_ideals", boom)
    parser = cli.build_parser()
    args = parser.parse_args(["ideals", torus_file])
    # rebuild dispatch through main with the patched command
    monkeypatch.setattr(
        cli.argparse.ArgumentParser, "parse_args", lambda self, argv=None: args
    )
    args.fn = boom
    assert cli.main(["ideals", torus_file]) == 3


def test_run_all_failure_propagates(monkeypatch):
    import poisson_atlas.cli as cli
    from poisson_atlas.catalog import CatalogEntry

    broken = CatalogEntry("broken", "nowhere")
    broken.checks = [("always", "nowhere", lambda ctx, cfg: (False, "by design"))]
    monkeypatch.setattr(cli, "catalog_names", lambda: ["broken"])
    monkeypatch.setattr(cli, "get_entry", lambda name: broken)
    code, out = run(["catalog", "run-all", "--format", "machine"])
    assert code == 1
    assert "status = fail" in out
    assert "broken.always = FAIL" in out


def test_non_jacobi_table_exits_1(tmp_path):
    bad = tmp_path / "nonjacobi.pat"
    bad.write_text(
        "vars x, y, z; bracket table { [x,y] = z; [y,z] = y^2; };"
    )
    code, out = run(["ideals", str(bad)])
    assert code == 1


def test_module_entry_point(torus_file):
    import subprocess, sys

    proc = subprocess.run(
        [sys.executable, "-m", "poisson_atlas", "ideals", torus_file,
         "--format", "machine"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[0] == HEADER
