"""The command-line front end: subcommands, exit codes, JSON mirrors."""

import json
from dataclasses import replace

import pytest

from pbw.algebra import NCPoly
from pbw.cli import main
from pbw.datumio import save_datum
from pbw.exprs import ExprError, parse_expr
from pbw.presets import PRESET_NAMES, build_preset


@pytest.fixture
def taft_file(tmp_path):
    path = tmp_path / "taft3.json"
    save_datum(build_preset("taft").datum, path)
    return str(path)


@pytest.fixture
def qplane_file(tmp_path):
    path = tmp_path / "qplane.json"
    save_datum(build_preset("quantum_plane").datum, path)
    return str(path)


def run(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as e:
        code = e.code
    out = capsys.readouterr()
    return code, out.out, out.err


def test_check_pass(capsys, taft_file):
    code, out, _ = run(capsys, "check", taft_file)
    assert code == 0
    assert "PASS, dim 9" in out


def test_check_fail_exit_code(capsys, tmp_path):
    d = build_preset("uq_sl2").datum
    bad = NCPoly()
    bad.add_term(((), (0,)), d.field.one())
    bad.add_term(((), (1,)), -d.field.one())
    path = tmp_path / "bad.json"
    save_datum(replace(d, reds={(1, 2): bad}, _qexp={}), path)
    code, out, _ = run(capsys, "check", str(path))
    assert code == 1
    assert "FAIL" in out


def test_check_invalid_exit_code(capsys, tmp_path):
    path = tmp_path / "broken.json"
    path.write_text('{"theta": 1}')
    code, _, err = run(capsys, "check", str(path))
    assert code == 2
    assert "missing fields" in err

    # structurally valid file but violated constraints
    d = build_preset("taft").datum
    bad = replace(d, heights={(1,): 5}, _qexp={})
    path2 = tmp_path / "badheights.json"
    save_datum(bad, path2)
    code, _, err = run(capsys, "check", str(path2))
    assert code == 2
    assert "height" in err


def test_check_json_mirrors_text(capsys, taft_file):
    code, out, _ = run(capsys, "check", taft_file, "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["verdict"] == "pass"
    assert payload["dimension"] == 9
    assert payload["mode"] == "full"
    code, out, _ = run(capsys, "check", taft_file, "--mode", "reduced", "--json")
    assert json.loads(out)["mode"] == "reduced"


def test_nf(capsys, qplane_file):
    code, out, _ = run(capsys, "nf", qplane_file, "x1*x2")
    assert code == 0
    assert out.strip() == "z*x2*x1"


def test_nf_weyl(capsys, tmp_path):
    path = tmp_path / "weyl.json"
    save_datum(build_preset("weyl").datum, path)
    code, out, _ = run(capsys, "nf", str(path), "x1*x2")
    assert out.strip() == "x2*x1 + 1"


def test_nf_parse_error(capsys, qplane_file):
    code, _, err = run(capsys, "nf", qplane_file, "x1 * + x2")
    assert code == 2
    assert "line 1" in err and "column" in err


def test_dim_and_hilbert(capsys, taft_file, qplane_file):
    code, out, _ = run(capsys, "dim", taft_file)
    assert code == 0 and out.strip() == "9"
    code, out, _ = run(capsys, "dim", qplane_file)
    assert out.strip() == "infinite"
    code, out, _ = run(capsys, "hilbert", qplane_file, "--max-deg", "10")
    assert out.split() == [str(d + 1) for d in range(11)]


def test_lyndon_and_shirshov(capsys):
    code, out, _ = run(capsys, "lyndon", "--theta", "2", "--max-len", "2")
    assert out.split() == ["1", "12", "2"]
    code, out, _ = run(capsys, "shirshov", "11212")
    assert out.strip() == "(112, 12)"
    code, _, err = run(capsys, "shirshov", "1")
    assert code == 2
    code, _, err = run(capsys, "lyndon", "--theta", "0", "--max-len", "2")
    assert code == 2


def test_hilbert_rejects_negative_degree(capsys, qplane_file):
    code, _, err = run(capsys, "hilbert", qplane_file, "--max-deg", "-1")
    assert code == 2


@pytest.mark.parametrize("name", PRESET_NAMES)
def test_preset_roundtrip_checks_out(capsys, tmp_path, name):
    path = tmp_path / f"{name}.json"
    code, out, _ = run(capsys, "preset", name, "-o", str(path))
    assert code == 0
    code, out, _ = run(capsys, "check", str(path), "--mode", "reduced")
    assert code == 0, out


def test_preset_params(capsys, tmp_path):
    path = tmp_path / "t4.json"
    code, _, _ = run(capsys, "preset", "taft", "--param", "N=4", "-o", str(path))
    assert code == 0
    code, out, _ = run(capsys, "dim", str(path))
    assert out.strip() == "16"
    code, _, err = run(capsys, "preset", "taft", "--param", "N=1", "-o", str(path))
    assert code == 2


def test_redundant(capsys, tmp_path):
    path = tmp_path / "l2b.json"
    save_datum(build_preset("lifting_a2_2b").datum, path)
    code, out, _ = run(capsys, "redundant", str(path))
    assert code == 0
    assert "red_122 is forced by the height-2 power at 2" in out
    assert "redhat_12 is forced by the Jacobi combination (rank2-12)" in out


def test_expression_grammar():
    d = build_preset("uq_sl2").datum
    x1, x2 = d.letter((1,)), d.letter((2,))
    assert parse_expr("x1*x2 - x2*x1", d) == d.mul(x1, x2) - d.mul(x2, x1)
    assert parse_expr("[x1, x2]", d) == d.graded_commutator(x1, x2)
    assert parse_expr("[x1, x2]_2", d) == d.q_commutator(x1, x2, d.field.root(2))
    assert parse_expr("x1^3", d) == d.mul_many(x1, x1, x1)
    assert parse_expr("g1^2", d) == d.group_like((2,))
    assert parse_expr("1/2 * x1", d) == x1.scale(d.field.from_rational("1/2"))
    assert parse_expr("z^2", d) == d.unit(d.field.root(2))
    assert parse_expr("(x1 + x2) * g1", d) == d.mul(x1 + x2, d.group_like((1,)))
    assert parse_expr("-x1", d) == -x1
    assert parse_expr("-2*x1", d) == x1.scale(d.field.from_rational(-2))
    assert parse_expr("x2 - -x1", d) == x2 + x1
    with pytest.raises(ExprError):
        parse_expr("x3", d)  # not a letter of L
    with pytest.raises(ExprError):
        parse_expr("g2", d)  # only one group factor
    with pytest.raises(ExprError):
        parse_expr("x1 +", d)
    try:
        parse_expr("x1 *\n* x2", d)
    except ExprError as e:
        assert e.line == 2
