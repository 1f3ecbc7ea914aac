import json


from wedderburn import FiniteField, QuaternionAlgebra, parse_poly
from wedderburn.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_llcm_f4(capsys):
    code, out, _ = run(capsys, "--field", "f4", "--twist", "frobenius", "--json", "llcm", "1", "w")
    rep = json.loads(out)
    assert code == 0
    assert rep["polynomial"] == "t^2 + 1" and rep["degree"] == 2 and rep["independent"]
    assert rep["viete"] is True


def test_llcm_quaternion(capsys):
    code, out, _ = run(capsys, "--quaternion", "llcm", "i", "j")
    assert code == 0 and "t^2 + 1" in out


def test_llcm_degenerate_warning(capsys):
    code, out, _ = run(capsys, "llcm", "w", "w")
    assert code == 0 and "degree 1" in out and "warning" in out
    code, _, _ = run(capsys, "--strict", "llcm", "w", "w")
    assert code == 1


def test_factor_json_schema(capsys):
    code, out, _ = run(capsys, "--field", "f4", "--twist", "frobenius", "--json", "factor", "t^2+(1)")
    rep = json.loads(out)
    assert set(rep) == {"polynomial", "classes", "weight", "is_wedderburn", "factorizations", "flag_count"}
    assert rep["flag_count"] == 3 == len(rep["factorizations"])
    assert rep["factorizations"] == sorted(rep["factorizations"])
    assert rep["classes"][0] == {"representative": "1", "dim": 2, "centralizer_order": 2}
    F = FiniteField.builtin("f4").with_twist(S=("frobenius", 1))
    f = parse_poly(F, rep["polynomial"])
    for fac in rep["factorizations"]:
        prod = parse_poly(F, "1")
        for b in fac:
            prod = prod * parse_poly(F, f"t - ({b})")
        assert prod == f


def test_factor_linear_and_non_w(capsys):
    code, out, _ = run(capsys, "--json", "factor", "t-(w)")
    assert json.loads(out)["flag_count"] == 1
    code, out, _ = run(capsys, "--twist", "frobenius", "--json", "factor", "t^2")
    rep = json.loads(out)
    assert not rep["is_wedderburn"] and rep["weight"] == 1
    assert run(capsys, "--twist", "frobenius", "--strict", "factor", "t^2")[0] == 1


def test_factor_errors(capsys):
    code, _, err = run(capsys, "factor", "(w)*t + 1")
    assert code == 2 and "monic" in err
    code, _, err = run(capsys, "--quaternion", "factor", "t^2 + 1")
    assert code == 2 and "candidates" in err
    code, out, _ = run(capsys, "--quaternion", "--json", "factor", "t^2 + 1", "--candidates", "i", "j", "k")
    rep = json.loads(out)
    assert code == 0 and rep["is_wedderburn"] and rep["factorizations"] == []


def test_parse_error_exit_code(capsys):
    code, _, err = run(capsys, "llcm", "w +")
    assert code == 2 and "position" in err


def test_pindep_and_vdm(capsys):
    code, out, _ = run(capsys, "--twist", "frobenius", "--json", "pindep", "1", "w")
    rep = json.loads(out)
    assert rep["independent"] and rep["U"][1][1] == "w + 1"
    code, out, _ = run(capsys, "--twist", "frobenius", "--json", "vdm", "1", "w")
    rep = json.loads(out)
    assert rep["V"] == [["1", "1"], ["1", "w"]]
    assert rep["diagonal"] == ["w + 1", "w + 1"]
    assert rep["pivots"] == ["1", "w + 1"]
    assert "inverse" in rep
    assert run(capsys, "--strict", "vdm", "w", "w")[0] == 1


def test_duo_example(capsys):
    code, out, _ = run(capsys, "--json", "duo", "m2q", "[[1,1],[0,1]]", "[[0,0],[0,1]]")
    rep = json.loads(out)
    assert code == 0 and rep["exists"] is False and rep["certificate"]
    code, out, _ = run(capsys, "--json", "duo", "z8", "3", "5", "--ring-check")
    rep = json.loads(out)
    assert rep["exists"] and rep["condition3"] == "universal"
    assert run(capsys, "--strict", "duo", "m2q", "[[1,1],[0,1]]", "[[0,0],[0,1]]")[0] == 1


def test_context_flags(capsys):
    code, out, _ = run(capsys, "--field", "custom(2,w^3+w+1)", "--twist", "frobenius",
                       "--derivation", "inner:w", "llcm", "1", "w")
    assert code == 0
    code, _, err = run(capsys, "--field", "custom(2,w^2+1)", "llcm", "1")
    assert code == 2 and "reducible" in err
    code, _, _ = run(capsys, "--field", "f4", "--quaternion", "llcm", "1")
    assert code == 2
    code, out, _ = run(capsys, "--ratfunc", "--derivation", "ddx", "llcm", "x", "x^2")
    assert code == 0 and "degree 2" in out


def test_selftest(capsys):
    code, out, _ = run(capsys, "--field", "f8", "--twist", "frobenius", "--derivation", "inner:w",
                       "--seed", "7", "selftest", "--count", "50")
    assert code == 0 and "0 failures" in out


def test_printed_values_reparse(capsys):
    code, out, _ = run(capsys, "--quaternion", "--json", "llcm", "1+i", "j-k/2", "3k")
    rep = json.loads(out)
    H = QuaternionAlgebra()
    for y in rep["exponents"]:
        assert str(H(y)) == y
    assert str(parse_poly(H, rep["polynomial"])) == rep["polynomial"]


def test_module_entry_point():
    import subprocess
    import sys
    res = subprocess.run([sys.executable, "-m", "wedderburn", "--json", "llcm", "1", "w"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0 and json.loads(res.stdout)["degree"] == 2
