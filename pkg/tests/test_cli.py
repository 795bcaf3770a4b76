import json
import subprocess
import sys

import pytest

from rubikgalois import fixtures
from rubikgalois.cli import cmd_verify_main, main
from rubikgalois.cube import RUBIK_ORDER
from rubikgalois.polyring import dumps, rational_poly


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_cube_order_generators(capsys):
    code, out = run(capsys, "cube-order", "--generators", "(1,2)")
    assert code == 0 and out.strip() == "generators: 2"
    code, out = run(capsys, "cube-order", "--generators", "(1,2)", "(1,2,3,4)")
    assert out.strip() == "generators: 24"


def test_cube_order_wreath_formula(capsys):
    code, out = run(capsys, "cube-order", "--model", "wreath")
    assert code == 0
    assert f"wreath: {RUBIK_ORDER}" in out and "formula" in out


def test_cube_order_default(capsys):
    code, out = run(capsys, "cube-order")
    rows = dict(line.split(": ") for line in out.strip().splitlines())
    assert int(rows["wreath"]) == int(rows["T1..T6"]) == RUBIK_ORDER
    assert code == (0 if int(rows["alpha,beta"]) == RUBIK_ORDER else 1)


@pytest.mark.parametrize("variant", fixtures.VARIANTS)
def test_verify_main_variants(capsys, variant):
    code, out = run(capsys, "verify-main", "--variant", variant, "--pmax", "400")
    assert code == 0, out
    assert "[FAIL]" not in out and out.count("[PASS]") >= 12


def test_verify_main_reports_first_difference(monkeypatch):
    bad = dict(fixtures.variant("main"))
    desc = list(bad["f24_desc"])
    desc[7] = "-628"
    bad["f24_desc"] = desc
    monkeypatch.setitem(fixtures.load()["variants"], "main", bad)
    check = cmd_verify_main("main", 100)
    assert not check.ok
    assert "X^17: got -627, printed -628" in check.render()


def test_family_out(tmp_path, capsys):
    out = tmp_path / "fam.json"
    code, _ = run(capsys, "family", "--u", "1", "--v", "1", "--out", str(out))
    rep = json.loads(out.read_text())
    assert code == 0
    assert rep["t"] == "16777216/352947" and rep["s"] == "-8916100448256/25937424601"
    assert rep["g_constant_is_square"] and rep["disc_product_is_square"] and rep["squarefree"] == [True, True]
    assert len(rep["p"]["coeffs"]) == 49


def test_family_degenerate_is_usage_error(capsys):
    assert main(["family", "--u", "0"]) == 2


def test_scan_file(tmp_path, capsys):
    path = tmp_path / "f.json"
    path.write_text(dumps(rational_poly([16, 20, 0, 0, 0, 1])))
    code, out = run(capsys, "scan", str(path), "--pmax", "10")
    assert code == 0
    assert out.splitlines() == ["2: skipped (not squarefree mod p)", "3: 5",
                                "5: skipped (not squarefree mod p)", "7: 3 1 1"]


def test_scan_pair(tmp_path, capsys):
    f, g = tmp_path / "f.json", tmp_path / "g.json"
    f.write_text(dumps(rational_poly([1, 0, 1])))
    g.write_text(dumps(rational_poly([-2, 0, 1])))
    code, out = run(capsys, "scan", str(f), "--g", str(g), "--pmax", "7")
    assert "7: 2 | 1 1" in out


def test_scan_missing_file(capsys):
    assert main(["scan", "/nonexistent.json"]) == 2


def test_appendix_ec(capsys):
    code, out = run(capsys, "appendix-ec", "--n", "5")
    assert code == 0
    xs = [line.split("x = ")[1].split()[0] for line in out.splitlines()]
    assert xs == fixtures.load()["appendix"]["ec_x"]
    assert "t = -452984832/14706125" in out.splitlines()[0]


def test_distinguish24(capsys):
    code, out = run(capsys, "distinguish24")
    assert code == 0
    assert "natural: 21819" in out and "sign_twisted: 64827" in out and "order: 88179840" in out


def test_chebotarev_small(tmp_path, capsys):
    out = tmp_path / "c.json"
    code, _ = run(capsys, "chebotarev", "--pmax", "300", "--samples", "500", "--seed", "4", "--out", str(out))
    rep = json.loads(out.read_text())
    assert code == (0 if rep["tv_distance"] <= 0.2 and not rep["compatibility_failures"] else 1)
    text1 = out.read_text()
    run(capsys, "chebotarev", "--pmax", "300", "--samples", "500", "--seed", "4", "--out", str(out))
    assert out.read_text() == text1


def test_usage_errors(capsys):
    assert main([]) == 2
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2
    assert main(["family", "--u", "abc"]) == 2


def test_write_fixtures(tmp_path):
    path = tmp_path / "fx.json"
    assert main(["--write-fixtures", str(path)]) == 0
    data = json.loads(path.read_text())
    for name in fixtures.VARIANTS:
        assert data["variants"][name]["f24_desc"] == fixtures.variant(name)["f24_desc"]
        assert data["variants"][name]["r"] == fixtures.variant(name)["r"]
    assert data["appendix"]["ec_x"] == fixtures.load()["appendix"]["ec_x"]


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "rubikgalois", "appendix-ec", "--n", "2"],
                         capture_output=True, text=True, check=True)
    assert "8185/256" in res.stdout
