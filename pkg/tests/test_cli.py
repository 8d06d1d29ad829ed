import io
import json
import subprocess
import sys

import pytest

from genus3.cli import bundled_curves, load_curve, parse_curve, run, serialize_curve


def g3(*argv):
    buf = io.StringIO()
    code = run(list(argv), buf)
    return code, json.loads(buf.getvalue())


def test_count_and_brute_agree_on_bundled_files():
    checked = 0
    for name in bundled_curves():
        C = load_curve(name)
        q = C.base.Q
        for k in (1, 2):
            if q ** (2 * k) > 10**8 or (k == 2 and q > 31):
                continue
            c1, fast = g3("count", "--curve", name, "--ext", str(k))
            c2, slow = g3("count", "--curve", name, "--ext", str(k), "--brute")
            assert c1 == c2 == 0, name
            assert fast["results"]["N"] == slow["results"]["N"], (name, k)
            checked += 1
    assert checked >= 20


def test_round_trip_bundled():
    for name in bundled_curves():
        C = load_curve(name)
        again = parse_curve(json.loads(json.dumps(serialize_curve(C))))
        assert serialize_curve(again) == serialize_curve(C), name


def test_unknown_keys_rejected(tmp_path):
    base = {"field": {"p": 7}, "model": "quartic", "coeffs": {"400": 1, "040": 1, "004": 1}}
    for extra in ({"comment": "x"}, {"field": {"p": 7, "q": 7}}):
        f = tmp_path / "c.json"
        f.write_text(json.dumps({**base, **extra}))
        code, rep = g3("count", "--curve", str(f))
        assert code == 1 and rep["error"]["type"] == "InvalidInput"
    f.write_text(json.dumps(base))
    assert g3("count", "--curve", str(f)) == g3("count", "--curve", str(f))
    assert g3("count", "--curve", str(f))[1]["results"]["N"] == 8


@pytest.mark.parametrize(
    "argv",
    [
        ("count", "--curve", "does_not_exist.json"),
        ("count", "--curve", "q8_f8.json", "--ext", "0"),
        ("bound", "--q", "6"),
        ("family", "--name", "C", "--q", "15", "--params", "2"),
        ("family", "--name", "D", "--q", "7", "--params", "2"),
        ("family", "--name", "HLP", "--q", "37", "--params", "1,0,2"),
        ("nonsense",),
        (),
    ],
)
def test_invalid_input_exits_1(argv):
    code, rep = g3(*argv)
    assert code == 1
    assert "error" in rep


def test_bad_json_file(tmp_path):
    f = tmp_path / "bad.json"
    f.write_text("{not json")
    assert g3("count", "--curve", str(f))[0] == 1


def test_hyperelliptic_files():
    code, rep = g3("count", "--curve", "hyper_x7_minus_x_plus_1_f3.json")
    assert code == 0 and rep["results"]["N"] == 7
    code, rep = g3("smooth", "--curve", "hyper_as_x7_f2.json")
    assert rep["results"]["smooth"] is True
    code, rep = g3("fnc", "--curve", "hyper_as_x7_f2.json")
    assert code == 1


def test_smooth_reports():
    assert g3("smooth", "--curve", "q8_f8.json")[1]["results"] == {"smooth": True}
    code, rep = g3("smooth", "--curve", "X_m7_8_f41.json")
    assert code == 0 and rep["results"]["smooth"] is False
    assert rep["results"]["diagnostic"]


def test_fnc_q8():
    code, rep = g3("fnc", "--curve", "q8_f8.json")
    assert code == 0
    assert rep["results"] == {"frobenius_nonclassical": True, "N": 24, "hv_count": 24, "sv_bound": 22}


def test_zeta_q8():
    code, rep = g3("zeta", "--curve", "q8_f8.json")
    assert code == 0
    r = rep["results"]
    assert r["counts"] == [24, 38, 528] and r["weil"] is True
    assert r["L"] == [1, 15, 99, 365, 792, 960, 512]


def test_bound_32():
    code, rep = g3("bound", "--q", "32")
    r = rep["results"]
    assert code == 0
    assert r["best"] == 64 and r["achieved_by"] == ["lemma"] and r["known"] == 64


def test_table():
    code, rep = g3("table")
    assert code == 0 and len(rep["results"]["rows"]) == 35
    code, rep = g3("table", "--verify")
    assert code == 0
    rows = {r["q"]: r for r in rep["results"]["rows"]}
    assert rows[97]["witness"] == "paper-witness-verified"
    assert rows[41]["smooth"] is False and rows[43]["smooth"] is True
    assert rows[47]["witness"] == "open"


def test_family_and_search():
    code, rep = g3("family", "--name", "D", "--q", "31", "--params", "4,2", "--count")
    assert code == 0 and rep["results"]["N"] == 62
    code, rep = g3("family", "--name", "C", "--q", "49", "--params", "[3,1]", "--count")
    assert code == 0
    code, rep = g3("search", "--name", "C", "--q", "53", "--target", "96")
    assert {"params": [2], "N": 96} in rep["results"]["hits"]
    code, rep = g3("search", "--name", "D", "--q", "11", "--budget", "5")
    assert rep["results"]["budget_exceeded"] is True and rep["results"]["tried"] == 5


def test_derive():
    code, rep = g3("derive-fnc-f2")
    assert code == 0 and rep["results"]["monomials"] == 9


def test_seed_option_accepted():
    assert g3("--seed", "0x10", "smooth", "--curve", "fermat9.json")[1]["results"]["smooth"] is True


def test_console_script_is_deterministic():
    cmd = [sys.executable, "-m", "genus3.cli", "zeta", "--curve", "C_2_f29.json"]
    a = subprocess.run(cmd, capture_output=True, text=True, check=False)
    b = subprocess.run(cmd, capture_output=True, text=True, check=False)
    assert a.returncode == 0, a.stderr
    assert json.loads(a.stdout)["results"]["weil"] is True
    assert a.stdout == b.stdout
