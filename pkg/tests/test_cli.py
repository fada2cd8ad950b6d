import csv
import io
import json
import subprocess
import sys

import pytest

from opoly.cli import main
from opoly.core import ClassicalFamily
from opoly.transforms import MeasureSpec
from opoly.zeros import MassScanResult, ZeroSet, uvarov_zeros

JAC_TABLE = "table --family jacobi --alpha 0 --beta 0 --n 3 --a 1 --masses 0,1,10,100,1000"
LAG_TABLE = "table --family laguerre --alpha 2 --n 3 --a 0 --masses 0,1,10,100,1000"


def run(capsys, cmd):
    code = main(cmd.split())
    out, err = capsys.readouterr()
    return code, out, err


def rows(text):
    return list(csv.reader(io.StringIO(text)))


def test_table_jacobi(capsys):
    code, out, _ = run(capsys, JAC_TABLE)
    assert code == 0
    r = rows(out)
    assert r[0] == ["N", "x1", "x2", "x3"]
    assert r[2] == ["1", "-0.757872", "0.0753429", "0.955257"]
    assert r[5] == ["1000", "-0.754974", "0.0882886", "0.999944"]


def test_table_laguerre_json(capsys):
    code, out, _ = run(capsys, LAG_TABLE + " --format json")
    doc = json.loads(out)
    assert code == 0 and doc["schema_version"] == 1 and doc["kind"] == "table"
    got = [r["zeros"] for r in doc["data"]["rows"]]
    assert got[1] == [0.321731, 3.64053, 8.53774]
    assert got[3] == [0.00399042, 3.55151, 8.45049]


def test_table_classical_only(capsys):
    code, out, _ = run(capsys, "table --family laguerre --alpha 2 --n 3 --a 0 --masses 0")
    assert code == 0 and rows(out)[1] == ["0", "1.51739", "4.31158", "9.17103"]


def test_table_full_precision(capsys):
    _, out, _ = run(capsys, LAG_TABLE + " --precision full --format json")
    z = json.loads(out)["data"]["rows"][2]["zeros"]
    ref = uvarov_zeros(MeasureSpec(ClassicalFamily.laguerre(2), 0.0, 10.0), 3).zeros
    assert tuple(z) == ref


def test_deterministic_output(capsys):
    _, a, _ = run(capsys, JAC_TABLE + " --precision full")
    _, b, _ = run(capsys, JAC_TABLE + " --precision full")
    assert a == b


def test_zeros_json_roundtrip(capsys):
    code, out, _ = run(capsys, "zeros --family jacobi --alpha 0.5 --beta 2 --n 5 --a -1.5 --mass 10 --format json --precision full")
    zs = ZeroSet.from_dict(json.loads(out)["data"])
    assert code == 0
    assert zs == uvarov_zeros(MeasureSpec(ClassicalFamily.jacobi(0.5, 2), -1.5, 10.0), 5)


def test_zeros_hermite_and_christoffel(capsys):
    code, out, _ = run(capsys, "zeros --family hermite --n 4 --mass 1")
    assert code == 0 and len(rows(out)) == 5
    code, out, _ = run(capsys, "zeros --family laguerre --alpha 2 --n 2 --a 0 --level 2")
    assert code == 0 and rows(out)[1] == ["1", "3.55051"]


def test_scan_rate_column(capsys):
    code, out, _ = run(capsys, "scan --family laguerre --alpha 2 --n 3 --a 0 --masses 1,10,100,1000,10000,100000,1000000 --format json --precision full")
    res = MassScanResult.from_dict(json.loads(out)["data"])
    r1 = [r[0] for r in res.rates]
    assert code == 0 and abs(r1[-1] - 0.4) < 1e-5
    assert all(abs(u - 0.4) > abs(v - 0.4) for u, v in zip(r1, r1[1:]))


def test_scan_jacobi_increasing(capsys):
    code, out, _ = run(capsys, "scan --family jacobi --alpha 0 --beta 0 --n 3 --a 1")
    r = rows(out)
    verdict = next(x for x in r if x[0] == "verdict")
    assert code == 0 and verdict[1:4] == ["pass", "pass", "pass"]


def test_empty_grid_usage_error(capsys):
    code, _, err = run(capsys, "scan --family laguerre --alpha 2 --n 3 --a 0 --masses ,")
    assert code == 2 and "empty" in err


@pytest.mark.parametrize("cmd", [
    "min-mass --family laguerre --alpha 2 --n 3 --a -1",
    "min-mass --family jacobi --alpha 0 --beta 0 --n 3 --a -2",
])
def test_min_mass_straddle(capsys, cmd):
    code, out, _ = run(capsys, cmd + " --format json --precision full")
    d = json.loads(out)["data"]
    assert code == 0 and d["straddle"] is True
    assert d["N0"] == pytest.approx(d["N0_bisection"], rel=1e-10)


def test_min_mass_boundary_rejected(capsys):
    code, _, err = run(capsys, "min-mass --family laguerre --alpha 2 --n 3 --a 0")
    assert code == 2 and "outside" in err


def test_inside_support_rejected(capsys):
    code, _, _ = run(capsys, "zeros --family jacobi --n 3 --a 0.2 --mass 1")
    assert code == 2


def test_missing_a(capsys):
    code, _, err = run(capsys, "zeros --family jacobi --n 3 --mass 1")
    assert code == 2 and "--a" in err


def test_residual(capsys):
    code, out, _ = run(capsys, "residual --family jacobi --alpha 0.5 --beta 0.5 --n 4 --a -1 --mass 3 --format json --precision full")
    d = json.loads(out)["data"]
    assert code == 0 and d["case"] == "jacobi_m1"
    assert max(d["report"]["residuals"]) < 1e-6


def test_plot_data(capsys):
    code, out, _ = run(capsys, "plot-data --family jacobi --alpha 0 --beta 0 --n 3 --a 1 --eps 0,1,10 --x-min -1 --x-max 1 --samples 11")
    r = rows(out)
    assert code == 0 and r[0] == ["x", "N=0", "N=1", "N=10"] and len(r) == 12
    # p_3 at x = 1 with N = 0: Legendre value 2/5
    assert float(r[-1][1]) == pytest.approx(0.4, rel=1e-5)


def test_plot_data_empty_range(capsys):
    code, _, _ = run(capsys, "plot-data --family laguerre --alpha 2 --n 3 --a 0 --x-min 3 --x-max 3")
    assert code == 2


def test_out_file(tmp_path, capsys):
    path = tmp_path / "t.csv"
    code, out, _ = run(capsys, LAG_TABLE + f" --out {path}")
    assert code == 0 and out == "" and path.read_text().startswith("N,x1")


def test_bad_family_is_usage_error(capsys):
    with pytest.raises(SystemExit) as e:
        main(["table", "--family", "chebyshev"])
    assert e.value.code == 2


def test_verify_suite_and_negative_control(capsys):
    code, out, _ = run(capsys, "verify --suite electrostatics")
    assert code == 0 and all(r[2] == "pass" for r in rows(out)[1:])
    code, out, _ = run(capsys, "verify --suite electrostatics --perturb-b 1e-3")
    failed = [r[1] for r in rows(out)[1:] if r[2] == "fail"]
    assert code == 1 and failed == ["structure-relation-identity"]


def test_module_entry_point():
    p = subprocess.run([sys.executable, "-m", "opoly", "table", "--family", "laguerre", "--alpha", "2", "--n", "3",
                        "--a", "0", "--masses", "1"], capture_output=True, text=True)
    assert p.returncode == 0 and "0.321731" in p.stdout
