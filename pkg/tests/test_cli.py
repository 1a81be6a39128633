import csv
import io
import json
from fractions import Fraction
from pathlib import Path

import pytest

from lbpriordan import riordan
from lbpriordan.cli import run
from lbpriordan.families import FamilyParams, lbp_array, lbp_triangle
from lbpriordan.oeis import OEISNetworkError

GOLDEN = Path(__file__).parent / "golden"

GOLDEN_RUNS = [
    ("triangle --family lbp --alpha 1 --beta 1 --rows 6", "triangle_lbp_1_1.txt"),
    ("moments --family gen --alpha 2 --beta 1 --gamma 1 -n 6", "moments_gen_2_1_1.txt"),
    ("hankel --terms 1,2,6,22,90,394,1806", "hankel_schroeder.txt"),
]


def call(args, **kw):
    out, err = io.StringIO(), io.StringIO()
    code = run(args.split() if isinstance(args, str) else args, out, err, **kw)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize("args,golden", GOLDEN_RUNS)
def test_golden(args, golden):
    code, out, _ = call(args)
    assert code == 0
    assert out.encode() == (GOLDEN / golden).read_bytes()


def check_bfile(text, expected):
    assert text.endswith("\n") and text.isascii()
    lines = text.splitlines()
    assert len(lines) == len(expected)
    for n, line in enumerate(lines):
        idx, val = line.split(" ")
        assert int(idx) == n and str(int(val)) == val
        assert int(val) == expected[n]


def test_bfile_schroeder():
    code, out, _ = call("moments --alpha 1 --beta 1 -n 10 --format bfile")
    assert code == 0
    check_bfile(out, [1, 2, 6, 22, 90, 394, 1806, 8558, 41586, 206098])


def test_bfile_rejects_fractions():
    code, out, err = call("moments --alpha 1/2 --beta 1 -n 4 --format bfile")
    assert code == 1 and out == "" and "integers" in err


def test_csv_triangle_round_trip():
    code, out, _ = call("inverse --alpha 3/2 --beta=-2/3 --rows 7 --format csv")
    assert code == 0
    rows = [[Fraction(v) for v in r] for r in csv.reader(io.StringIO(out))]
    expected = riordan.inv(lbp_array(FamilyParams(Fraction(3, 2), Fraction(-2, 3)), 7)).triangle()
    assert rows == [list(r) for r in expected]


def test_json_triangle_round_trip():
    code, out, _ = call("triangle --alpha 3/2 --beta=-2/3 --rows 7 --format json")
    assert code == 0
    rows = [[Fraction(v) for v in r] for r in json.loads(out)["rows"]]
    expected = lbp_triangle(FamilyParams(Fraction(3, 2), Fraction(-2, 3)), 7).coeffs
    assert rows == [list(r) for r in expected]
    assert all(isinstance(v, str) for r in json.loads(out)["rows"] for v in r)


def test_json_sequence():
    code, out, _ = call("rowsums --inverse --rows 6 --format json")
    assert json.loads(out) == {"terms": ["1", "3", "11", "45", "197", "903"]}


@pytest.mark.parametrize("args,expected", [
    ("cf --kind t -n 6", "1,2,6,22,90,394\n"),
    ("cf --kind j -n 6", "1,2,6,22,90,394\n"),
    ("cf --kind rowsums -n 6", "1,3,11,45,197,903\n"),
    ("cf --b 1,2,2 --lam 1,1 -n 6", "1,1,2,5,14,42\n"),
    ("jfrac-from-moments --terms 1,2,6,22,90,394", "b: 2,3,3\nlam: 2,2\n"),
    ("riordan --g 1/(1-x) --f x/(1-x) --rows 4 --format csv", "1\n1,1\n1,2,1\n1,3,3,1\n"),
    ("riordan --g (1-x)/(1+x) --f x*(1-x)/(1+x) --rows 5 --show a --format csv", "1,-2,-2,-6,-22\n"),
    ("derivative --rows 3 --format csv", "1\n-4,2\n8,-12,3\n"),
    ("detrep -n 4", "2,-12,18,-8,1\n"),
    ("hankel --alpha 2 --beta 1 -n 4", "1,3,27,729\n"),
    ("oeis-match --terms 1,3,11,47,223,1135", "A174347\n"),
])
def test_verbs(args, expected):
    code, out, err = call(args)
    assert (code, err) == (0, "")
    assert out == expected


@pytest.mark.parametrize("args", [
    "triangle --rows 0",
    "triangle --alpha x",
    "frobnicate",
    "riordan --g 1/(1+x --f x",
    "riordan --g 1 --f 1+x",
    "hankel --terms 1,2,6 -n 4",
    "oeis-match --terms 1,2,3",
    "oeis-match --terms 1/2,1,1,1",
    "jfrac-from-moments --terms 1,2,6,22 --format bfile",
])
def test_invalid_input_exit_1(args):
    code, out, err = call(args)
    assert code == 1 and out == "" and err.startswith("lbpriordan:")


def test_riordan_validation_names_invariant():
    code, _, err = call(["riordan", "--g", "2", "--f", "x"])
    assert code == 1 and "g(0)" in err


def test_computation_error_exit_2():
    code, out, err = call("jfrac-from-moments --terms 1,1,1,1,1")
    assert code == 2 and out == ""


def test_network_error_exit_3(tmp_path):
    def failing(url, params, timeout):
        raise OEISNetworkError("unreachable")

    code, out, err = call(["oeis-match", "--terms", "1,2,6,22", "--live", "--cache-dir", str(tmp_path)],
                          transport=failing)
    assert code == 3 and "network" in err


def test_offline_oeis_ignores_transport():
    def failing(url, params, timeout):
        raise AssertionError("network touched")

    code, out, _ = call("oeis-match --terms 1,2,6,22,90,394", transport=failing)
    assert code == 0 and "A006318" in out.split()
