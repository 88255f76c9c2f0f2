import json
import os
import subprocess

import pytest

import qgollnitz as g


def test_qbinom_and_terms():
    b = g.qbinom(4, 2)
    assert str(b) == "1 + q + 2*q^2 + q^3 + q^4"
    assert b.terms() == [(0, 1), (1, 1), (2, 2), (3, 1), (4, 1)]
    assert b.at_one() == 6
    assert str(g.qbinom(-1, 1)) == "-q^-1"
    assert g.qbinom(2, 3).is_zero()


def test_big_coefficients_are_python_ints():
    big = g.qbinom(70, 35).at_one()
    assert big == 112186277816662845432
    assert isinstance(big, int)


def test_poly_arithmetic():
    p = g.Poly.parse("1 - q")
    assert p * g.Poly.parse("1 + q") == g.Poly.parse("1 - q^2")
    assert (p - p).is_zero()
    assert repr(g.Poly.monomial(3, -2)) == "Poly('3*q^-2')"


def test_key_identity():
    for args in [(2, 1, 1, 4, 5), (0, 0, 0, 0, 0), (1, 1, 0, -2, 3)]:
        assert g.check_key(*args)
        assert g.lhs_g(*args) == g.rhs_p(*args)
    assert g.rhs_p(1, 1, 1, 3, 3) == g.closed_form_diag(1, 1, 1, 3)
    assert g.boundary_value(0, 0, 2, 5) == g.qbinom(5, 2).shifted(3)


def test_partitions():
    assert g.count_P(4, 6, 2, 0, 0) == 1
    assert g.count_G(3, 3, 0, 0, 0, 0, 0, 1) == 1
    assert g.gollnitz_B(11) == 2
    assert all(g.gollnitz_B(n) == g.gollnitz_C(n) for n in range(40))
    assert g.check_theorem1(5, 2, 1, 1)


def test_sweep_report():
    report = g.sweep("key", {"i": (0, 2), "L": 3}, timing=False)
    assert report == {"identity": "key", "total": 3 * 4 * 4 * 1 * 9, "failures": [],
                      "elapsed_ms": 0, "version": g.__version__}
    assert "four-param" in g.identities()
    with pytest.raises(ValueError):
        g.sweep("key", {"i": (3, 1)})
    with pytest.raises(ValueError):
        g.sweep("no-such-identity")


def test_sweep_parallel_matches_serial():
    one = g.sweep("recurrence-andrews", {"L": (0, 6)}, jobs=1, timing=False)
    eight = g.sweep("recurrence-andrews", {"L": (0, 6)}, jobs=8, timing=False)
    assert one == eight


@pytest.mark.skipif("QGOLLNITZ_CLI" not in os.environ, reason="command-line tool not built")
def test_cli_json_matches_module():
    out = subprocess.run([os.environ["QGOLLNITZ_CLI"], "gollnitz", "--n", "0..30", "--format", "json",
                          "--no-timing"], check=True, capture_output=True, text=True).stdout
    assert json.loads(out) == g.sweep("gollnitz", {"n": (0, 30)}, timing=False)
