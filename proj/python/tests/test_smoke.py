import math
import os
import subprocess

import pytest

import chc


def test_u11_transfer_matches_theta_lift():
    lam = ["1/2", "-1/2"]
    assert chc.validate(1, 1, lam) == (1, 0)
    assert chc.theta_signature(1, 1, lam) == (2, 0)
    brute = chc.transfer_bruteforce(1, 1, lam, (2, 0))
    closed = chc.transfer_closed_form(1, 1, lam, (2, 0))
    assert closed == {("1/2", "-1/2"): 1, ("-1/2", "1/2"): -1}
    assert chc.equal_up_to_constant(brute, closed)
    assert chc.transfer_bruteforce(1, 1, lam, (1, 1)) == {}


def test_invalid_parameter_raises():
    with pytest.raises(chc.InvalidParameter, match="NonHalfInteger"):
        chc.validate(1, 1, ["1", "-1"])


def test_ds_value_and_singular_point():
    assert chc.ds_evaluate(1, 1, ["1/2", "-1/2"], [math.pi, 0.0]) == pytest.approx(-0.5)
    with pytest.raises(chc.SingularPoint):
        chc.ds_evaluate(1, 1, ["1/2", "-1/2"], [0.3, 0.3])


def test_cauchy_integral_and_quadrature():
    assert chc.cauchy_circle_integral(-1, 2.0) == pytest.approx(-0.5)
    assert abs(chc.circle_quadrature(0, 0.5) - 1.0) < 1e-10
    assert abs(chc.circle_quadrature(3, 2.0)) < 1e-10


def test_small_sweep():
    ok, rows = chc.verify(3, "5/2")
    assert ok
    assert all(r["match"] and r["zero_elsewhere"] and r["orbit_ok"] for r in rows)


def test_theta_parameter_and_tau():
    assert chc.theta_parameter(2, 2, ["3/2", "-1/2", "5/2", "-5/2"]) == ("3/2", "-5/2", "5/2", "-1/2")
    assert chc.tau(2, 2, ["-1/2", "-3/2", "-5/2", "-7/2"]) == [3, 4, 1, 2]


def test_omega_constant_is_finite():
    assert math.isfinite(chc.omega_constant(300, 1))


@pytest.mark.skipif("CHC_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_transfer_exit_code():
    out = subprocess.run([os.environ["CHC_CLI"], "transfer", "--p", "0", "--q", "1", "--lambda", "1/2"],
                         capture_output=True, text=True, check=True)
    assert '"match": true' in out.stdout
