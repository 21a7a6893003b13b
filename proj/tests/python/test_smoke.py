import math

import pytest

import hypheat


def test_kernel_h3_at_origin():
    k = hypheat.kernel(3, 1.0, 0.0)
    assert k.dt_log_k == -2.5
    assert k.dr_log_k == 0.0
    assert k.log_k == pytest.approx(-1.5 * math.log(4 * math.pi) - 1.0, rel=1e-14)
    assert k.method == "closed_form_h3"


def test_even_kernel_and_alpha():
    assert hypheat.kernel(2, 1.0, 0.5).method == "even_quadrature"
    a = hypheat.alpha_profile(3, 2.0, 1.5)
    assert a.alpha == pytest.approx(1.5 / math.sinh(1.5), rel=1e-14)
    assert a.dt_log_alpha == 0.0


def test_unsupported_dimension():
    with pytest.raises(ValueError):
        hypheat.kernel(12, 1.0, 0.0)


def test_geometry():
    o = hypheat.HyperPoint.origin(3)
    y = hypheat.HyperPoint([math.cosh(1.0), math.sinh(1.0), 0.0, 0.0])
    assert hypheat.distance(o, y) == pytest.approx(1.0, rel=1e-14)
    assert hypheat.distance(o, hypheat.random_point(3, 5.0, 42)) <= 5.0


def test_sharp_bound_is_attained():
    k = hypheat.kernel(3, 1.0, 2.0)
    assert hypheat.sharp_h3_bound(1.0, k.dt_log_k) == pytest.approx(-k.dr_log_k, rel=1e-14)
    s = hypheat.SolutionSample(t=1.0, grad_sq=k.dr_log_k**2, dt_log=k.dt_log_k, dim=3)
    out = hypheat.check_estimate("sharp-h3", s)
    assert out.holds
    assert abs(out.slack) < 1e-12


def test_reports():
    grid = hypheat.grid_scan("general-h", dims=[5])
    assert grid["passed"] and grid["schema_version"] == 1
    mix = hypheat.superposition_suite("dt-lower", 2, trials=50, seed=1)
    assert mix["passed"]
    neg = hypheat.grid_scan("dt-lower", dims=[2], odd_constant=True)
    assert not neg["passed"]
    assert hypheat.harnack_suite(3, trials=50)["passed"]


def test_series_and_concavity():
    first = hypheat.series_report("first", 60)
    assert first["rows"][3]["coefficient_numerator"] == "-512"
    second = hypheat.series_report("second", 40)
    assert second["rows"][5]["inner"] == "-1680"
    assert hypheat.concavity_scan()["passed"]


def test_comparison_csv_shape():
    lines = hypheat.comparison_csv([3]).strip().split("\n")
    assert lines[0].startswith("dim,t,r,")
    assert len(lines) == 1 + 8 * 65
