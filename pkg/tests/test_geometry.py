import math

import numpy as np
from pytest import approx, mark, raises

from hblab import catalog
from hblab.errors import ContractError, DomainError, EvaluationError, HypothesisError
from hblab.geometry import (
    HALL_RADIUS,
    boundary_curve,
    covering_check,
    radius_asymptotics,
    schlicht_radius,
    verify_radius_sandwich,
)
from hblab.mapping import AnalyticPart, HarmonicMapping
from hblab.report import CheckStatus


def statuses(report):
    return {c.status for c in report.checks}


@mark.parametrize("rho, m", [(0.0, 4096), (1.0, 4096), (0.5, 16)])
def test_boundary_curve_arguments(rho, m):
    with raises(DomainError):
        boundary_curve(catalog.identity(), rho, m)


def test_boundary_curve_distance():
    curve = boundary_curve(catalog.identity(), 0.5, 1024)
    assert curve.points.shape == (1024,)
    assert curve.distance(0j) == approx(0.5, rel=1e-5)
    assert curve.distance(0.5 + 0j) == approx(0, abs=1e-12)
    assert curve.line().is_closed


def test_boundary_curve_rejects_poles():
    h = AnalyticPart(lambda z: np.where(np.abs(z.imag) < 1e-12, np.inf, z), lambda z: 1.0, lambda z: 0.0)
    with raises(EvaluationError) as e:
        boundary_curve(HarmonicMapping(h, AnalyticPart.constant(0.0)), 0.5, 64)
    assert e.value.point == 0.5


@mark.parametrize(
    "name, params, value, tol",
    [
        ("identity", {}, 1.0, 1e-3),
        ("koebe", {}, 0.25, 5e-3),
        ("halfplane", {}, 0.5, 5e-3),
        ("shear", {"b": 0.5}, 0.5, 5e-3),
        ("shear", {"b": 0.8}, 0.2, 5e-3),
    ],
)
def test_schlicht_radius_at_origin(name, params, value, tol):
    estimate = schlicht_radius(catalog.get(name, params), 0.0)
    assert estimate.value == approx(value, abs=tol)
    assert estimate.extrapolated
    assert len(estimate.rho_levels) == 9


def test_schlicht_radius_off_center():
    # the identity maps the disk onto itself
    estimate = schlicht_radius(catalog.identity(), 0.6 + 0.2j)
    assert estimate.value == approx(1 - abs(0.6 + 0.2j), abs=1e-3)
    assert all(rho > abs(0.6 + 0.2j) for rho, _ in estimate.rho_levels)


def test_schlicht_radius_contract():
    with raises(ContractError):
        schlicht_radius(catalog.sharpness(0.0), 0.0)
    with raises(DomainError):
        schlicht_radius(catalog.identity(), 1.0)


def test_radius_sandwich():
    z = [0, 0.3, -0.4j, 0.5 + 0.5j]
    report = verify_radius_sandwich(catalog.koebe(), z)
    assert report.suite == "radius"
    assert len(report.checks) == 2 * len(z)
    assert statuses(report) == {CheckStatus.PASS}


@mark.parametrize("b", [0.0, 0.3, 0.8])
def test_covering(b):
    report = covering_check(catalog.shear(b))
    assert statuses(report) == {CheckStatus.PASS}
    omitted = next(c for c in report.checks if c.id == "covering.omitted")
    assert omitted.rhs == HALL_RADIUS


def test_radius_asymptotics_of_quasiconformal_shear(spec):
    path = [1 - 2.0 ** -k for k in range(1, 5)]
    report = radius_asymptotics(catalog.shear(0.5), path, spec)
    ids = {c.id for c in report.checks}
    assert ids == {"asymptotics.growth", "asymptotics.converse", "asymptotics.uniform", "asymptotics.converse_qc"}
    assert statuses(report) == {CheckStatus.PASS}


def test_radius_asymptotics_of_logmap(spec):
    report = radius_asymptotics(catalog.logmap(), [0.5, 0.75], spec)
    assert statuses(report) == {CheckStatus.PASS}
    assert math.isfinite(report.checks[0].margin)


def test_radius_asymptotics_needs_finite_beta(spec):
    with raises(HypothesisError):
        radius_asymptotics(catalog.koebe(), [0.5], spec)
