import math

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st
from pytest import approx, mark, raises

from hblab import catalog, transforms
from hblab.errors import ContractError, DomainError, HypothesisError, NotSensePreservingError
from hblab.extremal import bloch_type_seminorm
from hblab.mapping import AnalyticPart, Dilatation, MappingClass, evaluate, jacobian
from hblab.transforms import (
    A2_BOUND_S_H0,
    BeckerCertificate,
    DiskAutomorphism,
    a2_bound,
    affine_normalize,
    affine_shear,
    becker_margin,
    koebe_transform,
    normalize,
    pommerenke_forward,
    pommerenke_inverse,
    precompose_automorphism,
    schwarz_pick_bound,
    second_coefficient,
)

POINTS = np.array([0, 0.3, -0.5j, 0.6 + 0.2j, -0.8 + 0.1j])

disk_points = st.builds(
    lambda r, t: r * complex(math.cos(t), math.sin(t)), st.floats(0, 0.95), st.floats(0, 2 * math.pi)
)
coefficients = st.complex_numbers(max_magnitude=5, allow_nan=False, allow_infinity=False)


def test_automorphism():
    phi = DiskAutomorphism(0.5j)
    assert phi(0) == 0.5j
    assert DiskAutomorphism(-0.5j)(phi(POINTS)) == approx(POINTS)
    assert np.all(np.abs(phi(POINTS)) < 1)
    step = 1e-6
    assert phi.first(0.2) == approx((phi(0.2 + step) - phi(0.2 - step)) / (2 * step), rel=1e-6)
    assert phi.second(0.2) == approx((phi.first(0.2 + step) - phi.first(0.2 - step)) / (2 * step), rel=1e-6)
    with raises(DomainError):
        DiskAutomorphism(1.0)


@given(a=coefficients, b=coefficients, z=disk_points)
@settings(max_examples=50)
def test_shear_jacobian_law(a, b, z):
    f = catalog.sharpness(0.5)
    F = affine_shear(f, a, b)
    expected = (abs(a) ** 2 - abs(b) ** 2) * jacobian(f, z)
    scale = (abs(a) + abs(b)) ** 2 * (abs(complex(f.h.first(z))) + abs(complex(f.g.first(z)))) ** 2
    assert abs(jacobian(F, z) - expected) <= 1e-12 * max(scale, 1.0)


def test_shear_flags():
    f = catalog.shear(0.3)
    assert affine_shear(f, 1, 0) is f
    assert affine_shear(f, 2, 1).sense_preserving
    flipped = affine_shear(f, 1, 2)
    assert not flipped.sense_preserving
    assert flipped.univalent
    assert not affine_shear(f, 1, 1).univalent


@mark.parametrize("alpha", [0.3, 0.5j, -0.7])
def test_automorphism_jacobian_law(alpha):
    f = catalog.sharpness(0.5)
    phi = DiskAutomorphism(alpha)
    F = precompose_automorphism(f, phi)
    w = phi(POINTS)
    lhs = (1 - np.abs(POINTS) ** 2) ** 2 * jacobian(F, POINTS)
    rhs = (1 - np.abs(w) ** 2) ** 2 * jacobian(f, w)
    assert lhs == approx(rhs, rel=1e-9)
    assert F.omega.value(POINTS) == approx(f.omega.value(w))


@mark.parametrize("alpha", [0.3, 0.5j, -0.7])
def test_automorphism_invariance_of_beta(spec, alpha):
    f = catalog.logmap()
    beta = bloch_type_seminorm(f, spec).value
    assert bloch_type_seminorm(precompose_automorphism(f, DiskAutomorphism(alpha)), spec).value == approx(beta, rel=0.02)


def test_series_parts_are_reexpanded():
    f = catalog.logmap()
    f = f.replace(h=AnalyticPart.from_series(f.h.taylor(32)))
    F = precompose_automorphism(f, DiskAutomorphism(0.2))
    assert F.h.series.order == 64
    assert F.h.value(0.1) == approx(f.h.value(DiskAutomorphism(0.2)(0.1)), rel=1e-8)


def test_normalize():
    F = normalize(catalog.sharpness(0.0))
    assert F.declared_class is MappingClass.S_H
    assert F.h.value(0.0) == approx(0, abs=1e-12)
    assert F.h.first(0.0) == approx(1)
    assert F.g.value(0.0) == approx(0, abs=1e-12)


def test_affine_normalize_shear_gives_identity():
    f0 = affine_normalize(catalog.shear(0.5))
    assert f0.declared_class is MappingClass.S_H0
    assert evaluate(f0, POINTS) == approx(POINTS)
    assert evaluate(affine_shear(f0, 1, 0.5), POINTS) == approx(evaluate(catalog.shear(0.5), POINTS))


def test_affine_normalize_contract():
    with raises(ContractError):
        affine_normalize(catalog.sharpness(0.0))
    identity = catalog.identity()
    assert affine_normalize(identity) is identity


def test_affine_normalize_rejects_large_b1():
    f = catalog.shear(0.5)
    f = f.replace(g=affine_shear(f, 0, 2).h)
    with raises(NotSensePreservingError):
        affine_normalize(f)


@mark.parametrize("alpha, value", [(0, 2.0), (0.5, 2.0), (-0.5, 2.0)])
def test_koebe_second_coefficient(alpha, value):
    assert abs(second_coefficient(catalog.koebe(), alpha)) == approx(value)


def test_a2_bound():
    assert a2_bound(0) == A2_BOUND_S_H0 == 49
    assert a2_bound(0.5j) == approx(49.25)


def test_koebe_transform():
    f = catalog.koebe()
    T = koebe_transform(f, 0.5)
    assert T.declared_class is MappingClass.S_H
    assert T.h.value(0.0) == approx(0, abs=1e-12)
    assert T.h.first(0.0) == approx(1)
    assert T.h.second(0.0) / 2 == approx(second_coefficient(f, 0.5))
    assert koebe_transform(f, 0) is f
    with raises(ContractError):
        koebe_transform(catalog.sharpness(0.0), 0.5)


def test_pommerenke_forward_from_koebe(spec):
    f = pommerenke_forward(catalog.koebe(), Dilatation.constant(0.0))
    assert f.h.first(0.3) == approx(1 / 1.3 + 3 / 0.7)
    assert f.h.second(0.3) == approx(-1 / 1.3 ** 2 + 3 / 0.7 ** 2)
    assert f.h.value(0.3) == approx(np.log(1.3 / 0.7 ** 3))
    beta = bloch_type_seminorm(f, spec)
    assert 5.9 <= beta.value <= 6 * 1.02


def test_pommerenke_forward_with_dilatation(spec):
    f = pommerenke_forward(catalog.koebe(), Dilatation.identity())
    beta = bloch_type_seminorm(f, spec)
    assert not beta.diverged
    assert beta.value < 101


def test_pommerenke_forward_hypotheses():
    with raises(HypothesisError):
        pommerenke_forward(catalog.sharpness(0.0), Dilatation.constant(0.0))
    k = catalog.koebe()
    without_third = AnalyticPart(k.h.value, k.h.first, k.h.second, name="k")
    with raises(HypothesisError):
        pommerenke_forward(k.replace(h=without_third), Dilatation.constant(0.0))


@mark.parametrize("w", [Dilatation.constant(0.0), Dilatation.power(1, 0.25)])
def test_pommerenke_inverse_is_univalent(spec, w):
    F = pommerenke_inverse(catalog.logmap(), 0.5, w, spec)
    assert F.univalent
    cert = becker_margin(F, spec)
    assert cert.passes
    assert cert.margin <= 1


def test_pommerenke_inverse_uncertified(spec):
    F = pommerenke_inverse(catalog.logmap(), 0.5, Dilatation.constant(0.0), spec, certify=False)
    assert not F.univalent
    assert becker_margin(F, spec).passes


def test_pommerenke_inverse_rejects_failed_certificate(spec, monkeypatch):
    def inconclusive(F, spec=None):
        return BeckerCertificate(2.0, False, 0.5 + 0j, None)

    monkeypatch.setattr(transforms, "becker_margin", inconclusive)
    with raises(ContractError):
        pommerenke_inverse(catalog.logmap(), 0.5, Dilatation.constant(0.0), spec)


def test_pommerenke_inverse_hypotheses(spec):
    with raises(DomainError):
        pommerenke_inverse(catalog.logmap(), 1.0, Dilatation.constant(0.0), spec)
    with raises(HypothesisError):
        pommerenke_inverse(catalog.logmap(), 0.5, Dilatation.identity(), spec)
    with raises(HypothesisError):
        pommerenke_inverse(catalog.ex22_plus_id(3.0), 0.5, Dilatation.constant(0.0), spec)


def test_becker_margin_of_identity(spec):
    cert = becker_margin(catalog.identity(), spec)
    assert cert.margin == 0
    assert cert.passes


def test_becker_margin_of_koebe_is_inconclusive(spec):
    cert = becker_margin(catalog.koebe(), spec)
    assert not cert.passes
    assert cert.margin == approx(6, abs=0.01)


@given(c0=st.floats(0, 0.99), r=st.floats(0, 0.99))
def test_schwarz_pick_bound(c0, r):
    bound = schwarz_pick_bound(c0, r)
    assert max(c0, r) - 1e-12 <= bound < 1


@mark.parametrize("c0, r", [(1.0, 0.5), (0.5, 1.0), (-0.1, 0.5)])
def test_schwarz_pick_domain(c0, r):
    with raises(DomainError):
        schwarz_pick_bound(c0, r)
