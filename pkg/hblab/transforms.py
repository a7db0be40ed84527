"""Structural transformations of harmonic mappings and the Becker-type univalence margin."""
import logging
import math
from dataclasses import dataclass

import numpy as np

from .errors import BranchPointError, ContractError, DomainError, HypothesisError, NotSensePreservingError
from .extremal import GridSpec, SupEstimate, analytic_bloch_seminorm, bloch_type_seminorm, hyperbolic_norm, sup_disk
from .mapping import (
    AnalyticPart,
    Backing,
    Dilatation,
    HarmonicMapping,
    MappingClass,
    dilatation,
    from_h_and_dilatation,
    validate,
    validation_grid,
)
from .series import DEFAULT_ORDER, coefficients_via_cauchy, exp_series, integrate, log_series

log = logging.getLogger(__name__)

# Sharp-in-S_H^0 estimate |a_2| < 49, carried to S_H by the affine normalization.
A2_BOUND_S_H0 = 49.0
FORWARD_BLOCH_BOUND = 101.0


@dataclass(frozen=True)
class DiskAutomorphism:
    """``phi_alpha(z) = (alpha + z) / (1 + conj(alpha) z)``."""

    alpha: complex

    def __post_init__(self):
        if not abs(self.alpha) < 1:
            raise DomainError("automorphism parameter must lie in the disk, got %r" % self.alpha)

    def __call__(self, z):
        a = self.alpha
        return (a + z) / (1 + np.conj(a) * z)

    def first(self, z):
        a = self.alpha
        return (1 - abs(a) ** 2) / (1 + np.conj(a) * z) ** 2

    def second(self, z):
        a = self.alpha
        return -2 * np.conj(a) * (1 - abs(a) ** 2) / (1 + np.conj(a) * z) ** 3


@dataclass(frozen=True)
class BeckerCertificate:
    margin: float
    passes: bool
    worst_z: complex
    estimate: SupEstimate


def affine_shear(f, a, b, name=None):
    """``F = a f + b conj(f) = (a h + b g) + conj(conj(a) g + conj(b) h)``.

    Pointwise ``J_F = (|a|**2 - |b|**2) J_f``.
    """
    a, b = complex(a), complex(b)
    if a == 1 and b == 0:
        return f
    det = abs(a) ** 2 - abs(b) ** 2
    return HarmonicMapping(
        AnalyticPart.combine([(a, f.h), (b, f.g)], name="H"),
        AnalyticPart.combine([(np.conj(a), f.g), (np.conj(b), f.h)], name="G"),
        sense_preserving=f.sense_preserving and det > 0,
        univalent=f.univalent and det != 0,
        name=name or "%s*(%s) + %s*conj(%s)" % (a, f.name, b, f.name),
    )


def _compose(part, phi):
    def value(z):
        return part.value(phi(z))

    def first(z):
        return part.first(phi(z)) * phi.first(z)

    def second(z):
        return part.second(phi(z)) * phi.first(z) ** 2 + part.first(phi(z)) * phi.second(z)

    if part.backing is Backing.SERIES:
        # Composition with a Moebius map spreads the coefficients out; re-expand at twice the order.
        return AnalyticPart.from_series(coefficients_via_cauchy(value, 2 * part.series.order), name=part.name)
    return AnalyticPart(value, first, second, name=part.name)


def precompose_automorphism(f, phi, name=None):
    """``f o phi_alpha``; the Bloch-type seminorm is unchanged."""
    if phi.alpha == 0:
        return f
    omega = None
    if f.omega is not None:
        w = f.omega
        omega = Dilatation(lambda z: w.value(phi(z)), lambda z: w.first(phi(z)) * phi.first(z), name="omega o phi")
    return HarmonicMapping(
        _compose(f.h, phi),
        _compose(f.g, phi),
        sense_preserving=f.sense_preserving,
        univalent=f.univalent,
        name=name or "%s o phi(%s)" % (f.name, phi.alpha),
        omega=omega,
    )


def normalize(f, declared_class=MappingClass.S_H, name=None):
    """Translate and scale so that ``a_0 = 1 - a_1 = 0`` and ``g(0) = 0``."""
    a0, a1, g0 = complex(f.h.value(0.0)), complex(f.h.first(0.0)), complex(f.g.value(0.0))
    if a1 == 0:
        raise BranchPointError("h'(0) = 0: %s cannot be normalized" % f.name)
    F = HarmonicMapping(
        AnalyticPart.combine([(1 / a1, f.h)], name="h").shifted(a0 / a1),
        AnalyticPart.combine([(1 / np.conj(a1), f.g)], name="g").shifted(g0 / np.conj(a1)),
        sense_preserving=f.sense_preserving,
        univalent=f.univalent,
        declared_class=declared_class,
        name=name or "normalized %s" % f.name,
    )
    return validate(F)


def affine_normalize(f, name=None):
    """``f_0 = (f - conj(b_1) conj(f)) / (1 - |b_1|**2)``, carrying ``S_H`` into ``S_H^0``.

    The inverse is ``f = f_0 + conj(b_1) conj(f_0)``, i.e. ``affine_shear(f_0, 1, conj(b_1))``.
    """
    if f.declared_class is MappingClass.S_H0:
        return f
    if f.declared_class is not MappingClass.S_H:
        raise ContractError("affine_normalize needs a mapping declared S_H, got %s" % f.declared_class.value)
    b1 = complex(f.g.first(0.0))
    if abs(b1) >= 1:
        raise NotSensePreservingError("|b_1| = %.6g >= 1" % abs(b1))
    scale = 1 - abs(b1) ** 2
    f0 = affine_shear(f, 1 / scale, -np.conj(b1) / scale).replace(
        declared_class=MappingClass.S_H0, name=name or "%s normalized to S_H0" % f.name
    )
    return validate(f0)


def second_coefficient(f, alpha):
    """``a_2(alpha) = (1 - |alpha|**2) h''(alpha) / (2 h'(alpha)) - conj(alpha)``."""
    alpha = complex(alpha)
    hp = complex(f.h.first(alpha))
    if hp == 0:
        raise BranchPointError("h'(%s) = 0" % alpha)
    return (1 - abs(alpha) ** 2) * complex(f.h.second(alpha)) / (2 * hp) - np.conj(alpha)


def a2_bound(b1):
    """``|a_2| < 49 + |b_1|/2`` in ``S_H``."""
    return A2_BOUND_S_H0 + abs(b1) / 2


def koebe_transform(f, alpha, name=None):
    """``T(z) = (f(phi_alpha(z)) - f(alpha)) / ((1 - |alpha|**2) h'(alpha))``, again in ``S_H``."""
    if f.declared_class is MappingClass.NONE:
        raise ContractError("koebe_transform needs a normalized mapping, got %s" % f.name)
    alpha = complex(alpha)
    if alpha == 0:
        return f
    phi = DiskAutomorphism(alpha)
    hp = complex(f.h.first(alpha))
    if hp == 0:
        raise BranchPointError("h'(%s) = 0: critical point" % alpha)
    d = (1 - abs(alpha) ** 2) * hp
    F = precompose_automorphism(f, phi)
    T = HarmonicMapping(
        AnalyticPart.combine([(1 / d, F.h)], name="H").shifted(complex(f.h.value(alpha)) / d),
        AnalyticPart.combine([(1 / np.conj(d), F.g)], name="G").shifted(complex(f.g.value(alpha)) / np.conj(d)),
        sense_preserving=f.sense_preserving,
        univalent=f.univalent,
        declared_class=MappingClass.S_H,
        name=name or "T[%s, %s]" % (f.name, alpha),
    )
    return validate(T)


def pommerenke_forward(H, w, order=DEFAULT_ORDER, name=None):
    """``f = h + conj(g)`` with ``h = log H'`` and dilatation ``w``, for univalent sense-preserving ``H``.

    ``f`` lies in the Bloch-type class; the proof gives ``beta(f) < 101``.
    """
    if not (H.univalent and H.sense_preserving):
        raise HypothesisError("%s must be declared univalent and sense-preserving" % H.name)
    samples = H.h.first(validation_grid())
    if np.any(samples == 0) or not np.all(np.isfinite(samples)):
        raise BranchPointError("H' of %s vanishes on the validation grid" % H.name)

    Hh = H.h
    if Hh.third is None:
        raise HypothesisError("%s carries no exact third derivative of h" % H.name)

    def first(z):
        return Hh.second(z) / Hh.first(z)

    def second(z):
        d1 = Hh.first(z)
        d2 = Hh.second(z)
        return (Hh.third(z) * d1 - d2 ** 2) / d1 ** 2

    h = AnalyticPart.from_derivatives(
        first,
        second,
        value0=complex(np.log(Hh.first(0.0))),
        series=log_series(Hh.taylor(order + 1).deriv()),
        name="log H'",
    )
    return from_h_and_dilatation(h, w, order, name=name or "log %s'" % H.name)


def pommerenke_inverse(f, eps, w, spec=None, order=DEFAULT_ORDER, inflation=1.05, tol=1e-9, name=None, certify=True):
    """``F = H + conj(G)`` with ``H = int exp(eps h / c)`` and dilatation ``w``, univalent by the Becker criterion.

    ``c = sqrt(beta(g)**2 + beta(f)**2)`` is taken from the scans, inflated because
    scans only bound the suprema from below.

    With ``certify`` the Becker margin of ``F`` is scanned and a margin above 1
    raises :class:`ContractError`; otherwise ``F`` is returned uncertified
    (``univalent=False``) for the caller to scan.
    """
    if not 0 < eps < 1:
        raise DomainError("eps must lie in (0, 1), got %r" % eps)
    spec = spec or GridSpec()
    norm = hyperbolic_norm(w, spec)
    if norm.value > (1 - eps) / 2 + tol:
        raise HypothesisError("||omega||_h = %.6g exceeds (1 - eps)/2 = %.6g" % (norm.value, (1 - eps) / 2))
    beta_f = bloch_type_seminorm(f, spec)
    beta_g = analytic_bloch_seminorm(f.g, spec)
    if beta_f.diverged:
        raise HypothesisError("beta(%s) diverges (exponent %.3g)" % (f.name, beta_f.exponent))
    if beta_g.diverged:
        raise HypothesisError("g of %s is not Bloch (exponent %.3g)" % (f.name, beta_g.exponent))

    c = inflation * math.hypot(beta_f.value, beta_g.value)
    kappa = eps / c if c > 0 else 0.0
    log.debug("Inverse construction: beta(f)=%.6g beta(g)=%.6g c=%.6g", beta_f.value, beta_g.value, c)

    h = f.h

    def Hp(z):
        return np.exp(kappa * h.value(z))

    H = AnalyticPart.from_derivatives(
        Hp,
        lambda z: kappa * h.first(z) * Hp(z),
        series=integrate(exp_series(kappa * h.taylor(order - 1)), 0.0),
        name="H",
    )
    F = from_h_and_dilatation(H, w, order, name=name or "F[%s, eps=%s]" % (f.name, eps))
    if not certify:
        return F
    cert = becker_margin(F, spec)
    if not cert.passes:
        raise ContractError("Becker margin of %s is %.6g > 1 at %s" % (F.name, cert.margin, cert.worst_z))
    return F.replace(univalent=True)


def _becker_field(F):
    w = dilatation(F)

    def field(z):
        hp = F.h.first(z)
        om = w.value(z)
        gap = 1 - np.abs(om) ** 2
        if np.any(~(gap > 0)) or np.any(hp == 0):
            raise NotSensePreservingError("%s is not sense-preserving on the Becker scan" % F.name)
        wp = w.first(z)
        P = F.h.second(z) / hp - np.conj(om) * wp / gap
        return (1 - np.abs(z) ** 2) * (np.abs(z * P) + np.abs(z * wp) / gap)

    return field


def becker_margin(F, spec=None):
    """``sup (1 - |z|**2)(|z P_F| + |z omega'| / (1 - |omega|**2))``; at most 1 certifies univalence."""
    estimate = sup_disk(_becker_field(F), spec)
    return BeckerCertificate(
        margin=estimate.value, passes=estimate.value <= 1.0, worst_z=estimate.argmax, estimate=estimate
    )


def schwarz_pick_bound(c0_mod, r):
    """``|omega(z)| <= (|omega(0)| + |z|) / (1 + |omega(0)| |z|)`` for self-maps."""
    if not (0 <= c0_mod < 1 and 0 <= r < 1):
        raise DomainError("schwarz_pick_bound needs arguments in [0, 1)")
    return (c0_mod + r) / (1 + c0_mod * r)
