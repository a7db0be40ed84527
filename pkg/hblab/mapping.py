"""Harmonic mappings ``f = h + conj(g)`` on the unit disk and their pointwise functionals."""
import logging
from dataclasses import dataclass, replace
from enum import Enum
from typing import Optional, Tuple

import numpy as np

from .errors import (
    BranchPointError,
    ContractError,
    DomainError,
    NotSelfMapError,
    NotSensePreservingError,
    SingularityError,
)
from .series import (
    DEFAULT_ORDER,
    TaylorSeries,
    cauchy_product,
    coefficients_via_cauchy,
    differentiate,
    evaluate as evaluate_series,
    integrate,
    ray_integral,
)

log = logging.getLogger(__name__)

NORMALIZATION_TOL = 1e-9


class Backing(Enum):
    CLOSED_FORM = "closed-form"
    SERIES = "series"


class MappingClass(Enum):
    NONE = "none"
    S_H = "S_H"
    S_H0 = "S_H0"


def _vectorised(fn):
    def call(z):
        z = np.asarray(z, dtype=complex)
        out = np.asarray(fn(z), dtype=complex)
        if out.shape != z.shape:
            out = np.broadcast_to(out, z.shape).copy()
        return out[()]

    return call


def check_disk(z):
    """Return ``z`` as a complex array, refusing points outside the open disk."""
    z = np.asarray(z, dtype=complex)
    if np.any(~np.isfinite(z)) or np.any(np.abs(z) >= 1):
        raise DomainError("points must lie in the open unit disk")
    return z


def validation_grid(n=64, rmax_exp=10):
    """Polar grid of ``n`` radii graded towards ``1 - 2**-rmax_exp`` by ``n`` angles."""
    radii = 1.0 - 2.0 ** (-rmax_exp * np.linspace(0.0, 1.0, n))
    theta = 2 * np.pi * np.arange(n) / n
    return (radii[:, None] * np.exp(1j * theta)[None, :]).ravel()


class AnalyticPart(object):
    """An analytic function on the disk with its first two derivatives.

    Closed-form parts carry explicit evaluators (and optionally an exact series);
    series-backed parts evaluate a truncated series and its termwise derivatives.
    ``third`` is optional and is ``None`` when no exact evaluator is known.
    """

    def __init__(self, value, first, second, backing=Backing.CLOSED_FORM, series=None, name=None, third=None):
        self.value = _vectorised(value)
        self.first = _vectorised(first)
        self.second = _vectorised(second)
        self.third = _vectorised(third) if third is not None else None
        self.backing = backing
        self.series = series
        self.name = name

    def __repr__(self):
        return "<AnalyticPart %s (%s)>" % (self.name or "?", self.backing.value)

    @classmethod
    def from_series(cls, series, name=None):
        return cls(
            lambda z: evaluate_series(series, z),
            lambda z: evaluate_series(series, z, 1),
            lambda z: evaluate_series(series, z, 2),
            backing=Backing.SERIES,
            series=series,
            name=name,
            third=lambda z: evaluate_series(series, z, 3),
        )

    @classmethod
    def from_derivatives(cls, first, second, value0=0.0, series=None, name=None, third=None):
        """A part known through its derivatives; values come from integrating along rays."""
        first = _vectorised(first)
        return cls(lambda z: ray_integral(first, z, value0), first, second, series=series, name=name, third=third)

    @classmethod
    def constant(cls, c=0.0):
        return cls(lambda z: c, lambda z: 0.0, lambda z: 0.0, series=TaylorSeries([c], order=DEFAULT_ORDER), name=str(c), third=lambda z: 0.0)

    @classmethod
    def identity(cls):
        return cls(lambda z: z, lambda z: 1.0, lambda z: 0.0, series=TaylorSeries([0, 1], order=DEFAULT_ORDER), name="z", third=lambda z: 0.0)

    @classmethod
    def combine(cls, terms, name=None):
        """Linear combination ``sum(c * part)`` of ``(c, part)`` pairs."""
        terms = [(complex(c), p) for c, p in terms if c != 0]
        series = None
        if terms and all(p.series is not None for _, p in terms):
            series = sum((c * p.series for c, p in terms[1:]), terms[0][0] * terms[0][1].series)
        elif not terms:
            return cls.constant(0.0)
        backing = Backing.SERIES if all(p.backing is Backing.SERIES for _, p in terms) else Backing.CLOSED_FORM
        third = None
        if all(p.third is not None for _, p in terms):

            def third(z):
                return sum(c * p.third(z) for c, p in terms)

        return cls(
            lambda z: sum(c * p.value(z) for c, p in terms),
            lambda z: sum(c * p.first(z) for c, p in terms),
            lambda z: sum(c * p.second(z) for c, p in terms),
            backing=backing,
            series=series,
            name=name,
            third=third,
        )

    def shifted(self, c):
        """``self - c``."""
        series = self.series - c if self.series is not None else None
        return AnalyticPart(lambda z: self.value(z) - c, self.first, self.second, self.backing, series, self.name, self.third)

    def taylor(self, order=DEFAULT_ORDER):
        """Taylor coefficients up to ``order``: the stored series when long enough, else quadrature."""
        if self.series is not None and self.series.order >= order:
            return self.series.truncate(order)
        return coefficients_via_cauchy(self.value, order)

    def finite_difference_defect(self, z, step=1e-4):
        """Largest defect of ``first``/``second`` against central differences of ``value``/``first``.

        The defect is relative to ``max(|exact|, 1)``.
        """
        z = check_disk(z)
        d = step * (1.0 - np.abs(z))
        defect = 0.0
        for lower, upper in ((self.value, self.first), (self.first, self.second)):
            estimate = (lower(z + d) - lower(z - d)) / (2 * d)
            exact = upper(z)
            defect = max(defect, float(np.max(np.abs(estimate - exact) / np.maximum(np.abs(exact), 1.0))))
        return defect


class Dilatation(object):
    """An analytic map ``omega`` of the disk with its derivative, meant to be a self-map."""

    def __init__(self, value, first, name=None):
        self.value = _vectorised(value)
        self.first = _vectorised(first)
        self.name = name

    def __repr__(self):
        return "<Dilatation %s>" % (self.name or "?")

    @property
    def c0(self):
        return complex(self.value(0.0))

    @classmethod
    def constant(cls, c):
        return cls(lambda z: c, lambda z: 0.0, name="%s" % c)

    @classmethod
    def identity(cls):
        return cls(lambda z: z, lambda z: 1.0, name="z")

    @classmethod
    def affine(cls, a, b):
        """``a + b z``; a self-map when ``|a| + |b| <= 1``."""
        return cls(lambda z: a + b * z, lambda z: b, name="%s + %s z" % (a, b))

    @classmethod
    def power(cls, n, c=1.0):
        return cls(lambda z: c * z ** n, lambda z: c * n * z ** (n - 1), name="%s z^%d" % (c, n))

    @classmethod
    def blaschke(cls, zeros, k=1.0, rotation=0.0):
        """``k e^{i rotation} prod (z - a)/(1 - conj(a) z)``, so ``sup |omega| = k``."""
        zeros = [complex(a) for a in zeros]
        unit = k * np.exp(1j * rotation)

        def factors(z):
            return [(z - a) / (1 - np.conj(a) * z) for a in zeros]

        def value(z):
            out = unit * np.ones_like(z)
            for b in factors(z):
                out = out * b
            return out

        def first(z):
            fs = factors(z)
            out = np.zeros_like(z)
            for j, a in enumerate(zeros):
                term = (1 - abs(a) ** 2) / (1 - np.conj(a) * z) ** 2
                for i, b in enumerate(fs):
                    if i != j:
                        term = term * b
                out = out + term
            return unit * out

        return cls(value, first, name="blaschke(%d)" % len(zeros))

    def check_self_map(self, points=None):
        points = validation_grid() if points is None else points
        modulus = np.abs(self.value(points))
        if not np.all(modulus < 1):
            raise NotSelfMapError("|omega| reaches %.6g on the validation grid" % modulus.max())


@dataclass(frozen=True, eq=False)
class HarmonicMapping:
    """``f = h + conj(g)`` with the properties declared for it."""

    h: AnalyticPart
    g: AnalyticPart
    sense_preserving: bool = False
    univalent: bool = False
    declared_class: MappingClass = MappingClass.NONE
    name: str = "f"
    omega: Optional[Dilatation] = None
    #: the mappings this one is the harmonic sum of, if any
    summands: Tuple["HarmonicMapping", ...] = ()

    def replace(self, **changes):
        return replace(self, **changes)


def evaluate(f, z):
    z = check_disk(z)
    return f.h.value(z) + np.conj(f.g.value(z))


def _difference_and_sum(f, z):
    if f.summands:
        pairs = [_difference_and_sum(s, z) for s in f.summands]
        return sum(d for d, _ in pairs), sum(s for _, s in pairs)
    hp, gp = f.h.first(z), f.g.first(z)
    return hp - gp, hp + gp


def jacobian(f, z):
    """``J_f = |h'|**2 - |g'|**2``, computed as ``Re((h' - g') conj(h' + g'))``.

    For a harmonic sum the differences are accumulated summand by summand, so
    parts shared by ``h`` and ``g`` cancel exactly even where ``h'`` is huge.
    """
    z = check_disk(z)
    d, s = _difference_and_sum(f, z)
    return np.real(d * np.conj(s))


def dilatation_at(f, z):
    z = check_disk(z)
    hp = f.h.first(z)
    if np.any(hp == 0):
        raise BranchPointError("h' vanishes: the dilatation is undefined there")
    if f.omega is not None:
        return f.omega.value(z)
    return f.g.first(z) / hp


def dilatation(f):
    """The dilatation of ``f``: the exact one it was built from, else ``g'/h'``."""
    if f.omega is not None:
        return f.omega
    h, g = f.h, f.g

    def first(z):
        hp = h.first(z)
        return (g.second(z) * hp - g.first(z) * h.second(z)) / hp ** 2

    return Dilatation(lambda z: g.first(z) / h.first(z), first, name="omega(%s)" % f.name)


def pre_schwarzian(f, z):
    """``P_f = h''/h' - conj(omega) omega' / (1 - |omega|**2)``."""
    z = check_disk(z)
    hp = f.h.first(z)
    if np.any(hp == 0):
        raise BranchPointError("h' vanishes: the pre-Schwarzian is undefined there")
    w = dilatation(f)
    om = w.value(z)
    gap = 1 - np.abs(om) ** 2
    if np.any(gap <= 0):
        raise SingularityError("|omega| >= 1: the pre-Schwarzian is undefined there")
    return f.h.second(z) / hp - np.conj(om) * w.first(z) / gap


def hyperbolic_derivative(w, z):
    """``omega*(z) = omega'(z) (1 - |z|**2) / (1 - |omega(z)|**2)``."""
    z = check_disk(z)
    gap = 1 - np.abs(w.value(z)) ** 2
    if np.any(gap <= 0):
        raise SingularityError("|omega| >= 1: the hyperbolic derivative is undefined there")
    return w.first(z) * (1 - np.abs(z) ** 2) / gap


def add(f1, f2, name=None):
    """Harmonic sum; none of the declared properties survive it."""
    return HarmonicMapping(
        AnalyticPart.combine([(1, f1.h), (1, f2.h)]),
        AnalyticPart.combine([(1, f1.g), (1, f2.g)]),
        name=name or "%s + %s" % (f1.name, f2.name),
        summands=(f1, f2),
    )


def from_h_and_dilatation(h, w, order=DEFAULT_ORDER, name=None):
    """The mapping ``h + conj(g)`` with ``g(0) = 0`` and ``g' = omega h'``.

    The series of ``g`` comes from ``integrate(omega * h')`` with omega expanded by
    Cauchy quadrature; its derivative evaluators are the exact pointwise products.
    """
    points = validation_grid()
    w.check_self_map(points)

    omega_series = coefficients_via_cauchy(w.value, order - 1)
    g_series = integrate(cauchy_product(omega_series, differentiate(h.taylor(order))), 0.0)
    g = AnalyticPart.from_derivatives(
        lambda z: w.value(z) * h.first(z),
        lambda z: w.first(z) * h.first(z) + w.value(z) * h.second(z),
        series=g_series,
        name="g",
    )
    sense_preserving = bool(np.all(h.first(points) != 0))
    return HarmonicMapping(h, g, sense_preserving=sense_preserving, name=name or "f", omega=w)


def validate(f, tol=NORMALIZATION_TOL, points=None):
    """Check the declared normalization class and sense preservation on a grid."""
    if f.declared_class is not MappingClass.NONE:
        a0, a1 = f.h.value(0.0), f.h.first(0.0)
        if abs(a0) > tol or abs(a1 - 1) > tol:
            raise ContractError("%s is declared %s but h(0) = %s, h'(0) = %s" % (f.name, f.declared_class.value, a0, a1))
        if f.declared_class is MappingClass.S_H0 and abs(f.g.first(0.0)) > tol:
            raise ContractError("%s is declared S_H0 but g'(0) = %s" % (f.name, f.g.first(0.0)))
    if f.sense_preserving:
        points = validation_grid() if points is None else points
        if not np.all(np.abs(f.g.first(points)) < np.abs(f.h.first(points))):
            raise NotSensePreservingError("%s is declared sense-preserving but |g'| >= |h'| on the grid" % f.name)
    return f
