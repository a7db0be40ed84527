"""Named example mappings with closed-form evaluators and exact Taylor series."""
import logging
import math
from dataclasses import dataclass, field
from typing import Callable, Dict

import numpy as np

from .errors import DomainError, UsageError
from .mapping import AnalyticPart, Dilatation, HarmonicMapping, MappingClass, add, from_h_and_dilatation, validate
from .series import DEFAULT_ORDER, TaylorSeries, exp_series, integrate

log = logging.getLogger(__name__)

SQRT2 = math.sqrt(2)


@dataclass(frozen=True)
class Param:
    kind: type
    default: object
    check: Callable = None
    doc: str = ""

    def coerce(self, name, value):
        try:
            value = self.kind(value)
        except (TypeError, ValueError):
            raise UsageError("parameter %s: cannot read %r as %s" % (name, value, self.kind.__name__))
        if self.check is not None and not self.check(value):
            raise DomainError("parameter %s=%r is out of range (%s)" % (name, value, self.doc))
        return value


@dataclass(frozen=True)
class KnownValue:
    """A value a functional must reproduce: ``relation`` is ``eq``, ``le`` or ``ge``."""

    functional: str
    value: float
    provenance: str
    relation: str = "eq"
    tol: float = 1e-9
    at: complex = None


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    description: str
    build: Callable
    params: Dict[str, Param] = field(default_factory=dict)
    known: Callable = None

    def resolve(self, params=None):
        params = dict(params or {})
        unknown = set(params) - set(self.params)
        if unknown:
            raise UsageError("%s takes no parameter %s" % (self.name, ", ".join(sorted(unknown))))
        return {k: p.coerce(k, params.get(k, p.default)) for k, p in self.params.items()}

    def known_values(self, params=None):
        return list(self.known(**self.resolve(params))) if self.known else []

    def label(self, params=None):
        resolved = self.resolve(params)
        if not resolved:
            return self.name
        return "%s(%s)" % (self.name, ",".join("%s=%s" % kv for kv in sorted(resolved.items())))


def binomial(s, order):
    """Coefficients of ``(1 - z)**s`` up to ``order``."""
    n = np.arange(1, order + 1)
    return TaylorSeries(np.concatenate([[1.0], np.cumprod((n - 1 - s) / n)]))


def _power(s, scale=1.0, order=DEFAULT_ORDER, name=None):
    """``scale * (1 - z)**s`` with exact derivatives."""
    return AnalyticPart(
        lambda z: scale * (1 - z) ** s,
        lambda z: -scale * s * (1 - z) ** (s - 1),
        lambda z: scale * s * (s - 1) * (1 - z) ** (s - 2),
        series=scale * binomial(s, order),
        name=name,
        third=lambda z: -scale * s * (s - 1) * (s - 2) * (1 - z) ** (s - 3),
    )


def _mapping(h, g, **flags):
    return validate(HarmonicMapping(h, g, **flags))


def identity(order=DEFAULT_ORDER):
    return _mapping(
        AnalyticPart.identity(),
        AnalyticPart.constant(0.0),
        sense_preserving=True,
        univalent=True,
        declared_class=MappingClass.S_H0,
        name="identity",
        omega=Dilatation.constant(0.0),
    )


def koebe(order=DEFAULT_ORDER):
    h = AnalyticPart(
        lambda z: z / (1 - z) ** 2,
        lambda z: (1 + z) / (1 - z) ** 3,
        lambda z: (4 + 2 * z) / (1 - z) ** 4,
        series=TaylorSeries(np.arange(order + 1)),
        name="k",
        third=lambda z: (18 + 6 * z) / (1 - z) ** 5,
    )
    return _mapping(
        h,
        AnalyticPart.constant(0.0),
        sense_preserving=True,
        univalent=True,
        declared_class=MappingClass.S_H0,
        name="koebe",
        omega=Dilatation.constant(0.0),
    )


def halfplane(order=DEFAULT_ORDER):
    h = AnalyticPart(
        lambda z: z / (1 - z),
        lambda z: 1 / (1 - z) ** 2,
        lambda z: 2 / (1 - z) ** 3,
        series=TaylorSeries(np.concatenate([[0.0], np.ones(order)])),
        name="z/(1-z)",
        third=lambda z: 6 / (1 - z) ** 4,
    )
    return _mapping(
        h,
        AnalyticPart.constant(0.0),
        sense_preserving=True,
        univalent=True,
        declared_class=MappingClass.S_H0,
        name="halfplane",
        omega=Dilatation.constant(0.0),
    )


def log_part(order=DEFAULT_ORDER):
    """``log(1/(1 - z))``."""
    n = np.arange(1, order + 1)
    return AnalyticPart(
        lambda z: -np.log(1 - z),
        lambda z: 1 / (1 - z),
        lambda z: 1 / (1 - z) ** 2,
        series=TaylorSeries(np.concatenate([[0.0], 1.0 / n])),
        name="log(1/(1-z))",
        third=lambda z: 2 / (1 - z) ** 3,
    )


def logmap(order=DEFAULT_ORDER):
    return _mapping(
        log_part(order),
        AnalyticPart.constant(0.0),
        sense_preserving=True,
        univalent=True,
        declared_class=MappingClass.S_H0,
        name="logmap",
        omega=Dilatation.constant(0.0),
    )


def ex22(p=3.0, order=DEFAULT_ORDER):
    """``f = h + conj(h)`` with ``h' = (1 - z)**-p``: ``J_f`` vanishes identically."""
    h = AnalyticPart(
        lambda z: ((1 - z) ** (1 - p) - 1) / (p - 1),
        lambda z: (1 - z) ** -p,
        lambda z: p * (1 - z) ** (-p - 1),
        series=integrate(binomial(-p, order - 1), 0.0),
        name="h",
        third=lambda z: p * (p + 1) * (1 - z) ** (-p - 2),
    )
    return _mapping(h, h, name="ex22(p=%s)" % p)


def ex22_plus_id(p=3.0, order=DEFAULT_ORDER):
    return add(ex22(p, order), identity(order), name="ex22+id(p=%s)" % p)


def sharpness(t=0.0, order=DEFAULT_ORDER):
    """``h = 2 (1 - z)**-1/2`` with dilatation ``t + (1 - t) z``; ``t = 0`` is the ``ex23`` mapping."""
    h = _power(-0.5, 2.0, order, name="2/sqrt(1-z)")
    g = AnalyticPart.combine([(1, h), (2 * (1 - t), _power(0.5, 1.0, order))], name="g").shifted(4 - 2 * t)
    return _mapping(
        h,
        g,
        sense_preserving=True,
        name="sharpness_t(t=%s)" % t if t else "ex23",
        omega=Dilatation.affine(t, 1 - t),
    )


def shear(b=0.5, order=DEFAULT_ORDER):
    """``z + conj(b z)``, so that ``b_1 = b``."""
    b = complex(b)
    g = AnalyticPart(lambda z: b * z, lambda z: b, lambda z: 0.0, series=TaylorSeries([0, b], order=order), name="bz", third=lambda z: 0.0)
    if not abs(b) < 1:
        raise DomainError("shear needs |b| < 1, got %s" % b)
    return _mapping(
        AnalyticPart.identity(),
        g,
        sense_preserving=True,
        univalent=True,
        declared_class=MappingClass.S_H0 if b == 0 else MappingClass.S_H,
        name="shear(b=%s)" % (b.real if b.imag == 0 else b),
        omega=Dilatation.constant(b),
    )


def random_sense_preserving(seed=0, degree=4, k=0.6, order=DEFAULT_ORDER):
    """``h' = exp(P)`` with ``P(0) = 0`` and ``omega = k B`` for a random Blaschke product ``B``.

    Deterministic in ``seed``; ``P`` has the given degree and ``B`` at most three zeros.
    """
    rng = np.random.default_rng(seed)
    p = np.zeros(degree + 1, dtype=complex)
    if degree:
        j = np.arange(1, degree + 1)
        p[1:] = (rng.normal(size=degree) + 1j * rng.normal(size=degree)) * 0.5 / j
    P = TaylorSeries(p)
    dP = P.deriv()

    def first(z):
        return np.exp(P(z))

    h = AnalyticPart.from_derivatives(
        first,
        lambda z: dP(z) * first(z),
        series=integrate(exp_series(TaylorSeries(p, order=order - 1)), 0.0),
        name="int exp(P)",
    )
    n_zeros = int(rng.integers(0, 4))
    zeros = 0.9 * np.sqrt(rng.uniform(size=n_zeros)) * np.exp(2j * np.pi * rng.uniform(size=n_zeros))
    w = Dilatation.blaschke(zeros, k=k, rotation=float(2 * np.pi * rng.uniform()))
    return from_h_and_dilatation(h, w, order, name="random(seed=%d,degree=%d,k=%s)" % (seed, degree, k))


_ENTRIES = [
    CatalogEntry(
        "identity",
        "f(z) = z",
        lambda order: identity(order),
        known=lambda: [
            KnownValue("beta", 1.0, "trivial"),
            KnownValue("schlicht_radius", 1.0, "trivial", tol=1e-3, at=0j),
        ],
    ),
    CatalogEntry(
        "koebe",
        "analytic Koebe function z/(1-z)^2",
        lambda order: koebe(order),
        known=lambda: [
            KnownValue("schlicht_radius", 0.25, "derived", tol=5e-3, at=0j),
            KnownValue("pre_schwarzian", 4.0, "derived", at=0j),
        ],
    ),
    CatalogEntry(
        "halfplane",
        "half-plane map z/(1-z)",
        lambda order: halfplane(order),
        known=lambda: [KnownValue("schlicht_radius", 0.5, "derived", tol=5e-3, at=0j)],
    ),
    CatalogEntry(
        "logmap",
        "log(1/(1-z))",
        lambda order: logmap(order),
        known=lambda: [KnownValue("beta", 2.0, "derived", tol=0.03)],
    ),
    CatalogEntry(
        "ex22",
        "h + conj(h) with h' = (1-z)^-p: a zero-Jacobian Bloch-type mapping",
        lambda order, p: ex22(p, order),
        params={"p": Param(float, 3.0, lambda p: p > 2, "p > 2")},
        known=lambda p: [KnownValue("beta", 0.0, "theorem")],
    ),
    CatalogEntry(
        "ex22_plus_id",
        "ex22 plus the identity: outside the Bloch-type class",
        lambda order, p: ex22_plus_id(p, order),
        params={"p": Param(float, 3.0, lambda p: p > 2, "p > 2")},
        known=lambda p: [KnownValue("weighted_jacobian_exponent", p - 2, "theorem", tol=0.1)],
    ),
    CatalogEntry(
        "ex23",
        "h = 2/sqrt(1-z), omega = z: Bloch-type but h is not Bloch",
        lambda order: sharpness(0.0, order),
        known=lambda: [
            KnownValue("beta", 2 * SQRT2, "theorem", relation="le", tol=1e-9),
            KnownValue("beta", 2 * SQRT2, "derived", tol=0.03),
            KnownValue("bloch_h_exponent", 0.5, "theorem", tol=0.05),
            KnownValue("pre_schwarzian", 1.5, "derived", at=0j),
        ],
    ),
    CatalogEntry(
        "sharpness_t",
        "h = 2/sqrt(1-z), omega = t + (1-t) z: extremal family of the growth estimate",
        lambda order, t: sharpness(t, order),
        params={"t": Param(float, 0.5, lambda t: 0 <= t < 1, "0 <= t < 1")},
        known=lambda t: [KnownValue("beta", 2 * SQRT2 * math.sqrt(1 + t), "theorem", relation="le", tol=1e-6)],
    ),
    CatalogEntry(
        "shear",
        "affine shear z + conj(b z)",
        lambda order, b: shear(b, order),
        params={"b": Param(complex, 0.5, lambda b: abs(b) < 1, "|b| < 1")},
        known=lambda b: [
            KnownValue("beta", math.sqrt(1 - abs(b) ** 2), "derived", tol=1e-6),
            KnownValue("schlicht_radius", 1 - abs(b), "derived", tol=5e-3, at=0j),
        ],
    ),
    CatalogEntry(
        "random",
        "seeded random sense-preserving mapping",
        lambda order, seed, degree, k: random_sense_preserving(seed, degree, k, order),
        params={
            "seed": Param(int, 0),
            "degree": Param(int, 4, lambda d: 0 <= d <= 12, "0 <= degree <= 12"),
            "k": Param(float, 0.6, lambda k: 0 <= k < 1, "0 <= k < 1"),
        },
    ),
]

CATALOG = {e.name: e for e in _ENTRIES}

# Entries whose Bloch-type seminorm is finite, with the parameters they are swept at.
FINITE_BETA = (
    ("identity", {}),
    ("logmap", {}),
    ("ex23", {}),
    ("sharpness_t", {"t": 0.5}),
    ("shear", {"b": 0.3}),
    ("shear", {"b": 0.8}),
)


def names():
    return sorted(CATALOG)


def entries():
    return [CATALOG[n] for n in names()]


def entry(name):
    try:
        return CATALOG[name]
    except KeyError:
        raise UsageError("unknown catalog entry %r (known: %s)" % (name, ", ".join(names())))


def get(name, params=None, order=DEFAULT_ORDER):
    e = entry(name)
    f = e.build(order, **e.resolve(params))
    log.debug("Built %s (%s)", f.name, e.description)
    return f
