"""Suprema of scalar fields over the unit disk, and the seminorms built on them.

The scan walks radial levels ``r_k = 1 - 2**-k`` towards the boundary, samples
each level on an angular grid, refines the best angle of every level and then
the overall incumbent. Values are lower bounds of the supremum; growth along the
levels is reported as divergence with a fitted exponent ``alpha`` in
``field ~ (1 - r)**-alpha``.
"""
import logging
import math
from dataclasses import dataclass, field as dataclass_field
from typing import Optional, Tuple

import numpy as np
from scipy.optimize import minimize_scalar

from .errors import DomainError, EmptyScanError, ScanAbortedError, SkippableError
from .mapping import AnalyticPart, Dilatation, HarmonicMapping, evaluate, jacobian

log = logging.getLogger(__name__)

DEFAULT_RMAX_EXP = 20

_LEVEL_OFFSETS = np.linspace(-1.0, 1.0, 9)
_GLOBAL_OFFSETS = np.linspace(-1.0, 1.0, 5)


def radial_levels(rmax_exp=DEFAULT_RMAX_EXP):
    return tuple(1.0 - 2.0 ** -k for k in range(1, rmax_exp + 1))


@dataclass(frozen=True)
class GridSpec:
    radial_levels: Tuple[float, ...] = dataclass_field(default_factory=radial_levels)
    angular_count: int = 512
    refine_depth: int = 5
    divergence_ratio: float = 10.0
    interior_levels: Tuple[float, ...] = (0.0, 0.125, 0.25, 0.375)
    fit_levels: int = 6
    min_exponent: float = 0.05
    max_error_fraction: float = 0.01

    def __post_init__(self):
        levels = np.asarray(self.radial_levels, dtype=float)
        if levels.size < 2 or np.any(np.diff(levels) <= 0) or levels[-1] >= 1 or levels[0] <= 0:
            raise DomainError("radial levels must increase strictly inside (0, 1)")
        if any(r >= levels[0] or r < 0 for r in self.interior_levels):
            raise DomainError("interior levels must lie in [0, first radial level)")
        if self.angular_count < 8:
            raise DomainError("angular_count must be at least 8")

    @classmethod
    def from_config(cls, grid):
        return cls(
            radial_levels=radial_levels(int(grid.get("rmax_exp", DEFAULT_RMAX_EXP))),
            angular_count=int(grid.get("angular_count", 512)),
            refine_depth=int(grid.get("refine_depth", 5)),
            divergence_ratio=float(grid.get("divergence_ratio", 10.0)),
        )

    @property
    def r_cap(self):
        return self.radial_levels[-1]


@dataclass(frozen=True)
class SupEstimate:
    value: float
    argmax: complex
    diverged: bool
    exponent: Optional[float]
    levels: Tuple[Tuple[float, float], ...]
    skipped: int = 0

    def as_dict(self):
        return {
            "value": self.value,
            "argmax": [self.argmax.real, self.argmax.imag],
            "diverged": self.diverged,
            "exponent": self.exponent,
        }


def _sample_one(field, point):
    try:
        return float(np.asarray(field(np.asarray([point])), dtype=float)[0])
    except SkippableError:
        return np.nan


def _sample(field, z):
    with np.errstate(all="ignore"):
        try:
            values = np.asarray(field(z), dtype=float)
        except SkippableError:
            values = np.array([_sample_one(field, p) for p in z])
    return np.where(np.isfinite(values), values, np.nan)


def _best(values):
    if np.all(np.isnan(values)):
        return None
    return int(np.nanargmax(values))


def _refine_angle(field, r, theta, step, value, depth):
    for _ in range(depth):
        candidates = theta + step * _LEVEL_OFFSETS
        values = _sample(field, r * np.exp(1j * candidates))
        k = _best(values)
        if k is not None and values[k] > value:
            value, theta = values[k], candidates[k]
        step /= 2
    return value, theta


def _refine_global(field, z, value, spec):
    s_cap = -math.log2(1.0 - spec.r_cap)
    s = -math.log2(1.0 - abs(z))
    theta = float(np.angle(z))
    ds, dtheta = 1.0, 2 * np.pi / spec.angular_count
    for _ in range(spec.refine_depth):
        S, T = np.meshgrid(np.clip(s + ds * _GLOBAL_OFFSETS, 0.0, s_cap), theta + dtheta * _GLOBAL_OFFSETS)
        points = ((1.0 - 2.0 ** -S) * np.exp(1j * T)).ravel()
        values = _sample(field, points)
        k = _best(values)
        if k is not None and values[k] > value:
            value, z = values[k], complex(points[k])
            s, theta = -math.log2(1.0 - abs(z)), float(np.angle(z))
            log.debug("Refinement moved incumbent to %s (%.12g)", z, value)
        ds, dtheta = ds / 2, dtheta / 2
    return value, z


def _divergence(radii, maxima, spec):
    radii, maxima = np.asarray(radii), np.asarray(maxima)
    inner = maxima[radii <= 0.5]
    base = np.nanmax(inner) if np.any(np.isfinite(inner)) else 0.0
    tail_r = radii[-spec.fit_levels :]
    tail = maxima[-spec.fit_levels :]
    if not np.all(np.isfinite(tail)) or np.any(tail <= 0):
        return False, None
    exponent = float(np.polyfit(-np.log(1.0 - tail_r), np.log(tail), 1)[0])
    grew = tail[-1] > spec.divergence_ratio * base if base > 0 else tail[-1] > 0
    if grew and exponent > spec.min_exponent:
        return True, exponent
    return False, None


def sup_disk(field, spec=None):
    """Lower bound of ``sup field(z)`` over the disk, with argmax and divergence verdict.

    ``field`` maps an array of disk points to real values; NaN, infinities and
    :class:`SkippableError` mark skipped samples.
    """
    spec = spec or GridSpec()
    step = 2 * np.pi / spec.angular_count
    theta = step * np.arange(spec.angular_count)

    radii, maxima = [], []
    best_value, best_z = -np.inf, None
    total = skipped = 0
    for r in tuple(spec.interior_levels) + tuple(spec.radial_levels):
        z = np.zeros(1, dtype=complex) if r == 0 else r * np.exp(1j * theta)
        values = _sample(field, z)
        total += values.size
        skipped += int(np.isnan(values).sum())
        j = _best(values)
        if j is None:
            radii.append(r)
            maxima.append(np.nan)
            continue
        value, zj = values[j], complex(z[j])
        if r > 0:
            value, t = _refine_angle(field, r, theta[j], step, value, spec.refine_depth)
            zj = complex(r * np.exp(1j * t))
        radii.append(r)
        maxima.append(value)
        if value > best_value:
            best_value, best_z = value, zj

    if best_z is None:
        raise EmptyScanError("every sample of the scan failed")
    if skipped > spec.max_error_fraction * total:
        raise ScanAbortedError("%d of %d samples failed" % (skipped, total))
    if skipped:
        log.debug("Skipped %d of %d samples", skipped, total)

    best_value, best_z = _refine_global(field, best_z, best_value, spec)
    diverged, exponent = _divergence(radii, maxima, spec)
    running = np.fmax.accumulate(np.nan_to_num(np.asarray(maxima, dtype=float), nan=-np.inf))
    return SupEstimate(
        value=float(best_value),
        argmax=complex(best_z),
        diverged=diverged,
        exponent=exponent,
        levels=tuple(zip(map(float, radii), map(float, running))),
        skipped=skipped,
    )


def bloch_field(f):
    return lambda z: (1 - np.abs(z) ** 2) * np.sqrt(np.abs(jacobian(f, z)))


def weighted_jacobian_field(f):
    """``(1 - |z|**2)**2 |J_f(z)|``, the square of the Bloch-type field."""
    return lambda z: (1 - np.abs(z) ** 2) ** 2 * np.abs(jacobian(f, z))


def analytic_bloch_field(phi):
    return lambda z: (1 - np.abs(z) ** 2) * np.abs(phi.first(z))


def hyperbolic_field(w):
    def field(z):
        gap = 1 - np.abs(w.value(z)) ** 2
        return np.where(gap > 0, np.abs(w.first(z)) * (1 - np.abs(z) ** 2) / gap, np.nan)

    return field


def bloch_type_seminorm(f, spec=None):
    """``beta(f) = sup (1 - |z|**2) sqrt|J_f(z)|``."""
    return sup_disk(bloch_field(f), spec)


def analytic_bloch_seminorm(phi, spec=None):
    """``beta(phi) = sup (1 - |z|**2) |phi'(z)|``."""
    return sup_disk(analytic_bloch_field(phi), spec)


def hyperbolic_norm(w, spec=None):
    """``||omega||_h = sup |omega*(z)|``."""
    return sup_disk(hyperbolic_field(w), spec)


def sup_norm(w, spec=None):
    """``||omega||_inf = sup |omega(z)|``."""
    return sup_disk(lambda z: np.abs(w.value(z)), spec)


def _modulus_target(f):
    if isinstance(f, HarmonicMapping):
        return lambda z: evaluate(f, z)
    if isinstance(f, (AnalyticPart, Dilatation)):
        return f.value
    return f


def max_modulus(f, r, m=512):
    """``M(r, f) = max |f(z)|`` over ``|z| = r``: sampled, then refined near the best angle."""
    if not 0 <= r < 1:
        raise DomainError("radius must lie in [0, 1), got %r" % r)
    fn = _modulus_target(f)
    if r == 0:
        return float(np.abs(fn(np.zeros(1, dtype=complex)))[0])
    step = 2 * np.pi / m
    theta = step * np.arange(m)
    values = np.abs(fn(r * np.exp(1j * theta)))
    j = int(np.argmax(values))
    res = minimize_scalar(
        lambda t: -float(np.abs(fn(np.array([r * np.exp(1j * t)]))[0])),
        bounds=(theta[j] - step, theta[j] + step),
        method="bounded",
        options={"xatol": 1e-12},
    )
    return float(max(values[j], -res.fun))
