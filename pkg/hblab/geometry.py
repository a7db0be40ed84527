"""Schlicht radius of univalent mappings and the covering and radius estimates built on it.

For univalent ``f`` the schlicht radius ``d_f(z)`` is the distance from
``f(z)`` to the boundary of ``f(D)``. It is approximated from inside by the image
of circles ``|z| = rho`` for ``rho = 1 - 2**-k`` and extrapolated in ``1 - rho``.
"""
import logging
import math
import time
from dataclasses import dataclass
from typing import Tuple

import numpy as np
from shapely.geometry import LineString, Point

from .errors import ContractError, DomainError, EvaluationError, HypothesisError
from .extremal import bloch_type_seminorm, sup_norm
from .mapping import check_disk, dilatation, evaluate, jacobian
from .report import Check, VerificationReport

log = logging.getLogger(__name__)

DEFAULT_LEVELS = tuple(range(6, 15))
DEFAULT_SAMPLES = 4096
MAX_SAMPLES = 65536
SAMPLE_RTOL = 1e-3

HALL_RADIUS = math.pi / 2
CONVERSE_CONSTANT = 16 * math.sqrt(2)


@dataclass(frozen=True)
class BoundaryCurve:
    rho: float
    points: np.ndarray

    def line(self):
        closed = np.concatenate([self.points, self.points[:1]])
        return LineString(np.column_stack([closed.real, closed.imag]))

    def distance(self, w):
        """Distance from ``w`` to the closed polyline, measured against its segments."""
        return self.line().distance(Point(w.real, w.imag))


@dataclass(frozen=True)
class SchlichtRadiusEstimate:
    value: float
    rho_levels: Tuple[Tuple[float, float], ...]
    extrapolated: bool


def boundary_curve(f, rho, m=DEFAULT_SAMPLES):
    if not 0 < rho < 1:
        raise DomainError("rho must lie in (0, 1), got %r" % rho)
    if m < 64:
        raise DomainError("need at least 64 boundary samples, got %d" % m)
    z = rho * np.exp(2j * np.pi * np.arange(m) / m)
    with np.errstate(all="ignore"):
        w = np.asarray(evaluate(f, z), dtype=complex)
    bad = ~np.isfinite(w)
    if bad.any():
        k = int(np.argmax(bad))
        raise EvaluationError("%s is not finite at boundary sample %d (z = %s)" % (f.name, k, z[k]), point=complex(z[k]))
    return BoundaryCurve(rho, w)


def _level_distance(f, w0, rho, m):
    previous = None
    while True:
        d = boundary_curve(f, rho, m).distance(w0)
        if previous is not None and abs(d - previous) <= SAMPLE_RTOL * previous:
            return d
        if m >= MAX_SAMPLES:
            log.debug("Boundary distance at rho=%.6f not settled at m=%d", rho, m)
            return d
        previous, m = d, 2 * m


def schlicht_radius(f, z, levels=DEFAULT_LEVELS, m=DEFAULT_SAMPLES):
    """``d_f(z)`` for a mapping declared univalent."""
    if not f.univalent:
        raise ContractError("schlicht radius of %s: only defined here for univalent mappings" % f.name)
    z = complex(check_disk(z))
    w0 = complex(evaluate(f, z))

    rows = []
    for k in levels:
        rho = 1.0 - 2.0 ** -k
        if rho <= abs(z):
            continue
        rows.append((rho, _level_distance(f, w0, rho, m)))
    if not rows:
        raise DomainError("%s lies outside every boundary level" % z)

    if len(rows) == 1:
        return SchlichtRadiusEstimate(rows[0][1], tuple(rows), extrapolated=False)
    # levels halve 1 - rho, so linear extrapolation to rho = 1 is 2 d_k - d_{k-1}
    value = max(0.0, 2 * rows[-1][1] - rows[-2][1])
    log.debug("Schlicht radius of %s at %s: %s -> %.9g", f.name, z, rows, value)
    return SchlichtRadiusEstimate(value, tuple(rows), extrapolated=True)


def _report(suite, f, checks, started):
    return VerificationReport(suite, f.name, checks, runtime_ms=int((time.time() - started) * 1000))


def verify_radius_sandwich(f, sample_z, tol=1e-9):
    """``(1 - |z|**2)(|h'| - |g'|) / 16 <= d_f(z) <= pi/2 (1 - |z|**2) |h'|`` at each sample."""
    started = time.time()
    checks = []
    for z in sample_z:
        z = complex(z)
        d = schlicht_radius(f, z).value
        weight = 1 - abs(z) ** 2
        hp, gp = abs(complex(f.h.first(z))), abs(complex(f.g.first(z)))
        checks.append(Check.inequality("radius.lower", weight * (hp - gp) / 16, d, tol, worst=z, target=f.name))
        checks.append(Check.inequality("radius.upper", d, HALL_RADIUS * weight * hp, tol, worst=z, target=f.name))
    return _report("radius", f, checks, started)


def covering_check(f, tol=1e-9):
    """The disk ``|w| < (1 - |b_1|)/16`` lies in ``f(D)``, and an omitted point lies on ``|w| = pi/2``."""
    started = time.time()
    b1 = abs(complex(f.g.first(0.0)))
    d0 = schlicht_radius(f, 0.0).value
    checks = [
        Check.inequality("covering.disk", (1 - b1) / 16, d0, tol, worst=0j, target=f.name),
        Check.inequality("covering.omitted", d0, HALL_RADIUS, tol, worst=0j, target=f.name),
    ]
    return _report("covering", f, checks, started)


def radius_asymptotics(f, path, spec=None, inflation=1.05, tol=1e-9):
    """Growth of ``d_f`` along ``path`` against the Bloch-type seminorm, and its quasiconformal converse."""
    started = time.time()
    beta = bloch_type_seminorm(f, spec)
    if beta.diverged:
        raise HypothesisError("beta(%s) diverges (exponent %.3g)" % (f.name, beta.exponent))
    upper_beta = inflation * beta.value
    b1 = abs(complex(f.g.first(0.0)))
    skew = math.sqrt((1 + b1) / (1 - b1))

    k = sup_norm(dilatation(f), spec).value
    quasiconformal = k < 1 - tol
    checks = []
    for z in path:
        z = complex(z)
        d = schlicht_radius(f, z).value
        gap = 1 - abs(z)
        checks.append(
            Check.inequality("asymptotics.growth", d * math.sqrt(gap), HALL_RADIUS * skew * upper_beta, tol, worst=z, target=f.name)
        )
        weighted = (1 - abs(z) ** 2) * math.sqrt(abs(float(jacobian(f, z))))
        checks.append(
            Check.inequality("asymptotics.converse", weighted, CONVERSE_CONSTANT * skew * d / math.sqrt(gap), tol, worst=z, target=f.name)
        )
        if quasiconformal:
            checks.append(
                Check.inequality("asymptotics.uniform", d, HALL_RADIUS * upper_beta / math.sqrt(1 - k), tol, worst=z, target=f.name)
            )
            checks.append(
                Check.inequality(
                    "asymptotics.converse_qc", weighted, 16 * d * math.sqrt((1 + k) / (1 - k)), tol, worst=z, target=f.name
                )
            )
    return _report("asymptotics", f, checks, started)
