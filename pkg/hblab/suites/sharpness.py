import math

import numpy as np

from . import Suite
from ..catalog import sharpness
from ..errors import DomainError
from ..extremal import bloch_type_seminorm
from ..report import Check

EXPONENT = 0.5
EXPONENT_TOL = 0.05
# x_k = 1 - 2**-k along which |h| and |g| are fitted
FIT_LEVELS = tuple(range(10, 21))


def fit_exponent(values, x):
    """Slope of ``log values`` against ``-log(1 - x)``."""
    return float(np.polyfit(-np.log(1 - x), np.log(values), 1)[0])


def sharpness_check(t, eps, spec=None, order=64, tol=1e-9, target=""):
    """Growth of the extremal family along ``x -> 1``.

    ``|h(x)|`` and ``|g(x)|`` grow like ``(1 - x)**-1/2``, so ``(1 - x)**(1/2 - eps) |g(x)|``
    is unbounded for every ``eps > 0`` while ``beta <= 2 sqrt(2) sqrt(1 + t)``.
    """
    if not 0 < eps < 0.5:
        raise DomainError("eps must lie in (0, 1/2), got %r" % eps)
    f = sharpness(t, order)
    x = 1.0 - 2.0 ** -np.array(FIT_LEVELS, dtype=float)
    h = np.abs(f.h.value(x))
    g = np.abs(f.g.value(x))
    checks = [
        Check.equality("sharpness.h_exponent", fit_exponent(h, x), EXPONENT, EXPONENT_TOL, target=target),
        Check.equality("sharpness.g_exponent", fit_exponent(g, x), EXPONENT, EXPONENT_TOL, target=target),
    ]
    weighted = (1 - x) ** (0.5 - eps) * g
    checks.append(
        Check.inequality(
            "sharpness.unbounded", 0.0, float(np.min(np.diff(weighted))), worst=complex(x[-1]), target=target,
            detail="(1-x)^(1/2-eps)|g| reaches %.6g" % weighted[-1],
        )
    )
    beta = bloch_type_seminorm(f, spec)
    checks.append(
        Check.inequality("sharpness.beta", beta.value, 2 * math.sqrt(2) * math.sqrt(1 + t), 1e-6, worst=beta.argmax, target=target)
    )
    return checks


class SharpnessSuite(Suite):
    default_targets = ("sharpness_t:t=0", "sharpness_t:t=0.5", "sharpness_t:t=0.9")

    def run(self, target):
        if target.name not in ("sharpness_t", "ex23"):
            return [Check.skip("sharpness", "%s is not a member of the extremal family" % target.label)]
        t = target.resolved().get("t", 0.0)
        return sharpness_check(t, self.config["sharpness_eps"], self.spec, self.order, self.tol)
