import math

import numpy as np
from scipy.optimize import minimize_scalar

from . import Suite
from ..errors import HypothesisError
from ..extremal import bloch_type_seminorm, max_modulus
from ..mapping import dilatation
from ..report import Check

COEFFICIENT_CONSTANT = (math.e / 3) ** 1.5
ARGMAX_TOL = 1e-6


def phi(x):
    """``(1 + 3/(x - 1))**((x - 1)/2) (1 + 2/x)``, increasing to ``e**(3/2)`` on ``x >= 2``."""
    return (1 + 3 / (x - 1)) ** ((x - 1) / 2) * (1 + 2 / x)


def phi_log_derivative(x):
    return 0.5 * math.log((x + 2) / (x - 1)) - (3 * x + 4) / (2 * x * (x + 2))


def optimal_radius(n):
    """``sqrt((n - 1)/(n + 2))``, the maximizer of ``r**(n - 1) (1 - r**2)**(3/2)``."""
    return math.sqrt((n - 1) / (n + 2))


def coefficient_bound(beta, c0, n):
    return beta * COEFFICIENT_CONSTANT * math.sqrt((1 + c0) / (1 - c0)) * math.sqrt(n + 2)


def _worst(values, bounds):
    """Row with the smallest margin as ``(n, lhs, rhs)``."""
    k = int(np.argmin(bounds - values))
    return k, values[k], bounds[k]


def auxiliary_checks(n_max, target=""):
    """Monotonicity of ``phi`` and the location of the maximum behind the coefficient bound."""
    n = np.arange(2, n_max + 1)
    values = np.array([phi(float(k)) for k in n])
    checks = [
        Check.inequality("coefficients.phi_limit", values[-1], math.e ** 1.5, target=target, detail="phi(%d)" % n[-1]),
        Check.inequality(
            "coefficients.phi_log_derivative", 0.0, min(phi_log_derivative(float(k)) for k in n), target=target
        ),
    ]
    if n.size > 1:
        checks.append(Check.inequality("coefficients.phi_increasing", 0.0, float(np.min(np.diff(values))), target=target))
    worst = 0.0
    for k in n:
        res = minimize_scalar(
            lambda r: -(r ** (k - 1)) * (1 - r * r) ** 1.5, bounds=(0.0, 1.0), method="bounded", options={"xatol": 1e-10}
        )
        worst = max(worst, abs(res.x - optimal_radius(k)))
    checks.append(Check.inequality("coefficients.optimal_radius", worst, ARGMAX_TOL, target=target))
    return checks


def coefficient_check(f, n_max, spec=None, inflation=1.05, tol=1e-9, target=""):
    """``|a_1| <= beta/sqrt(1 - |c_0|**2)`` and ``max(|a_n|, |b_n|)`` against the ``sqrt(n + 2)`` bound."""
    if not f.sense_preserving:
        raise HypothesisError("%s is not sense-preserving" % f.name)
    beta = bloch_type_seminorm(f, spec)
    if beta.diverged:
        raise HypothesisError("beta(%s) diverges (exponent %.3g)" % (f.name, beta.exponent))
    upper = inflation * beta.value
    c0 = abs(dilatation(f).c0)
    a = np.abs(f.h.taylor(n_max).coeffs)
    b = np.abs(f.g.taylor(n_max).coeffs)

    checks = [
        Check.estimate("coefficients.beta", beta, target=target),
        Check.inequality("coefficients.a1", a[1], upper / math.sqrt(1 - c0 ** 2), tol, target=target),
    ]
    n = np.arange(2, n_max + 1)
    bounds = np.array([coefficient_bound(upper, c0, k) for k in n])
    for name, values in (("coefficients.a_n", a[2:]), ("coefficients.b_n", b[2:])):
        k, lhs, rhs = _worst(values, bounds)
        checks.append(Check.inequality(name, lhs, rhs, tol, target=target, detail="n=%d" % n[k]))

    # Cauchy estimate at the optimal radius, the step before the closed-form bound
    cauchy = np.array([max_modulus(f.h.first, optimal_radius(k)) / (k * optimal_radius(k) ** (k - 1)) for k in n])
    k, lhs, rhs = _worst(np.maximum(a[2:], b[2:]), cauchy * (1 + 1e-9))
    checks.append(Check.inequality("coefficients.cauchy_estimate", lhs, rhs, tol, target=target, detail="n=%d" % n[k]))
    return checks


class CoefficientsSuite(Suite):
    default_targets = ("identity", "logmap", "ex23", "sharpness_t:t=0.5", "shear:b=0.3", "random:count=10")

    def run(self, target):
        f = self.build(target)
        n_max = self.config["coefficient_order"]
        checks = self.guarded(
            "coefficients", coefficient_check, f, n_max, self.spec, self.inflation, self.tol, target=target.label
        )
        return checks + auxiliary_checks(n_max, target=target.label)
