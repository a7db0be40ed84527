import math

from . import Suite
from ..errors import HypothesisError
from ..extremal import bloch_type_seminorm, max_modulus
from ..mapping import dilatation
from ..report import Check


def growth_bound(beta, c0, r):
    """``beta sqrt((1 + |c_0|)/(1 - |c_0|)) r / sqrt(1 - r**2)``."""
    return beta * math.sqrt((1 + c0) / (1 - c0)) * r / math.sqrt(1 - r ** 2)


def growth_check(f, radii, spec=None, inflation=1.05, tol=1e-9, target=""):
    """``max(|h(z) - a_0|, |g(z)|)`` on ``|z| = r`` against the growth bound."""
    if not f.sense_preserving:
        raise HypothesisError("%s is not sense-preserving" % f.name)
    beta = bloch_type_seminorm(f, spec)
    if beta.diverged:
        raise HypothesisError("beta(%s) diverges (exponent %.3g)" % (f.name, beta.exponent))
    c0 = abs(dilatation(f).c0)
    h = f.h.shifted(complex(f.h.value(0.0)))
    checks = [Check.estimate("growth.beta", beta, target=target)]
    for r in radii:
        bound = growth_bound(inflation * beta.value, c0, r)
        for part, name in ((h, "growth.h"), (f.g, "growth.g")):
            lhs = max_modulus(part, r)
            ratio = lhs / growth_bound(beta.value, c0, r) if beta.value > 0 else math.nan
            checks.append(Check.inequality(name, lhs, bound, tol, worst=complex(r), target=target, detail="r=%s ratio=%.6f" % (r, ratio)))
    return checks


class GrowthSuite(Suite):
    default_targets = ("identity", "logmap", "ex23", "sharpness_t:t=0.5", "shear:b=0.3", "shear:b=0.8", "random:count=50")

    def run(self, target):
        f = self.build(target)
        return self.guarded(
            "growth", growth_check, f, self.config["radii"], self.spec, self.inflation, self.tol, target=target.label
        )
