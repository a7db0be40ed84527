import numpy as np

from . import Suite
from ..extremal import hyperbolic_norm
from ..mapping import dilatation, hyperbolic_derivative, validation_grid
from ..report import Check
from ..transforms import schwarz_pick_bound

POINTWISE_TOL = 1e-12
NORM_TOL = 1e-9


class SchwarzpickSuite(Suite):
    """Schwarz-Pick estimates for the dilatation of sense-preserving targets."""

    default_targets = ("identity", "ex23", "sharpness_t:t=0.5", "shear:b=0.5", "random:count=10")

    def run(self, target):
        f = self.build(target)
        if not f.sense_preserving:
            return [Check.skip("schwarzpick", "%s is not sense-preserving" % f.name)]
        w = dilatation(f)
        c0 = abs(w.c0)
        z = np.concatenate([validation_grid(), self.disk_points(target, 200, rmax=0.999)])
        r = np.abs(z)

        excess = np.abs(w.value(z)) - np.array([schwarz_pick_bound(c0, x) for x in r])
        k = int(np.argmax(excess))
        checks = [Check.inequality("schwarzpick.modulus", float(excess[k]), 0.0, POINTWISE_TOL, worst=complex(z[k]))]

        star = np.abs(hyperbolic_derivative(w, z))
        k = int(np.argmax(star))
        checks.append(Check.inequality("schwarzpick.hyperbolic_derivative", float(star[k]), 1.0, POINTWISE_TOL, worst=complex(z[k])))

        norm = hyperbolic_norm(w, self.spec)
        checks.append(Check.inequality("schwarzpick.hyperbolic_norm", norm.value, 1.0, NORM_TOL, worst=norm.argmax))
        return checks
