import numpy as np

from . import Suite
from ..extremal import bloch_type_seminorm
from ..mapping import Dilatation, validation_grid
from ..report import Check
from ..transforms import FORWARD_BLOCH_BOUND, a2_bound, becker_margin, pommerenke_forward, pommerenke_inverse

# beta(log psi') <= 6 for univalent analytic psi
CLASSICAL_BOUND = 6.0
CLASSICAL_SLACK = 1.02


class PommerenkeSuite(Suite):
    """Both directions of the correspondence between univalent mappings and Bloch-type functions."""

    default_targets = ("identity", "koebe", "halfplane", "logmap", "shear:b=0.3")

    def forward(self, H, target):
        if not (H.univalent and H.sense_preserving):
            return [Check.skip("pommerenke.forward", "%s is not declared univalent and sense-preserving" % H.name)]
        checks = []
        b1 = abs(complex(H.g.first(0.0)))
        bound = min(FORWARD_BLOCH_BOUND, 2 * (a2_bound(b1) + 1))
        analytic = not np.any(H.g.first(validation_grid()))
        for w in (Dilatation.constant(0.0), Dilatation.identity()):
            f = pommerenke_forward(H, w, self.order)
            beta = bloch_type_seminorm(f, self.spec)
            if beta.diverged:
                checks.append(Check.flag("pommerenke.forward", False, detail="omega=%s: beta diverges" % w.name))
                continue
            checks.append(Check.inequality("pommerenke.forward", beta.value, bound, self.tol, worst=beta.argmax, detail="omega=%s" % w.name))
            if analytic and w.c0 == 0 and w.first(0.0) == 0:
                checks.append(
                    Check.inequality(
                        "pommerenke.classical", beta.value, CLASSICAL_BOUND * CLASSICAL_SLACK, worst=beta.argmax, detail="beta=%.6f" % beta.value
                    )
                )
        return checks

    def inverse(self, f, target):
        eps = self.config["eps"]
        checks = []
        for w in (Dilatation.constant(0.0), Dilatation.power(1, (1 - eps) / 2)):
            F = pommerenke_inverse(f, eps, w, self.spec, self.order, self.inflation, self.tol, certify=False)
            cert = becker_margin(F, self.spec)
            checks.append(Check.inequality("pommerenke.inverse", cert.margin, 1.0, worst=cert.worst_z, detail="omega=%s" % w.name))
        return checks

    def run(self, target):
        f = self.build(target)
        checks = self.guarded("pommerenke.forward", self.forward, f, target)
        checks += self.guarded("pommerenke.inverse", self.inverse, f, target)
        return checks
