import numpy as np

from . import Suite
from ..extremal import bloch_type_seminorm
from ..mapping import jacobian
from ..report import Check
from ..transforms import DiskAutomorphism, affine_shear, precompose_automorphism
from ..util import parse_complex

SEMINORM_RTOL = 0.02
POINTWISE_RTOL = 1e-9


def _relative_gap(value, reference):
    if reference > 1e-12:
        return abs(value / reference - 1)
    return abs(value - reference)


def _energy(f, z):
    return np.abs(f.h.first(z)) ** 2 + np.abs(f.g.first(z)) ** 2


def _pointwise_defect(lhs, rhs, scale):
    """Defect relative to ``|h'|**2 + |g'|**2``, the size of the terms cancelling in ``J``."""
    return float(np.max(np.abs(lhs - rhs) / np.maximum(scale, 1.0)))


class InvarianceSuite(Suite):
    """Affine and automorphism invariance of the Bloch-type seminorm."""

    default_targets = ("identity", "logmap", "ex23", "sharpness_t:t=0.5", "shear:b=0.3", "random")

    def run(self, target):
        f = self.build(target)
        z = self.disk_points(target, 200)
        rng = self.rng(target)
        beta = bloch_type_seminorm(f, self.spec)
        checks = [Check.estimate("invariance.beta", beta)]

        for text in self.config["alphas"]:
            alpha = parse_complex(text)
            phi = DiskAutomorphism(alpha)
            F = precompose_automorphism(f, phi)
            w = phi(z)
            lhs = (1 - np.abs(z) ** 2) ** 2 * jacobian(F, z)
            weight = (1 - np.abs(w) ** 2) ** 2
            rhs = weight * jacobian(f, w)
            defect = _pointwise_defect(lhs, rhs, weight * _energy(f, w))
            checks.append(Check.inequality("invariance.automorphism_jacobian", defect, POINTWISE_RTOL, detail="alpha=%s" % text))
            if beta.diverged:
                checks.append(Check.skip("invariance.automorphism", "beta diverges (exponent %.3g)" % beta.exponent))
                continue
            beta_F = bloch_type_seminorm(F, self.spec)
            checks.append(
                Check.inequality(
                    "invariance.automorphism",
                    _relative_gap(beta_F.value, beta.value),
                    SEMINORM_RTOL,
                    worst=beta_F.argmax,
                    detail="alpha=%s beta=%.9g" % (text, beta_F.value),
                )
            )

        a, b = rng.normal(size=2) + 1j * rng.normal(size=2)
        F = affine_shear(f, a, b)
        scale = abs(a) ** 2 - abs(b) ** 2
        checks.append(
            Check.inequality(
                "invariance.shear_jacobian",
                _pointwise_defect(jacobian(F, z), scale * jacobian(f, z), _energy(F, z)),
                POINTWISE_RTOL,
                detail="a=%.6g%+.6gj b=%.6g%+.6gj" % (a.real, a.imag, b.real, b.imag),
            )
        )
        if beta.diverged:
            checks.append(Check.skip("invariance.shear", "beta diverges"))
        else:
            beta_F = bloch_type_seminorm(F, self.spec)
            checks.append(
                Check.inequality(
                    "invariance.shear",
                    _relative_gap(beta_F.value, np.sqrt(abs(scale)) * beta.value),
                    SEMINORM_RTOL,
                    worst=beta_F.argmax,
                )
            )
        return checks

