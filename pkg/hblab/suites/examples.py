import numpy as np

from . import Suite
from ..extremal import analytic_bloch_seminorm, bloch_type_seminorm, sup_disk, weighted_jacobian_field
from ..geometry import schlicht_radius
from ..mapping import evaluate, jacobian, pre_schwarzian
from ..report import Check


def _compare(check_id, value, known, worst=None):
    if known.relation == "le":
        return Check.inequality(check_id, value, known.value, known.tol, worst=worst, detail=known.provenance)
    if known.relation == "ge":
        return Check.inequality(check_id, known.value, value, known.tol, worst=worst, detail=known.provenance)
    return Check.equality(check_id, value, known.value, known.tol, worst=worst, detail=known.provenance)


def _exponent_check(check_id, estimate, known):
    if not estimate.diverged:
        return Check.flag(check_id, False, detail="expected divergence, scan stayed at %.6g" % estimate.value)
    return _compare(check_id, estimate.exponent, known, worst=estimate.argmax)


class ExamplesSuite(Suite):
    """Reproduces the values recorded with catalog entries, and the membership of ``h`` and ``g`` in the Bloch space."""

    default_targets = (
        "identity",
        "logmap",
        "ex22:p=2.5",
        "ex22:p=3",
        "ex22:p=4",
        "ex22_plus_id:p=2.5",
        "ex22_plus_id:p=3",
        "ex22_plus_id:p=4",
        "ex23",
        "sharpness_t:t=0.5",
        "shear:b=0.5",
    )

    def known_value_checks(self, f, known_values):
        checks = []
        beta = None
        for known in known_values:
            check_id = "examples.%s" % known.functional
            if known.functional == "beta":
                beta = beta or bloch_type_seminorm(f, self.spec)
                if beta.diverged:
                    checks.append(Check.flag(check_id, False, detail="beta diverges (exponent %.3g)" % beta.exponent))
                else:
                    checks.append(_compare(check_id, beta.value, known, worst=beta.argmax))
            elif known.functional == "bloch_h_exponent":
                checks.append(_exponent_check(check_id, analytic_bloch_seminorm(f.h, self.spec), known))
            elif known.functional == "weighted_jacobian_exponent":
                checks.append(_exponent_check(check_id, sup_disk(weighted_jacobian_field(f), self.spec), known))
            elif known.functional == "schlicht_radius":
                checks.append(_compare(check_id, schlicht_radius(f, known.at).value, known, worst=known.at))
            elif known.functional == "pre_schwarzian":
                checks.append(_compare(check_id, abs(complex(pre_schwarzian(f, known.at))), known, worst=known.at))
        return checks

    def run(self, target):
        f = self.build(target)
        checks = self.known_value_checks(f, target.known_values())
        for part, name in ((f.h, "h"), (f.g, "g")):
            checks.append(Check.estimate("examples.bloch_%s" % name, analytic_bloch_seminorm(part, self.spec)))

        z = self.disk_points(target, 200)
        if target.name == "ex22":
            checks.append(Check.inequality("examples.zero_jacobian", float(np.max(np.abs(jacobian(f, z)))), self.tol))
            checks.append(Check.inequality("examples.real_valued", float(np.max(np.abs(evaluate(f, z).imag))), self.tol))
        if target.name == "ex23":
            beta = bloch_type_seminorm(f, self.spec)
            on_axis = abs(beta.argmax.imag) <= self.tol and abs(beta.argmax.real - self.spec.r_cap) <= self.tol
            checks.append(Check.flag("examples.argmax_on_axis", on_axis, detail="argmax %s" % beta.argmax))
        return checks
