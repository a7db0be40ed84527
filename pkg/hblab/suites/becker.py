from . import Suite
from ..mapping import pre_schwarzian
from ..report import Check, CheckStatus
from ..transforms import becker_margin


class BeckerSuite(Suite):
    """Becker-type univalence margin of sense-preserving targets.

    A margin at most 1 certifies univalence. A larger margin proves nothing and
    is reported as a skip.
    """

    default_targets = ("identity", "shear:b=0.5", "logmap", "koebe", "ex23")

    def run(self, target):
        f = self.build(target)
        checks = []
        for known in target.known_values():
            if known.functional == "pre_schwarzian":
                value = complex(pre_schwarzian(f, known.at))
                checks.append(Check.inequality("becker.pre_schwarzian", abs(value - known.value), 1e-8, worst=known.at))
        if not f.sense_preserving:
            return checks + [Check.skip("becker.margin", "%s is not sense-preserving" % f.name)]

        cert = becker_margin(f, self.spec)
        if cert.passes:
            checks.append(Check.inequality("becker.margin", cert.margin, 1.0, worst=cert.worst_z, detail="univalence certified"))
        else:
            checks.append(
                Check(
                    "becker.margin",
                    status=CheckStatus.SKIP,
                    lhs=cert.margin,
                    rhs=1.0,
                    margin=1.0 - cert.margin,
                    worst=cert.worst_z,
                    detail="criterion inconclusive",
                )
            )
        return checks
