from . import Suite
from ..geometry import covering_check, radius_asymptotics, schlicht_radius, verify_radius_sandwich
from ..mapping import MappingClass, evaluate
from ..report import Check

# radial path z = 1 - 2**-k on which the asymptotic bounds are checked
ASYMPTOTIC_PATH = tuple(1.0 - 2.0 ** -k for k in range(1, 9))
LIPSCHITZ_PAIRS = 4
LIPSCHITZ_RTOL = 0.02


def lipschitz_check(f, z1, z2, target=""):
    """``d_f`` is 1-Lipschitz in the image: ``|d_f(z1) - d_f(z2)| <= |f(z1) - f(z2)|``."""
    d1, d2 = schlicht_radius(f, z1).value, schlicht_radius(f, z2).value
    image_gap = abs(complex(evaluate(f, z1)) - complex(evaluate(f, z2)))
    return Check.inequality(
        "radius.lipschitz", abs(d1 - d2), image_gap + LIPSCHITZ_RTOL * max(d1, d2), worst=complex(z1), target=target
    )


class RadiusSuite(Suite):
    """Schlicht radius sandwich, covering and asymptotic estimates for univalent normalized mappings."""

    default_targets = ("identity", "koebe", "halfplane", "shear:b=0", "shear:b=0.3", "shear:b=0.5", "shear:b=0.8")

    def run(self, target):
        f = self.build(target)
        if not f.univalent or f.declared_class is MappingClass.NONE:
            return [Check.skip("radius", "%s is not declared univalent and normalized" % f.name)]

        checks = []
        for known in target.known_values():
            if known.functional == "schlicht_radius":
                d = schlicht_radius(f, known.at).value
                checks.append(Check.equality("radius.known", d, known.value, known.tol, worst=known.at, detail=known.provenance))

        sample = self.disk_points(target, self.config["radius_samples"])
        checks += verify_radius_sandwich(f, sample, self.tol).checks
        checks += covering_check(f, self.tol).checks
        for z1, z2 in zip(sample[:LIPSCHITZ_PAIRS], sample[LIPSCHITZ_PAIRS : 2 * LIPSCHITZ_PAIRS]):
            checks.append(lipschitz_check(f, z1, z2))

        path = [complex(x) for x in self.opts.get("path", ASYMPTOTIC_PATH)]
        checks += self.guarded("asymptotics", lambda: radius_asymptotics(f, path, self.spec, self.inflation, self.tol).checks)
        self.log.debug("Radius checks for %s: %d", f.name, len(checks))
        return checks
