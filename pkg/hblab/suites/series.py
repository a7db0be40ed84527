import numpy as np

from . import Suite
from ..mapping import Backing
from ..report import Check
from ..series import coefficients_via_cauchy, exp_series, log_series

ROUND_TRIP_ORDER = 32
ROUND_TRIP_TOL = 1e-10
QUADRATURE_TOL = 1e-8
CROSS_CHECK_ORDER = 400
CROSS_CHECK_RADIUS = 0.9
DERIVATIVE_TOL = 1e-6


def _defect(a, b):
    a, b = np.asarray(a), np.asarray(b)
    return float(np.max(np.abs(a - b) / np.maximum(np.abs(b), 1.0)))


class SeriesSuite(Suite):
    """Series calculus round trips, quadrature accuracy and closed-form/series agreement of a target's parts."""

    default_targets = ("identity", "koebe", "halfplane", "logmap", "ex22:p=3", "ex23", "sharpness_t:t=0.5", "shear:b=0.5")

    def run(self, target):
        f = self.build(target)
        checks = []
        for part, name in ((f.h, "h"), (f.g, "g")):
            s = part.taylor(ROUND_TRIP_ORDER)
            defect = _defect(s.deriv().integ(s[0]).coeffs, s.coeffs)
            checks.append(Check.inequality("series.integrate_round_trip", defect, ROUND_TRIP_TOL, detail=name))
            first = s.deriv()
            if abs(first[0]) > 0:
                scaled = first * (1 / first[0])
                back = exp_series(log_series(scaled))
                checks.append(Check.inequality("series.exp_log_round_trip", _defect(back.coeffs, scaled.coeffs), ROUND_TRIP_TOL, detail=name))

            if part.backing is Backing.CLOSED_FORM and part.series is not None:
                n = 16
                exact = part.series.truncate(n).coeffs
                quadrature = coefficients_via_cauchy(part, n, r=0.5).coeffs
                checks.append(Check.inequality("series.cauchy_quadrature", _defect(quadrature, exact), QUADRATURE_TOL, detail=name))

        checks += self.cross_check(target)
        return checks

    def cross_check(self, target):
        """Closed-form derivatives against the long exact series and against finite differences."""
        f = self.lab.build(target, order=CROSS_CHECK_ORDER)
        z = self.disk_points(target, 64, rmax=CROSS_CHECK_RADIUS)
        checks = []
        for part, name in ((f.h, "h"), (f.g, "g")):
            if part.backing is not Backing.CLOSED_FORM or part.series is None or part.series.order < CROSS_CHECK_ORDER:
                continue
            for k, evaluator in ((1, part.first), (2, part.second)):
                approx = part.series
                for _ in range(k):
                    approx = approx.deriv()
                checks.append(
                    Check.inequality(
                        "series.closed_form_agreement", _defect(approx(z), evaluator(z)), QUADRATURE_TOL, detail="%s derivative %d" % (name, k)
                    )
                )
            checks.append(Check.inequality("series.finite_difference", part.finite_difference_defect(z), DERIVATIVE_TOL, detail=name))
        return checks
