import logging

import numpy as np

from ..errors import HypothesisError
from ..extremal import GridSpec
from ..report import Check


class Suite(object):
    """Base class for verification suites

    A suite checks the statements of one family of estimates against a target
    mapping and returns a list of :class:`~hblab.report.Check` rows.
    """

    #: catalog targets used when none are given on the command line
    default_targets = ()

    def __init__(self, lab, config, opts):
        self.log = logging.getLogger(self.__class__.__name__)
        self.lab = lab
        self.config = config
        self.opts = opts or {}
        self.spec = GridSpec.from_config(config["grid"])
        self.tol = config["tol"]
        self.inflation = config["inflation"]
        self.order = config["order"]

    def run(self, target):
        raise NotImplementedError()

    def build(self, target):
        return self.lab.build(target)

    def rng(self, target):
        """A generator seeded by the configured seed and the target, so reports are reproducible."""
        return np.random.default_rng([self.config["seed"], sum(map(ord, target.label))])

    def disk_points(self, target, n, rmax=0.9):
        rng = self.rng(target)
        return rmax * np.sqrt(rng.uniform(size=n)) * np.exp(2j * np.pi * rng.uniform(size=n))

    def guarded(self, check_id, fn, *args, **kwargs):
        """Run ``fn``; a failed theorem hypothesis turns into a skip row."""
        try:
            return fn(*args, **kwargs)
        except HypothesisError as e:
            self.log.warning("Skipping %s: %s", check_id, e)
            return [Check.skip(check_id, str(e))]
