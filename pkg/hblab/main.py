import argparse
import importlib
import json
import logging
import sys
import time
from concurrent.futures import ThreadPoolExecutor

from . import catalog
from .config import load_config, merge
from .errors import DomainError, HblabError, HypothesisError, UsageError
from .extremal import GridSpec, analytic_bloch_seminorm, bloch_type_seminorm, hyperbolic_norm, max_modulus, sup_norm
from .geometry import schlicht_radius
from .mapping import dilatation
from .report import SCHEMA_VERSION, Check, VerificationReport
from .transforms import becker_margin
from .util import parse_complex, parse_param, parse_target, write_file
from . import suites  # noqa

SUITES = ("invariance", "growth", "coefficients", "radius", "pommerenke", "becker", "examples", "sharpness", "schwarzpick", "series")
FUNCTIONALS = ("beta", "bloch_h", "bloch_g", "hyperbolic_norm", "sup_norm", "becker", "schlicht_radius", "max_modulus", "coefficients")
FORMATS = ("json", "md", "csv")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_ERROR = 3


def run():
    """Console script entry point"""
    logging.basicConfig(level=logging.INFO)
    sys.exit(CommandLine().run())


def run_suite(suite, targets=None, config=None):
    """Run one suite over ``targets`` (catalog target strings, or its defaults) and return the report."""
    lab = HbLab(config)
    return lab.run_suite(suite, lab.targets(targets) if targets else None)


def _point(z):
    z = complex(z)
    return [z.real, z.imag]


class HbLab(object):
    def __init__(self, config=None):
        self.log = logging.getLogger(self.__class__.__name__)
        self.config = config if config is not None else load_config()
        try:
            self.spec = GridSpec.from_config(self.config["grid"])
        except (DomainError, TypeError, ValueError) as e:
            raise UsageError("grid configuration: %s" % e)

    def build(self, target, order=None):
        return target.build(order or self.config["order"])

    def targets(self, specs, params=(), strict=True):
        """Parse target strings; with ``strict`` every ``--param`` must be accepted by at least one of them."""
        targets = []
        for text in specs:
            targets += parse_target(text, self.config, params)
        for key, _ in params if strict else ():
            if not any(key in t.entry.params for t in targets):
                raise UsageError("no target takes parameter %s" % key)
        return targets

    def load_suite(self, name, opts=None):
        if name not in SUITES:
            raise UsageError("unknown suite %s (known: %s)" % (name, ", ".join(SUITES)))
        try:
            suitemod = importlib.import_module("." + name, "hblab.suites")
        except ImportError as e:
            raise UsageError("suite %s not loaded: %s" % (name, e))
        suitecls = getattr(suitemod, name.capitalize() + "Suite")
        return suitecls(self, self.config, opts)

    def _run_target(self, name, suite, target):
        try:
            checks = suite.run(target)
        except HypothesisError as e:
            self.log.warning("Skipping %s on %s: %s", name, target.label, e)
            checks = [Check.skip(name, str(e))]
        return [c.with_target(target.label) for c in checks]

    def run_suite(self, name, targets=None, params=()):
        suite = self.load_suite(name)
        if targets is None:
            targets = self.targets(suite.default_targets, params, strict=False)
        start_time = time.time()
        self.log.info("Running suite %s on %d target(s)...", name, len(targets))
        with ThreadPoolExecutor(max_workers=max(1, self.config["threads"])) as pool:
            results = list(pool.map(lambda t: self._run_target(name, suite, t), targets))
        checks = [c for rows in results for c in rows]
        report = VerificationReport(
            suite=name,
            target=",".join(t.label for t in targets),
            checks=checks,
            config=self.config,
            runtime_ms=int((time.time() - start_time) * 1000),
        )
        for check in report.failed:
            self.log.warning("%s failed on %s: lhs=%s rhs=%s %s", check.id, check.target, check.lhs, check.rhs, check.detail)
        self.log.info("Suite %s complete in %.2f seconds", name, time.time() - start_time)
        return report

    def evaluate(self, functional, target, z=0j, r=0.5, n=None):
        """One functional of one target, as a JSON-ready dict."""
        f = self.build(target)
        if functional == "beta":
            result = bloch_type_seminorm(f, self.spec).as_dict()
        elif functional in ("bloch_h", "bloch_g"):
            part = f.h if functional == "bloch_h" else f.g
            result = analytic_bloch_seminorm(part, self.spec).as_dict()
        elif functional == "hyperbolic_norm":
            result = hyperbolic_norm(dilatation(f), self.spec).as_dict()
        elif functional == "sup_norm":
            result = sup_norm(dilatation(f), self.spec).as_dict()
        elif functional == "becker":
            cert = becker_margin(f, self.spec)
            result = {"margin": cert.margin, "passes": cert.passes, "worst": _point(cert.worst_z), "estimate": cert.estimate.as_dict()}
        elif functional == "schlicht_radius":
            estimate = schlicht_radius(f, z)
            result = {"value": estimate.value, "levels": [list(row) for row in estimate.rho_levels], "extrapolated": estimate.extrapolated}
        elif functional == "max_modulus":
            result = {"r": r, "h": max_modulus(f.h, r), "g": max_modulus(f.g, r), "f": max_modulus(f, r)}
        elif functional == "coefficients":
            n = n or self.config["coefficient_order"]
            result = {"a": [_point(c) for c in f.h.taylor(n).coeffs], "b": [_point(c) for c in f.g.taylor(n).coeffs]}
        else:
            raise UsageError("unknown functional %s (known: %s)" % (functional, ", ".join(FUNCTIONALS)))
        return {"schema": SCHEMA_VERSION, "functional": functional, "target": target.label, "result": result, "config": self.config}

    def export(self, reports, fmt=None, output=None):
        fmt = fmt or self.config["format"]
        # Exporters are imported on demand here, so that jinja2 is only needed
        # when a markdown report is asked for
        if fmt == "json":
            from .exporter.jsonreport import JSONExporter as exporter_cls
        elif fmt == "md":
            from .exporter.markdown import MarkdownExporter as exporter_cls
        elif fmt == "csv":
            from .exporter.csvreport import CSVExporter as exporter_cls
        else:
            raise UsageError("unknown report format %s" % fmt)
        return exporter_cls(self, self.config, reports).export(output or self.config["output"])


class CommandLine(object):
    def __init__(self, argv=None):
        self.log = logging.getLogger(self.__class__.__name__)
        common = argparse.ArgumentParser(add_help=False)
        common.add_argument(
            "--config",
            dest="config",
            action="append",
            default=[],
            metavar="FILE",
            help="""A config file (JSON, or TOML when named *.toml). May be repeated;
                    later files override earlier ones.""",
        )
        common.add_argument("--target", dest="target", action="append", metavar="NAME[:K=V,...]", help="Catalog target")
        common.add_argument("--param", dest="param", action="append", default=[], metavar="K=V", help="Parameter for every target that takes it")
        common.add_argument("--order", dest="order", type=int, help="Series truncation order")
        common.add_argument("--grid-depth", dest="grid_depth", type=int, help="Refinement rounds of the supremum scan")
        common.add_argument("--rmax-exp", dest="rmax_exp", type=int, help="Deepest radial level is 1 - 2**-RMAX_EXP")
        common.add_argument("--tol", dest="tol", type=float, help="Check tolerance")
        common.add_argument("--seed", dest="seed", type=int, help="Seed of random targets and sample points")
        common.add_argument("--output", dest="output", metavar="PATH", help="Write the result to PATH instead of stdout")
        common.add_argument("-v", "--verbose", dest="verbose", action="store_true", help="Log diagnostics")
        common.add_argument("-q", "--quiet", dest="quiet", action="store_true", help="Log warnings and errors only")

        parser = argparse.ArgumentParser(description="Harmonic Bloch-type mapping laboratory")
        commands = parser.add_subparsers(dest="command", metavar="COMMAND")
        commands.required = True

        commands.add_parser("list", parents=[common], help="List catalog targets and suites")

        evaluate = commands.add_parser("eval", parents=[common], help="Evaluate a single functional")
        evaluate.add_argument("--functional", dest="functional", required=True, choices=FUNCTIONALS)
        evaluate.add_argument("--z", dest="z", default="0", help="Point for schlicht_radius")
        evaluate.add_argument("--r", dest="r", type=float, default=0.5, help="Radius for max_modulus")
        evaluate.add_argument("--n", dest="n", type=int, help="Number of coefficients")

        verify = commands.add_parser("verify", parents=[common], help="Run verification suites")
        verify.add_argument("--suite", dest="suite", action="append", metavar="NAME", help="Suite to run (default: all)")
        verify.add_argument("--format", dest="format", choices=FORMATS, help="Report format")

        self.args = parser.parse_args(argv)

    def configure(self):
        args = self.args
        if args.verbose:
            logging.getLogger().setLevel(logging.DEBUG)
        elif args.quiet:
            logging.getLogger().setLevel(logging.WARNING)

        config = load_config(args.config)
        overrides = {
            "order": args.order,
            "tol": args.tol,
            "seed": args.seed,
            "output": args.output,
            "format": getattr(args, "format", None),
            "grid": {"refine_depth": args.grid_depth, "rmax_exp": args.rmax_exp},
        }
        overrides["grid"] = {k: v for k, v in overrides["grid"].items() if v is not None}
        return merge(config, {k: v for k, v in overrides.items() if v is not None})

    def run(self):
        try:
            self.lab = HbLab(self.configure())
            return getattr(self, "do_" + self.args.command)()
        except UsageError as e:
            self.log.error("%s", e)
            return EXIT_USAGE
        except HblabError as e:
            self.log.error("%s: %s", e.__class__.__name__, e)
            return EXIT_ERROR
        except Exception:
            self.log.exception("Internal error running %s", self.args.command)
            return EXIT_ERROR

    def params(self):
        return [parse_param(p) for p in self.args.param]

    def do_list(self):
        lines = []
        for entry in catalog.entries():
            params = ", ".join("%s=%r (%s)" % (k, p.default, p.doc) if p.doc else "%s=%r" % (k, p.default) for k, p in entry.params.items())
            lines.append("%-14s %s" % (entry.name, entry.description))
            if params:
                lines.append("%-14s params: %s" % ("", params))
            for known in entry.known_values():
                lines.append("%-14s %s %s %.9g [%s]" % ("", known.functional, known.relation, known.value, known.provenance))
        lines.append("")
        lines.append("suites: %s" % ", ".join(SUITES))
        self._emit("\n".join(lines) + "\n")
        return EXIT_OK

    def do_eval(self):
        targets = self.lab.targets(self.args.target or [], self.params())
        if len(targets) != 1:
            raise UsageError("eval takes exactly one target, got %d" % len(targets))
        result = self.lab.evaluate(self.args.functional, targets[0], z=parse_complex(self.args.z), r=self.args.r, n=self.args.n)
        self._emit(json.dumps(result, sort_keys=True, indent=2) + "\n")
        return EXIT_OK

    def do_verify(self):
        params = self.params()
        suites = self.args.suite or SUITES
        if self.args.target:
            targets = self.lab.targets(self.args.target, params)
        else:
            targets = None
            # only validates that some default target takes each --param
            self.lab.targets([t for name in suites for t in self.lab.load_suite(name).default_targets], params)
        reports = [self.lab.run_suite(name, targets, params) for name in suites]
        self.lab.export(reports)
        if all(r.passed for r in reports):
            return EXIT_OK
        self.log.info("%d check(s) failed", sum(len(r.failed) for r in reports))
        return EXIT_FAILED

    def _emit(self, data):
        if self.lab.config["output"]:
            write_file(self.lab.config["output"], data)
        else:
            sys.stdout.write(data)
