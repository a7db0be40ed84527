import json

from . import Exporter
from ..report import SCHEMA_VERSION


class JSONExporter(Exporter):
    """Canonical report: stable key order, one document for all suites of a run."""

    def render(self):
        doc = {"schema": SCHEMA_VERSION, "reports": [r.as_dict() for r in self.reports]}
        return json.dumps(doc, sort_keys=True, indent=2) + "\n"
