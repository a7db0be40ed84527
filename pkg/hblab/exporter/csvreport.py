import csv
import io

from . import Exporter

COLUMNS = ("suite", "target", "id", "status", "lhs", "rhs", "margin", "worst", "detail")


class CSVExporter(Exporter):
    def render(self):
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(COLUMNS)
        for report in self.reports:
            for check in report.checks:
                row = check.as_dict()
                worst = row["worst"]
                writer.writerow(
                    [
                        report.suite,
                        row["target"],
                        row["id"],
                        row["status"],
                        _cell(row["lhs"]),
                        _cell(row["rhs"]),
                        _cell(row["margin"]),
                        "" if worst is None else "%.12g%+.12gj" % tuple(worst),
                        row["detail"],
                    ]
                )
        return out.getvalue()


def _cell(x):
    return "" if x is None else "%.12g" % x
