from jinja2 import Environment, PackageLoader

from . import Exporter


def number(x, digits=6):
    if x is None:
        return ""
    return "%.*g" % (digits, x)


def point(worst):
    if worst is None:
        return ""
    return "%.6g%+.6gi" % (worst[0], worst[1])


class MarkdownExporter(Exporter):
    def __init__(self, lab, config, reports):
        super().__init__(lab, config, reports)
        self.env = Environment(loader=PackageLoader("hblab.exporter", "templates"), autoescape=False, trim_blocks=True)
        self.env.filters["number"] = number
        self.env.filters["point"] = point

    def render(self):
        template = self.env.get_template("report.md")
        return template.render(reports=[r.as_dict() for r in self.reports])
