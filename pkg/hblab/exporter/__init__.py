import logging
import sys

from ..util import write_file


class Exporter(object):
    """Base class for report exporters"""

    def __init__(self, lab, config, reports):
        self.log = logging.getLogger(self.__class__.__name__)
        self.lab = lab
        self.config = config
        self.reports = reports

    def render(self):
        raise NotImplementedError()

    def export(self, output=None):
        """Render the reports and write them to ``output``, or to stdout when it is unset."""
        data = self.render()
        if output:
            write_file(output, data)
            self.log.info("Wrote %d report(s) to %s", len(self.reports), output)
        else:
            sys.stdout.write(data)
        return data
