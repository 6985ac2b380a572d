"""
:mod:`ReportAdapters` -- file adapters for the experiment reports
=====================================================================

mixscope writes the :class:`Reports.Report` of every experiment through an
adapter: the JSON adapter keeps the report structure, the CSV adapter flattens
it into rows for spreadsheet inspection. Files are written atomically, the
report goes to a temporary file in the target directory which then replaces
the target, so a reader never sees a half written report.

.. seealso::

   Function :func:`Experiment.runExperiment`
      The experiments produce the reports written here.

"""

import csv
import io
import json
import logging
import os
import sys
import tempfile

from . import Consts
from . import Util


def atomicWrite(filename, text):
    """ Write *text* to *filename* through a temporary file and :func:`os.replace`

    :param filename: the target file
    :param text: the whole content
    """
    directory = os.path.dirname(os.path.abspath(filename))
    fd, tmp_name = tempfile.mkstemp(prefix=".mixscope-", dir=directory)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fHandle:
            fHandle.write(text)
        os.replace(tmp_name, filename)
    except BaseException:
        if os.path.exists(tmp_name):
            os.remove(tmp_name)
        raise
    logging.debug("Report written to %s (%d bytes)", filename, len(text))


class ReportBaseAdapter(object):
    """ ReportBaseAdapter Class - The base class for all report adapters

    If you want to create your own adapter, you must subclass this class and
    implement :meth:`render`.

    :param filename: the output file, None writes to the standard output
    :param floatMode: write rationals as floats
    """
    def __init__(self, filename=None, floatMode=False):
        """ The class constructor """
        self.filename = filename
        self.floatMode = floatMode
        self.buffer = []

    def __repr__(self):
        """ The string representation of adapter """
        return "%s Report Adapter [File='%s']" % (type(self).__name__, self.filename or "<stdout>")

    def open(self):
        """ Start a new output """
        self.buffer = []

    def insert(self, report):
        """ Queue a report for output

        :param report: the :class:`Reports.Report`
        """
        self.buffer.append(report.toJSON(self.floatMode))

    def render(self, objects):
        """ The text of the queued report objects """
        Util.raiseException("This method is not implemented on the ABC", NotImplementedError)

    def commitAndClose(self):
        """ Write the queued reports, atomically when writing to a file """
        text = self.render(self.buffer)
        if self.filename is None:
            sys.stdout.write(text)
            sys.stdout.flush()
        else:
            atomicWrite(self.filename, text)
        self.buffer = []


class ReportFileJSON(ReportBaseAdapter):
    """ ReportFileJSON Class - Adapter to dump reports as JSON

    Keys are sorted, so the same report always gives the same bytes.

    Example:
       >>> adapter = ReportFileJSON(filename="report.json")
       >>> adapter.open()
       >>> adapter.insert(report)
       >>> adapter.commitAndClose()

    """
    def render(self, objects):
        body = objects[0] if len(objects) == 1 else objects
        return json.dumps(body, sort_keys=True, indent=2) + "\n"


def isDistributionObject(value):
    """ True for the JSON object of a :class:`Distribution.Distribution` """
    return isinstance(value, dict) and set(value) == {"support", "weights", "mode"}


def flattenRows(value, path=""):
    """ Flatten a JSON compatible report into (path, item, value) rows

    Nested keys are joined with dots and list entries get their index; a
    distribution becomes one row per state with the state in the *item*
    column.

    Example:
       >>> list(flattenRows({"q": "2/3", "law": {"support": [1, 2], "weights": ["1/2", "1/2"], "mode": "exact"}}))
       [('law', '1', '1/2'), ('law', '2', '1/2'), ('q', '', '2/3')]

    """
    if isDistributionObject(value):
        for state, weight in zip(value["support"], value["weights"]):
            yield (path, json.dumps(state) if not isinstance(state, str) else state, weight)
    elif isinstance(value, dict):
        for key in sorted(value):
            for row in flattenRows(value[key], "%s.%s" % (path, key) if path else str(key)):
                yield row
    elif isinstance(value, list) and any(isinstance(v, (dict, list)) for v in value):
        for idx, item in enumerate(value):
            for row in flattenRows(item, "%s.%d" % (path, idx)):
                yield row
    elif isinstance(value, list):
        for idx, item in enumerate(value):
            yield (path, str(idx), item)
    else:
        yield (path, "", value)


class ReportFileCSV(ReportBaseAdapter):
    """ ReportFileCSV Class - Adapter to dump reports as CSV rows

    Every row is (identify, path, item, value), delimited by
    :attr:`Consts.CDefCSVDelimiter`; booleans and None are written as
    JSON literals.

    :param filename: the CSV filename, None for the standard output
    :param identify: the identify of the run, the experiment kind when None
    :param floatMode: write rationals as floats
    """
    def __init__(self, filename=None, floatMode=False, identify=None):
        super(ReportFileCSV, self).__init__(filename, floatMode)
        self.identify = identify

    def render(self, objects):
        fHandle = io.StringIO()
        csvWriter = csv.writer(fHandle, delimiter=Consts.CDefCSVDelimiter, lineterminator="\n")
        csvWriter.writerow(["identify", "path", "item", "value"])
        for obj in objects:
            identify = self.identify or obj.get("experiment", "")
            for path, item, value in flattenRows(obj):
                if isinstance(value, bool) or value is None:
                    value = json.dumps(value)
                csvWriter.writerow([identify, path, item, value])
        return fHandle.getvalue()


def getAdapter(outputFormat=Consts.CDefOutputFormat, filename=None, floatMode=False):
    """ The adapter for an output format, "json" or "csv" """
    if outputFormat == Consts.outputFormat["json"]:
        return ReportFileJSON(filename, floatMode)
    if outputFormat == Consts.outputFormat["csv"]:
        return ReportFileCSV(filename, floatMode)
    Util.raiseException("Unknown output format '%s'" % (outputFormat,), ValueError)


def writeReport(report, outputFormat=Consts.CDefOutputFormat, filename=None, floatMode=False):
    """ Write one report with the adapter of *outputFormat* """
    adapter = getAdapter(outputFormat, filename, floatMode)
    adapter.open()
    adapter.insert(report)
    adapter.commitAndClose()
    return adapter
