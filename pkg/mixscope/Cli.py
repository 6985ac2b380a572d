"""

:mod:`Cli` -- the mixscope command line
============================================================================

One experiment per invocation::

   mixscope sst-check --chain rtt --n 4 --t 3 --statistic top_k_order:2 --predicate k_distinct:2 --exact
   mixscope counterexample --n 52 --t 10
   mixscope cycle --coloring RBRB --x0 0 --horizon 5
   mixscope decompose --max-size 10
   mixscope stat-mix --chain riffle --n 4 --t 6 --statistic top_card

The report goes to the standard output, or atomically to ``--out FILE``.
Errors are reported as one JSON line on the standard error, and the exit code
tells usage errors (2), exceeded enumeration budgets (3) and internal errors
(4) apart.

"""

import argparse
import json
import logging
import sys

import mixscope
from . import Consts
from . import Util
from .Experiment import ExperimentConfig, runExperiment
from .ReportAdapters import writeReport


class ArgumentParser(argparse.ArgumentParser):
    """ An argument parser raising ValueError instead of exiting, so usage
    errors get the JSON error line as well """

    def error(self, message):
        Util.raiseException(message, ValueError)


def _floatList(text):
    try:
        return tuple(float(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("expected comma separated numbers, got '%s'" % text)


def buildParser():
    """ The parser of every subcommand, global flags accepted after the
    subcommand name """
    common = ArgumentParser(add_help=False)
    common.add_argument("--format", dest="outputFormat", choices=sorted(Consts.outputFormat),
                        default=Consts.CDefOutputFormat, help="report format")
    common.add_argument("--out", default=None, help="write the report to this file")
    common.add_argument("--seed", type=int, default=None, help="seed of the random sources")
    common.add_argument("--samples", type=int, default=None, help="Monte-Carlo sample count")
    common.add_argument("--exact", action="store_true", help="exact enumeration (the default)")
    common.add_argument("--float", dest="floatMode", action="store_true", help="write rationals as floats")
    common.add_argument("--timing", action="store_true", help="add the wall-clock duration")
    common.add_argument("--log", default=None, help="log file")
    common.add_argument("--verbose", action="store_true", help="debug logging")

    parser = ArgumentParser(prog="mixscope", description="Exact mixing of statistics of Markov chains")
    parser.add_argument("--version", action="version", version="mixscope %s" % mixscope.__version__)
    sub = parser.add_subparsers(dest="experiment", metavar="experiment")
    sub.required = True

    chains = sorted(Consts.chainType)
    p = sub.add_parser("stat-mix", parents=[common], help="separation of a statistic for t = 0..T")
    p.add_argument("--chain", choices=chains, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True, help="the last time T")
    p.add_argument("--statistic", required=True, help="name or name:p1,p2")

    p = sub.add_parser("sst-check", parents=[common], help="certify a strong stationary time claim")
    p.add_argument("--chain", choices=chains, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--statistic", required=True, help="name or name:p1,p2")
    p.add_argument("--predicate", required=True, help="name or name:p1,p2")
    p.add_argument("--restrict", default=None, help="compare the laws restricted to these values")

    p = sub.add_parser("cycle", parents=[common], help="lazy walk on a colored cycle")
    p.add_argument("--coloring", default=None, help="RRBRBB or a JSON array; omit for a random sweep")
    p.add_argument("--x0", type=int, default=None)
    p.add_argument("--horizon", type=int, default=None)
    p.add_argument("--sets", default=None, help="hand-built decomposition, e.g. 0,2,3,5;1,4")
    p.add_argument("--max-size", dest="maxSize", type=int, default=None, help="largest random cycle")
    p.add_argument("--constants", type=_floatList, default=Consts.CDefChebyshevConstants,
                   help="Chebyshev constants c")

    p = sub.add_parser("decompose", parents=[common], help="alternating decomposition checks")
    p.add_argument("--coloring", default=None)
    p.add_argument("--max-size", dest="maxSize", type=int, default=None,
                   help="every coloring up to this size, or random ones with --samples")

    p = sub.add_parser("counterexample", parents=[common], help="the Walk 1 counting argument")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--t", type=int, default=None)
    return parser


def configFromArgs(args):
    """ The :class:`Experiment.ExperimentConfig` of parsed arguments """
    params = dict((k, v) for k, v in vars(args).items()
                  if k in ExperimentConfig.params and v is not None)
    return ExperimentConfig(args.experiment, **params)


def _errorLine(kind, message, code):
    sys.stderr.write(json.dumps({"error": kind, "message": message, "exit_code": code}, sort_keys=True) + "\n")
    return code


def main(argv=None):
    """ Run one experiment from the command line

    :param argv: the arguments, sys.argv[1:] when None
    :rtype: the exit code
    """
    quiet = logging.NullHandler()
    root = logging.getLogger()
    root.addHandler(quiet)
    try:
        try:
            args = buildParser().parse_args(argv)
        except SystemExit as expt:
            return expt.code or 0
        if args.log or args.verbose:
            root.removeHandler(quiet)
            mixscope.logEnable(args.log, logging.DEBUG if args.verbose else logging.INFO)
        config = configFromArgs(args)
        report = runExperiment(config)
        if config.out is None:
            writeReport(report, config.outputFormat, None, config.floatMode)
        return Consts.exitCode["success"]
    except Util.CapacityError as expt:
        return _errorLine("capacity", str(expt), Consts.exitCode["capacity"])
    except (ValueError, TypeError) as expt:
        return _errorLine("usage", str(expt), Consts.exitCode["usage"])
    except Exception as expt:
        return _errorLine("internal", "%s: %s" % (type(expt).__name__, expt), Consts.exitCode["internal"])
    finally:
        root.removeHandler(quiet)


if __name__ == "__main__":
    sys.exit(main())
