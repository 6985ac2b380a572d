"""
:mod:`mixscope` -- the main mixscope namespace
================================================================

This is the main module of mixscope, every other module
is above this namespace, for example, to import :mod:`Distribution`:

   >>> from mixscope import Distribution


"""
__all__ = ["Consts", "Util", "Distribution", "Statistics",
           "SSTVerify", "CycleColors", "Reports", "ReportAdapters",
           "Experiment", "Cli"]

__version__ = '0.3'
__author__ = 'mixscope developers'

from . import Consts


def logEnable(filename=Consts.CDefLogFile, level=Consts.CDefLogLevel):
    """ Enable the log system for mixscope

    :param filename: the log filename, None logs to stderr
    :param level: the debugging level

    Example:
       >>> mixscope.logEnable()

    """
    import logging
    logging.basicConfig(level=level,
                        format='%(asctime)s [%(module)s:%(funcName)s:%(lineno)d] %(levelname)s %(message)s',
                        filename=filename,
                        filemode='w' if filename else None)
    logging.info("mixscope v.%s, the log was enabled by user.", __version__)
