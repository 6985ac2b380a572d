"""

:mod:`Consts` -- constants module
============================================================================

mixscope have defaults in all operations, budgets and output settings, this is
an issue to help the user in the API use and minimize the code needed to make
simple things. In the module :mod:`Consts`, you will find those defaults
settings. You are encouraged to see the constants, but not to change directly
on the module, most operations accept a parameter overriding them.

General constants
----------------------------------------------------------------------------

.. attribute:: CDefLogFile

   The default log filename.

.. attribute:: CDefLogLevel

   Default log level.

.. attribute:: CDefBudgetEnvVar

   The environment variable which overrides :attr:`CDefEnumerationBudget`.

Numeric constants (:mod:`Distribution`)
----------------------------------------------------------------------------

.. attribute:: numericMode

   The two numeric modes, exact rationals or 64-bit floats.

   Example:
      >>> mode = Consts.numericMode["exact"]

.. attribute:: CDefFloatTolerance

   Tolerance on the total mass of a float mode distribution.

Enumeration constants (:mod:`SSTVerify`, :mod:`perturbations.ShuffleMoves`)
----------------------------------------------------------------------------

.. attribute:: CDefEnumerationBudget

   Maximum number of weighted branches an exact enumeration may visit.

.. attribute:: CDefDenseMaxCards

   Largest deck size for dense kernels over the symmetric group (8! states).

.. attribute:: CDefMonteCarloSamples

   Default number of sampled paths in Monte-Carlo mode.

.. attribute:: CDefConfidenceZ

   Normal quantile used for Monte-Carlo confidence intervals (95%).

.. attribute:: chainType

   The shuffle chains, random-to-top, Walk 1 and the inverse riffle.

.. attribute:: CDefNoneValue

   The value of neighbour statistics at the deck ends.

Cycle constants (:mod:`CycleColors`)
----------------------------------------------------------------------------

.. attribute:: CDefRed

   Red mark.

.. attribute:: CDefBlue

   Blue mark.

CLI and report constants (:mod:`Cli`, :mod:`ReportAdapters`)
----------------------------------------------------------------------------

.. attribute:: exitCode

   Process exit codes, success, usage, capacity and internal errors.

.. attribute:: experimentType

   The experiment kinds accepted by :func:`Experiment.runExperiment`.

.. attribute:: outputFormat

   The report formats.

.. attribute:: CDefCSVDelimiter

   The CSV delimiter of the CSV report adapter.

"""
import logging

CDefLogFile = "mixscope.log"
CDefLogLevel = logging.DEBUG
CDefBudgetEnvVar = "MIXSCOPE_BUDGET"

numericMode = {"exact": "exact", "float": "float"}
CDefFloatTolerance = 1e-12

CDefEnumerationBudget = 10 ** 7
CDefDenseMaxCards = 8
CDefMonteCarloSamples = 10000
CDefConfidenceZ = 1.959963984540054

chainType = {"rtt": "rtt", "walk1": "walk1", "riffle": "riffle"}

CDefNoneValue = "none"
CDefParityEven = "even"
CDefParityOdd = "odd"

CDefRed = "R"
CDefBlue = "B"
CDefColors = (CDefRed, CDefBlue)

exitCode = {"success": 0, "usage": 2, "capacity": 3, "internal": 4}

experimentType = {"stat-mix": "stat-mix",
                  "sst-check": "sst-check",
                  "cycle": "cycle",
                  "decompose": "decompose",
                  "counterexample": "counterexample"}

outputFormat = {"json": "json", "csv": "csv"}
CDefOutputFormat = "json"
CDefCSVDelimiter = ";"

CDefCycleHorizon = 200
CDefChebyshevConstants = (1.5, 2.0, 3.0)
CDefDominanceHorizon = 500
CDefMinimalitySearchMax = 12
