"""

:mod:`Experiment` -- experiment configuration and dispatch
============================================================================

An experiment is described by an :class:`ExperimentConfig` and run by
:func:`runExperiment`, which dispatches to the module owning the computation
and wraps its outcome in a :class:`Reports.Report`. The experiment kinds are
the keys of :attr:`Consts.experimentType`:

**stat-mix**
   Separation and total variation of a statistic of a shuffle chain started
   from the identity deck, for t = 0..T.

**sst-check**
   Certify or refute a strong stationary time claim by exhaustive path
   enumeration, or estimate it by seeded sampling.

**cycle**
   The lazy walk on a colored cycle: exact color separation, the coverage
   tail, the Chebyshev times and the color dominance check. With a sample
   count and a seed, a sweep over random colorings.

**decompose**
   The alternating decomposition of one coloring, of every coloring up to a
   size, or of seeded random colorings, with the partition, gap and
   minimality checks.

**counterexample**
   The Walk 1 counting argument next to the exact chain values.

Example:
   >>> config = ExperimentConfig("sst-check", chain="rtt", n=4, t=3,
   ...                           statistic="top_k_order:2", predicate="k_distinct:2")
   >>> report = runExperiment(config)
   >>> report["results"]["sep_bound"]
   Fraction(1, 16)

"""

from time import time
import logging

import numpy as np

import mixscope
from . import Consts
from . import Util
from . import CycleColors
from . import SSTVerify
from .Distribution import Distribution, evolve, pushForward, separationDistance, totalVariation
from .Reports import Report
from .ReportAdapters import writeReport
from .Statistics import parseStatistic, statisticFunction
from .perturbations import ShuffleMoves
from .representations.Coloring import Coloring
from .representations.Deck import Deck
from .selections.Predicates import parsePredicate


def parseValues(text):
    """ Parse "2,3,4" into statistic values, integers where possible """
    values = []
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        try:
            values.append(int(item))
        except ValueError:
            values.append(item)
    if not values:
        Util.raiseException("Empty value list '%s'" % (text,), ValueError)
    return values


class ExperimentConfig(object):
    """ ExperimentConfig Class - the parameters of one experiment run

    Unset parameters are None; :meth:`validate` fills the defaults of the
    experiment kind and rejects inconsistent combinations.

    :param experiment: a kind of :attr:`Consts.experimentType`
    :param params: chain, n, t, horizon, x0, coloring, sets, statistic,
                   predicate, restrict, samples, seed, exact, floatMode,
                   outputFormat, out, timing, maxSize, constants
    """
    params = {"chain": None, "n": None, "t": None, "horizon": None, "x0": None,
              "coloring": None, "sets": None, "statistic": None, "predicate": None,
              "restrict": None, "samples": None, "seed": None, "exact": False,
              "floatMode": False, "outputFormat": Consts.CDefOutputFormat, "out": None,
              "timing": False, "maxSize": None, "constants": Consts.CDefChebyshevConstants}

    def __init__(self, experiment, **params):
        if experiment not in Consts.experimentType:
            Util.raiseException("Unknown experiment '%s', known: %s" %
                                (experiment, ", ".join(sorted(Consts.experimentType))), ValueError)
        unknown = set(params) - set(self.params)
        if unknown:
            Util.raiseException("Unknown experiment parameters %r" % (sorted(unknown),), TypeError)
        self.experiment = experiment
        self.internalParams = dict(self.params)
        self.internalParams.update(params)

    def __getattr__(self, key):
        params = self.__dict__.get("internalParams")
        if params is None or key not in params:
            raise AttributeError(key)
        return params[key]

    def __repr__(self):
        ret = "- ExperimentConfig [%s]\n" % self.experiment
        for key in sorted(self.internalParams):
            ret += "\t%-20s = %r\n" % (key, self.internalParams[key])
        return ret

    def setParams(self, **params):
        """ Update parameters, see :class:`ExperimentConfig` """
        unknown = set(params) - set(self.params)
        if unknown:
            Util.raiseException("Unknown experiment parameters %r" % (sorted(unknown),), TypeError)
        self.internalParams.update(params)

    def isMonteCarlo(self):
        return self.samples is not None

    def _require(self, *names):
        missing = [name for name in names if self.internalParams[name] is None]
        if missing:
            Util.raiseException("Experiment '%s' needs %s" % (self.experiment, ", ".join(missing)), ValueError)

    def _rejectSampling(self):
        if self.samples is not None or self.seed is not None:
            Util.raiseException("Experiment '%s' is always exact and takes no --samples or --seed" %
                                self.experiment, ValueError)

    def _checkInt(self, name, low):
        value = self.internalParams[name]
        if not isinstance(value, int) or isinstance(value, bool) or value < low:
            Util.raiseException("%s must be an integer >= %d, got %r" % (name, low, value), ValueError)

    def validate(self):
        """ Fill the defaults and check the parameters

        :raises ValueError: invalid or inconsistent parameters
        :raises Util.CapacityError: exact mode beyond the enumeration budget
        """
        p = self.internalParams
        if p["outputFormat"] not in Consts.outputFormat:
            Util.raiseException("Unknown output format '%s'" % (p["outputFormat"],), ValueError)
        if p["samples"] is not None:
            self._checkInt("samples", 1)
            if p["seed"] is None:
                Util.raiseException("A sample count needs a seed (--seed X)", ValueError)
            if p["exact"]:
                Util.raiseException("Exact mode and a sample count exclude each other", ValueError)
        if p["seed"] is not None:
            self._checkInt("seed", 0)
        if p["maxSize"] is not None:
            self._checkInt("maxSize", 2)
        if p["chain"] is not None and p["chain"] not in Consts.chainType:
            Util.raiseException("Unknown chain '%s', known: %s" % (p["chain"], ", ".join(sorted(Consts.chainType))),
                                ValueError)
        getattr(self, "_validate" + "".join(w.capitalize() for w in self.experiment.split("-")))()
        return self

    def _validateStatMix(self):
        self._rejectSampling()
        self._require("chain", "n", "t", "statistic")
        self._checkInt("n", 2)
        self._checkInt("t", 0)
        if self.n > Consts.CDefDenseMaxCards:
            Util.raiseException("stat-mix evolves the full deck law, n <= %d; got n=%d" %
                                (Consts.CDefDenseMaxCards, self.n), Util.CapacityError)
        parseStatistic(self.statistic).validate(self.n)

    def _validateSstCheck(self):
        self._require("chain", "n", "t", "statistic", "predicate")
        self._checkInt("n", 2)
        self._checkInt("t", 0)
        parseStatistic(self.statistic).validate(self.n)
        parsePredicate(self.predicate).validate(self.n, self.chain)
        if self.restrict is not None:
            parseValues(self.restrict)
        if not self.isMonteCarlo():
            if self.n > Consts.CDefDenseMaxCards:
                Util.raiseException("Exact mode needs n <= %d for the stationary law, got n=%d; "
                                    "use Monte-Carlo mode (--samples K --seed X)" %
                                    (Consts.CDefDenseMaxCards, self.n), Util.CapacityError)
            Util.checkBudget(SSTVerify.pathCount(self.chain, self.n, self.t), None,
                             "%s paths n=%d t=%d" % (self.chain, self.n, self.t))

    def _parseColoring(self):
        coloring = Coloring.parse(self.coloring)
        if self.x0 is None:
            self.internalParams["x0"] = 0
        self._checkInt("x0", 0)
        if self.x0 >= coloring.size():
            Util.raiseException("x0=%d outside 0..%d" % (self.x0, coloring.size() - 1), ValueError)
        if self.sets is not None:
            CycleColors.parseSets(self.sets, coloring)
        return coloring

    def _validateCycle(self):
        if self.horizon is None:
            self.internalParams["horizon"] = Consts.CDefCycleHorizon
        self._checkInt("horizon", 0)
        for c in self.constants:
            if c <= 0:
                Util.raiseException("Chebyshev constants must be > 0, got %r" % (c,), ValueError)
        if self.coloring is None:
            self._require("samples", "maxSize")
            if self.maxSize < 4:
                Util.raiseException("Random colorings need maxSize >= 4", ValueError)
            return
        self._parseColoring()

    def _validateDecompose(self):
        if self.coloring is None:
            self._require("maxSize")
            return
        self._parseColoring()

    def _validateCounterexample(self):
        self._rejectSampling()
        if self.n is None:
            self.internalParams["n"] = 52
        if self.t is None:
            self.internalParams["t"] = 10
        self._checkInt("n", 2)
        self._checkInt("t", 0)

    def toJSON(self):
        """ The configuration echo of the report, unset parameters left out;
        the Chebyshev constants are echoed by the cycle experiment only """
        out = {"experiment": self.experiment}
        for key in sorted(self.internalParams):
            value = self.internalParams[key]
            if key in ("out", "timing") or value is None or value is False:
                continue
            if key == "constants" and self.experiment != Consts.experimentType["cycle"]:
                continue
            out[key] = list(value) if isinstance(value, tuple) else value
        return out


def runStatMix(config):
    """ Separation and total variation of the statistic at t = 0..T """
    mode = Consts.numericMode["float"] if config.floatMode else Consts.numericMode["exact"]
    kernel = ShuffleMoves.chainKernel(config.chain, config.n)
    statistic = statisticFunction(parseStatistic(config.statistic), config.n)
    target = pushForward(Distribution.uniform(kernel.states, mode), statistic)
    law = ShuffleMoves.startDistribution(kernel, Deck.identity(config.n))
    if config.floatMode:
        law = law.toFloat()
    rows = []
    for t in range(config.t + 1):
        if t:
            law = evolve(kernel, law, 1)
        image = pushForward(law, statistic)
        rows.append({"t": t, "separation": separationDistance(image, target),
                     "total_variation": totalVariation(image, target)})
    slack = 0 if not config.floatMode else Consts.CDefFloatTolerance
    results = {"chain": config.chain, "n": config.n, "statistic": config.statistic,
               "mode": mode, "stationary": target, "series": rows}
    checks = {"separation_dominates_total_variation":
              all(r["separation"] + slack >= r["total_variation"] for r in rows)}
    return results, checks


def runSstCheck(config):
    """ Exhaustive certification, or the seeded sampler in Monte-Carlo mode """
    predicate = parsePredicate(config.predicate)
    statistic = parseStatistic(config.statistic)
    if config.isMonteCarlo():
        report = SSTVerify.monteCarloCheck(config.chain, config.n, config.t, predicate, statistic,
                                           config.samples, config.seed)
        return report, {}

    restrict = parseValues(config.restrict) if config.restrict is not None else None
    report = SSTVerify.checkStrongStationarity(config.chain, config.n, config.t, predicate, statistic,
                                               restrictTo=restrict)
    checks = {"premise_holds": report["premise_holds"]}
    oracle = None
    if predicate.name == "k_distinct" and config.chain == Consts.chainType["rtt"]:
        oracle = SSTVerify.probKDistinct(config.n, predicate.params[0], config.t)
    elif predicate.name == "riffle_all_distinct":
        oracle = SSTVerify.probStringsDistinct(config.n, config.t)
    if oracle is not None:
        checks["q_matches_oracle"] = oracle == report["q"]
    return report, checks


def _setRows(coloring, sets):
    return [{"members": list(a.members), "max_gap": a.maxGap(),
             "midpoints": [m.value for m in a.midpoints()]} for a in sets]


def _cycleSummary(coloring, x0, horizon, sets, constants):
    k = CycleColors.computeK(coloring)
    bound = CycleColors.mixingBoundCheck(coloring, x0, horizon, sets)
    displacement = CycleColors.displacementTail(coloring, x0, horizon)
    chebyshev = CycleColors.chebyshevCheck(coloring, x0, constants)
    return k, bound, displacement, chebyshev


def runCycle(config):
    """ The colored cycle experiment, or the sweep over random colorings """
    if config.coloring is None:
        return _runCycleSweep(config)
    coloring = Coloring.parse(config.coloring)
    x0, horizon = config.x0, config.horizon
    sets = CycleColors.parseSets(config.sets, coloring) if config.sets else \
        CycleColors.alternatingDecomposition(coloring)
    k, bound, displacement, chebyshev = _cycleSummary(coloring, x0, horizon, sets, config.constants)
    mean, variance = CycleColors.gamblerMoments(k)
    dominance = CycleColors.checkRedDominance(coloring, x0, horizon, sets)
    results = {"coloring": str(coloring), "k": k, "x0": x0, "horizon": horizon,
               "sets": _setRows(coloring, sets),
               "reflection_symmetric": bound["reflection_symmetric"],
               "separation": bound["separation"],
               "coverage_tail": bound["coverage_tail"],
               "vertex_count_tail": CycleColors.vertexCountTail(coloring, x0, horizon),
               "displacement_tail": displacement,
               "bound_holds": bound["holds"],
               "first_violation": bound["first_violation"],
               "gambler": {"mean": mean, "variance": variance},
               "chebyshev": chebyshev,
               "dominance": dominance}
    checks = {"gap_bound": all(a.maxGap() <= 2 * k - 1 for a in sets),
              "coverage_bound": bound["bound_satisfied"],
              "displacement_implies_coverage": all(q <= d for q, d in zip(bound["coverage_tail"], displacement)),
              "chebyshev": all(row["holds"] for row in chebyshev)}
    if dominance["holds"] is not None:
        checks["dominance"] = dominance["holds"]
    return results, checks


def _randomColorings(config, minSize=4):
    rng = np.random.default_rng(config.seed)
    sizes = list(range(minSize, config.maxSize + 1, 2))
    for _ in range(config.samples):
        size = sizes[int(rng.integers(0, len(sizes)))]
        yield CycleColors.randomColoring(size, rng)


def _runCycleSweep(config):
    rows = []
    for coloring in _randomColorings(config):
        sets = CycleColors.alternatingDecomposition(coloring)
        k, bound, displacement, chebyshev = _cycleSummary(coloring, 0, config.horizon, sets, config.constants)
        rows.append({"coloring": str(coloring), "k": k,
                     "reflection_symmetric": bound["reflection_symmetric"],
                     "coverage_bound": bound["bound_satisfied"],
                     "first_violation": bound["first_violation"],
                     "displacement_implies_coverage":
                         all(q <= d for q, d in zip(bound["coverage_tail"], displacement)),
                     "chebyshev": all(row["holds"] for row in chebyshev)})
    symmetric = [r for r in rows if r["reflection_symmetric"]]
    results = {"horizon": config.horizon, "colorings": rows,
               "reflection_symmetric_count": len(symmetric)}
    checks = {"coverage_bound_reflection_symmetric": all(r["coverage_bound"] for r in symmetric),
              "displacement_implies_coverage": all(r["displacement_implies_coverage"] for r in rows),
              "chebyshev": all(r["chebyshev"] for r in rows)}
    return results, checks


def decompositionSummary(coloring, minimalityMax=Consts.CDefMinimalitySearchMax):
    """ The decomposition of *coloring* with its partition, alternation, gap
    and, up to *minimalityMax* vertices, minimality checks """
    k = CycleColors.computeK(coloring)
    sets = CycleColors.alternatingDecomposition(coloring)
    members = sorted(v for a in sets for v in a)
    row = {"coloring": str(coloring), "k": k, "sets": _setRows(coloring, sets),
           "set_count_is_k": len(sets) == k,
           "partition": members == list(range(coloring.size())),
           "gap_bound": all(a.maxGap() <= 2 * k - 1 for a in sets),
           "minimal": None}
    if coloring.size() <= minimalityMax:
        row["minimal"] = k == 1 or not CycleColors.isAlternatingPartitionable(coloring, k - 1)
    return row


def runDecompose(config):
    """ One coloring, all colorings up to maxSize, or seeded random ones """
    if config.coloring is not None:
        row = decompositionSummary(Coloring.parse(config.coloring))
        checks = {name: row[name] for name in ("set_count_is_k", "partition", "gap_bound", "minimal")
                  if row[name] is not None}
        return row, checks

    if config.isMonteCarlo():
        colorings = list(_randomColorings(config, minSize=2))
    else:
        colorings = [c for size in range(2, config.maxSize + 1, 2)
                     for c in CycleColors.allBalancedColorings(size)]
    rows = [decompositionSummary(c) for c in colorings]
    names = ("set_count_is_k", "partition", "gap_bound", "minimal")
    failures = [r["coloring"] for r in rows if not all(r[name] for name in names if r[name] is not None)]
    results = {"colorings": len(rows), "minimality_checked": sum(1 for r in rows if r["minimal"] is not None),
               "max_k": max(r["k"] for r in rows), "failures": failures}
    checks = {name: all(r[name] for r in rows if r[name] is not None) for name in names}
    logging.info("Decomposed %d colorings, %d failures", len(rows), len(failures))
    return results, checks


def runCounterexample(config):
    """ The Walk 1 counting bounds and the small exhaustive refutation """
    bounds = SSTVerify.walk1CounterexampleBounds(config.n, config.t)
    refutation = SSTVerify.checkStrongStationarity(Consts.chainType["walk1"], 3, 2,
                                                   parsePredicate("any_to_top_move"),
                                                   parseStatistic("top_card"))
    results = dict(bounds)
    results["small_refutation"] = refutation
    checks = {"exact_within_counting_bound": bounds["exact_within_counting_bound"],
              "separation_bound_holds": bounds["separation_bound_holds"],
              "small_case_refuted": not refutation["is_strongly_stationary"]}
    return results, checks


def runExperiment(config):
    """ Validate *config*, run it and write its report when an output file
    is set

    :param config: the :class:`ExperimentConfig`
    :rtype: the :class:`Reports.Report`
    """
    config.validate()
    logging.info("Running experiment %s", config.experiment)
    started = time()
    runner = {"stat-mix": runStatMix, "sst-check": runSstCheck, "cycle": runCycle,
              "decompose": runDecompose, "counterexample": runCounterexample}[config.experiment]
    results, checks = runner(config)
    report = Report(experiment=config.experiment, version=mixscope.__version__,
                    config=config.toJSON(), results=results, checks=checks)
    if config.timing:
        report["duration"] = round(time() - started, 6)
    if config.out is not None:
        writeReport(report, config.outputFormat, config.out, config.floatMode)
    logging.info("Experiment %s finished, checks passed: %s", config.experiment, report.passed())
    return report
