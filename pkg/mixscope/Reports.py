"""

:mod:`Reports` -- report structure module
==========================================================================

This module has the bean-like classes which keep the results of the
experiments. These classes are used by the report adapters
(:mod:`ReportAdapters`) and by the command line.

Rational values are kept as :class:`fractions.Fraction` inside the reports and
are written as "num/den" strings by :meth:`ReportBase.toJSON`, or as floats
when the float flag is given.

"""

from fractions import Fraction

from . import Util
from .Distribution import Distribution


def jsonValue(value, floatMode=False):
    """ Convert a report value to a JSON compatible value

    Example:
       >>> jsonValue({"q": Fraction(2, 3), "pair": (1, 2)})
       {'q': '2/3', 'pair': [1, 2]}

    :param value: the value, numbers, distributions and containers of them
    :param floatMode: write rationals as floats
    """
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, Fraction):
        return float(value) if floatMode else Util.fracToStr(value)
    if isinstance(value, int):
        return value
    if isinstance(value, float):
        return value
    if isinstance(value, Distribution):
        dist = value.toFloat() if floatMode else value
        return dist.toJSON()
    if isinstance(value, ReportBase):
        return value.toJSON(floatMode)
    if isinstance(value, dict):
        return {str(k): jsonValue(v, floatMode) for k, v in value.items()}
    if isinstance(value, (frozenset, set)):
        return Util.stateToJSON(value)
    if isinstance(value, (list, tuple)):
        return [jsonValue(v, floatMode) for v in value]
    if hasattr(value, "toJSON"):
        return value.toJSON()
    return str(value)


class ReportBase(object):
    """ ReportBase Class - A class bean-like to store results

    Example:
       >>> report = SSTReport(...)
       >>> report["q"]
       Fraction(2, 3)
    """
    fields = ()
    descriptions = {}

    def __init__(self, **values):
        """ The report creator, unknown keys are rejected """
        self.internalDict = dict.fromkeys(self.fields)
        for key, value in values.items():
            self[key] = value

    def __getitem__(self, key):
        """ Return the specific result by key """
        return self.internalDict[key]

    def __setitem__(self, key, value):
        """ Set the result """
        if key not in self.internalDict:
            Util.raiseException("%s has no field '%s'" % (type(self).__name__, key), KeyError)
        self.internalDict[key] = value

    def __contains__(self, key):
        return key in self.internalDict

    def __len__(self):
        """ Return the length of internal results dictionary """
        return len(self.internalDict)

    def __repr__(self):
        """ Return a string representation of the report """
        strBuff = "- %s\n" % type(self).__name__
        for k, v in self.internalDict.items():
            if isinstance(v, Fraction):
                v = Util.fracToStr(v)
            elif isinstance(v, Distribution):
                v = "%d values" % len(v)
            strBuff += "\t%-45s = %s\n" % (self.descriptions.get(k, k), v)
        return strBuff

    def toJSON(self, floatMode=False):
        """ The report as a JSON compatible dictionary """
        return {k: jsonValue(v, floatMode) for k, v in self.internalDict.items()}


class SSTReport(ReportBase):
    """ SSTReport Class - the outcome of a strong stationarity check

    The results hold by this class are:

    **q**
       Probability that the predicate holds at time t

    **conditional, target**
       The law of the statistic given the predicate, and its stationary law

    **is_strongly_stationary, sep_bound**
       True when conditional and target are equal; then sep_bound = 1 - q

    **max_pointwise_deviation**
       Largest |conditional(a) - target(a)|, zero when certified

    **predicate_stable**
       The predicate never turns false once true along a path

    **sep_actual, conditional_mean, premise_holds**
       Separation of the unconditional law at t, mean of the conditional law
       for numeric statistics, and q*conditional(a) <= law_t(a) for every a
    """
    fields = ("chain", "n", "t", "predicate", "statistic", "restricted_to",
              "q", "conditional", "target", "is_strongly_stationary", "sep_bound",
              "max_pointwise_deviation", "predicate_stable", "sep_actual",
              "conditional_mean", "premise_holds")
    descriptions = {
        "q": "Probability the predicate holds",
        "is_strongly_stationary": "Conditional law equals stationary law",
        "sep_bound": "Separation bound 1 - q",
        "max_pointwise_deviation": "Maximal pointwise deviation",
        "predicate_stable": "Predicate stays true once true",
        "sep_actual": "Separation of the law at t",
        "conditional_mean": "Mean of the conditional law",
        "premise_holds": "q * conditional <= law at t",
    }

    def validate(self):
        """ Check the report invariants

        :raises ValueError: a certified report with a nonzero deviation, or a
                            separation bound on a refuted report
        """
        if self["is_strongly_stationary"] and self["max_pointwise_deviation"] != 0:
            Util.raiseException("Certified report with nonzero deviation", ValueError)
        if (self["sep_bound"] is not None) != bool(self["is_strongly_stationary"]):
            Util.raiseException("sep_bound is reported exactly when certified", ValueError)
        return self


class MonteCarloReport(ReportBase):
    """ MonteCarloReport Class - sampled estimates, never a certificate

    **q_estimate, q_interval**
       Fraction of sampled paths satisfying the predicate, with its 95%
       normal approximation interval

    **frequencies**
       list of row dicts (value, estimate, low, high and, up to 8 cards, the
       stationary weight), conditional on the predicate
    """
    fields = ("chain", "n", "t", "predicate", "statistic", "samples", "seed",
              "q_estimate", "q_interval", "frequencies", "max_abs_deviation", "certified")
    descriptions = {
        "q_estimate": "Estimated probability the predicate holds",
        "max_abs_deviation": "Largest |estimate - stationary weight|",
    }


class Report(ReportBase):
    """ Report Class - what an experiment run writes

    **experiment, config, version**
       The experiment kind, the echo of its configuration and the package version

    **results**
       The numeric results of the experiment

    **checks**
       name -> True/False for every bound checked

    **duration**
       Wall-clock seconds, only present when timing was requested
    """
    fields = ("experiment", "version", "config", "results", "checks", "duration")

    def passed(self):
        """ True when every bound check passed """
        return all(self["checks"].values()) if self["checks"] else True

    def toJSON(self, floatMode=False):
        out = ReportBase.toJSON(self, floatMode)
        if self["duration"] is None:
            del out["duration"]
        return out


class DominanceReport(ReportBase):
    """ DominanceReport Class - is the walk always more likely on one color

    **nearest**
       Per alternating set, its members closest to the start and their color

    **status**
       "red" or "blue" when every set's nearest member has that color,
       "ambiguous" when a set has equidistant members of both colors,
       "precondition_fails" otherwise

    **holds, min_margin, min_margin_at, first_violation**
       For a claim: whether Pr(claimed color at t) >= 1/2 for every t up to
       the horizon, the smallest exact margin over 1/2 and where it occurs
    """
    fields = ("coloring", "x0", "horizon", "nearest", "status", "claim_color", "failing_sets",
              "holds", "min_margin", "min_margin_at", "first_violation")
    descriptions = {
        "status": "Nearest member colors",
        "holds": "Claimed color always at least 1/2",
        "min_margin": "Smallest margin over 1/2",
    }
