"""

:mod:`Distribution` -- exact finite distributions and kernels
============================================================================

This module holds the finite probability vectors mixscope works with, the
transition kernels acting on them and the distances between them. Two numeric
modes are supported: exact rationals (:class:`fractions.Fraction`, the default)
and 64-bit floats for long horizons, where the kernel product is done with
:mod:`numpy`.

Example:
   >>> pi = Distribution.uniform([0, 1, 2, 3])
   >>> mu = Distribution.pointMass([0, 1, 2, 3], 0)
   >>> separationDistance(mu, pi)
   Fraction(1, 1)

"""

from fractions import Fraction
import json
import logging

import numpy as np

from . import Consts
from . import Util


class Distribution(object):
    """ Distribution Class - an immutable probability vector over an explicit support

    Zero weights are retained, so a distribution built over a declared universe
    still lists the states it gives no mass to.

    :param support: the ordered state identifiers, all distinct and hashable
    :param weights: one nonnegative weight per state
    :param mode: "exact" or "float", inferred from the weights when None
    """
    __slots__ = ["support", "weights", "mode", "_index"]

    def __init__(self, support, weights, mode=None):
        support = tuple(support)
        weights = tuple(weights)
        if len(support) != len(weights):
            Util.raiseException("Support and weights differ in length (%d != %d)" % (len(support), len(weights)),
                                ValueError)
        if len(set(support)) != len(support):
            Util.raiseException("Support identifiers must be distinct", ValueError)

        if mode is None:
            mode = Consts.numericMode["exact"] if all(Util.isExactNumber(w) for w in weights) \
                else Consts.numericMode["float"]
        if mode == Consts.numericMode["exact"]:
            if not all(Util.isExactNumber(w) for w in weights):
                Util.raiseException("Exact mode needs rational weights", TypeError)
            weights = tuple(Fraction(w) for w in weights)
        elif mode == Consts.numericMode["float"]:
            weights = tuple(float(w) for w in weights)
        else:
            Util.raiseException("Unknown numeric mode '%s'" % (mode,), ValueError)

        if any(w < 0 for w in weights):
            Util.raiseException("Weights must be nonnegative", ValueError)
        total = sum(weights)
        if mode == Consts.numericMode["exact"]:
            if total != 1:
                Util.raiseException("Weights must sum to exactly 1, got %s" % (Util.fracToStr(total),), ValueError)
        elif abs(total - 1.0) > Consts.CDefFloatTolerance:
            Util.raiseException("Weights must sum to 1 within %g, got %r" % (Consts.CDefFloatTolerance, total),
                                ValueError)

        self.support = support
        self.weights = weights
        self.mode = mode
        self._index = {s: i for i, s in enumerate(support)}

    @classmethod
    def uniform(cls, support, mode=Consts.numericMode["exact"]):
        """ The uniform distribution over *support*

        Example:
           >>> Distribution.uniform([1, 2]).weights
           (Fraction(1, 2), Fraction(1, 2))

        """
        support = tuple(support)
        if not support:
            Util.raiseException("Uniform distribution needs a nonempty support", ValueError)
        if mode == Consts.numericMode["exact"]:
            w = Fraction(1, len(support))
        else:
            w = 1.0 / len(support)
        return cls(support, [w] * len(support), mode)

    @classmethod
    def pointMass(cls, support, state, mode=Consts.numericMode["exact"]):
        """ All the mass on *state*, zeros elsewhere on *support* """
        support = tuple(support)
        if state not in support:
            Util.raiseException("State %r is not in the support" % (state,), ValueError)
        one, zero = (Fraction(1), Fraction(0)) if mode == Consts.numericMode["exact"] else (1.0, 0.0)
        return cls(support, [one if s == state else zero for s in support], mode)

    @classmethod
    def fromDict(cls, mapping, universe=None, mode=None):
        """ Build a distribution from a state -> weight mapping

        :param mapping: the weights
        :param universe: declared states kept with zero weight; when None the
                         support is the mapping keys in :func:`Util.stateSortKey` order
        :param mode: numeric mode, inferred when None
        """
        if universe is None:
            support = sorted(mapping, key=Util.stateSortKey)
        else:
            support = list(universe)
            declared = set(support)
            extra = [s for s in mapping if s not in declared and mapping[s] != 0]
            if extra:
                Util.raiseException("States %r carry mass outside the declared universe" % (extra[:5],), ValueError)
        exact = mode == Consts.numericMode["exact"] or (
            mode is None and all(Util.isExactNumber(w) for w in mapping.values()))
        zero = Fraction(0) if exact else 0.0
        return cls(support, [mapping.get(s, zero) for s in support], mode)

    def isExact(self):
        """ True in rational mode """
        return self.mode == Consts.numericMode["exact"]

    def zero(self):
        """ The zero of the numeric mode """
        return Fraction(0) if self.isExact() else 0.0

    def __getitem__(self, state):
        """ The weight of *state*, zero when the state is outside the support """
        idx = self._index.get(state)
        if idx is None:
            return self.zero()
        return self.weights[idx]

    def __contains__(self, state):
        return state in self._index

    def __len__(self):
        return len(self.support)

    def __iter__(self):
        """ Iterates the support states """
        return iter(self.support)

    def items(self):
        """ Return a list of (state, weight) pairs in support order """
        return list(zip(self.support, self.weights))

    def asDict(self):
        """ Return the weights as a dictionary """
        return dict(zip(self.support, self.weights))

    def positiveSupport(self):
        """ Return the states with positive weight """
        return [s for s, w in zip(self.support, self.weights) if w > 0]

    def __eq__(self, other):
        """ Pointwise equality, states outside a support count as zero """
        if not isinstance(other, Distribution):
            return NotImplemented
        states = set(self.support) | set(other.support)
        return all(self[s] == other[s] for s in states)

    __hash__ = None

    def __repr__(self):
        body = ", ".join("%r: %s" % (s, Util.fracToStr(w)) for s, w in self.items())
        return "Distribution[%s]{%s}" % (self.mode, body)

    def toFloat(self):
        """ Return the same distribution in float mode """
        return Distribution(self.support, [float(w) for w in self.weights], Consts.numericMode["float"])

    def restrict(self, values):
        """ Condition the distribution on *values*, renormalizing

        Example:
           >>> d = Distribution.fromDict({1: Fraction(1, 2), 2: Fraction(1, 4), 3: Fraction(1, 4)})
           >>> d.restrict([2, 3]).weights
           (Fraction(1, 2), Fraction(1, 2))

        :param values: the states kept, in the order of the result
        """
        values = list(values)
        mass = sum((self[v] for v in values), self.zero())
        if mass == 0:
            Util.raiseException("Cannot restrict to a set of zero mass", ValueError)
        return Distribution(values, [self[v] / mass for v in values], self.mode)

    def mix(self, other, lam):
        """ The convex combination lam*self + (1-lam)*other over the union support """
        if not 0 <= lam <= 1:
            Util.raiseException("Mixing weight must be in [0, 1]", ValueError)
        support = list(self.support) + [s for s in other.support if s not in self._index]
        return Distribution(support, [lam * self[s] + (1 - lam) * other[s] for s in support])

    def mean(self):
        """ The mean of a distribution over numeric states """
        if not all(isinstance(s, (int, float, Fraction)) for s in self.support):
            Util.raiseException("Mean needs numeric states", TypeError)
        return sum((s * w for s, w in self.items()), self.zero())

    def toJSON(self):
        """ Return the JSON object {"support", "weights", "mode"} as a dict,
        rational weights are "num/den" strings """
        if self.isExact():
            weights = [Util.fracToStr(w) for w in self.weights]
        else:
            weights = list(self.weights)
        return {"support": [Util.stateToJSON(s) for s in self.support],
                "weights": weights,
                "mode": self.mode}

    def dumps(self):
        """ Serialize to a JSON string """
        return json.dumps(self.toJSON(), sort_keys=True)

    @classmethod
    def fromJSON(cls, obj):
        """ Build a distribution from the object produced by :meth:`toJSON`
        (or its JSON string) """
        if isinstance(obj, str):
            obj = json.loads(obj)
        mode = obj.get("mode", Consts.numericMode["exact"])
        support = [Util.stateFromJSON(s) for s in obj["support"]]
        if mode == Consts.numericMode["exact"]:
            weights = [Util.strToFrac(w) for w in obj["weights"]]
        else:
            weights = [float(w) for w in obj["weights"]]
        return cls(support, weights, mode)


class Statistic(object):
    """ Statistic Class - a named total function from states to a finite value set

    :param name: the statistic name
    :param func: the function applied to a state
    :param image: the declared value set im(f), kept with zero weights by
                  :func:`pushForward`; None means the observed values
    """
    __slots__ = ["name", "func", "image"]

    def __init__(self, name, func, image=None):
        if not callable(func):
            Util.raiseException("The statistic must be callable", TypeError)
        self.name = name
        self.func = func
        self.image = None if image is None else tuple(image)

    def __call__(self, state):
        return self.func(state)

    def __repr__(self):
        return "Statistic [%s]" % (self.name,)


class Kernel(object):
    """ Kernel Class - a Markov transition kernel on a finite state space

    Duplicate targets in a row are merged. In exact mode every row must sum to 1
    exactly.

    Example:
       >>> k = Kernel([0, 1], {0: [(1, Fraction(1))], 1: [(0, Fraction(1))]})

    :param states: the ordered state space
    :param transitions: a mapping state -> list of (target, probability)
    :param name: a name used in reports and logs
    """
    __slots__ = ["states", "rows", "mode", "name", "_index", "_arrays"]

    def __init__(self, states, transitions, name="kernel"):
        self.states = tuple(states)
        self.name = name
        self._index = {s: i for i, s in enumerate(self.states)}
        if len(self._index) != len(self.states):
            Util.raiseException("Kernel states must be distinct", ValueError)

        exact = True
        rows = []
        for state in self.states:
            if state not in transitions:
                Util.raiseException("Kernel has no row for state %r" % (state,), ValueError)
            merged = {}
            for target, prob in transitions[state]:
                if target not in self._index:
                    Util.raiseException("Transition from %r to unknown state %r" % (state, target), ValueError)
                if prob < 0:
                    Util.raiseException("Negative transition probability from %r" % (state,), ValueError)
                exact = exact and Util.isExactNumber(prob)
                j = self._index[target]
                merged[j] = merged.get(j, 0) + prob
            rows.append(tuple(sorted(merged.items())))

        for state, row in zip(self.states, rows):
            total = sum(p for _, p in row)
            if exact and total != 1:
                Util.raiseException("Row of %r sums to %s, not 1" % (state, Util.fracToStr(total)), ValueError)
            if not exact and abs(total - 1.0) > Consts.CDefFloatTolerance:
                Util.raiseException("Row of %r sums to %r, not 1" % (state, total), ValueError)

        self.rows = tuple(rows)
        self.mode = Consts.numericMode["exact"] if exact else Consts.numericMode["float"]
        self._arrays = None
        logging.debug("Kernel '%s' built over %d states (%s mode)", name, len(self.states), self.mode)

    @classmethod
    def fromStepFunction(cls, states, stepFunc, name="kernel"):
        """ Build a kernel calling *stepFunc(state)*, which returns the list
        of (target, probability) pairs of that state """
        return cls(states, {s: stepFunc(s) for s in states}, name)

    def __len__(self):
        return len(self.states)

    def __repr__(self):
        return "Kernel [%s] (%d states, %s)" % (self.name, len(self.states), self.mode)

    def index(self, state):
        """ Position of *state* in the state space """
        return self._index[state]

    def successors(self, state):
        """ Return the list of (target, probability) pairs of *state* """
        return [(self.states[j], p) for j, p in self.rows[self._index[state]]]

    def isDoublyStochastic(self):
        """ True when every column sums to 1 as well """
        cols = [0] * len(self.states)
        for row in self.rows:
            for j, p in row:
                cols[j] += p
        if self.mode == Consts.numericMode["exact"]:
            return all(c == 1 for c in cols)
        return all(abs(c - 1.0) <= Consts.CDefFloatTolerance for c in cols)

    def isStationary(self, pi):
        """ True when pi·K = pi, exactly in rational mode """
        return evolve(self, pi, 1) == pi

    def floatArrays(self):
        """ Return the (rows, cols, probabilities) numpy arrays of the kernel """
        if self._arrays is None:
            src, dst, val = [], [], []
            for i, row in enumerate(self.rows):
                for j, p in row:
                    src.append(i)
                    dst.append(j)
                    val.append(float(p))
            self._arrays = (np.asarray(src, dtype=np.int64),
                            np.asarray(dst, dtype=np.int64),
                            np.asarray(val, dtype=np.float64))
        return self._arrays


def _checkComparable(mu, pi):
    for state in mu.support:
        if state not in pi:
            Util.raiseException("incomparable supports: state %r is outside the reference support" % (state,),
                                ValueError)


def separationDistance(mu, pi):
    """ Separation distance max_a (1 - mu(a)/pi(a)) of *mu* from *pi*

    The result is an exact Fraction when both inputs are exact.

    Example:
       >>> separationDistance(Distribution.fromDict({"even": Fraction(2, 3), "odd": Fraction(1, 3)}),
       ...                    Distribution.uniform(["even", "odd"]))
       Fraction(1, 3)

    :param mu: the distribution under test, its support contained in pi's
    :param pi: the reference distribution, strictly positive on its support
    :rtype: a number in [0, 1]
    """
    _checkComparable(mu, pi)
    exact = mu.isExact() and pi.isExact()
    worst = Fraction(0) if exact else 0.0
    for state, p in pi.items():
        if p == 0:
            Util.raiseException("Reference distribution has zero weight on state %r" % (state,), ValueError)
        m = mu[state]
        gap = (1 - Fraction(m) / Fraction(p)) if exact else (1.0 - float(m) / float(p))
        if gap > worst:
            worst = gap
    return worst


def totalVariation(mu, pi):
    """ Total variation distance, half the l1 distance over the union support

    Example:
       >>> totalVariation(Distribution.fromDict({0: Fraction(2, 3), 1: Fraction(1, 3)}),
       ...                Distribution.uniform([0, 1]))
       Fraction(1, 6)

    """
    states = list(mu.support) + [s for s in pi.support if s not in mu]
    if mu.isExact() and pi.isExact():
        return sum((abs(mu[s] - pi[s]) for s in states), Fraction(0)) / 2
    return sum(abs(float(mu[s]) - float(pi[s])) for s in states) / 2.0


def pushForward(mu, f, universe=None):
    """ The law of f(X) when X ~ mu

    :param mu: the distribution
    :param f: a callable, or a :class:`Statistic`; a statistic's declared
              image becomes the universe of the result
    :param universe: declared value set, values outside it are an error
    :rtype: the :class:`Distribution` over the values of *f*
    """
    if universe is None:
        universe = getattr(f, "image", None)
    acc = {}
    for state, weight in mu.items():
        try:
            value = f(state)
        except (KeyError, IndexError, ValueError, TypeError) as expt:
            Util.raiseException("Statistic undefined on state %r: %s" % (state, expt), ValueError)
        acc[value] = acc.get(value, mu.zero()) + weight
    return Distribution.fromDict(acc, universe=universe, mode=mu.mode)


def evolve(kernel, mu, t):
    """ The law of X_t when X_0 ~ mu, t applications of *kernel*

    Rational distributions are evolved exactly, float distributions through a
    sparse :mod:`numpy` product. The result is supported on the whole kernel
    state space, zeros included.

    :param kernel: the :class:`Kernel`
    :param mu: initial distribution supported on the kernel states
    :param t: the number of steps, t >= 0
    """
    if not isinstance(t, int) or t < 0:
        Util.raiseException("The number of steps must be a nonnegative integer, got %r" % (t,), ValueError)
    for state in mu.support:
        if state not in kernel._index:
            Util.raiseException("State %r is not in the kernel state space" % (state,), ValueError)

    size = len(kernel.states)
    if mu.isExact() and kernel.mode == Consts.numericMode["exact"]:
        vec = [Fraction(0)] * size
        for state, w in mu.items():
            vec[kernel.index(state)] += w
        for _ in range(t):
            nxt = [Fraction(0)] * size
            for i, w in enumerate(vec):
                if w:
                    for j, p in kernel.rows[i]:
                        nxt[j] += w * p
            vec = nxt
        return Distribution(kernel.states, vec, Consts.numericMode["exact"])

    src, dst, val = kernel.floatArrays()
    vec = np.zeros(size, dtype=np.float64)
    for state, w in mu.items():
        vec[kernel.index(state)] += float(w)
    for _ in range(t):
        vec = np.bincount(dst, weights=vec[src] * val, minlength=size)
    total = vec.sum()
    if total > 0:
        vec = vec / total
    return Distribution(kernel.states, vec.tolist(), Consts.numericMode["float"])


def sstBound(p):
    """ The separation bound 1 - p guaranteed when every value a has
    Pr(f(X_t) = a) >= f(pi)(a)*p

    Example:
       >>> sstBound(Fraction(24, 25))
       Fraction(1, 25)

    """
    if not 0 <= p <= 1:
        Util.raiseException("p must be in [0, 1], got %r" % (p,), ValueError)
    return 1 - p
