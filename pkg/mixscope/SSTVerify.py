"""

:mod:`SSTVerify` -- strong stationary time certification
============================================================================

Path level certification of strong stationary times for statistics of the
shuffle chains. Every path of length t is enumerated with its exact weight,
the predicate is evaluated on the path and the statistic on the final deck;
the claim "given the predicate, the statistic is exactly stationary" is then
certified or refuted by comparing rational distributions. When it holds, the
separation distance of the statistic at time t is at most 1 - q, q being the
probability of the predicate (:func:`Distribution.sstBound`).

The module also has the closed form and dynamic programming oracles used to
cross check the enumerations, and a seeded Monte-Carlo fallback which gives
estimates but never certifies.

Example:
   >>> report = checkStrongStationarity("rtt", 4, 3, PredicateKind("k_distinct", 2),
   ...                                  StatisticKind("top_k_order", 2))
   >>> report["sep_bound"]
   Fraction(1, 16)

"""

from fractions import Fraction
from math import sqrt
import logging

import numpy as np

from . import Consts
from . import Util
from .Distribution import Distribution, separationDistance, sstBound
from .Reports import SSTReport, MonteCarloReport
from .Statistics import stationaryStatisticDistribution
from .perturbations import ShuffleMoves
from .representations.Deck import Deck
from .selections.Predicates import evaluatePredicate, isStableOn


class Path(object):
    """ Path Class - a weighted path of a shuffle chain

    A move path keeps its moves and every intermediate deck; a riffle path
    keeps the string assignment and sorts the start deck by a prefix of it.

    :param start: the start :class:`Deck`
    :param weight: the exact probability of the path
    :param moves: the moves, for the random-to-top and Walk 1 chains
    :param assignment: the :class:`StringAssignment`, for the riffle chain
    :param decks: the decks after 0..t moves, computed when None
    """
    __slots__ = ["start", "weight", "moves", "assignment", "_decks"]

    def __init__(self, start, weight, moves=None, assignment=None, decks=None):
        if (moves is None) == (assignment is None):
            Util.raiseException("A path has either moves or a string assignment", ValueError)
        self.start = start
        self.weight = weight
        self.assignment = assignment
        self.moves = None if moves is None else tuple(moves)
        if self.moves is not None and decks is None:
            decks = [start]
            for move in self.moves:
                decks.append(ShuffleMoves.applyMove(decks[-1], move))
        self._decks = None if decks is None else tuple(decks)

    @property
    def steps(self):
        """ The length t of the path """
        if self.moves is not None:
            return len(self.moves)
        return self.assignment.length

    def isRiffle(self):
        return self.assignment is not None

    def deckAt(self, step):
        """ The deck after the first *step* steps """
        if self._decks is not None:
            return self._decks[step]
        return ShuffleMoves.inverseRiffleApply(self.start, self.assignment.prefix(step))

    def final(self):
        """ The deck at the end of the path """
        return self.deckAt(self.steps)

    def __repr__(self):
        body = self.assignment if self.isRiffle() else list(self.moves)
        return "Path [%s -> %r, weight %s]" % (body, self.final(), Util.fracToStr(self.weight))


def pathCount(chain, n, t):
    """ Number of weighted branches of an exhaustive enumeration """
    if chain == Consts.chainType["rtt"]:
        return n ** t
    if chain == Consts.chainType["walk1"]:
        return (n + 1) ** t
    if chain == Consts.chainType["riffle"]:
        return (2 ** t) ** n
    Util.raiseException("Unknown chain '%s'" % (chain,), ValueError)


def iterPaths(chain, n, t, start=None, budget=None):
    """ Every path of length t of *chain* with its exact weight, produced one
    at a time by a depth first walk which keeps only the current prefix

    The arguments are checked, and the budget charged, before the first path
    is produced.

    :param chain: "rtt", "walk1" or "riffle"
    :param n: number of cards
    :param t: path length
    :param start: the start deck, the identity when None
    :param budget: enumeration budget, see :func:`Util.getEnumerationBudget`
    :rtype: generator of :class:`Path`, weights summing to 1
    """
    if not isinstance(t, int) or t < 0:
        Util.raiseException("The path length must be a nonnegative integer, got %r" % (t,), ValueError)
    start = Deck.identity(n) if start is None else start
    if len(start) != n:
        Util.raiseException("Start deck has %d cards, expected %d" % (len(start), n), ValueError)
    Util.checkBudget(pathCount(chain, n, t), budget, "%s paths n=%d t=%d" % (chain, n, t))

    if chain == Consts.chainType["riffle"]:
        rows = ShuffleMoves.iterRiffle(n, t, start, budget)
        return (Path(start, w, assignment=a) for a, _, w in rows)
    return _walkMovePaths(start, ShuffleMoves.chainMoves(chain, n), t)


def _walkMovePaths(start, moves, t):
    pathMoves = []
    decks = [start]
    weights = [Fraction(1)]

    def walk():
        if len(pathMoves) == t:
            yield Path(start, weights[-1], moves=pathMoves, decks=decks)
            return
        for move, p in moves:
            pathMoves.append(move)
            decks.append(ShuffleMoves.applyMove(decks[-1], move))
            weights.append(weights[-1] * p)
            yield from walk()
            pathMoves.pop()
            decks.pop()
            weights.pop()

    return walk()


def enumeratePaths(chain, n, t, start=None, budget=None):
    """ The list of every path of length t of *chain*, see :func:`iterPaths`

    Example:
       >>> len(enumeratePaths("rtt", 3, 2))
       9

    :rtype: list of :class:`Path`, weights summing to 1
    """
    paths = list(iterPaths(chain, n, t, start, budget))
    logging.debug("Enumerated %d %s paths for n=%d, t=%d", len(paths), chain, n, t)
    return paths


class PathTally(object):
    """ PathTally Class - what one pass over the paths accumulates

    Each path is read once: its weight goes to the law of the statistic at
    time t and, when the predicate holds at t, to q and to the conditional
    law. Stability of the predicate is checked on the same pass.

    :param predicate: the :class:`Predicates.PredicateKind`
    :param statistic: the :class:`Statistics.StatisticKind`
    :param t: the time, the path length when None
    """

    def __init__(self, predicate, statistic, t=None):
        self.predicate = predicate
        self.statistic = statistic
        self.t = t
        self.q = Fraction(0)
        self.hits = {}
        self.values = {}
        self.stable = True
        self.count = 0

    def add(self, path):
        """ Account for one path """
        if self.count == 0:
            n = len(path.start)
            self.statistic.validate(n)
            self.predicate.validate(n)
        self.count += 1
        upTo = path.steps if self.t is None else self.t
        value = self.statistic.evaluate(path.deckAt(upTo))
        self.values[value] = self.values.get(value, Fraction(0)) + path.weight
        if evaluatePredicate(self.predicate, path, upTo):
            self.q += path.weight
            self.hits[value] = self.hits.get(value, Fraction(0)) + path.weight
        if self.stable and not isStableOn(self.predicate, path):
            self.stable = False

    def addAll(self, paths):
        for path in paths:
            self.add(path)
        return self

    def conditional(self):
        """ The law of the statistic given the predicate

        :raises ValueError: when no path was added or the predicate never holds
        """
        if self.count == 0:
            Util.raiseException("No paths to condition on", ValueError)
        if self.q == 0:
            Util.raiseException("predicate never satisfied: %s" % (self.predicate,), ValueError)
        return Distribution.fromDict({v: w / self.q for v, w in self.hits.items()},
                                     mode=Consts.numericMode["exact"])

    def unconditional(self):
        """ The law of the statistic over all the paths """
        return Distribution.fromDict(self.values, mode=Consts.numericMode["exact"])


def conditionalStatisticDistribution(paths, predicate, statistic, t=None):
    """ The law of the statistic at time t given the predicate at time t

    Example:
       >>> paths = enumeratePaths("rtt", 3, 2)
       >>> q, law = conditionalStatisticDistribution(paths, PredicateKind("k_distinct", 2),
       ...                                           StatisticKind("top_k_order", 2))
       >>> q
       Fraction(2, 3)

    :param paths: an exhaustive iterable of :class:`Path`
    :param predicate: the :class:`Predicates.PredicateKind`
    :param statistic: the :class:`Statistics.StatisticKind`
    :param t: the time, the path length when None
    :rtype: (q, conditional distribution)
    """
    tally = PathTally(predicate, statistic, t).addAll(paths)
    law = tally.conditional()
    return tally.q, law


def maxPointwiseDeviation(mu, pi):
    """ max |mu(a) - pi(a)| over the union of the supports """
    states = set(mu.support) | set(pi.support)
    return max((abs(mu[s] - pi[s]) for s in states), default=Fraction(0))


def checkStrongStationarity(chain, n, t, predicate, statistic, start=None, budget=None, restrictTo=None):
    """ Certify or refute "given the predicate at time t, the statistic has
    its stationary law"

    The paths are streamed through a :class:`PathTally`, memory stays
    proportional to the number of statistic values.

    :param chain: "rtt", "walk1" or "riffle"
    :param n: number of cards
    :param t: the time
    :param predicate: the :class:`Predicates.PredicateKind`
    :param statistic: the :class:`Statistics.StatisticKind`
    :param start: the start deck, the identity when None
    :param budget: enumeration budget
    :param restrictTo: when given, both laws are restricted to these values
                       and renormalized before the comparison
    :rtype: the :class:`Reports.SSTReport`
    """
    predicate.validate(n, chain)
    statistic.validate(n)
    tally = PathTally(predicate, statistic, t).addAll(iterPaths(chain, n, t, start, budget))
    q = tally.q
    conditional = tally.conditional()
    stationary = stationaryStatisticDistribution(n, statistic)
    target = stationary
    law = tally.unconditional()
    premise = all(q * w <= law[v] for v, w in conditional.items())

    if restrictTo is not None:
        restrictTo = sorted(restrictTo, key=Util.stateSortKey)
        conditional = conditional.restrict(restrictTo)
        target = target.restrict(restrictTo)

    deviation = maxPointwiseDeviation(conditional, target)
    certified = deviation == 0
    mean = None
    if statistic.isNumeric():
        mean = conditional.mean()

    report = SSTReport(chain=chain, n=n, t=t, predicate=str(predicate), statistic=str(statistic),
                       restricted_to=restrictTo, q=q, conditional=conditional, target=target,
                       is_strongly_stationary=certified, sep_bound=sstBound(q) if certified else None,
                       max_pointwise_deviation=deviation, predicate_stable=tally.stable,
                       sep_actual=separationDistance(law, stationary),
                       conditional_mean=mean, premise_holds=premise)
    logging.info("%s n=%d t=%d, %s given %s: %s (q=%s, %d paths)", chain, n, t, statistic, predicate,
                 "certified" if certified else "refuted", Util.fracToStr(q), tally.count)
    return report.validate()


def probKDistinct(n, k, t):
    """ Probability that at least k different labels appear among t uniform
    draws from n labels, by a dynamic program over the number of distinct
    labels seen

    Example:
       >>> probKDistinct(5, 2, 3)
       Fraction(24, 25)

    """
    if not 1 <= k <= n:
        Util.raiseException("k must be in 1..%d, got %d" % (n, k), ValueError)
    dist = [Fraction(0)] * (n + 1)
    dist[0] = Fraction(1)
    for _ in range(t):
        nxt = [Fraction(0)] * (n + 1)
        for j, p in enumerate(dist):
            if p:
                nxt[j] += p * Fraction(j, n)
                if j < n:
                    nxt[j + 1] += p * Fraction(n - j, n)
        dist = nxt
    return sum(dist[k:], Fraction(0))


def probStringsDistinct(n, t):
    """ Probability that n uniform t-bit strings are all different

    Example:
       >>> probStringsDistinct(3, 2)
       Fraction(3, 8)

    """
    result = Fraction(1)
    for i in range(n):
        result *= 1 - Fraction(i, 2 ** t)
    return result


def countNonnegativePaths(t):
    """ Number of +1/-1 step sequences of length t whose partial sums never
    go below zero

    Example:
       >>> countNonnegativePaths(10)
       252

    """
    if t < 0:
        Util.raiseException("The path length must be >= 0", ValueError)
    heights = {0: 1}
    for _ in range(t):
        nxt = {}
        for h, count in heights.items():
            nxt[h + 1] = nxt.get(h + 1, 0) + count
            if h > 0:
                nxt[h - 1] = nxt.get(h - 1, 0) + count
        heights = nxt
    return sum(heights.values())


def walk1PositionDistribution(n, t, p0):
    """ Exact law of the position of one tracked card after t steps of Walk 1

    From position p: the card itself is moved to the top with probability
    1/(2n); a card below it is moved to the top with probability (n-p)/(2n),
    pushing it to p+1; a card above it, (p-1)/(2n), leaves it in place; the
    top card goes to the bottom with probability 1/2, taking p=1 to n and
    every other p to p-1.

    Example:
       >>> walk1PositionDistribution(3, 1, 3).weights
       (Fraction(1, 6), Fraction(1, 2), Fraction(1, 3))

    :param n: number of cards
    :param t: number of steps
    :param p0: the start position, 1 = top
    :rtype: :class:`Distribution` over the positions 1..n
    """
    if not 1 <= p0 <= n:
        Util.raiseException("Start position %d outside 1..%d" % (p0, n), ValueError)
    if t < 0:
        Util.raiseException("The number of steps must be >= 0", ValueError)
    half = Fraction(1, 2)
    vec = [Fraction(0)] * (n + 1)
    vec[p0] = Fraction(1)
    for _ in range(t):
        nxt = [Fraction(0)] * (n + 1)
        for p in range(1, n + 1):
            w = vec[p]
            if not w:
                continue
            nxt[1] += w * Fraction(1, 2 * n)
            if p < n:
                nxt[p + 1] += w * Fraction(n - p, 2 * n)
            nxt[p] += w * Fraction(p - 1, 2 * n)
            nxt[n if p == 1 else p - 1] += w * half
        vec = nxt
    logging.debug("Walk 1 single card law for n=%d, t=%d, p0=%d computed", n, t, p0)
    return Distribution(range(1, n + 1), vec[1:], Consts.numericMode["exact"])


def walk1CounterexampleBounds(n, t):
    """ The counting argument against the claim that the top card of Walk 1
    is close to uniform after t steps, next to the exact chain values

    Reversed in time, the to-top moves are up steps and the top-to-bottom
    moves down steps; on the C_t of the 2^t step patterns which never go
    below zero the final top card was never moved to the top, so it is not
    the bottom card. This gives

       Pr(top card = bottom card) <= (2^t - C_t) / (2^t n)
       separation of the top card >= C_t / 2^t

    :rtype: a dict with the counting values and the exact values
    """
    paths = countNonnegativePaths(t)
    total = 2 ** t
    counting = Fraction(total - paths, total * n)
    exact = walk1PositionDistribution(n, t, n)[1]
    return {"n": n, "t": t,
            "nonnegative_paths": paths,
            "pattern_count": total,
            "counting_top_is_bottom_card": counting,
            "counting_top_is_bottom_card_str": "%d/%d" % (total - paths, total * n),
            "separation_lower_bound": Fraction(paths, total),
            "separation_lower_bound_str": "%d/%d" % (paths, total),
            "exact_top_is_bottom_card": exact,
            "exact_separation_from_bottom_card": 1 - exact * n,
            "exact_within_counting_bound": exact <= counting,
            "separation_bound_holds": 1 - exact * n >= Fraction(paths, total)}


def _normalInterval(successes, trials, z=Consts.CDefConfidenceZ):
    """ Normal approximation interval of a proportion, clipped to [0, 1] """
    if trials == 0:
        return (0.0, 0.0, 1.0)
    p = successes / float(trials)
    half = z * sqrt(p * (1.0 - p) / trials)
    return (p, max(0.0, p - half), min(1.0, p + half))


def samplePath(chain, n, t, rng, start=None):
    """ One random path of *chain* drawn from the numpy generator *rng* """
    start = Deck.identity(n) if start is None else start
    if chain == Consts.chainType["riffle"]:
        return Path(start, Fraction(1), assignment=ShuffleMoves.sampleRiffleAssignment(n, t, rng))
    return Path(start, Fraction(1), moves=ShuffleMoves.sampleMovePath(chain, n, t, rng))


def monteCarloCheck(chain, n, t, predicate, statistic, samples=Consts.CDefMonteCarloSamples, seed=None,
                    start=None):
    """ Sampled version of :func:`checkStrongStationarity`, for sizes beyond
    the enumeration budget. Reports estimates with 95% intervals and never
    certifies.

    :param samples: number of sampled paths
    :param seed: the seed of :func:`numpy.random.default_rng`, required
    :rtype: the :class:`Reports.MonteCarloReport`
    """
    if seed is None:
        Util.raiseException("Monte-Carlo mode needs a seed", ValueError)
    if samples < 1:
        Util.raiseException("Monte-Carlo mode needs at least one sample", ValueError)
    predicate.validate(n, chain)
    statistic.validate(n)
    rng = np.random.default_rng(seed)
    hits = 0
    counts = {}
    for _ in range(samples):
        path = samplePath(chain, n, t, rng, start)
        if evaluatePredicate(predicate, path):
            hits += 1
            value = statistic.evaluate(path.final())
            counts[value] = counts.get(value, 0) + 1

    target = None
    if n <= Consts.CDefDenseMaxCards:
        target = stationaryStatisticDistribution(n, statistic)
    values = sorted(set(counts) | set(target.support if target is not None else ()), key=Util.stateSortKey)
    rows = []
    deviation = 0.0
    for value in values:
        est, low, high = _normalInterval(counts.get(value, 0), hits)
        row = {"value": value, "estimate": est, "low": low, "high": high}
        if target is not None:
            row["stationary"] = float(target[value])
            deviation = max(deviation, abs(est - row["stationary"]))
        rows.append(row)
    q, q_low, q_high = _normalInterval(hits, samples)
    logging.info("Monte-Carlo %s n=%d t=%d: %d of %d samples satisfy %s", chain, n, t, hits, samples, predicate)
    return MonteCarloReport(chain=chain, n=n, t=t, predicate=str(predicate), statistic=str(statistic),
                            samples=samples, seed=seed, q_estimate=q, q_interval=[q_low, q_high],
                            frequencies=rows, max_abs_deviation=deviation if target is not None else None,
                            certified=False)
