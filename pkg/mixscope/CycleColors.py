"""

:mod:`CycleColors` -- the lazy walk on a colored cycle
============================================================================

A lazy random walk on the 2n-cycle moves left or right with probability 1/4
each and stays with probability 1/2. Half of the vertices are red; the
question is how fast the color of the walker becomes a fair coin.

The vertices split into k alternating sets (colors alternating around the
cycle), k being the spread of the running red-minus-blue count; consecutive
members of a set are at most 2k-1 apart. Each lazy step is refined into two
half-steps vertex -> edge -> vertex, so the refined walk is a simple walk on
half-units, and the walk is said to cover the decomposition once its range
holds a midpoint of every set. The tail of that coverage time bounds the
separation of the color from a fair coin whenever the sets and their midpoint
sets are mirror symmetric about each midpoint
(:func:`isReflectionSymmetric`); for other decompositions both sides are
computed and compared, not certified.

Every probability here is exact: after t lazy steps the walk has 4^t equally
likely refined paths, so the dynamic programs count paths with integers and
divide once.

Example:
   >>> c = Coloring.parse("RRBRBBRRBRBB")
   >>> computeK(c)
   2
   >>> exactColorSeparation(c, 0, 0)
   Fraction(1, 1)

"""

from fractions import Fraction
from math import ceil, sqrt
import itertools
import logging

from . import Consts
from . import Util
from .Distribution import Distribution, Kernel, Statistic, evolve, pushForward, separationDistance
from .Reports import DominanceReport
from .representations.Coloring import AlternatingSet, Coloring, CoverageState, HalfPosition


def alternatingColoring(n):
    """ RBRB... on 2n vertices, k = 1 """
    return Coloring((Consts.CDefRed, Consts.CDefBlue) * n)


def blockColoring(n):
    """ n reds followed by n blues, k = n """
    return Coloring((Consts.CDefRed,) * n + (Consts.CDefBlue,) * n)


def mod6Coloring(repeats=2):
    """ Red exactly on the vertices congruent to 0, 1 or 3 mod 6, on a cycle of
    6*repeats vertices """
    return Coloring("RRBRBB" * repeats)


def mod6Sets(repeats=2):
    """ The hand-built decomposition of :func:`mod6Coloring`: the vertices
    congruent to 0, 2, 3 or 5 mod 6, and those congruent to 1 or 4 mod 6 """
    size = 6 * repeats
    coloring = mod6Coloring(repeats)
    return [AlternatingSet([v for v in range(size) if v % 6 in (0, 2, 3, 5)], coloring),
            AlternatingSet([v for v in range(size) if v % 6 in (1, 4)], coloring)]


def parseSets(text, coloring):
    """ Parse "0,2,3,5;1,4" into alternating sets of *coloring* """
    sets = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        try:
            members = [int(v) for v in chunk.split(",")]
        except ValueError:
            Util.raiseException("Invalid vertex list '%s'" % chunk, ValueError)
        sets.append(AlternatingSet(members, coloring))
    return validateDecomposition(coloring, sets)


def _prefixSums(coloring):
    """ Running red-minus-blue counts, starting with the empty prefix """
    sums = [0]
    for mark in coloring:
        sums.append(sums[-1] + (1 if mark == Consts.CDefRed else -1))
    return sums


def computeK(coloring):
    """ The alternating number k, the max minus the min of the running
    red-minus-blue count over one turn of the cycle

    Example:
       >>> computeK(Coloring.parse("RRRRBBBB"))
       4

    """
    sums = _prefixSums(coloring)
    return max(sums) - min(sums)


def alternatingDecomposition(coloring):
    """ Split the vertices into k alternating sets

    The traversal starts at the first vertex where the running count reaches
    its minimum, so counted from there it never goes negative; reds and blues
    are numbered R_1..R_n and B_1..B_n in visit order and set i gets
    R_i, B_i, R_(k+i), B_(k+i), R_(2k+i), ...

    Example:
       >>> [a.members for a in alternatingDecomposition(Coloring.parse("RRBB"))]
       [(0, 2), (1, 3)]

    :rtype: list of k :class:`AlternatingSet`
    """
    size = coloring.size()
    sums = _prefixSums(coloring)[:size]
    start = sums.index(min(sums))
    k = computeK(coloring)
    reds, blues = [], []
    for step in range(size):
        v = (start + step) % size
        (reds if coloring.isRed(v) else blues).append(v)
    sets = []
    for i in range(k):
        members = []
        for j in range(i, len(reds), k):
            members.append(reds[j])
            members.append(blues[j])
        sets.append(AlternatingSet(members, coloring))
    logging.debug("Coloring %s: k=%d, start vertex %d", coloring, k, start)
    return sets


def validateDecomposition(coloring, sets):
    """ Check that *sets* are alternating sets of *coloring* partitioning its
    vertices

    :raises ValueError: on overlaps or uncovered vertices
    """
    seen = {}
    for idx, a in enumerate(sets):
        if a.coloring != coloring:
            Util.raiseException("Set %d belongs to another coloring" % idx, ValueError)
        for v in a:
            if v in seen:
                Util.raiseException("Vertex %d is in sets %d and %d" % (v, seen[v], idx), ValueError)
            seen[v] = idx
    missing = [v for v in range(coloring.size()) if v not in seen]
    if missing:
        Util.raiseException("Vertices %r are in no set" % (missing,), ValueError)
    return list(sets)


def maxGap(alternatingSet, cycleSize=None):
    """ The largest distance between consecutive members of the set """
    if cycleSize is not None and cycleSize != alternatingSet.coloring.size():
        Util.raiseException("Cycle size %d does not match the coloring" % cycleSize, ValueError)
    return alternatingSet.maxGap()


def midpoints(alternatingSet, cycleSize=None):
    """ The midpoints of the set as :class:`HalfPosition` values """
    if cycleSize is not None and cycleSize != alternatingSet.coloring.size():
        Util.raiseException("Cycle size %d does not match the coloring" % cycleSize, ValueError)
    return alternatingSet.midpoints()


def isAlternatingPartitionable(coloring, count):
    """ True when the vertices split into at most *count* alternating sets,
    by an exhaustive backtracking search

    Vertices are placed in increasing order; a vertex joins an open set whose
    last member has the other color, or opens a new set. A set is alternating
    when it closes with the color it did not start with.
    """
    size = coloring.size()
    firsts = []
    lasts = []

    def place(v):
        if v == size:
            return all(coloring[f] != coloring[last] for f, last in zip(firsts, lasts))
        color = coloring[v]
        for i in range(len(lasts)):
            if coloring[lasts[i]] != color:
                previous = lasts[i]
                lasts[i] = v
                if place(v + 1):
                    return True
                lasts[i] = previous
        if len(lasts) < count:
            firsts.append(v)
            lasts.append(v)
            if place(v + 1):
                return True
            firsts.pop()
            lasts.pop()
        return False

    return place(0)


def lazyCycleKernel(size):
    """ The lazy walk on the cycle of *size* vertices as a :class:`Kernel`

    Example:
       >>> lazyCycleKernel(4).successors(0)
       [(0, Fraction(1, 2)), (1, Fraction(1, 4)), (3, Fraction(1, 4))]

    """
    if size < 3:
        Util.raiseException("The lazy cycle walk needs at least 3 vertices, got %d" % size, ValueError)
    quarter, half = Fraction(1, 4), Fraction(1, 2)
    return Kernel.fromStepFunction(range(size),
                                   lambda v: [((v - 1) % size, quarter), (v, half), ((v + 1) % size, quarter)],
                                   "lazy cycle %d" % size)


def _checkStart(coloring, x0):
    if not 0 <= x0 < coloring.size():
        Util.raiseException("Start vertex %d outside 0..%d" % (x0, coloring.size() - 1), ValueError)


def colorStatistic(coloring):
    return Statistic("color", lambda v: coloring[v], Consts.CDefColors)


def exactColorSeparation(coloring, x0, t):
    """ Separation of the walker's color after t lazy steps from a fair coin,
    through :func:`Distribution.evolve` and :func:`Distribution.pushForward`

    Example:
       >>> exactColorSeparation(alternatingColoring(4), 0, 1)
       Fraction(0, 1)

    """
    _checkStart(coloring, x0)
    kernel = lazyCycleKernel(coloring.size())
    law = evolve(kernel, Distribution.pointMass(kernel.states, x0), t)
    return separationDistance(pushForward(law, colorStatistic(coloring)), Distribution.uniform(Consts.CDefColors))


def _redCounts(coloring, x0, horizon):
    """ Yields, for t = 0..horizon, the number of the 4^t refined paths that
    end on a red vertex """
    size = coloring.size()
    reds = coloring.vertices(Consts.CDefRed)
    counts = [0] * size
    counts[x0] = 1
    for t in range(horizon + 1):
        yield t, sum(counts[v] for v in reds)
        counts = [counts[v - 1] + 2 * counts[v] + counts[(v + 1) % size] for v in range(size)]


def colorSeparationSeries(coloring, x0, horizon):
    """ Exact separation of the color from a fair coin for t = 0..horizon in
    one pass, equal to :func:`exactColorSeparation` at every t """
    _checkStart(coloring, x0)
    series = []
    for t, red in _redCounts(coloring, x0, horizon):
        total = 4 ** t
        series.append(1 - Fraction(2 * min(red, total - red), total))
    return series


def redProbabilitySeries(coloring, x0, horizon):
    """ Exact Pr(red at t) for t = 0..horizon """
    _checkStart(coloring, x0)
    return [Fraction(red, 4 ** t) for t, red in _redCounts(coloring, x0, horizon)]


class _CoverageChecker(object):
    """ Decides whether a range of half-unit offsets around 2*x0 holds a
    midpoint of every set """

    def __init__(self, coloring, x0, sets):
        self.period = 2 * coloring.size()
        self.base = 2 * x0
        self.mids = [sorted(m.value for m in a.midpoints()) for a in sets]
        self._cache = {}

    def coversSet(self, l, r, mids):
        width = r - l
        return any((m - self.base - l) % self.period <= width for m in mids)

    def __call__(self, l, r):
        key = (l, r)
        if key not in self._cache:
            self._cache[key] = r - l >= self.period - 1 or all(self.coversSet(l, r, m) for m in self.mids)
        return self._cache[key]


def _uncoveredGraph(covered):
    """ The reachable uncovered coverage states and, per state, the indices of
    its two successors (-1 when the successor is covered) """
    start = CoverageState()
    if covered(0, 0):
        return [], []
    index = {start.key(): 0}
    states = [start]
    succ = []
    pos = 0
    while pos < len(states):
        state = states[pos]
        row = []
        for delta in (-1, 1):
            nxt = state.step(delta)
            if covered(nxt.l, nxt.r):
                row.append(-1)
                continue
            if nxt.key() not in index:
                index[nxt.key()] = len(states)
                states.append(nxt)
            row.append(index[nxt.key()])
        succ.append(row)
        pos += 1
    return states, succ


def _resolveSets(coloring, sets):
    if sets is None:
        return alternatingDecomposition(coloring)
    return validateDecomposition(coloring, sets)


def coverageTimeTail(coloring, x0, horizon, sets=None):
    """ Pr(T > t) for t = 0..horizon, T being the first lazy step after which
    the refined walk's range holds a midpoint of every alternating set

    :param coloring: the :class:`Coloring`
    :param x0: the start vertex
    :param horizon: the last t
    :param sets: a decomposition, :func:`alternatingDecomposition` when None
    :rtype: list of Fraction, nonincreasing
    """
    if horizon < 0:
        Util.raiseException("The horizon must be >= 0", ValueError)
    _checkStart(coloring, x0)
    states, succ = _uncoveredGraph(_CoverageChecker(coloring, x0, _resolveSets(coloring, sets)))
    logging.debug("Coverage of %s from %d: %d uncovered states", coloring, x0, len(states))
    if not states:
        return [Fraction(0)] * (horizon + 1)
    counts = [0] * len(states)
    counts[0] = 1
    tail = [Fraction(1)]
    for t in range(1, horizon + 1):
        for _ in range(2):
            nxt = [0] * len(states)
            for i, c in enumerate(counts):
                if c:
                    for j in succ[i]:
                        if j >= 0:
                            nxt[j] += c
            counts = nxt
        tail.append(Fraction(sum(counts), 4 ** t))
    return tail


def _lazyRangeTail(horizon, stopped):
    """ Pr(not stopped by t) for the lazy walk on the integers, where
    *stopped(l, r, x)* looks at the range and the position in vertices """
    counts = {(0, 0, 0): 1} if not stopped(0, 0, 0) else {}
    tail = [Fraction(len(counts))]
    for t in range(1, horizon + 1):
        nxt = {}
        for (l, r, x), c in counts.items():
            for delta, mult in ((-1, 1), (0, 2), (1, 1)):
                y = x + delta
                key = (min(l, y), max(r, y), y)
                if not stopped(*key):
                    nxt[key] = nxt.get(key, 0) + c * mult
        counts = nxt
        tail.append(Fraction(sum(counts.values()), 4 ** t))
    return tail


def vertexCountTail(coloring, x0, horizon):
    """ Pr(the walk has visited fewer than 2k-1 different vertices by t) for
    t = 0..horizon; reported next to the coverage tail, not a certificate """
    _checkStart(coloring, x0)
    need = 2 * computeK(coloring) - 1
    return _lazyRangeTail(horizon, lambda l, r, x: r - l + 1 >= need)


def displacementTail(coloring, x0, horizon):
    """ Pr(the walk has not yet been at distance 2k-1 from x0 by t) for
    t = 0..horizon; such a walk has covered the decomposition """
    _checkStart(coloring, x0)
    far = 2 * computeK(coloring) - 1
    return _lazyRangeTail(horizon, lambda l, r, x: abs(x) >= far)


def gamblerMoments(k):
    """ Mean and variance of the lazy steps needed to move 2k-1 away from the
    start: 2(2k-1)^2 and 4/3((2k-1)^4 - (2k-1)^2)

    Example:
       >>> gamblerMoments(2)
       (Fraction(18, 1), Fraction(96, 1))

    """
    if k < 1:
        Util.raiseException("k must be >= 1, got %r" % (k,), ValueError)
    m = 2 * k - 1
    return Fraction(2 * m * m), Fraction(4, 3) * (m ** 4 - m ** 2)


def chebyshevTime(k, c):
    """ The time (8 + 8c/sqrt(3)) k^2 after which the color separation is at
    most 1/c^2

    Example:
       >>> round(chebyshevTime(1, 1), 2)
       12.62

    """
    if c <= 0:
        Util.raiseException("c must be > 0, got %r" % (c,), ValueError)
    return (8.0 + 8.0 * c / sqrt(3.0)) * k * k


def chebyshevCheck(coloring, x0, constants=Consts.CDefChebyshevConstants):
    """ Exact separation at the ceiling of :func:`chebyshevTime` against 1/c^2
    for every c of *constants*

    :rtype: list of dicts (c, t, separation, bound, holds)
    """
    k = computeK(coloring)
    times = [(c, int(ceil(chebyshevTime(k, c)))) for c in constants]
    series = colorSeparationSeries(coloring, x0, max(t for _, t in times))
    rows = []
    for c, t in times:
        bound = 1 / Fraction(c) ** 2
        rows.append({"c": c, "t": t, "separation": series[t], "bound": bound, "holds": series[t] <= bound})
    return rows


def isReflectionSymmetric(coloring, sets):
    """ True when, for every midpoint m of every set, the mirror image about
    m maps the set to itself with the colors swapped and maps every set's
    midpoints to that set's midpoints. For such decompositions the coverage
    tail bounds the color separation. """
    period = 2 * coloring.size()
    mids = [frozenset(m.value for m in a.midpoints()) for a in sets]
    for a, ms in zip(sets, mids):
        for m in ms:
            for v in a:
                mirror = HalfPosition(2 * m - 2 * v, coloring.size())
                if not mirror.isVertex() or mirror.vertex() not in a or coloring[mirror.vertex()] == coloring[v]:
                    return False
            for other in mids:
                if frozenset((2 * m - h) % period for h in other) != other:
                    return False
    return True


def reflectionBalance(coloring, x0, t, index, sets=None):
    """ Pr(a midpoint of set *index* was reached and the walk ends on a red,
    resp. blue, member of that set) after t lazy steps

    :rtype: dict with the exact "red" and "blue" probabilities and "balanced"
    """
    _checkStart(coloring, x0)
    sets = _resolveSets(coloring, sets)
    if not 0 <= index < len(sets):
        Util.raiseException("Set index %d outside 0..%d" % (index, len(sets) - 1), ValueError)
    target = sets[index]
    checker = _CoverageChecker(coloring, x0, [target])
    period = checker.period
    # uncovered (l, r, x) offsets and, once covered, absolute half-positions
    open_counts = {} if checker(0, 0) else {(0, 0, 0): 1}
    done = [0] * period
    if not open_counts:
        done[2 * x0] = 1
    for _ in range(2 * t):
        nxt_open = {}
        nxt_done = [done[h - 1] + done[(h + 1) % period] for h in range(period)]
        for (l, r, x), c in open_counts.items():
            for y in (x - 1, x + 1):
                key = (min(l, y), max(r, y), y)
                if checker(key[0], key[1]):
                    nxt_done[(2 * x0 + y) % period] += c
                else:
                    nxt_open[key] = nxt_open.get(key, 0) + c
        open_counts, done = nxt_open, nxt_done
    total = 4 ** t
    red = Fraction(sum(done[2 * v] for v in target if coloring.isRed(v)), total)
    blue = Fraction(sum(done[2 * v] for v in target if not coloring.isRed(v)), total)
    return {"set": index, "t": t, "red": red, "blue": blue, "balanced": red == blue}


def nearestMembers(coloring, x0, sets):
    """ Per set, the members closest to x0 and their common color, or
    "ambiguous" when equidistant members of both colors exist """
    rows = []
    for idx, a in enumerate(sets):
        best = min(coloring.distance(x0, v) for v in a)
        members = [v for v in a if coloring.distance(x0, v) == best]
        colors = set(coloring[v] for v in members)
        rows.append({"set": idx, "members": members, "distance": best,
                     "color": colors.pop() if len(colors) == 1 else "ambiguous"})
    return rows


def checkRedDominance(coloring, x0, horizon=Consts.CDefDominanceHorizon, sets=None):
    """ When the nearest member to x0 of every alternating set is red, check
    exactly that Pr(red at t) >= 1/2 for every t up to *horizon*; all blue
    nearest members give the symmetric claim for blue

    :rtype: the :class:`Reports.DominanceReport`
    """
    _checkStart(coloring, x0)
    sets = _resolveSets(coloring, sets)
    nearest = nearestMembers(coloring, x0, sets)
    report = DominanceReport(coloring=str(coloring), x0=x0, horizon=horizon, nearest=nearest)
    colors = set(row["color"] for row in nearest)
    if "ambiguous" in colors:
        report["status"] = "ambiguous"
        report["failing_sets"] = [row["set"] for row in nearest if row["color"] == "ambiguous"]
        return report
    if len(colors) != 1:
        report["status"] = "precondition_fails"
        report["failing_sets"] = [row["set"] for row in nearest if row["color"] != Consts.CDefRed]
        return report

    claim = colors.pop()
    report["status"] = "red" if claim == Consts.CDefRed else "blue"
    report["claim_color"] = claim
    report["failing_sets"] = []
    margin, margin_at, violation = None, None, None
    for t, red in _redCounts(coloring, x0, horizon):
        total = 4 ** t
        hits = red if claim == Consts.CDefRed else total - red
        value = Fraction(hits, total) - Fraction(1, 2)
        if margin is None or value < margin:
            margin, margin_at = value, t
        if value < 0 and violation is None:
            violation = t
    report["holds"] = violation is None
    report["min_margin"] = margin
    report["min_margin_at"] = margin_at
    report["first_violation"] = violation
    logging.info("Dominance of %s from %d up to %d: %s", claim, x0, horizon, report["holds"])
    return report


def allBalancedColorings(size):
    """ Every balanced coloring of the cycle with *size* vertices """
    for reds in itertools.combinations(range(size), size // 2):
        chosen = set(reds)
        yield Coloring(Consts.CDefRed if v in chosen else Consts.CDefBlue for v in range(size))


def mixingBoundCheck(coloring, x0, horizon, sets=None):
    """ The exact color separation next to the coverage tail for t = 0..horizon

    :rtype: dict with both series, the per-t comparison, whether the
            decomposition is reflection symmetric and the first violation
    """
    sets = _resolveSets(coloring, sets)
    separation = colorSeparationSeries(coloring, x0, horizon)
    tail = coverageTimeTail(coloring, x0, horizon, sets)
    holds = [s <= q for s, q in zip(separation, tail)]
    violation = holds.index(False) if False in holds else None
    return {"separation": separation, "coverage_tail": tail, "holds": holds,
            "bound_satisfied": violation is None, "first_violation": violation,
            "reflection_symmetric": isReflectionSymmetric(coloring, sets)}


def randomColoring(size, rng):
    """ A uniform balanced coloring of *size* vertices drawn from the numpy
    generator *rng* """
    if size < 2 or size % 2:
        Util.raiseException("A coloring needs an even number >= 2 of vertices, got %d" % size, ValueError)
    reds = set(int(v) for v in rng.permutation(size)[:size // 2])
    return Coloring(Consts.CDefRed if v in reds else Consts.CDefBlue for v in range(size))
