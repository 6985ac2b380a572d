"""
:mod:`ShuffleMoves` -- the shuffle chains on the symmetric group
=====================================================================

The moves of the random-to-top shuffle, Walk 1 (half the time a random card
to the top, half the time the top card to the bottom) and the inverse riffle
shuffle, together with their dense kernels over the Lehmer ranks of S_n and
the exhaustive enumeration of inverse riffle assignments.

Bit order of multi-step inverse riffles: a string's first recorded bit is the
bit of the first single step, and sorting once by the string read from its
last bit to its first gives the same deck as applying the steps one at a time.

"""

from fractions import Fraction
from math import factorial
import itertools
import logging

from .. import Consts
from .. import Util
from ..Distribution import Distribution, Kernel
from ..representations.Deck import Deck, Move, StringAssignment


def applyMove(deck, move):
    """ Apply a move to a deck

    Example:
       >>> applyMove(Deck((1, 2, 3)), Move.toTop(3))
       Deck(3, 1, 2)
       >>> applyMove(Deck((1, 2, 3)), Move.topToBottom())
       Deck(2, 3, 1)

    :param deck: the :class:`Deck`
    :param move: the :class:`Move`
    :rtype: the new deck
    """
    order = list(deck.order)
    if move.isToTop():
        if move.card > len(order):
            Util.raiseException("Unknown card label %d for a deck of %d cards" % (move.card, len(order)),
                                ValueError)
        order.remove(move.card)
        order.insert(0, move.card)
    else:
        order.append(order.pop(0))
    return Deck(order)


def inverseRiffleApply(deck, assignment):
    """ Stable sort of the deck by the cards' strings, latest step's bit most
    significant, ties keeping the current relative order

    Example:
       >>> inverseRiffleApply(Deck((1, 2, 3)), StringAssignment(["1", "0", "0"]))
       Deck(2, 3, 1)

    :param deck: the :class:`Deck`
    :param assignment: a :class:`StringAssignment` covering every card
    """
    if len(assignment) != len(deck):
        Util.raiseException("Assignment covers %d cards, the deck has %d" % (len(assignment), len(deck)),
                            ValueError)
    return Deck(sorted(deck.order, key=assignment.sortKey))


def chainMoves(chain, n):
    """ The weighted moves of one step of *chain* on n cards

    :param chain: "rtt" or "walk1"
    :rtype: list of (Move, probability)
    """
    if chain == Consts.chainType["rtt"]:
        return [(Move.toTop(c), Fraction(1, n)) for c in range(1, n + 1)]
    if chain == Consts.chainType["walk1"]:
        moves = [(Move.toTop(c), Fraction(1, 2 * n)) for c in range(1, n + 1)]
        moves.append((Move.topToBottom(), Fraction(1, 2)))
        return moves
    Util.raiseException("Chain '%s' has no move list" % (chain,), ValueError)


def _checkDense(n, what):
    if n < 2:
        Util.raiseException("A deck needs at least two cards, got %d" % n, ValueError)
    if n > Consts.CDefDenseMaxCards:
        Util.raiseException("%s is dense over S_n only for n <= %d, got n=%d; use the sampler mode "
                            "(--samples K --seed X)" % (what, Consts.CDefDenseMaxCards, n), Util.CapacityError)


def _moveKernel(chain, n, name):
    _checkDense(n, name)
    moves = chainMoves(chain, n)

    def step(rank):
        deck = Deck.fromRank(n, rank)
        return [(applyMove(deck, mv).rank(), p) for mv, p in moves]

    return Kernel.fromStepFunction(range(factorial(n)), step, name)


def randomToTopKernel(n):
    """ The random-to-top kernel on the Lehmer ranks of S_n, each to-top
    move with probability 1/n """
    return _moveKernel(Consts.chainType["rtt"], n, "random-to-top n=%d" % n)


def walk1Kernel(n):
    """ The Walk 1 kernel on the Lehmer ranks of S_n, each to-top move with
    probability 1/(2n) and the top-to-bottom move with probability 1/2 """
    return _moveKernel(Consts.chainType["walk1"], n, "walk1 n=%d" % n)


def riffleKernel(n, budget=None):
    """ One inverse riffle step as a kernel on the Lehmer ranks of S_n, each
    of the 2^n single bit assignments with probability 2^-n """
    _checkDense(n, "inverse riffle kernel")
    Util.checkBudget(factorial(n) * 2 ** n, budget, "inverse riffle kernel n=%d" % n)
    assignments = [StringAssignment("".join(bits)) for bits in itertools.product("01", repeat=n)]
    weight = Fraction(1, 2 ** n)

    def step(rank):
        deck = Deck.fromRank(n, rank)
        return [(inverseRiffleApply(deck, a).rank(), weight) for a in assignments]

    return Kernel.fromStepFunction(range(factorial(n)), step, "inverse riffle n=%d" % n)


def chainKernel(chain, n):
    """ The dense kernel of *chain* ("rtt", "walk1" or "riffle") """
    if chain == Consts.chainType["rtt"]:
        return randomToTopKernel(n)
    if chain == Consts.chainType["walk1"]:
        return walk1Kernel(n)
    if chain == Consts.chainType["riffle"]:
        return riffleKernel(n)
    Util.raiseException("Unknown chain '%s'" % (chain,), ValueError)


def startDistribution(kernel, deck):
    """ Point mass on *deck* over the rank space of *kernel* """
    return Distribution.pointMass(kernel.states, deck.rank())


def iterRiffle(n, t, start=None, budget=None):
    """ Lazy version of :func:`enumerateRiffle`, the budget is checked
    before the first assignment is produced

    :rtype: generator of (StringAssignment, Deck, weight)
    """
    if t < 0:
        Util.raiseException("The number of riffle steps must be >= 0", ValueError)
    Util.checkBudget((2 ** t) ** n, budget, "inverse riffle enumeration n=%d t=%d" % (n, t),
                     hint="use the riffle sampler (--samples K --seed X)")
    start = Deck.identity(n) if start is None else start
    return _riffleRows(n, t, start)


def _riffleRows(n, t, start):
    weight = Fraction(1, 2 ** (t * n))
    for values in itertools.product(range(2 ** t), repeat=n):
        assignment = StringAssignment.fromInts(values, t)
        yield assignment, inverseRiffleApply(start, assignment), weight


def enumerateRiffle(n, t, start=None, budget=None):
    """ Every t-bit string assignment of n cards with its weight 2^(-tn) and
    the deck it produces from *start* (the identity when None)

    Example:
       >>> [d.order for _, d, _ in enumerateRiffle(2, 1)]
       [(1, 2), (1, 2), (2, 1), (1, 2)]

    :rtype: list of (StringAssignment, Deck, weight)
    """
    result = list(iterRiffle(n, t, start, budget))
    logging.debug("Enumerated %d riffle assignments for n=%d, t=%d", len(result), n, t)
    return result


def sampleRiffleAssignment(n, t, rng):
    """ A uniform t-bit assignment drawn from the numpy generator *rng* """
    bits = rng.integers(0, 2, size=(n, t))
    return StringAssignment(["".join(str(b) for b in row) for row in bits])


def sampleMove(chain, n, rng):
    """ One move of *chain* drawn from the numpy generator *rng* """
    if chain == Consts.chainType["walk1"] and rng.random() < 0.5:
        return Move.topToBottom()
    return Move.toTop(int(rng.integers(1, n + 1)))


def sampleMovePath(chain, n, t, rng):
    """ A path of t moves of *chain* ("rtt" or "walk1") drawn from *rng* """
    return [sampleMove(chain, n, rng) for _ in range(t)]
