"""

:mod:`Statistics` -- the catalog of deck statistics
==========================================================================

This module has the statistics of a deck that the mixing questions are asked
about: the top card, the top k cards, positions, parity, neighbours, relative
orders, distances, blocks and dealt hands. A statistic is described by a
:class:`StatisticKind`, a name plus its integer parameters, which is what the
CLI and the JSON reports carry.

Statistic names and their parameters:

=================  =====================  ===================================
name               parameters             value
=================  =====================  ===================================
top_card                                  label of the top card
top_k_order        k                      tuple of the first k labels
top_k_set          k                      frozenset of the first k labels
position_of        c                      position of card c (1 = top)
positions_of       c1, c2, ...            positions of the cards, by label
parity                                    "even" or "odd"
card_above         c                      label above c, "none" on top
card_below         c                      label below c, "none" at bottom
relative_order     c1, c2, ...            the cards' labels read from the top
distance           c1, c2                 |position(c1) - position(c2)|
block_sets         b                      tuple of the n/b blocks, as sets
modular_hands      m                      tuple of m hands dealt round robin
card_at            k                      label at position k
cards_below        c, k                   the (up to) k labels after c
deck                                      the whole arrangement
=================  =====================  ===================================

"""

from math import factorial
import itertools
import logging

from . import Consts
from . import Util
from .Distribution import Distribution, Statistic, pushForward
from .representations.Deck import Deck


def _noneOr(deck, position):
    if 1 <= position <= len(deck):
        return deck.cardAt(position)
    return Consts.CDefNoneValue


def statTopCard(deck):
    return deck.top()


def statTopKOrder(deck, k):
    return tuple(deck.order[:k])


def statTopKSet(deck, k):
    return frozenset(deck.order[:k])


def statPositionOf(deck, card):
    return deck.position(card)


def statPositionsOf(deck, *cards):
    return tuple(deck.position(c) for c in sorted(cards))


def statParity(deck):
    return Consts.CDefParityOdd if deck.parity() else Consts.CDefParityEven


def statCardAbove(deck, card):
    return _noneOr(deck, deck.position(card) - 1)


def statCardBelow(deck, card):
    return _noneOr(deck, deck.position(card) + 1)


def statRelativeOrder(deck, *cards):
    chosen = set(cards)
    return tuple(c for c in deck.order if c in chosen)


def statDistance(deck, first, second):
    return abs(deck.position(first) - deck.position(second))


def statBlockSets(deck, block):
    """ The consecutive blocks of *block* cards, from the top """
    return tuple(frozenset(deck.order[i:i + block]) for i in range(0, len(deck), block))


def statModularHands(deck, hands):
    """ The card at position p is dealt to hand (p - 1) mod *hands* """
    return tuple(frozenset(deck.order[j::hands]) for j in range(hands))


def statCardAt(deck, position):
    return deck.cardAt(position)


def statCardsBelow(deck, card, count):
    pos = deck.position(card)
    return tuple(deck.order[pos:pos + count])


def statDeck(deck):
    return deck.order


# name -> (evaluator, arity); arity is the exact number of integer
# parameters, or "set" for one or more distinct card labels
StatisticCatalog = {
    "top_card": (statTopCard, 0),
    "top_k_order": (statTopKOrder, 1),
    "top_k_set": (statTopKSet, 1),
    "position_of": (statPositionOf, 1),
    "positions_of": (statPositionsOf, "set"),
    "parity": (statParity, 0),
    "card_above": (statCardAbove, 1),
    "card_below": (statCardBelow, 1),
    "relative_order": (statRelativeOrder, "set"),
    "distance": (statDistance, 2),
    "block_sets": (statBlockSets, 1),
    "modular_hands": (statModularHands, 1),
    "card_at": (statCardAt, 1),
    "cards_below": (statCardsBelow, 2),
    "deck": (statDeck, 0),
}


class StatisticKind(object):
    """ StatisticKind Class - a statistic name with its parameters

    Example:
       >>> kind = StatisticKind("top_k_order", 2)
       >>> kind.evaluate(Deck((3, 1, 2)))
       (3, 1)
       >>> str(kind)
       'top_k_order:2'

    :param name: a name of :data:`StatisticCatalog`
    :param params: the integer parameters
    """
    __slots__ = ["name", "params"]

    def __init__(self, name, *params):
        if name not in StatisticCatalog:
            Util.raiseException("Unknown statistic '%s', known: %s" % (name, ", ".join(sorted(StatisticCatalog))),
                                ValueError)
        arity = StatisticCatalog[name][1]
        if arity == "set":
            if not params:
                Util.raiseException("Statistic '%s' needs at least one card" % name, ValueError)
            if len(set(params)) != len(params):
                Util.raiseException("Statistic '%s' needs distinct cards" % name, ValueError)
        elif len(params) != arity:
            Util.raiseException("Statistic '%s' takes %d parameter(s), got %d" % (name, arity, len(params)),
                                ValueError)
        for p in params:
            if not isinstance(p, int) or isinstance(p, bool):
                Util.raiseException("Statistic parameters must be integers, got %r" % (p,), TypeError)
        self.name = name
        self.params = tuple(params)

    def __eq__(self, other):
        if not isinstance(other, StatisticKind):
            return NotImplemented
        return (self.name, self.params) == (other.name, other.params)

    def __hash__(self):
        return hash((self.name, self.params))

    def __repr__(self):
        return "StatisticKind [%s]" % (self,)

    def __str__(self):
        if not self.params:
            return self.name
        return "%s:%s" % (self.name, ",".join(str(p) for p in self.params))

    def validate(self, n):
        """ Check the parameters against a deck of n cards

        :raises ValueError: when a card, a position or a size is out of range
        """
        def inRange(value, what):
            if not 1 <= value <= n:
                Util.raiseException("Statistic '%s': %s %d outside 1..%d" % (self, what, value, n), ValueError)

        name = self.name
        if name in ("top_k_order", "top_k_set"):
            inRange(self.params[0], "k")
        elif name in ("position_of", "card_above", "card_below", "positions_of", "relative_order"):
            for c in self.params:
                inRange(c, "card")
        elif name == "card_at":
            inRange(self.params[0], "position")
        elif name == "distance":
            inRange(self.params[0], "card")
            inRange(self.params[1], "card")
            if self.params[0] == self.params[1]:
                Util.raiseException("Statistic 'distance' needs two different cards", ValueError)
        elif name in ("block_sets", "modular_hands"):
            size = self.params[0]
            inRange(size, "size")
            if n % size:
                Util.raiseException("Statistic '%s': %d does not divide n=%d" % (self, size, n), ValueError)
        elif name == "cards_below":
            inRange(self.params[0], "card")
            inRange(self.params[1], "k")

    def evaluate(self, deck):
        """ The value of the statistic on *deck* """
        return StatisticCatalog[self.name][0](deck, *self.params)

    def isNumeric(self):
        """ True when the values are integers (positions, labels, distances) """
        return self.name in ("top_card", "position_of", "distance", "card_at")

    def toJSON(self):
        return {"name": self.name, "params": list(self.params)}


def parseStatistic(text):
    """ Parse the "name" or "name:p1,p2" form used on the command line

    Example:
       >>> parseStatistic("distance:1,2")
       StatisticKind [distance:1,2]

    """
    text = text.strip()
    name, _, rest = text.partition(":")
    params = []
    if rest:
        for item in rest.split(","):
            try:
                params.append(int(item))
            except ValueError:
                Util.raiseException("Invalid statistic parameter '%s' in '%s'" % (item, text), ValueError)
    return StatisticKind(name, *params)


def evaluateStatistic(kind, deck):
    """ Validate *kind* for the deck size and evaluate it """
    kind.validate(len(deck))
    return kind.evaluate(deck)


def stationaryStatisticDistribution(n, kind, mode=Consts.numericMode["exact"]):
    """ The law of the statistic under the uniform distribution on S_n,
    by enumerating all n! arrangements

    Example:
       >>> stationaryStatisticDistribution(4, StatisticKind("distance", 1, 2)).weights
       (Fraction(1, 2), Fraction(1, 3), Fraction(1, 6))

    :param n: number of cards, at most :attr:`Consts.CDefDenseMaxCards`
    :param kind: the :class:`StatisticKind`
    :rtype: the :class:`Distribution` of the values
    """
    if n > Consts.CDefDenseMaxCards:
        Util.raiseException("Stationary law by enumeration needs n <= %d, got %d" % (Consts.CDefDenseMaxCards, n),
                            Util.CapacityError)
    kind.validate(n)
    decks = [Deck(p) for p in itertools.permutations(range(1, n + 1))]
    uniform = Distribution.uniform(range(len(decks)), mode)
    law = pushForward(uniform, lambda i: kind.evaluate(decks[i]))
    logging.debug("Stationary law of %s for n=%d has %d values", kind, n, len(law))
    return law


def statisticFunction(kind, n):
    """ The statistic as a :class:`Distribution.Statistic` over the Lehmer
    ranks used by the dense kernels, its image being every value the
    statistic takes on S_n """
    kind.validate(n)
    values = {}
    for rank in range(factorial(n)):
        values[rank] = kind.evaluate(Deck.fromRank(n, rank))
    image = sorted(set(values.values()), key=Util.stateSortKey)
    return Statistic(str(kind), values.__getitem__, image)
