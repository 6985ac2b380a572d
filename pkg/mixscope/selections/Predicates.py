"""

:mod:`Predicates` -- path conditions for strong stationary times
==============================================================

This module has the *path predicates*, conditions on the prefix of a path of
the shuffle chains under which a statistic is claimed to be exactly
stationary: enough distinct cards chosen, a card chosen, strings that are
distinct, and so on. A predicate sees the whole prefix (moves or bit strings
and the decks they produce), so conditions that are not stopping times can be
expressed as well.

A path is any object with a ``start`` deck, the number of ``steps`` and a
``deckAt(s)`` method; move paths also have ``moves``, riffle paths have an
``assignment`` (see :class:`SSTVerify.Path`).

Predicate names:

=============================  ===========  ===================================
name                           parameters   holds when
=============================  ===========  ===================================
always                                      always
k_distinct                     k            k different cards moved to the top
all_chosen                                  every card moved to the top
card_chosen                    c            card c moved to the top
any_of_chosen                  c1, c2, ...  one of the cards moved to the top
chosen_more_recently_than      c, k         see :func:`predChosenMoreRecentlyThan`
any_to_top_move                             some move was a to-top move
last_move_to_top                            the last move was a to-top move
final_top_chosen                            the current top card was chosen
riffle_first_j_distinct        j            the j smallest strings are unique
riffle_kth_string_unique       k            the k-th smallest string is unique
riffle_top_k_split             k            k-th and (k+1)-th strings differ
riffle_set_distinct            c1, c2, ...  the cards have distinct strings
riffle_card_unique             c            card c has a unique string
riffle_blocks_nonoverlapping   b            blocks of b strings do not overlap
riffle_all_distinct                         all strings are distinct
=============================  ===========  ===================================

"""

from .. import Util

FAMILY_ANY = "any"
FAMILY_MOVES = "moves"
FAMILY_RIFFLE = "riffle"


def _lastChoices(path, upTo):
    """ card -> 1-based step of its last to-top move within the prefix """
    last = {}
    for step, move in enumerate(path.moves[:upTo], 1):
        if move.isToTop():
            last[move.card] = step
    return last


def _sortedKeys(path, upTo):
    return path.assignment.prefix(upTo).sortedKeys()


def _isUniqueAt(keys, index):
    """ True when the 0-based *index* key differs from both neighbours """
    if index > 0 and keys[index - 1] == keys[index]:
        return False
    if index + 1 < len(keys) and keys[index + 1] == keys[index]:
        return False
    return True


def predAlways(path, upTo):
    return True


def predKDistinct(path, upTo, k):
    return len(_lastChoices(path, upTo)) >= k


def predAllChosen(path, upTo):
    return len(_lastChoices(path, upTo)) == len(path.start)


def predCardChosen(path, upTo, card):
    return card in _lastChoices(path, upTo)


def predAnyOfChosen(path, upTo, *cards):
    last = _lastChoices(path, upTo)
    return any(c in last for c in cards)


def predChosenMoreRecentlyThan(path, upTo, card, k):
    """ The card was chosen and, unless every card has been chosen, its last
    choice came after the last choice of at least k other chosen cards.
    Not a stopping time: it can switch back and forth along a path. """
    last = _lastChoices(path, upTo)
    if card not in last:
        return False
    if len(last) == len(path.start):
        return True
    earlier = sum(1 for c, step in last.items() if c != card and step < last[card])
    return earlier >= k


def predAnyToTopMove(path, upTo):
    return any(m.isToTop() for m in path.moves[:upTo])


def predLastMoveToTop(path, upTo):
    return upTo > 0 and path.moves[upTo - 1].isToTop()


def predFinalTopChosen(path, upTo):
    return path.deckAt(upTo).top() in _lastChoices(path, upTo)


def predRiffleFirstJDistinct(path, upTo, j):
    keys = _sortedKeys(path, upTo)
    return all(_isUniqueAt(keys, i) for i in range(j))


def predRiffleKthStringUnique(path, upTo, k):
    return _isUniqueAt(_sortedKeys(path, upTo), k - 1)


def predRiffleTopKSplit(path, upTo, k):
    keys = _sortedKeys(path, upTo)
    return k == len(keys) or keys[k - 1] != keys[k]


def predRiffleSetDistinct(path, upTo, *cards):
    return path.assignment.prefix(upTo).allDistinct(cards)


def predRiffleCardUnique(path, upTo, card):
    strings = path.assignment.prefix(upTo).strings
    return strings.count(strings[card - 1]) == 1


def predRiffleBlocksNonOverlapping(path, upTo, block):
    keys = _sortedKeys(path, upTo)
    return all(keys[i - 1] != keys[i] for i in range(block, len(keys), block))


def predRiffleAllDistinct(path, upTo):
    return path.assignment.prefix(upTo).allDistinct()


# name -> (evaluator, arity, family); arity is the exact number of integer
# parameters, or "set" for one or more distinct card labels
PredicateCatalog = {
    "always": (predAlways, 0, FAMILY_ANY),
    "k_distinct": (predKDistinct, 1, FAMILY_MOVES),
    "all_chosen": (predAllChosen, 0, FAMILY_MOVES),
    "card_chosen": (predCardChosen, 1, FAMILY_MOVES),
    "any_of_chosen": (predAnyOfChosen, "set", FAMILY_MOVES),
    "chosen_more_recently_than": (predChosenMoreRecentlyThan, 2, FAMILY_MOVES),
    "any_to_top_move": (predAnyToTopMove, 0, FAMILY_MOVES),
    "last_move_to_top": (predLastMoveToTop, 0, FAMILY_MOVES),
    "final_top_chosen": (predFinalTopChosen, 0, FAMILY_MOVES),
    "riffle_first_j_distinct": (predRiffleFirstJDistinct, 1, FAMILY_RIFFLE),
    "riffle_kth_string_unique": (predRiffleKthStringUnique, 1, FAMILY_RIFFLE),
    "riffle_top_k_split": (predRiffleTopKSplit, 1, FAMILY_RIFFLE),
    "riffle_set_distinct": (predRiffleSetDistinct, "set", FAMILY_RIFFLE),
    "riffle_card_unique": (predRiffleCardUnique, 1, FAMILY_RIFFLE),
    "riffle_blocks_nonoverlapping": (predRiffleBlocksNonOverlapping, 1, FAMILY_RIFFLE),
    "riffle_all_distinct": (predRiffleAllDistinct, 0, FAMILY_RIFFLE),
}


class PredicateKind(object):
    """ PredicateKind Class - a predicate name with its parameters

    Example:
       >>> kind = PredicateKind("k_distinct", 2)
       >>> str(kind)
       'k_distinct:2'

    :param name: a name of :data:`PredicateCatalog`
    :param params: the integer parameters
    """
    __slots__ = ["name", "params"]

    def __init__(self, name, *params):
        if name not in PredicateCatalog:
            Util.raiseException("Unknown predicate '%s', known: %s" % (name, ", ".join(sorted(PredicateCatalog))),
                                ValueError)
        arity = PredicateCatalog[name][1]
        if arity == "set":
            if not params or len(set(params)) != len(params):
                Util.raiseException("Predicate '%s' needs one or more distinct cards" % name, ValueError)
        elif len(params) != arity:
            Util.raiseException("Predicate '%s' takes %d parameter(s), got %d" % (name, arity, len(params)),
                                ValueError)
        for p in params:
            if not isinstance(p, int) or isinstance(p, bool):
                Util.raiseException("Predicate parameters must be integers, got %r" % (p,), TypeError)
        self.name = name
        self.params = tuple(params)

    def __eq__(self, other):
        if not isinstance(other, PredicateKind):
            return NotImplemented
        return (self.name, self.params) == (other.name, other.params)

    def __hash__(self):
        return hash((self.name, self.params))

    def __repr__(self):
        return "PredicateKind [%s]" % (self,)

    def __str__(self):
        if not self.params:
            return self.name
        return "%s:%s" % (self.name, ",".join(str(p) for p in self.params))

    @property
    def family(self):
        """ "moves", "riffle" or "any", the paths the predicate applies to """
        return PredicateCatalog[self.name][2]

    def validate(self, n, chain=None):
        """ Check the parameters against n cards and, when given, the chain

        :raises ValueError: when a parameter is out of range or the
                            predicate does not apply to the chain
        """
        if chain is not None and self.family != FAMILY_ANY:
            riffle = chain == "riffle"
            if riffle != (self.family == FAMILY_RIFFLE):
                Util.raiseException("Predicate '%s' does not apply to the %s chain" % (self, chain), ValueError)
        for p in self.params:
            if not 1 <= p <= n:
                Util.raiseException("Predicate '%s': parameter %d outside 1..%d" % (self, p, n), ValueError)
        if self.name == "chosen_more_recently_than" and self.params[1] > n - 1:
            Util.raiseException("Predicate '%s': at most %d other cards exist" % (self, n - 1), ValueError)
        if self.name == "riffle_blocks_nonoverlapping" and n % self.params[0]:
            Util.raiseException("Predicate '%s': %d does not divide n=%d" % (self, self.params[0], n), ValueError)

    def toJSON(self):
        return {"name": self.name, "params": list(self.params)}


def parsePredicate(text):
    """ Parse the "name" or "name:p1,p2" form used on the command line

    Example:
       >>> parsePredicate("chosen_more_recently_than:1,1")
       PredicateKind [chosen_more_recently_than:1,1]

    """
    text = text.strip()
    name, _, rest = text.partition(":")
    params = []
    if rest:
        for item in rest.split(","):
            try:
                params.append(int(item))
            except ValueError:
                Util.raiseException("Invalid predicate parameter '%s' in '%s'" % (item, text), ValueError)
    return PredicateKind(name, *params)


def evaluatePredicate(kind, path, upTo=None):
    """ Evaluate the predicate on the first *upTo* steps of *path* (the whole
    path when None) """
    if upTo is None:
        upTo = path.steps
    if not 0 <= upTo <= path.steps:
        Util.raiseException("Prefix length %d outside 0..%d" % (upTo, path.steps), ValueError)
    return PredicateCatalog[kind.name][0](path, upTo, *kind.params)


def isStableOn(kind, path):
    """ True when the predicate, once true on a prefix of *path*, stays true
    on every longer prefix """
    seen = False
    for upTo in range(path.steps + 1):
        holds = evaluatePredicate(kind, path, upTo)
        if seen and not holds:
            return False
        seen = seen or holds
    return True
