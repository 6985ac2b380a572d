"""
:mod:`Deck` -- decks, moves and bit string assignments
=====================================================================

The deck is the state of the shuffle chains, a permutation of the card
labels 1..n read from the top of the deck (index 1) to the bottom.
Decks are immutable and hashable, so they are used directly as keys of
distributions; dense kernels use their Lehmer rank instead.

The :class:`StringAssignment` is the random input of the inverse riffle
shuffle: one binary string per card, all of the same length t.

"""

from .. import Util


class Deck(object):
    """ Deck Class - an arrangement of the cards 1..n, top first

    Example:
       >>> deck = Deck((2, 1, 3))
       >>> deck.top()
       2
       >>> deck.position(3)
       3

    :param order: the card labels from the top to the bottom of the deck
    """
    __slots__ = ["order", "_positions"]

    def __init__(self, order):
        order = tuple(order)
        n = len(order)
        if n < 2:
            Util.raiseException("A deck needs at least two cards, got %d" % n, ValueError)
        if sorted(order) != list(range(1, n + 1)):
            Util.raiseException("A deck must be a permutation of 1..%d, got %r" % (n, order), ValueError)
        self.order = order
        self._positions = None

    @classmethod
    def identity(cls, n):
        """ The deck (1, 2, ..., n) """
        return cls(range(1, n + 1))

    @classmethod
    def fromRank(cls, n, rank):
        """ The deck of Lehmer rank *rank* among the n! arrangements """
        return cls(Util.lehmerUnrank(n, rank))

    def rank(self):
        """ The Lehmer rank of the arrangement """
        return Util.lehmerRank(self.order)

    def __len__(self):
        return len(self.order)

    def __iter__(self):
        return iter(self.order)

    def __getitem__(self, index):
        """ The card at 0-based *index*, as in a tuple """
        return self.order[index]

    def __eq__(self, other):
        if isinstance(other, Deck):
            return self.order == other.order
        if isinstance(other, tuple):
            return self.order == other
        return NotImplemented

    def __hash__(self):
        return hash(self.order)

    def __repr__(self):
        return "Deck%r" % (self.order,)

    def size(self):
        """ Number of cards """
        return len(self.order)

    def top(self):
        """ The card on top of the deck """
        return self.order[0]

    def cardAt(self, position):
        """ The card at 1-based *position* """
        if not 1 <= position <= len(self.order):
            Util.raiseException("Position %d out of range 1..%d" % (position, len(self.order)), ValueError)
        return self.order[position - 1]

    def position(self, card):
        """ The 1-based position of *card* """
        if self._positions is None:
            self._positions = {c: i + 1 for i, c in enumerate(self.order)}
        if card not in self._positions:
            Util.raiseException("Unknown card label %r for a deck of %d cards" % (card, len(self.order)),
                                ValueError)
        return self._positions[card]

    def parity(self):
        """ 0 for an even arrangement, 1 for an odd one """
        return Util.permutationParity(self.order)

    def toJSON(self):
        """ The deck as a JSON array, top to bottom """
        return list(self.order)


class Move(object):
    """ Move Class - a step of the random-to-top or Walk 1 chains

    Example:
       >>> Move.toTop(3)
       Move[to_top 3]
       >>> Move.topToBottom()
       Move[top_to_bottom]

    :param kind: "to_top" or "top_to_bottom"
    :param card: the card label moved, for "to_top" moves
    """
    __slots__ = ["kind", "card"]

    TO_TOP = "to_top"
    TOP_TO_BOTTOM = "top_to_bottom"

    def __init__(self, kind, card=None):
        if kind == Move.TO_TOP:
            if not isinstance(card, int) or card < 1:
                Util.raiseException("A to-top move needs a card label >= 1, got %r" % (card,), ValueError)
        elif kind == Move.TOP_TO_BOTTOM:
            card = None
        else:
            Util.raiseException("Unknown move kind '%s'" % (kind,), ValueError)
        self.kind = kind
        self.card = card

    @classmethod
    def toTop(cls, card):
        """ Move *card* to the top of the deck """
        return cls(Move.TO_TOP, card)

    @classmethod
    def topToBottom(cls):
        """ Move the top card to the bottom of the deck """
        return cls(Move.TOP_TO_BOTTOM)

    def isToTop(self):
        return self.kind == Move.TO_TOP

    def __eq__(self, other):
        if not isinstance(other, Move):
            return NotImplemented
        return (self.kind, self.card) == (other.kind, other.card)

    def __hash__(self):
        return hash((self.kind, self.card))

    def __repr__(self):
        if self.kind == Move.TO_TOP:
            return "Move[to_top %d]" % self.card
        return "Move[top_to_bottom]"


class StringAssignment(object):
    """ StringAssignment Class - one binary string of length t per card

    The string of card c is ``strings[c - 1]``. The first recorded bit of a
    string is the bit of the first inverse riffle step, the last recorded bit
    belongs to the latest step.

    Example:
       >>> a = StringAssignment(["01", "00", "11"])
       >>> a.forCard(1)
       '01'
       >>> a.sortKey(1)
       '10'

    :param strings: the binary strings, indexed by card label - 1
    """
    __slots__ = ["strings", "length"]

    def __init__(self, strings):
        strings = tuple(strings)
        if not strings:
            Util.raiseException("An assignment needs at least one card", ValueError)
        length = len(strings[0])
        for s in strings:
            if len(s) != length:
                Util.raiseException("All strings must have length %d, got '%s'" % (length, s), ValueError)
            if set(s) - {"0", "1"}:
                Util.raiseException("The strings must be binary, used '%s'" % (s,), ValueError)
        self.strings = strings
        self.length = length

    @classmethod
    def fromInts(cls, values, t):
        """ Build from per-card integers, written as t-bit strings with the
        first step's bit first, so value v gives the sort key of v

        Example:
           >>> StringAssignment.fromInts([1, 0], 2).strings
           ('10', '00')

        """
        return cls([format(v, "0%db" % t)[::-1] if t > 0 else "" for v in values])

    def __len__(self):
        """ Number of cards """
        return len(self.strings)

    def __eq__(self, other):
        if not isinstance(other, StringAssignment):
            return NotImplemented
        return self.strings == other.strings

    def __hash__(self):
        return hash(self.strings)

    def __repr__(self):
        return "StringAssignment%r" % (self.strings,)

    def forCard(self, card):
        """ The string of *card* """
        return self.strings[card - 1]

    def sortKey(self, card):
        """ The key the deck is sorted by, latest step most significant """
        return self.strings[card - 1][::-1]

    def prefix(self, steps):
        """ The assignment made of the first *steps* bits of every string """
        return StringAssignment([s[:steps] for s in self.strings])

    def step(self, index):
        """ The single bit assignment of 1-based step *index* """
        return StringAssignment([s[index - 1] for s in self.strings])

    def sortedKeys(self):
        """ All sort keys in ascending order (with repetition) """
        return sorted(self.sortKey(c) for c in range(1, len(self.strings) + 1))

    def allDistinct(self, cards=None):
        """ True when the cards (all when None) carry pairwise distinct strings """
        if cards is None:
            cards = range(1, len(self.strings) + 1)
        keys = [self.strings[c - 1] for c in cards]
        return len(set(keys)) == len(keys)

    def toJSON(self):
        return list(self.strings)
