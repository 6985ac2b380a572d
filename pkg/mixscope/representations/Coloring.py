"""
:mod:`Coloring` -- red/blue colorings of the 2n-cycle
=====================================================================

The cycle has the vertices 0..2n-1, vertex i adjacent to i-1 and i+1 mod 2n.
A coloring marks n of them red ("R") and n blue ("B"). Positions on the cycle
are also measured in half-units (:class:`HalfPosition`): the even value 2v is
vertex v and the odd value 2v+1 is the midpoint of the edge (v, v+1), so every
midpoint between two vertices is a half-position.

"""

import json

from .. import Consts
from .. import Util


class Coloring(object):
    """ Coloring Class - a balanced red/blue marking of the 2n-cycle

    Example:
       >>> c = Coloring.parse("RRBB")
       >>> c.isRed(1), c.size(), c.half()
       (True, 4, 2)

    :param marks: a sequence over {"R", "B"} of even length, half of each
    """
    __slots__ = ["marks"]

    def __init__(self, marks):
        marks = tuple(marks)
        if len(marks) < 2 or len(marks) % 2:
            Util.raiseException("A coloring needs an even number >= 2 of vertices, got %d" % len(marks), ValueError)
        unknown = set(marks) - set(Consts.CDefColors)
        if unknown:
            Util.raiseException("Unknown color marks %r, use R and B" % (sorted(unknown),), ValueError)
        reds = marks.count(Consts.CDefRed)
        if reds * 2 != len(marks):
            Util.raiseException("Unbalanced coloring: %d red and %d blue" % (reds, len(marks) - reds), ValueError)
        self.marks = marks

    @classmethod
    def parse(cls, text):
        """ Parse "RRBRBB" (spaces ignored) or a JSON array of marks """
        if not isinstance(text, str):
            return cls(text)
        text = text.strip()
        if text.startswith("["):
            try:
                return cls(json.loads(text))
            except json.JSONDecodeError as expt:
                Util.raiseException("Invalid JSON coloring: %s" % expt, ValueError)
        return cls(text.replace(" ", "").upper())

    def __len__(self):
        return len(self.marks)

    def __getitem__(self, vertex):
        return self.marks[vertex % len(self.marks)]

    def __iter__(self):
        return iter(self.marks)

    def __eq__(self, other):
        if not isinstance(other, Coloring):
            return NotImplemented
        return self.marks == other.marks

    def __hash__(self):
        return hash(self.marks)

    def __str__(self):
        return "".join(self.marks)

    def __repr__(self):
        return "Coloring(%s)" % (self,)

    def size(self):
        """ The number of vertices 2n """
        return len(self.marks)

    def half(self):
        """ The number n of vertices of each color """
        return len(self.marks) // 2

    def isRed(self, vertex):
        return self[vertex] == Consts.CDefRed

    def vertices(self, color):
        """ The vertices of *color*, in increasing order """
        return [v for v, m in enumerate(self.marks) if m == color]

    def distance(self, u, v):
        """ The cyclic distance between two vertices """
        d = (u - v) % len(self.marks)
        return min(d, len(self.marks) - d)

    def toJSON(self):
        return list(self.marks)


class HalfPosition(object):
    """ HalfPosition Class - a position on the cycle in half-units mod 4n

    Example:
       >>> HalfPosition(5, 12).asFloat()
       2.5

    :param value: the position in half-units
    :param cycleSize: the number of vertices 2n
    """
    __slots__ = ["value", "cycleSize"]

    def __init__(self, value, cycleSize):
        self.cycleSize = cycleSize
        self.value = value % (2 * cycleSize)

    def isVertex(self):
        return self.value % 2 == 0

    def vertex(self):
        """ The vertex of an even half-position """
        if not self.isVertex():
            Util.raiseException("Half-position %d is an edge midpoint" % self.value, ValueError)
        return self.value // 2

    def asFloat(self):
        """ The position in vertex units, e.g. 2.5 for the edge (2, 3) """
        return self.value / 2.0

    def __eq__(self, other):
        if not isinstance(other, HalfPosition):
            return NotImplemented
        return (self.value, self.cycleSize) == (other.value, other.cycleSize)

    def __lt__(self, other):
        return self.value < other.value

    def __hash__(self):
        return hash((self.value, self.cycleSize))

    def __repr__(self):
        return "HalfPosition(%g)" % self.asFloat()

    def toJSON(self):
        return self.value


class AlternatingSet(object):
    """ AlternatingSet Class - vertices whose colors alternate around the cycle

    Example:
       >>> a = AlternatingSet([0, 2], Coloring.parse("RRBB"))
       >>> a.maxGap(), [m.asFloat() for m in a.midpoints()]
       (2, [1.0, 3.0])

    :param members: the vertices, any order
    :param coloring: the :class:`Coloring` they belong to
    """
    __slots__ = ["members", "coloring"]

    def __init__(self, members, coloring):
        size = coloring.size()
        members = sorted(set(m % size for m in members))
        if len(members) < 2 or len(members) % 2:
            Util.raiseException("An alternating set needs an even number >= 2 of vertices, got %r" % (members,),
                                ValueError)
        for a, b in zip(members, members[1:] + members[:1]):
            if coloring[a] == coloring[b]:
                Util.raiseException("Vertices %d and %d are consecutive in %r with the same color" % (a, b, members),
                                    ValueError)
        self.members = tuple(members)
        self.coloring = coloring

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, vertex):
        return vertex in self.members

    def __eq__(self, other):
        if not isinstance(other, AlternatingSet):
            return NotImplemented
        return self.members == other.members and self.coloring == other.coloring

    def __hash__(self):
        return hash(self.members)

    def __repr__(self):
        return "AlternatingSet%r" % (self.members,)

    def pairs(self):
        """ The consecutive (a, b) pairs around the cycle, b following a """
        return list(zip(self.members, self.members[1:] + self.members[:1]))

    def gaps(self):
        size = self.coloring.size()
        return [(b - a) % size for a, b in self.pairs()]

    def maxGap(self):
        """ The largest cyclic distance between consecutive members """
        return max(self.gaps())

    def midpoints(self):
        """ One midpoint per consecutive pair, on the arc free of other
        members; a set of two gets one midpoint on each arc """
        size = self.coloring.size()
        return sorted(HalfPosition(2 * a + gap, size) for (a, _), gap in zip(self.pairs(), self.gaps()))

    def toJSON(self):
        return list(self.members)


class CoverageState(object):
    """ CoverageState Class - the range of the refined walk around its start

    Offsets are in half-units relative to the start: *l* and *r* are the
    extreme offsets reached, *x* the current offset.

    :param l: leftmost offset, l <= 0
    :param r: rightmost offset, r >= 0
    :param x: current offset, l <= x <= r
    """
    __slots__ = ["l", "r", "x"]

    def __init__(self, l=0, r=0, x=0):
        if not l <= x <= r or l > 0 or r < 0:
            Util.raiseException("Invalid coverage state l=%d, r=%d, x=%d" % (l, r, x), ValueError)
        self.l = l
        self.r = r
        self.x = x

    def step(self, delta):
        """ The state after a half-step of *delta* (+1 or -1) """
        x = self.x + delta
        return CoverageState(min(self.l, x), max(self.r, x), x)

    def key(self):
        return (self.l, self.r, self.x)

    def __eq__(self, other):
        if not isinstance(other, CoverageState):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return "CoverageState(l=%d, r=%d, x=%d)" % self.key()
