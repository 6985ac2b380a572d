"""

:mod:`Util` -- utility module
============================================================================

This is the utility module, with some utility functions of general
use, like exception raising, budget checks, rational formatting and
permutation codes.

"""

from fractions import Fraction
from math import factorial
import logging
import os

from . import Consts


class CapacityError(RuntimeError):
    """ Raised when an exact computation would exceed its enumeration budget
    or the dense size limit. The message tells the caller which mode to use
    instead. """


def raiseException(message, expt=None):
    """ Raise an exception and logs the message.

    Example:
       >>> Util.raiseException('The value is not an integer', ValueError)

    :param message: the message of exception
    :param expt: the exception class
    :rtype: None

    """
    logging.critical(message)
    if expt is None:
        raise Exception(message)
    else:
        raise expt(message)


def getEnumerationBudget(budget=None):
    """ Return the enumeration budget, *budget* wins over the
    environment variable, which wins over :attr:`Consts.CDefEnumerationBudget`

    :param budget: an explicit budget or None
    :rtype: the budget as integer
    """
    if budget is not None:
        return int(budget)
    env_value = os.environ.get(Consts.CDefBudgetEnvVar)
    if env_value:
        try:
            return int(env_value)
        except ValueError:
            raiseException("%s must be an integer, got '%s'" % (Consts.CDefBudgetEnvVar, env_value), ValueError)
    return Consts.CDefEnumerationBudget


def checkBudget(size, budget, what, hint="use Monte-Carlo mode (--samples K --seed X)"):
    """ Raise :class:`CapacityError` when *size* exceeds the budget

    :param size: the number of weighted branches or states needed
    :param budget: explicit budget or None for the default
    :param what: a description of the enumeration
    :param hint: what the caller should do instead
    """
    limit = getEnumerationBudget(budget)
    if size > limit:
        raiseException("%s needs %d weighted branches, budget is %d; %s" % (what, size, limit, hint),
                       CapacityError)
    logging.debug("%s: %d branches within budget %d", what, size, limit)


def isExactNumber(value):
    """ True for int and Fraction values, False for floats """
    return isinstance(value, (int, Fraction)) and not isinstance(value, bool)


def fracToStr(value):
    """ Format a rational as "num/den", floats are formatted with repr

    Example:
       >>> Util.fracToStr(Fraction(1, 16))
       '1/16'
       >>> Util.fracToStr(Fraction(1))
       '1/1'

    """
    if isinstance(value, Fraction):
        return "%d/%d" % (value.numerator, value.denominator)
    if isinstance(value, int) and not isinstance(value, bool):
        return "%d/1" % value
    return repr(float(value))


def strToFrac(text):
    """ Parse "num/den" (or an integer) back to a Fraction """
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raiseException("Invalid rational '%s', expected 'num/den'" % (text,), ValueError)


def stateSortKey(state):
    """ A total order over mixed state identifiers, numbers first, then
    strings, then tuples and sets compared element-wise """
    if isinstance(state, bool):
        return (0, int(state))
    if isinstance(state, (int, Fraction, float)):
        return (0, state)
    if isinstance(state, str):
        return (1, state)
    if isinstance(state, (frozenset, set)):
        return (3, tuple(sorted((stateSortKey(s) for s in state))))
    if isinstance(state, tuple):
        return (2, tuple(stateSortKey(s) for s in state))
    return (4, repr(state))


def stateToJSON(state):
    """ Convert a state identifier to a JSON compatible value, tuples
    become lists and sets become sorted lists """
    if isinstance(state, (frozenset, set)):
        return [stateToJSON(s) for s in sorted(state, key=stateSortKey)]
    if isinstance(state, tuple):
        return [stateToJSON(s) for s in state]
    return state


def stateFromJSON(value):
    """ Inverse of :func:`stateToJSON` up to sets, lists become tuples """
    if isinstance(value, list):
        return tuple(stateFromJSON(v) for v in value)
    return value


def lehmerRank(order):
    """ Rank a permutation of 1..n in lexicographic order (Lehmer code)

    Example:
       >>> Util.lehmerRank((1, 2, 3))
       0
       >>> Util.lehmerRank((3, 2, 1))
       5

    :param order: a sequence holding a permutation of 1..n
    :rtype: the rank, between 0 and n!-1
    """
    n = len(order)
    remaining = sorted(order)
    rank = 0
    for i, label in enumerate(order):
        idx = remaining.index(label)
        rank += idx * factorial(n - 1 - i)
        del remaining[idx]
    return rank


def lehmerUnrank(n, rank):
    """ Inverse of :func:`lehmerRank` over the labels 1..n

    :param n: the number of cards
    :param rank: the rank, between 0 and n!-1
    :rtype: the permutation as a tuple
    """
    if rank < 0 or rank >= factorial(n):
        raiseException("Rank %d out of range for n=%d" % (rank, n), ValueError)
    remaining = list(range(1, n + 1))
    order = []
    for i in range(n - 1, -1, -1):
        idx, rank = divmod(rank, factorial(i))
        order.append(remaining.pop(idx))
    return tuple(order)


def permutationParity(order):
    """ Return 0 for an even permutation of 1..n and 1 for an odd one,
    computed from the cycle count: parity = (n - cycles) mod 2

    Example:
       >>> Util.permutationParity((2, 1, 3))
       1

    """
    n = len(order)
    seen = [False] * n
    cycles = 0
    for start in range(n):
        if seen[start]:
            continue
        cycles += 1
        j = start
        while not seen[j]:
            seen[j] = True
            j = order[j] - 1
    return (n - cycles) % 2
