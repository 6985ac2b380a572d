from fractions import Fraction
from unittest import TestCase

from mixscope.SSTVerify import Path
from mixscope.representations.Deck import Deck, Move, StringAssignment
from mixscope.selections.Predicates import (PredicateKind, evaluatePredicate, isStableOn,
                                            parsePredicate)


def movePath(n, *moves):
    return Path(Deck.identity(n), Fraction(1), moves=moves)


def rifflePath(strings):
    return Path(Deck.identity(len(strings)), Fraction(1), assignment=StringAssignment(strings))


class MovePredicatesTestCase(TestCase):
    def setUp(self):
        self.path = movePath(3, Move.toTop(2), Move.toTop(1), Move.toTop(2))

    def test_k_distinct(self):
        self.assertTrue(evaluatePredicate(PredicateKind("k_distinct", 2), self.path))
        self.assertFalse(evaluatePredicate(PredicateKind("k_distinct", 3), self.path))
        self.assertFalse(evaluatePredicate(PredicateKind("k_distinct", 2), self.path, 1))

    def test_chosen(self):
        self.assertTrue(evaluatePredicate(PredicateKind("card_chosen", 1), self.path))
        self.assertFalse(evaluatePredicate(PredicateKind("card_chosen", 3), self.path))
        self.assertTrue(evaluatePredicate(PredicateKind("any_of_chosen", 3, 1), self.path))
        self.assertFalse(evaluatePredicate(PredicateKind("all_chosen"), self.path))

    def test_chosen_more_recently_than_is_not_stable(self):
        kind = PredicateKind("chosen_more_recently_than", 1, 1)
        self.assertFalse(evaluatePredicate(kind, self.path, 1))
        self.assertTrue(evaluatePredicate(kind, self.path, 2))
        self.assertFalse(evaluatePredicate(kind, self.path, 3))
        self.assertFalse(isStableOn(kind, self.path))

    def test_chosen_more_recently_than_all_chosen(self):
        path = movePath(3, Move.toTop(1), Move.toTop(2), Move.toTop(3))
        self.assertTrue(evaluatePredicate(PredicateKind("chosen_more_recently_than", 1, 2), path))

    def test_walk1_predicates(self):
        path = movePath(3, Move.topToBottom(), Move.toTop(3), Move.topToBottom())
        self.assertTrue(evaluatePredicate(PredicateKind("any_to_top_move"), path))
        self.assertFalse(evaluatePredicate(PredicateKind("any_to_top_move"), path, 1))
        self.assertFalse(evaluatePredicate(PredicateKind("last_move_to_top"), path))
        self.assertTrue(evaluatePredicate(PredicateKind("last_move_to_top"), path, 2))
        self.assertTrue(evaluatePredicate(PredicateKind("final_top_chosen"), path, 2))
        self.assertFalse(evaluatePredicate(PredicateKind("final_top_chosen"), path))

    def test_stable_predicate(self):
        self.assertTrue(isStableOn(PredicateKind("k_distinct", 2), self.path))
        self.assertTrue(isStableOn(PredicateKind("always"), self.path))

    def test_prefix_range(self):
        self.assertRaises(ValueError, evaluatePredicate, PredicateKind("always"), self.path, 4)


class RifflePredicatesTestCase(TestCase):
    def setUp(self):
        # sort keys "00", "10", "10": card 2 first, cards 1 and 3 tie
        self.path = rifflePath(["01", "00", "01"])

    def test_first_strings(self):
        self.assertTrue(evaluatePredicate(PredicateKind("riffle_first_j_distinct", 1), self.path))
        self.assertFalse(evaluatePredicate(PredicateKind("riffle_first_j_distinct", 2), self.path))
        self.assertTrue(evaluatePredicate(PredicateKind("riffle_kth_string_unique", 1), self.path))
        self.assertFalse(evaluatePredicate(PredicateKind("riffle_kth_string_unique", 3), self.path))

    def test_split(self):
        self.assertTrue(evaluatePredicate(PredicateKind("riffle_top_k_split", 1), self.path))
        self.assertFalse(evaluatePredicate(PredicateKind("riffle_top_k_split", 2), self.path))
        self.assertTrue(evaluatePredicate(PredicateKind("riffle_top_k_split", 3), self.path))

    def test_card_strings(self):
        self.assertTrue(evaluatePredicate(PredicateKind("riffle_card_unique", 2), self.path))
        self.assertFalse(evaluatePredicate(PredicateKind("riffle_card_unique", 1), self.path))
        self.assertTrue(evaluatePredicate(PredicateKind("riffle_set_distinct", 1, 2), self.path))
        self.assertFalse(evaluatePredicate(PredicateKind("riffle_set_distinct", 1, 3), self.path))
        self.assertFalse(evaluatePredicate(PredicateKind("riffle_all_distinct"), self.path))

    def test_prefix_of_strings(self):
        path = rifflePath(["01", "10"])
        self.assertTrue(evaluatePredicate(PredicateKind("riffle_all_distinct"), path, 1))
        self.assertFalse(evaluatePredicate(PredicateKind("riffle_all_distinct"), path, 0))

    def test_blocks(self):
        path = rifflePath(["00", "10", "01", "11"])
        self.assertTrue(evaluatePredicate(PredicateKind("riffle_blocks_nonoverlapping", 2), path))
        path = rifflePath(["00", "10", "10", "11"])
        self.assertFalse(evaluatePredicate(PredicateKind("riffle_blocks_nonoverlapping", 2), path))


class PredicateKindTestCase(TestCase):
    def test_parse(self):
        kind = parsePredicate("chosen_more_recently_than:1,1")
        self.assertEqual(kind, PredicateKind("chosen_more_recently_than", 1, 1))
        self.assertEqual(str(kind), "chosen_more_recently_than:1,1")
        self.assertRaises(ValueError, parsePredicate, "k_distinct:two")
        self.assertRaises(ValueError, parsePredicate, "eventually")

    def test_family(self):
        self.assertEqual(PredicateKind("always").family, "any")
        self.assertEqual(PredicateKind("k_distinct", 2).family, "moves")
        self.assertEqual(PredicateKind("riffle_all_distinct").family, "riffle")

    def test_validate(self):
        self.assertRaises(ValueError, PredicateKind("k_distinct", 2).validate, 3, "riffle")
        self.assertRaises(ValueError, PredicateKind("riffle_all_distinct").validate, 3, "rtt")
        self.assertRaises(ValueError, PredicateKind("k_distinct", 4).validate, 3)
        self.assertRaises(ValueError, PredicateKind("chosen_more_recently_than", 1, 3).validate, 3)
        self.assertRaises(ValueError, PredicateKind("riffle_blocks_nonoverlapping", 2).validate, 3)
        PredicateKind("always").validate(3, "riffle")

    def test_arity(self):
        self.assertRaises(ValueError, PredicateKind, "k_distinct")
        self.assertRaises(ValueError, PredicateKind, "any_of_chosen", 1, 1)
        self.assertRaises(TypeError, PredicateKind, "card_chosen", 1.5)
