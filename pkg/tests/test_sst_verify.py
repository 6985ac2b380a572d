from fractions import Fraction
from unittest import TestCase
from unittest.mock import patch

from mixscope import Consts
from mixscope import SSTVerify
from mixscope import Util
from mixscope.Distribution import Distribution, evolve, pushForward
from mixscope.Statistics import StatisticKind, statisticFunction
from mixscope.perturbations import ShuffleMoves
from mixscope.representations.Deck import Deck
from mixscope.selections.Predicates import PredicateKind


class EnumeratePathsTestCase(TestCase):
    def test_counts_and_weights(self):
        for chain, n, t, count in (("rtt", 3, 2, 9), ("walk1", 3, 2, 16), ("riffle", 2, 1, 4)):
            paths = SSTVerify.enumeratePaths(chain, n, t)
            self.assertEqual(len(paths), count)
            self.assertEqual(len(paths), SSTVerify.pathCount(chain, n, t))
            self.assertEqual(sum(p.weight for p in paths), 1)

    def test_zero_length(self):
        paths = SSTVerify.enumeratePaths("rtt", 3, 0)
        self.assertEqual(len(paths), 1)
        self.assertEqual(paths[0].final(), Deck.identity(3))

    def test_path_decks(self):
        path = SSTVerify.enumeratePaths("walk1", 3, 2)[-1]
        self.assertEqual(path.steps, 2)
        self.assertEqual(path.deckAt(1), Deck((2, 3, 1)))
        self.assertEqual(path.final(), Deck((3, 1, 2)))

    def test_riffle_path_decks(self):
        path = SSTVerify.enumeratePaths("riffle", 2, 1)[2]
        self.assertTrue(path.isRiffle())
        self.assertEqual(path.final(), Deck((2, 1)))
        self.assertEqual(path.deckAt(0), Deck((1, 2)))

    def test_budget(self):
        self.assertRaises(Util.CapacityError, SSTVerify.enumeratePaths, "rtt", 5, 5, None, 100)
        with patch.dict('os.environ', {Consts.CDefBudgetEnvVar: "10"}):
            self.assertRaises(Util.CapacityError, SSTVerify.enumeratePaths, "walk1", 3, 2)

    def test_iterPaths_streams(self):
        paths = SSTVerify.iterPaths("rtt", 5, 10)
        self.assertNotIsInstance(paths, list)
        first = next(paths)
        self.assertEqual(first.weight, Fraction(1, 5 ** 10))
        self.assertEqual(first.final(), Deck.identity(5))
        second = next(paths)
        self.assertEqual(second.moves[:-1], first.moves[:-1])
        self.assertEqual(first.steps, 10)

    def test_iterPaths_checks_before_streaming(self):
        self.assertRaises(Util.CapacityError, SSTVerify.iterPaths, "rtt", 5, 5, None, 100)
        self.assertRaises(Util.CapacityError, SSTVerify.iterPaths, "riffle", 4, 3, None, 100)
        self.assertRaises(ValueError, SSTVerify.iterPaths, "rtt", 3, -1)

    def test_iterPaths_matches_list(self):
        for chain, n, t in (("rtt", 3, 3), ("walk1", 3, 2), ("riffle", 2, 2)):
            streamed = [(p.final(), p.weight) for p in SSTVerify.iterPaths(chain, n, t)]
            listed = [(p.final(), p.weight) for p in SSTVerify.enumeratePaths(chain, n, t)]
            self.assertEqual(streamed, listed)
            self.assertEqual(len(streamed), SSTVerify.pathCount(chain, n, t))

    def test_invalid(self):
        self.assertRaises(ValueError, SSTVerify.enumeratePaths, "rtt", 3, -1)
        self.assertRaises(ValueError, SSTVerify.enumeratePaths, "rtt", 3, 1, Deck.identity(4))
        self.assertRaises(ValueError, SSTVerify.pathCount, "overhand", 3, 1)
        self.assertRaises(ValueError, SSTVerify.Path, Deck.identity(3), Fraction(1))


class ConditionalLawTestCase(TestCase):
    def test_rtt_top_pair(self):
        paths = SSTVerify.enumeratePaths("rtt", 3, 2)
        q, law = SSTVerify.conditionalStatisticDistribution(paths, PredicateKind("k_distinct", 2),
                                                            StatisticKind("top_k_order", 2))
        self.assertEqual(q, Fraction(2, 3))
        self.assertEqual(len(law), 6)
        self.assertEqual(set(law.weights), {Fraction(1, 6)})

    def test_walk1_top_card(self):
        paths = SSTVerify.enumeratePaths("walk1", 3, 2)
        q, law = SSTVerify.conditionalStatisticDistribution(paths, PredicateKind("any_to_top_move"),
                                                            StatisticKind("top_card"))
        self.assertEqual(q, Fraction(3, 4))
        self.assertEqual(law.weights, (Fraction(4, 9), Fraction(1, 3), Fraction(2, 9)))

    def test_never_satisfied(self):
        paths = SSTVerify.enumeratePaths("rtt", 3, 1)
        with self.assertRaises(ValueError) as ctx:
            SSTVerify.conditionalStatisticDistribution(paths, PredicateKind("k_distinct", 2),
                                                       StatisticKind("top_card"))
        self.assertIn("predicate never satisfied", str(ctx.exception))

    def test_earlier_time(self):
        paths = SSTVerify.enumeratePaths("rtt", 3, 2)
        q, law = SSTVerify.conditionalStatisticDistribution(paths, PredicateKind("always"),
                                                            StatisticKind("top_card"), 0)
        self.assertEqual(q, 1)
        self.assertEqual(law, Distribution.pointMass([1], 1))

    def test_tally_single_pass(self):
        predicate, statistic = PredicateKind("k_distinct", 2), StatisticKind("top_k_order", 2)
        tally = SSTVerify.PathTally(predicate, statistic).addAll(SSTVerify.iterPaths("rtt", 3, 2))
        self.assertEqual(tally.count, 9)
        self.assertEqual(tally.q, Fraction(2, 3))
        self.assertTrue(tally.stable)
        self.assertEqual(sum(w for _, w in tally.unconditional().items()), 1)
        q, law = SSTVerify.conditionalStatisticDistribution(SSTVerify.enumeratePaths("rtt", 3, 2), predicate, statistic)
        self.assertEqual((tally.q, tally.conditional()), (q, law))

    def test_tally_without_paths(self):
        tally = SSTVerify.PathTally(PredicateKind("always"), StatisticKind("top_card"))
        self.assertRaises(ValueError, tally.conditional)

    def test_maxPointwiseDeviation(self):
        mu = Distribution.fromDict({1: Fraction(1, 2), 2: Fraction(1, 2)})
        pi = Distribution.uniform([1, 2, 3, 4])
        self.assertEqual(SSTVerify.maxPointwiseDeviation(mu, pi), Fraction(1, 4))


class StrongStationarityTestCase(TestCase):
    def test_certified(self):
        report = SSTVerify.checkStrongStationarity("rtt", 4, 3, PredicateKind("k_distinct", 2),
                                                   StatisticKind("top_k_order", 2))
        self.assertTrue(report["is_strongly_stationary"])
        self.assertEqual(report["q"], Fraction(15, 16))
        self.assertEqual(report["sep_bound"], Fraction(1, 16))
        self.assertEqual(report["max_pointwise_deviation"], 0)
        self.assertTrue(report["predicate_stable"])
        self.assertTrue(report["premise_holds"])
        self.assertLessEqual(report["sep_actual"], report["sep_bound"])

    def test_check_streams_paths(self):
        with patch("mixscope.SSTVerify.enumeratePaths", side_effect=AssertionError("paths materialized")):
            report = SSTVerify.checkStrongStationarity("rtt", 4, 3, PredicateKind("k_distinct", 2),
                                                       StatisticKind("top_k_order", 2))
        self.assertEqual(report["sep_bound"], Fraction(1, 16))

    def test_refuted(self):
        report = SSTVerify.checkStrongStationarity("walk1", 3, 2, PredicateKind("any_to_top_move"),
                                                   StatisticKind("top_card"))
        self.assertFalse(report["is_strongly_stationary"])
        self.assertIsNone(report["sep_bound"])
        self.assertEqual(report["max_pointwise_deviation"], Fraction(1, 9))
        self.assertEqual(report["conditional_mean"], Fraction(16, 9))

    def test_restricted_comparison(self):
        predicate = PredicateKind("card_chosen", 1)
        statistic = StatisticKind("card_above", 1)
        full = SSTVerify.checkStrongStationarity("rtt", 4, 3, predicate, statistic)
        self.assertFalse(full["is_strongly_stationary"])
        self.assertEqual(full["conditional"][Consts.CDefNoneValue], Fraction(16, 37))
        restricted = SSTVerify.checkStrongStationarity("rtt", 4, 3, predicate, statistic, restrictTo=[4, 2, 3])
        self.assertTrue(restricted["is_strongly_stationary"])
        self.assertEqual(restricted["restricted_to"], [2, 3, 4])
        self.assertEqual(restricted["sep_bound"], 1 - Fraction(37, 64))

    def test_unstable_predicate_is_reported(self):
        report = SSTVerify.checkStrongStationarity("rtt", 3, 3, PredicateKind("chosen_more_recently_than", 1, 1),
                                                   StatisticKind("card_above", 1))
        self.assertFalse(report["predicate_stable"])

    def test_wrong_chain(self):
        self.assertRaises(ValueError, SSTVerify.checkStrongStationarity, "riffle", 3, 2,
                          PredicateKind("k_distinct", 2), StatisticKind("top_card"))


class OracleTestCase(TestCase):
    def test_probKDistinct(self):
        self.assertEqual(SSTVerify.probKDistinct(5, 2, 3), Fraction(24, 25))
        self.assertEqual(SSTVerify.probKDistinct(3, 3, 3), Fraction(2, 9))
        self.assertEqual(SSTVerify.probKDistinct(4, 1, 1), 1)
        self.assertEqual(SSTVerify.probKDistinct(4, 3, 2), 0)
        self.assertRaises(ValueError, SSTVerify.probKDistinct, 3, 4, 2)

    def test_probStringsDistinct(self):
        self.assertEqual(SSTVerify.probStringsDistinct(1, 3), 1)
        self.assertEqual(SSTVerify.probStringsDistinct(2, 1), Fraction(1, 2))
        self.assertEqual(SSTVerify.probStringsDistinct(3, 2), Fraction(3, 8))
        self.assertEqual(SSTVerify.probStringsDistinct(3, 1), 0)

    def test_probStringsDistinct_matches_enumeration(self):
        for n in range(2, 5):
            for t in range(0, 4):
                rows = ShuffleMoves.enumerateRiffle(n, t)
                distinct = sum(w for a, _, w in rows if a.allDistinct())
                self.assertEqual(distinct, SSTVerify.probStringsDistinct(n, t))
        rows = ShuffleMoves.enumerateRiffle(3, 2)
        self.assertEqual(sum(w for a, _, w in rows if a.allDistinct()), Fraction(24, 64))

    def test_countNonnegativePaths(self):
        self.assertEqual([SSTVerify.countNonnegativePaths(t) for t in range(5)], [1, 1, 2, 3, 6])
        self.assertEqual(SSTVerify.countNonnegativePaths(10), 252)
        self.assertRaises(ValueError, SSTVerify.countNonnegativePaths, -1)

    def test_walk1PositionDistribution(self):
        law = SSTVerify.walk1PositionDistribution(3, 1, 3)
        self.assertEqual(law.weights, (Fraction(1, 6), Fraction(1, 2), Fraction(1, 3)))
        self.assertEqual(SSTVerify.walk1PositionDistribution(3, 0, 2), Distribution.pointMass([1, 2, 3], 2))
        self.assertRaises(ValueError, SSTVerify.walk1PositionDistribution, 3, 1, 4)

    def test_walk1PositionDistribution_matches_full_chain(self):
        for n in range(2, 7):
            kernel = ShuffleMoves.walk1Kernel(n)
            law = ShuffleMoves.startDistribution(kernel, Deck.identity(n))
            for t in range(1, 4):
                law = evolve(kernel, law, 1)
                for card in (1, n):
                    position = pushForward(law, statisticFunction(StatisticKind("position_of", card), n))
                    self.assertEqual(position, SSTVerify.walk1PositionDistribution(n, t, card))

    def test_counterexample_three_steps(self):
        bounds = SSTVerify.walk1CounterexampleBounds(52, 3)
        self.assertEqual(bounds["counting_top_is_bottom_card"], Fraction(260, 21632))
        self.assertEqual(bounds["exact_top_is_bottom_card"], Fraction(259, 21632))
        self.assertTrue(bounds["exact_within_counting_bound"])

    def test_counterexample_ten_steps(self):
        bounds = SSTVerify.walk1CounterexampleBounds(52, 10)
        self.assertEqual(bounds["nonnegative_paths"], 252)
        self.assertEqual(bounds["counting_top_is_bottom_card_str"], "772/53248")
        self.assertEqual(bounds["separation_lower_bound_str"], "252/1024")
        self.assertTrue(bounds["exact_within_counting_bound"])
        self.assertTrue(bounds["separation_bound_holds"])


class MonteCarloTestCase(TestCase):
    def test_seed_is_required(self):
        self.assertRaises(ValueError, SSTVerify.monteCarloCheck, "rtt", 4, 3, PredicateKind("k_distinct", 2),
                          StatisticKind("top_card"), 100, None)

    def test_reproducible(self):
        args = ("rtt", 5, 4, PredicateKind("k_distinct", 2), StatisticKind("top_card"), 300, 42)
        first = SSTVerify.monteCarloCheck(*args)
        second = SSTVerify.monteCarloCheck(*args)
        self.assertEqual(first.toJSON(), second.toJSON())
        self.assertFalse(first["certified"])
        self.assertTrue(0 <= first["q_interval"][0] <= first["q_estimate"] <= first["q_interval"][1] <= 1)

    def test_beyond_dense_limit(self):
        report = SSTVerify.monteCarloCheck("riffle", 10, 4, PredicateKind("riffle_first_j_distinct", 1),
                                           StatisticKind("top_card"), 50, 3)
        self.assertIsNone(report["max_abs_deviation"])
        self.assertTrue(all("stationary" not in row for row in report["frequencies"]))

    def test_normal_interval(self):
        self.assertEqual(SSTVerify._normalInterval(0, 0), (0.0, 0.0, 1.0))
        p, low, high = SSTVerify._normalInterval(50, 100)
        self.assertEqual(p, 0.5)
        self.assertAlmostEqual(high - p, p - low)
