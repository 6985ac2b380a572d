from fractions import Fraction
from unittest import TestCase
import itertools

from hypothesis import given, settings, strategies as st

from mixscope import Consts
from mixscope.Distribution import (Distribution, Kernel, Statistic, evolve, pushForward,
                                   separationDistance, sstBound, totalVariation)
from mixscope.CycleColors import lazyCycleKernel


def _normalized(values):
    total = sum(values)
    return [Fraction(v, total) for v in values]


positive_weights = st.lists(st.integers(min_value=1, max_value=20), min_size=2, max_size=6)


class DistributionTestCase(TestCase):
    def test_uniform(self):
        d = Distribution.uniform([1, 2, 3, 4])
        self.assertEqual(d.weights, (Fraction(1, 4),) * 4)
        self.assertTrue(d.isExact())
        self.assertEqual(Distribution.uniform([0, 1], Consts.numericMode["float"]).weights, (0.5, 0.5))

    def test_weights_must_sum_to_one(self):
        self.assertRaises(ValueError, Distribution, [0, 1], [Fraction(1, 2), Fraction(1, 3)])
        self.assertRaises(ValueError, Distribution, [0, 1], [Fraction(3, 2), Fraction(-1, 2)])
        self.assertRaises(ValueError, Distribution, [0, 0], [Fraction(1, 2), Fraction(1, 2)])
        self.assertRaises(ValueError, Distribution, [0], [1, 0])

    def test_exact_mode_rejects_floats(self):
        self.assertRaises(TypeError, Distribution, [0, 1], [0.5, 0.5], Consts.numericMode["exact"])

    def test_zero_weights_are_kept(self):
        d = Distribution.pointMass([0, 1, 2], 1)
        self.assertEqual(len(d), 3)
        self.assertEqual(d[0], 0)
        self.assertEqual(d.positiveSupport(), [1])
        self.assertEqual(d["missing"], 0)

    def test_fromDict_universe(self):
        d = Distribution.fromDict({2: Fraction(1)}, universe=[1, 2, 3])
        self.assertEqual(d.support, (1, 2, 3))
        self.assertRaises(ValueError, Distribution.fromDict, {4: Fraction(1)}, [1, 2, 3])

    def test_equality_ignores_zero_weights(self):
        d1 = Distribution.fromDict({1: Fraction(1)}, universe=[1, 2])
        d2 = Distribution.pointMass([1], 1)
        self.assertEqual(d1, d2)

    def test_restrict(self):
        d = Distribution.fromDict({1: Fraction(1, 2), 2: Fraction(1, 4), 3: Fraction(1, 4)})
        self.assertEqual(d.restrict([2, 3]).weights, (Fraction(1, 2), Fraction(1, 2)))
        self.assertRaises(ValueError, Distribution.pointMass([1, 2], 1).restrict, [2])

    def test_mix_and_mean(self):
        d = Distribution.pointMass([1], 1).mix(Distribution.pointMass([3], 3), Fraction(1, 2))
        self.assertEqual(d.mean(), 2)
        self.assertRaises(TypeError, Distribution.uniform(["a", "b"]).mean)

    def test_json(self):
        d = Distribution.fromDict({(1, 2): Fraction(1, 3), (2, 1): Fraction(2, 3)})
        obj = d.toJSON()
        self.assertEqual(obj["weights"], ["1/3", "2/3"])
        self.assertEqual(obj["support"], [[1, 2], [2, 1]])
        self.assertEqual(Distribution.fromJSON(d.dumps()), d)


class DistanceTestCase(TestCase):
    def test_separation(self):
        mu = Distribution.fromDict({"even": Fraction(2, 3), "odd": Fraction(1, 3)})
        pi = Distribution.uniform(["even", "odd"])
        self.assertEqual(separationDistance(mu, pi), Fraction(1, 3))
        self.assertEqual(separationDistance(pi, pi), 0)

    def test_separation_of_point_mass(self):
        pi = Distribution.uniform([0, 1, 2, 3])
        self.assertEqual(separationDistance(Distribution.pointMass(pi.support, 0), pi), 1)

    def test_separation_incomparable(self):
        pi = Distribution.uniform([0, 1])
        with self.assertRaises(ValueError) as ctx:
            separationDistance(Distribution.pointMass([5], 5), pi)
        self.assertIn("incomparable supports", str(ctx.exception))

    def test_total_variation(self):
        mu = Distribution.fromDict({0: Fraction(2, 3), 1: Fraction(1, 3)})
        self.assertEqual(totalVariation(mu, Distribution.uniform([0, 1])), Fraction(1, 6))

    def test_float_mode(self):
        mu = Distribution.fromDict({0: Fraction(2, 3), 1: Fraction(1, 3)}).toFloat()
        pi = Distribution.uniform([0, 1], Consts.numericMode["float"])
        self.assertAlmostEqual(separationDistance(mu, pi), 1.0 / 3)
        self.assertIsInstance(totalVariation(mu, pi), float)

    @settings(max_examples=1000)
    @given(positive_weights, st.data())
    def test_separation_dominates_total_variation(self, pi_values, data):
        mu_values = data.draw(st.lists(st.integers(min_value=0, max_value=20),
                                       min_size=len(pi_values), max_size=len(pi_values)))
        if not sum(mu_values):
            mu_values[0] = 1
        states = list(range(len(pi_values)))
        pi = Distribution(states, _normalized(pi_values))
        mu = Distribution(states, _normalized(mu_values))
        sep = separationDistance(mu, pi)
        self.assertTrue(0 <= totalVariation(mu, pi) <= sep <= 1)

    def test_sstBound(self):
        self.assertEqual(sstBound(Fraction(24, 25)), Fraction(1, 25))
        self.assertRaises(ValueError, sstBound, Fraction(3, 2))


class PushForwardTestCase(TestCase):
    def test_distance_law_on_four_cards(self):
        decks = list(itertools.permutations(range(1, 5)))
        uniform = Distribution.uniform(range(len(decks)))
        law = pushForward(uniform, lambda i: abs(decks[i].index(1) - decks[i].index(2)))
        self.assertEqual(law.support, (1, 2, 3))
        self.assertEqual(law.weights, (Fraction(1, 2), Fraction(1, 3), Fraction(1, 6)))

    def test_declared_image(self):
        f = Statistic("parity", lambda v: v % 2, image=[0, 1, 2])
        law = pushForward(Distribution.pointMass([0, 1], 0), f)
        self.assertEqual(law.support, (0, 1, 2))

    def test_undefined_statistic(self):
        self.assertRaises(ValueError, pushForward, Distribution.uniform([0, 1]), {0: "a"}.__getitem__)

    @given(positive_weights, positive_weights, st.integers(min_value=1, max_value=9))
    def test_commutes_with_mixing(self, first, second, lam):
        size = min(len(first), len(second))
        states = list(range(size))
        mu = Distribution(states, _normalized(first[:size]))
        nu = Distribution(states, _normalized(second[:size]))
        weight = Fraction(lam, 10)
        f = lambda s: s % 2
        mixed = pushForward(mu.mix(nu, weight), f)
        self.assertEqual(mixed, pushForward(mu, f).mix(pushForward(nu, f), weight))


class KernelTestCase(TestCase):
    def setUp(self):
        self.kernel = lazyCycleKernel(4)

    def test_rows_must_sum_to_one(self):
        self.assertRaises(ValueError, Kernel, [0, 1], {0: [(1, Fraction(1, 2))], 1: [(0, Fraction(1))]})
        self.assertRaises(ValueError, Kernel, [0, 1], {0: [(2, Fraction(1))], 1: [(0, Fraction(1))]})
        self.assertRaises(ValueError, Kernel, [0, 1], {0: [(1, Fraction(1))]})

    def test_duplicate_targets_merge(self):
        k = Kernel([0, 1], {0: [(1, Fraction(1, 2)), (1, Fraction(1, 2))], 1: [(0, Fraction(1))]})
        self.assertEqual(k.successors(0), [(1, Fraction(1))])

    def test_lazy_cycle_is_doubly_stochastic(self):
        self.assertTrue(self.kernel.isDoublyStochastic())
        self.assertTrue(self.kernel.isStationary(Distribution.uniform(range(4))))

    def test_evolve_one_step(self):
        law = evolve(self.kernel, Distribution.pointMass(range(4), 0), 1)
        self.assertEqual(law.weights, (Fraction(1, 2), Fraction(1, 4), Fraction(0), Fraction(1, 4)))

    def test_evolve_zero_steps(self):
        start = Distribution.pointMass(range(4), 2)
        self.assertEqual(evolve(self.kernel, start, 0), start)
        self.assertRaises(ValueError, evolve, self.kernel, start, -1)

    def test_evolve_composes(self):
        start = Distribution.pointMass(range(4), 0)
        self.assertEqual(evolve(self.kernel, evolve(self.kernel, start, 2), 3), evolve(self.kernel, start, 5))

    def test_float_evolve_matches_exact(self):
        start = Distribution.pointMass(range(4), 0)
        exact = evolve(self.kernel, start, 7)
        approx = evolve(self.kernel, start.toFloat(), 7)
        self.assertEqual(approx.mode, Consts.numericMode["float"])
        for state in range(4):
            self.assertAlmostEqual(approx[state], float(exact[state]), places=12)

    def test_unknown_start_state(self):
        self.assertRaises(ValueError, evolve, self.kernel, Distribution.pointMass([9], 9), 1)
