from fractions import Fraction
from unittest import TestCase
from unittest.mock import patch
import itertools

from mixscope import Consts
from mixscope import Util


class UtilTestCase(TestCase):
    def test_raiseException_raises_given_class(self):
        self.assertRaises(ValueError, Util.raiseException, "bad value", ValueError)
        self.assertRaises(Exception, Util.raiseException, "no class")

    @patch('mixscope.Util.logging.critical')
    def test_raiseException_logs_first(self, critical_mock):
        with self.assertRaises(KeyError):
            Util.raiseException("missing", KeyError)
        critical_mock.assert_called_once_with("missing")

    def test_capacityError_is_runtime_error(self):
        self.assertTrue(issubclass(Util.CapacityError, RuntimeError))

    def test_budget_default(self):
        with patch.dict('os.environ', {}, clear=True):
            self.assertEqual(Util.getEnumerationBudget(), Consts.CDefEnumerationBudget)

    def test_budget_environment_override(self):
        with patch.dict('os.environ', {Consts.CDefBudgetEnvVar: "1000"}):
            self.assertEqual(Util.getEnumerationBudget(), 1000)
            self.assertEqual(Util.getEnumerationBudget(5), 5)

    def test_budget_environment_invalid(self):
        with patch.dict('os.environ', {Consts.CDefBudgetEnvVar: "many"}):
            self.assertRaises(ValueError, Util.getEnumerationBudget)

    def test_checkBudget(self):
        Util.checkBudget(10, 10, "ten paths")
        with self.assertRaises(Util.CapacityError) as ctx:
            Util.checkBudget(11, 10, "eleven paths")
        self.assertIn("--samples", str(ctx.exception))

    def test_fracToStr(self):
        self.assertEqual(Util.fracToStr(Fraction(1, 16)), "1/16")
        self.assertEqual(Util.fracToStr(Fraction(2, 4)), "1/2")
        self.assertEqual(Util.fracToStr(Fraction(1)), "1/1")
        self.assertEqual(Util.fracToStr(0), "0/1")
        self.assertEqual(Util.fracToStr(0.25), "0.25")

    def test_strToFrac(self):
        self.assertEqual(Util.strToFrac("772/53248"), Fraction(772, 53248))
        self.assertEqual(Util.strToFrac("3"), Fraction(3))
        self.assertRaises(ValueError, Util.strToFrac, "1/0")
        self.assertRaises(ValueError, Util.strToFrac, "half")

    def test_isExactNumber(self):
        self.assertTrue(Util.isExactNumber(3))
        self.assertTrue(Util.isExactNumber(Fraction(1, 3)))
        self.assertFalse(Util.isExactNumber(0.5))
        self.assertFalse(Util.isExactNumber(True))

    def test_stateSortKey_mixed(self):
        states = ["none", 3, (2, 1), 1, frozenset([2, 1])]
        ordered = sorted(states, key=Util.stateSortKey)
        self.assertEqual(ordered[:3], [1, 3, "none"])
        self.assertEqual(ordered[3], (2, 1))

    def test_stateToJSON(self):
        self.assertEqual(Util.stateToJSON(frozenset([3, 1])), [1, 3])
        self.assertEqual(Util.stateToJSON((frozenset([2, 1]), frozenset([4, 3]))), [[1, 2], [3, 4]])
        self.assertEqual(Util.stateFromJSON([1, [2, 3]]), (1, (2, 3)))

    def test_lehmerRank(self):
        self.assertEqual(Util.lehmerRank((1, 2, 3)), 0)
        self.assertEqual(Util.lehmerRank((3, 2, 1)), 5)
        self.assertEqual(Util.lehmerUnrank(3, 3), (2, 3, 1))
        self.assertRaises(ValueError, Util.lehmerUnrank, 3, 6)

    def test_lehmerRank_follows_lexicographic_order(self):
        for rank, order in enumerate(itertools.permutations(range(1, 5))):
            self.assertEqual(Util.lehmerRank(order), rank)
            self.assertEqual(Util.lehmerUnrank(4, rank), order)

    def test_permutationParity(self):
        self.assertEqual(Util.permutationParity((1, 2, 3)), 0)
        self.assertEqual(Util.permutationParity((2, 1, 3)), 1)
        self.assertEqual(Util.permutationParity((2, 3, 1)), 0)
        odd = sum(Util.permutationParity(p) for p in itertools.permutations(range(1, 6)))
        self.assertEqual(odd, 60)
