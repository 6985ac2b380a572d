from unittest import TestCase

from mixscope.representations.Coloring import AlternatingSet, Coloring, CoverageState, HalfPosition


class ColoringTestCase(TestCase):
    def test_parse(self):
        coloring = Coloring.parse("rr bb")
        self.assertEqual(str(coloring), "RRBB")
        self.assertEqual(Coloring.parse('["R", "B"]'), Coloring("RB"))
        self.assertEqual(coloring.size(), 4)
        self.assertEqual(coloring.half(), 2)

    def test_invalid(self):
        self.assertRaises(ValueError, Coloring, "RRB")
        self.assertRaises(ValueError, Coloring, "RRRB")
        self.assertRaises(ValueError, Coloring, "RGBB")
        self.assertRaises(ValueError, Coloring.parse, "[R, B")

    def test_cyclic_access(self):
        coloring = Coloring("RRBB")
        self.assertEqual(coloring[5], "R")
        self.assertEqual(coloring[-1], "B")
        self.assertTrue(coloring.isRed(4))
        self.assertEqual(coloring.vertices("B"), [2, 3])
        self.assertEqual(coloring.distance(0, 3), 1)


class HalfPositionTestCase(TestCase):
    def test_vertex_and_midpoint(self):
        self.assertTrue(HalfPosition(4, 6).isVertex())
        self.assertEqual(HalfPosition(4, 6).vertex(), 2)
        self.assertEqual(HalfPosition(5, 12).asFloat(), 2.5)
        self.assertRaises(ValueError, HalfPosition(5, 12).vertex)

    def test_wraps(self):
        self.assertEqual(HalfPosition(13, 6), HalfPosition(1, 6))
        self.assertEqual(HalfPosition(-1, 6).value, 11)


class AlternatingSetTestCase(TestCase):
    def test_two_members_have_two_midpoints(self):
        a = AlternatingSet([2, 0], Coloring("RRBB"))
        self.assertEqual(a.members, (0, 2))
        self.assertEqual(a.gaps(), [2, 2])
        self.assertEqual([m.asFloat() for m in a.midpoints()], [1.0, 3.0])

    def test_gaps_and_midpoints(self):
        coloring = Coloring("RRBRBB" * 2)
        a = AlternatingSet([1, 4, 7, 10], coloring)
        self.assertEqual(a.maxGap(), 3)
        self.assertEqual([m.value for m in a.midpoints()], [5, 11, 17, 23])
        self.assertEqual(a.pairs()[-1], (10, 1))

    def test_not_alternating(self):
        coloring = Coloring("RRBB")
        self.assertRaises(ValueError, AlternatingSet, [0, 1], coloring)
        self.assertRaises(ValueError, AlternatingSet, [0], coloring)
        self.assertRaises(ValueError, AlternatingSet, [0, 1, 2], coloring)


class CoverageStateTestCase(TestCase):
    def test_steps(self):
        state = CoverageState().step(1).step(1).step(-1)
        self.assertEqual(state.key(), (0, 2, 1))
        self.assertEqual(state.step(-1).step(-1).key(), (-1, 2, -1))

    def test_invalid(self):
        self.assertRaises(ValueError, CoverageState, 1, 2, 1)
        self.assertRaises(ValueError, CoverageState, -1, 1, 3)
