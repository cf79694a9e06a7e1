import random
from fractions import Fraction

from django.test import SimpleTestCase

from apps.compacta.arith import CReal, dyadic_round, pow2
from apps.compacta.exceptions import PreconditionViolation, SpaceMismatch
from apps.compacta.metric import real_box_space, real_line
from apps.compacta.metric.cells import CellIndex, ScaledRows, greedy_cover
from apps.compacta.metric.nets import box_gap, clip_box, grid_net, merge_boxes, normalize_box
from apps.compacta.tests.fixtures import dyadic


class RealSpaceTest(SimpleTestCase):
    def test_line_distance(self):
        line = real_line()
        d = line.dist(line.point("1/3"), line.point("-1/6"))
        self.assertTrue(d.is_exact)
        self.assertEqual(d.exact, Fraction(1, 2))

    def test_sup_metric(self):
        plane = real_box_space(2)
        d = plane.dist(plane.point(0, 0), plane.point("1/2", -2))
        self.assertEqual(d.exact, 2)

    def test_oracle_coordinates(self):
        line = real_line()
        third = CReal(lambda n: dyadic_round(Fraction(1, 3), n + 1))
        d = line.dist(line.point(third), line.point(0))
        self.assertFalse(d.is_exact)
        for n in (0, 4, 20):
            self.assertLessEqual(abs(d.approx(n) - Fraction(1, 3)), pow2(n))

    def test_spaces_are_shared_and_checked(self):
        self.assertIs(real_line(), real_line())
        self.assertIs(real_box_space(3), real_box_space(3))
        with self.assertRaises(SpaceMismatch):
            real_line().dist(real_line().point(0), real_box_space(2).point(0, 0))
        with self.assertRaises(PreconditionViolation):
            real_box_space(2).point(1)

    def test_metric_axioms(self):
        rng = random.Random(7)
        plane = real_box_space(2)
        for _round in range(200):
            p, q, r = (plane.point(dyadic(rng), dyadic(rng)) for _k in range(3))
            pq, qp = plane.dist(p, q).exact, plane.dist(q, p).exact
            self.assertEqual(pq, qp)
            self.assertGreaterEqual(pq, 0)
            self.assertEqual(plane.dist(p, p).exact, 0)
            self.assertLessEqual(plane.dist(p, r).exact, pq + plane.dist(q, r).exact)

    def test_limit_of_a_cauchy_sequence(self):
        line = real_line()
        # partial sums of sum 2^-k-1 converge to 1
        seq = lambda k: line.point(1 - pow2(k + 1))  # noqa: E731
        x = line.limit(seq)
        for n in (0, 3, 12):
            self.assertLessEqual(abs(x.coords[0].approx(n) - 1), pow2(n))


class GridNetTest(SimpleTestCase):
    def test_endpoints_included(self):
        line = real_line()
        net = grid_net(line, [(0, 1)], "1/4")
        self.assertEqual([p.rational()[0] for p in net], [Fraction(k, 4) for k in range(5)])
        net = grid_net(line, [(0, 1)], "2/5")
        self.assertEqual([p.rational()[0] for p in net], [0, Fraction(2, 5), Fraction(4, 5), 1])

    def test_degenerate_and_product(self):
        self.assertEqual(len(grid_net(real_line(), [("1/2", "1/2")], 1)), 1)
        net = grid_net(real_box_space(2), [(0, 1), (0, "1/2")], "1/2")
        self.assertEqual(len(net), 6)

    def test_rejects_malformed_boxes(self):
        plane = real_box_space(2)
        cases = [
            ([(0, 1), (0, 1)], 0),
            ([], 1),
            ([(0, 1)], 1),
            ([(0, 1), (1, 0)], 1),
            ([(0, 1), (0, 1, 2)], 1),
        ]
        for box, spacing in cases:
            with self.subTest(box=box, spacing=spacing):
                with self.assertRaises(PreconditionViolation):
                    grid_net(plane, box, spacing)


class CellIndexTest(SimpleTestCase):
    def random_rows(self, rng, count, dimension):
        return [tuple(rng.randint(-40, 40) for _i in range(dimension)) for _k in range(count)]

    def test_in_box_matches_a_scan(self):
        rng = random.Random(11)
        for dimension in (1, 2, 3):
            rows = self.random_rows(rng, 120, dimension)
            index = CellIndex.spread_over(rows)
            for _round in range(40):
                low = tuple(rng.randint(-50, 30) for _i in range(dimension))
                high = tuple(a + rng.randint(0, 30) for a in low)
                expected = [k for k, row in enumerate(rows) if all(a <= v <= b for v, a, b in zip(row, low, high))]
                self.assertEqual(index.in_box(low, high), expected)

    def test_nearest_matches_a_scan(self):
        rng = random.Random(12)
        for dimension in (1, 2, 3):
            rows = self.random_rows(rng, 80, dimension)
            index = CellIndex.spread_over(rows)
            for _round in range(40):
                query = tuple(rng.randint(-90, 90) for _i in range(dimension))
                expected = min(max(abs(a - b) for a, b in zip(row, query)) for row in rows)
                self.assertEqual(index.nearest(query), expected)

    def test_scaled_rows_within(self):
        rows = [(Fraction(k, 8),) for k in range(9)]
        scaled = ScaledRows(rows)
        self.assertEqual(scaled.denominator, 8)
        self.assertEqual(scaled.within((Fraction(1, 2),), Fraction(1, 4)), [2, 3, 4, 5, 6])
        self.assertEqual(scaled.within((Fraction(1, 3),), Fraction(1, 16)), [3])
        self.assertEqual(scaled.within((Fraction(5),), Fraction(1)), [])
        self.assertEqual(scaled.rescaled(24).rows[1], (3,))

    def test_greedy_cover(self):
        rng = random.Random(13)
        for dimension in (1, 2):
            rows = self.random_rows(rng, 150, dimension)
            for reach in (0, 3, 10):
                kept = greedy_cover(rows, reach)
                for row in rows:
                    self.assertTrue(any(max(abs(a - b) for a, b in zip(rows[k], row)) <= reach for k in kept))
                for i, first in enumerate(kept):
                    for second in kept[i + 1 :]:
                        self.assertGreater(max(abs(a - b) for a, b in zip(rows[first], rows[second])), reach)


class BoxGeometryTest(SimpleTestCase):
    def test_gap_and_clip(self):
        box = normalize_box([(0, 1), ("1/2", 2)])
        self.assertEqual(box_gap(box, (Fraction(1, 2), Fraction(1))), 0)
        self.assertEqual(box_gap(box, (Fraction(3), Fraction(0))), 2)
        clipped = clip_box(box, (Fraction(1), Fraction(1)), Fraction(1, 4))
        self.assertEqual(clipped, ((Fraction(3, 4), 1), (Fraction(3, 4), Fraction(5, 4))))
        self.assertIsNone(clip_box(box, (Fraction(3), Fraction(1)), Fraction(1)))

    def test_merge_boxes(self):
        halves = merge_boxes([[(0, "1/2")], [("1/2", 1)]])
        self.assertEqual(halves, [((0, 1),)])
        apart = merge_boxes([[(0, "1/4")], [("1/2", 1)], [("1/8", "1/8")]])
        self.assertEqual(apart, [((0, Fraction(1, 4)),), ((Fraction(1, 2), 1),)])
        quarters = merge_boxes([[(0, 1), (0, 1)], [(1, 2), (0, 1)], [(0, 1), (1, 2)], [(1, 2), (1, 2)]])
        self.assertEqual(quarters, [((0, 2), (0, 2))])
        # an L shape stays two boxes
        self.assertEqual(len(merge_boxes([[(0, 2), (0, 1)], [(0, 1), (1, 2)]])), 2)

    def test_rational_points_are_shared(self):
        plane = real_box_space(2)
        self.assertIs(plane.point(0, "1/2"), plane.point(Fraction(0), Fraction(1, 2)))
        third = CReal(lambda n: dyadic_round(Fraction(1, 3), n + 1))
        self.assertIsNot(plane.point(third, 0), plane.point(third, 0))
