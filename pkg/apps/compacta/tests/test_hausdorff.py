import random
from fractions import Fraction

from django.test import SimpleTestCase, tag

from apps.compacta.arith import CReal, dyadic_round, pow2
from apps.compacta.exceptions import PreconditionViolation, SpaceMismatch
from apps.compacta.hausdorff import FiniteList, concat, directed_distance, list_hausdorff, thin_net
from apps.compacta.metric import real_box_space, real_line
from apps.compacta.metric.nets import grid_net
from apps.compacta.tests.fixtures import points, random_list


class ListHausdorffTest(SimpleTestCase):
    def test_examples(self):
        line = real_line()
        cases = [
            ((0,), (0,), 0),
            ((0,), (3,), 3),
            ((0, 1), (Fraction(1, 2),), Fraction(1, 2)),
            ((0, 1), (0,), 1),
        ]
        for zeta, eta, expected in cases:
            with self.subTest(zeta=zeta, eta=eta):
                self.assertEqual(list_hausdorff(points(line, *zeta), points(line, *eta)).exact, expected)

    def test_directed(self):
        line = real_line()
        self.assertEqual(directed_distance(points(line, 0), points(line, 0, 1)).exact, 0)
        self.assertEqual(directed_distance(points(line, 0, 1), points(line, 0)).exact, 1)

    def test_finer_grid_is_close(self):
        line = real_line()
        coarse = grid_net(line, [(0, 1)], "1/8")
        fine = grid_net(line, [(0, 1)], "1/16")
        self.assertEqual(len(coarse), 9)
        self.assertLessEqual(list_hausdorff(coarse, fine).exact, Fraction(1, 16))

    def test_oracle_points(self):
        line = real_line()
        third = line.point(CReal(lambda n: dyadic_round(Fraction(1, 3), n + 1)))
        d = list_hausdorff(FiniteList(line, [third, line.point(1)]), points(line, 0))
        self.assertFalse(d.is_exact)
        for n in (0, 6, 24):
            self.assertLessEqual(abs(d.approx(n) - 1), pow2(n))

    def test_space_mismatch(self):
        with self.assertRaises(SpaceMismatch):
            list_hausdorff(points(real_line(), 0), points(real_box_space(2), (0, 0)))
        with self.assertRaises(PreconditionViolation):
            FiniteList(real_line(), [])


class ConcatTest(SimpleTestCase):
    def test_order_and_duplicates(self):
        line = real_line()
        joined = concat(points(line, 0, 1), points(line, 2, 3, 4))
        self.assertEqual([p.rational()[0] for p in joined], [0, 1, 2, 3, 4])
        twice = concat(points(line, 5), points(line, 5))
        self.assertEqual(len(twice), 2)
        self.assertEqual(list_hausdorff(twice, points(line, 5)).exact, 0)
        self.assertEqual(len(twice.deduplicated()), 1)

    def test_thin_net(self):
        line = real_line()
        zeta = grid_net(line, [(0, 1)], "1/16")
        thin = thin_net(zeta, "1/4")
        self.assertLess(len(thin), len(zeta))
        self.assertLess(list_hausdorff(thin, zeta).exact, Fraction(1, 4))


@tag("slow")
class HausdorffMetricSuiteTest(SimpleTestCase):
    """Random rational lists in R and R^2: symmetry, triangle inequality, contraction of concat."""

    def test_random_lists(self):
        rng = random.Random(2025)
        for space in (real_line(), real_box_space(2)):
            for _round in range(500):
                zeta, eta, theta = (random_list(rng, space) for _k in range(3))
                zeta_eta = list_hausdorff(zeta, eta).exact
                self.assertEqual(zeta_eta, list_hausdorff(eta, zeta).exact)
                self.assertLessEqual(
                    list_hausdorff(zeta, theta).exact, zeta_eta + list_hausdorff(eta, theta).exact
                )
                other = random_list(rng, space)
                joined = list_hausdorff(concat(zeta, other), concat(eta, theta)).exact
                self.assertLessEqual(joined, max(zeta_eta, list_hausdorff(other, theta).exact))
                self.assertEqual(list_hausdorff(zeta, zeta).exact, 0)


class IndexedLatticeTest(SimpleTestCase):
    def brute_force(self, zeta, eta):
        def directed(left, right):
            return max(min(max(abs(a - b) for a, b in zip(p, q)) for q in right) for p in left)

        left = [p.rational() for p in zeta]
        right = [q.rational() for q in eta]
        return max(directed(left, right), directed(right, left))

    def test_long_lists_match_the_matrix(self):
        rng = random.Random(31)
        for space in (real_line(), real_box_space(2)):
            for _round in range(20):
                zeta = random_list(rng, space, max_len=40)
                eta = random_list(rng, space, max_len=40)
                with self.subTest(space=space.name, sizes=(len(zeta), len(eta))):
                    self.assertEqual(list_hausdorff(zeta, eta).exact, self.brute_force(zeta, eta))

    def test_grids_of_different_denominators(self):
        plane = real_box_space(2)
        thirds = grid_net(plane, [(0, 1), (0, 1)], "1/3")
        eighths = grid_net(plane, [(0, 1), (0, 1)], "1/8")
        self.assertEqual(list_hausdorff(thirds, eighths).exact, self.brute_force(thirds, eighths))
        self.assertEqual(directed_distance(thirds, eighths).exact, Fraction(1, 24))

    def test_thin_net_covers_at_three_quarters(self):
        rng = random.Random(32)
        for space in (real_line(), real_box_space(2)):
            zeta = random_list(rng, space, max_len=60)
            for r in (Fraction(1, 8), Fraction(1), Fraction(3)):
                thin = thin_net(zeta, r)
                for point in zeta:
                    self.assertTrue(any(space.dist(point, kept).exact <= r * 3 / 4 for kept in thin))

    def test_deduplicated_drops_repeated_objects_first(self):
        line = real_line()
        third = line.point(CReal(lambda n: dyadic_round(Fraction(1, 3), n + 1)))
        zeta = FiniteList(line, [third, line.point(1), third, line.point(1)])
        self.assertEqual(len(zeta.deduplicated()), 2)
        self.assertIsNone(zeta.scaled())
        self.assertIsNotNone(points(line, 0, 1).scaled())
