from fractions import Fraction

from django.test import SimpleTestCase

from apps.compacta.arith import (
    ArithOp,
    CReal,
    Verdict,
    approx_compare,
    creal_arith,
    creal_of_rat,
    decimal_digits,
    dyadic_round,
    exponent_above,
    exponent_at_most,
    format_rat,
    lower_bound_positive,
    parse_rat,
    pow2,
    render_creal,
    render_decimal,
)
from apps.compacta.budget import SearchBudget
from apps.compacta.exceptions import ArityMismatch, BudgetExceeded, PreconditionViolation


def third() -> CReal:
    """1/3 through its oracle only, rounded to the nearest multiple of 2^-n-1."""
    return CReal(lambda n: dyadic_round(Fraction(1, 3), n + 1), label="third")


class RationalTest(SimpleTestCase):
    def test_parse_and_format(self):
        self.assertEqual(parse_rat("-7/2"), Fraction(-7, 2))
        self.assertEqual(parse_rat("1.25"), Fraction(5, 4))
        self.assertEqual(parse_rat(3), Fraction(3))
        self.assertEqual(format_rat(Fraction(6, -4)), "-3/2")
        self.assertEqual(format_rat(Fraction(4, 2)), "2")

    def test_parse_refuses_floats_and_booleans(self):
        for value in (0.5, True, None, "one half", "1/0"):
            with self.subTest(value=value):
                with self.assertRaises(PreconditionViolation):
                    parse_rat(value)

    def test_exponents(self):
        self.assertEqual(pow2(3), Fraction(1, 8))
        self.assertEqual(pow2(-2), Fraction(4))
        self.assertEqual(exponent_at_most(Fraction(1, 8)), 3)
        self.assertEqual(exponent_at_most(Fraction(1, 10)), 4)
        self.assertEqual(exponent_at_most(Fraction(5)), -2)
        self.assertEqual(exponent_above(Fraction(1, 8)), 4)
        self.assertEqual(exponent_above(Fraction(1, 10)), 4)
        with self.assertRaises(PreconditionViolation):
            exponent_at_most(Fraction(0))

    def test_dyadic_round_moves_at_most_half_a_step(self):
        for k in range(0, 12):
            rounded = dyadic_round(Fraction(1, 3), k)
            self.assertLessEqual(abs(rounded - Fraction(1, 3)), pow2(k + 1))
            self.assertEqual((rounded * 2**k).denominator, 1)

    def test_render_decimal(self):
        self.assertEqual(render_decimal(Fraction(1, 3), 4), "0.3333")
        self.assertEqual(render_decimal(Fraction(-2, 3), 2), "-0.67")
        self.assertEqual(render_decimal(Fraction(-1, 1000), 2), "0.00")
        self.assertEqual(render_decimal(Fraction(5, 2), 0), "3")
        self.assertEqual(decimal_digits(20), 6)


class CRealTest(SimpleTestCase):
    def test_oracle_contract(self):
        x = third()
        for n in range(0, 40, 3):
            self.assertLessEqual(abs(x.approx(n) - Fraction(1, 3)), pow2(n))
        self.assertIs(x.approx(10), x.approx(10))

    def test_exact_arithmetic_stays_exact(self):
        x = creal_of_rat("1/3") + creal_of_rat("1/6")
        self.assertTrue(x.is_exact)
        self.assertEqual(x.exact, Fraction(1, 2))
        self.assertEqual(abs(creal_of_rat(-2)).exact, 2)
        self.assertEqual(creal_of_rat(3).scale("-1/2").exact, Fraction(-3, 2))

    def test_oracle_arithmetic_error_bounds(self):
        x, y = third(), third()
        cases = [
            (x + y, Fraction(2, 3)),
            (x - creal_of_rat(1), Fraction(-2, 3)),
            (-x, Fraction(-1, 3)),
            (abs(x - creal_of_rat(1)), Fraction(2, 3)),
            (x.scale(7), Fraction(7, 3)),
            (creal_arith(ArithOp.max, [x, creal_of_rat("1/4")]), Fraction(1, 3)),
            (creal_arith(ArithOp.min, [x, creal_of_rat("1/4"), y]), Fraction(1, 4)),
        ]
        for value, expected in cases:
            for n in (0, 5, 17, 30):
                with self.subTest(value=value, n=n):
                    self.assertLessEqual(abs(value.approx(n) - expected), pow2(n))

    def test_arity_is_checked(self):
        with self.assertRaises(ArityMismatch):
            creal_arith(ArithOp.add, [creal_of_rat(1)])
        with self.assertRaises(ArityMismatch):
            creal_arith(ArithOp.scale_by_rat, [creal_of_rat(1)])
        with self.assertRaises(ArityMismatch):
            creal_arith(ArithOp.min, [])


class ApproxCompareTest(SimpleTestCase):
    def test_verdicts_are_true(self):
        self.assertEqual(approx_compare(creal_of_rat(3), 1, 2), Verdict.greater_than_a)
        self.assertEqual(approx_compare(creal_of_rat(0), 1, 2), Verdict.less_than_b)
        self.assertEqual(approx_compare(third(), "1/4", "1/2"), Verdict.less_than_b)
        self.assertEqual(approx_compare(third(), "1/5", "1/4"), Verdict.greater_than_a)

    def test_band_returns_a_valid_verdict(self):
        verdict = approx_compare(third(), "1/4", "1/2")
        self.assertIn(verdict, (Verdict.greater_than_a, Verdict.less_than_b))
        verdict = approx_compare(third(), "0", "1")
        self.assertEqual(verdict, Verdict.less_than_b)

    def test_needs_a_below_b(self):
        with self.assertRaises(PreconditionViolation):
            approx_compare(creal_of_rat(0), 1, 1)


class LowerBoundTest(SimpleTestCase):
    def test_positive_reals(self):
        self.assertEqual(lower_bound_positive(creal_of_rat("1/4"), 8), Fraction(1, 8))
        r = lower_bound_positive(third(), 16)
        self.assertGreater(r, 0)
        self.assertLess(r, Fraction(1, 3))

    def test_zero_exhausts_the_budget(self):
        budget = SearchBudget(6)
        with self.assertRaises(BudgetExceeded):
            lower_bound_positive(third() - creal_of_rat("1/3"), budget)
        self.assertEqual(budget.spent, 6)
        with self.assertRaises(PreconditionViolation):
            lower_bound_positive(creal_of_rat(0), 4)


class RenderTest(SimpleTestCase):
    def test_render_exact_and_oracle(self):
        exact = render_creal(creal_of_rat("1/2"), 20)
        self.assertEqual(exact, {"rational": "1/2", "decimal": "0.500000", "error": "0", "exact": True})
        data = render_creal(third(), 20)
        self.assertEqual(data["decimal"], "0.333333")
        self.assertFalse(data["exact"])
        bound = Fraction(data["error"])
        self.assertLessEqual(abs(Fraction(data["decimal"]) - Fraction(1, 3)), bound)
