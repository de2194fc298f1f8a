# tests/test_exactalg.py
import os
import random
import unittest
from fractions import Fraction
from unittest import mock

from mayachains.mc.core.services.exactalg import (
    ONE,
    ZERO,
    RationalFunction,
    coefficients,
    conjugate_hermite,
    determinant,
    hermite,
    hermite_wronskian,
    log_derivative,
    poly,
    poly_from_text,
    poly_text,
    wronskian,
    wronskian_degree_bound,
)

Z = RationalFunction.identity()


def random_poly(rng: random.Random, degree: int):
    coeffs = [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(degree)]
    return poly(coeffs + [rng.choice((-3, -2, -1, 1, 2, 3))])


def random_rational(rng: random.Random) -> RationalFunction:
    return RationalFunction(random_poly(rng, rng.randint(0, 3)), random_poly(rng, rng.randint(0, 2)))


class TestHermite(unittest.TestCase):
    def test_hermite(self):
        self.assertEqual(hermite(0), ONE)
        self.assertEqual(coefficients(hermite(2)), [-2, 0, 4])
        self.assertEqual(coefficients(hermite(4)), [12, 0, -48, 0, 16])
        with self.assertRaises(ValueError):
            hermite(-1)

    def test_conjugate_hermite(self):
        self.assertEqual(coefficients(conjugate_hermite(1)), [0, 2])
        self.assertEqual(coefficients(conjugate_hermite(2)), [2, 0, 4])
        self.assertEqual(coefficients(conjugate_hermite(3)), [0, 12, 0, 8])

    def test_conjugate_hermite_strips_signs(self):
        for n in range(21):
            self.assertEqual(
                coefficients(conjugate_hermite(n)), [abs(c) for c in coefficients(hermite(n))]
            )


class TestWronskian(unittest.TestCase):
    def test_small_wronskians(self):
        self.assertEqual(coefficients(hermite_wronskian([1])), [0, 2])
        self.assertEqual(coefficients(hermite_wronskian([1, 2])), [4, 0, 8])
        self.assertEqual(coefficients(hermite_wronskian([1, 2, 3])), [0, 192, 0, 128])
        self.assertEqual(hermite_wronskian([]), ONE)

    def test_degree_law(self):
        for idx in ([1, 2, 4], [2, 3, 4, 6], [1, 3, 6, 7]):
            wr = hermite_wronskian(idx)
            self.assertEqual(wr.degree(), sum(idx) - len(idx) * (len(idx) - 1) // 2)
            self.assertEqual(wronskian_degree_bound([hermite(t) for t in idx]), wr.degree())

    def test_methods_agree(self):
        for idx in ([1, 2, 3], [2, 3, 4, 6], [1, 2, 4, 7, 8]):
            fs = [hermite(t) for t in idx]
            self.assertEqual(wronskian(fs, method="bareiss"), wronskian(fs, method="interpolate"))

    def test_rational_coefficients_interpolate(self):
        fs = [poly([0, Fraction(1, 3)]), poly([1, 0, Fraction(1, 2)])]
        self.assertEqual(wronskian(fs, method="interpolate"), wronskian(fs, method="bareiss"))

    def test_auto_threshold_from_env(self):
        fs = [hermite(t) for t in (2, 3, 4, 6)]
        with mock.patch.dict(os.environ, {"MAYACHAINS_INTERP_DEGREE": "1"}):
            low = wronskian(fs)
        with mock.patch.dict(os.environ, {"MAYACHAINS_INTERP_DEGREE": "500"}):
            high = wronskian(fs)
        self.assertEqual(low, high)

    def test_alternating(self):
        rng = random.Random(3)
        for trial in range(12):
            if trial % 2:
                fs = [hermite(t) for t in rng.sample(range(9), 4)]
            else:
                fs = [random_poly(rng, d) for d in rng.sample(range(6), 3)]
            i, j = rng.sample(range(len(fs)), 2)
            swapped = list(fs)
            swapped[i], swapped[j] = swapped[j], swapped[i]
            for method in ("bareiss", "interpolate"):
                self.assertEqual(wronskian(swapped, method=method), -wronskian(fs, method=method))

    def test_dependent_rows(self):
        self.assertEqual(wronskian([hermite(2), hermite(2)]), ZERO)

    def test_bad_input(self):
        with self.assertRaises(ValueError):
            wronskian([])
        with self.assertRaises(ValueError):
            wronskian([hermite(1)], method="cofactor")

    def test_determinant_pivoting(self):
        m = [[ZERO, ONE], [ONE, ZERO]]
        self.assertEqual(determinant(m), -ONE)
        self.assertEqual(determinant([]), ONE)


class TestText(unittest.TestCase):
    def test_text_form(self):
        self.assertEqual(poly_text(hermite(4)), "[12, 0, -48, 0, 16]")
        self.assertEqual(poly_from_text("[1/2, 0, -3]"), poly([Fraction(1, 2), 0, -3]))
        self.assertEqual(poly_from_text("[]"), ZERO)
        with self.assertRaises(ValueError):
            poly_from_text("1, 2")
        with self.assertRaises(ValueError):
            poly_from_text("[1, x]")


class TestRationalFunction(unittest.TestCase):
    def test_normalization(self):
        f = RationalFunction(poly([-1, 0, 1]), poly([-1, 1]))
        self.assertEqual(f, RationalFunction(poly([1, 1])))
        self.assertTrue(f.is_polynomial)
        g = RationalFunction(poly([0, 4]), poly([-1, 0, 2]))
        self.assertEqual(coefficients(g.num), [0, 2])
        self.assertEqual(coefficients(g.den), [Fraction(-1, 2), 0, 1])

    def test_derivative(self):
        inv = 1 / Z
        self.assertEqual(inv.derivative(), -1 / (Z * Z))
        self.assertEqual((Z**3).derivative(), 3 * Z * Z)

    def test_arithmetic(self):
        f = (Z + 1) / (Z - 1)
        self.assertEqual(f * (Z - 1), Z + 1)
        self.assertEqual(f - f, RationalFunction.constant(0))
        self.assertEqual(f**-1, (Z - 1) / (Z + 1))
        self.assertEqual(f.evaluate(3), Fraction(2))
        self.assertEqual(f.scale(2), (2 * Z + 1) / (2 * Z - 1))
        with self.assertRaises(ZeroDivisionError):
            f / 0
        with self.assertRaises(ZeroDivisionError):
            f.evaluate(1)
        with self.assertRaises(ZeroDivisionError):
            RationalFunction(ONE, ZERO)

    def test_ring_axioms(self):
        rng = random.Random(13)
        one = RationalFunction.constant(1)
        for _ in range(30):
            f, g, h = (random_rational(rng) for _ in range(3))
            self.assertEqual(f + g, g + f)
            self.assertEqual(f * g, g * f)
            self.assertEqual((f + g) + h, f + (g + h))
            self.assertEqual((f * g) * h, f * (g * h))
            self.assertEqual((f + g) * h, f * h + g * h)
            self.assertTrue((f - f).is_zero)
            if not f.is_zero:
                self.assertEqual(f * (1 / f), one)

    def test_leibniz_rule(self):
        rng = random.Random(29)
        for _ in range(30):
            f, g = random_rational(rng), random_rational(rng)
            self.assertEqual((f * g).derivative(), f.derivative() * g + f * g.derivative())
            self.assertEqual((f + g).derivative(), f.derivative() + g.derivative())
            if not g.is_zero:
                self.assertEqual((f / g).derivative(), (f.derivative() * g - f * g.derivative()) / (g * g))

    def test_log_derivative(self):
        self.assertEqual(log_derivative(hermite(1)), 1 / Z)
        with self.assertRaises(ZeroDivisionError):
            log_derivative(ZERO)


if __name__ == "__main__":
    unittest.main()
