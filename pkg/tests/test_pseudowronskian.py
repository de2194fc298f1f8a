# tests/test_pseudowronskian.py
import random
import unittest

from sympy import exp, expand, simplify
from sympy import wronskian as sympy_wronskian

from mayachains.mc.core.services.cyclic import Signature, normalized_blocks
from mayachains.mc.core.services.exactalg import (
    ONE,
    coefficients,
    conjugate_hermite,
    hermite,
    hermite_wronskian,
    z,
)
from mayachains.mc.core.services.maya import TRIVIAL, MayaDiagram, frobenius, xi
from mayachains.mc.core.services.pseudowronskian import (
    hermite_polynomial,
    normalized_pseudo_wronskian,
    pseudo_wronskian,
    wronskian_label,
)


class TestPseudoWronskian(unittest.TestCase):
    def test_trivial(self):
        pw = pseudo_wronskian(TRIVIAL)
        self.assertEqual(pw.poly, ONE)
        self.assertEqual((pw.r, pw.q), (0, 0))
        self.assertEqual(hermite_polynomial(TRIVIAL), ONE)
        self.assertEqual(wronskian_label(TRIVIAL), "1")

    def test_standard_form_is_plain_wronskian(self):
        M = xi((0, 2, 5, 6, 7))
        self.assertEqual(wronskian_label(M), "Wr(H_2,H_3,H_4,H_6)")
        self.assertEqual(pseudo_wronskian(M).poly, hermite_wronskian([2, 3, 4, 6]))

    def test_mixed_determinant(self):
        M = xi((0, 1, 4)) - 1
        pw = pseudo_wronskian(M)
        self.assertEqual((pw.r, pw.q), (1, 3))
        self.assertEqual(wronskian_label(M), "pWr(θ_0|H_0,H_1,H_2)")
        self.assertEqual(normalized_pseudo_wronskian(M), hermite_polynomial(xi((0, 1, 4))))

    def test_normalized_value(self):
        # Wr(H_1,H_2,H_3) = 128z³ + 192z over the normalizer 16
        self.assertEqual(coefficients(hermite_polynomial(xi((0, 1, 4)))), [0, 12, 0, 8])

    def test_shift_invariance(self):
        M0 = normalized_blocks(Signature((1, 1, 3)), (3, 1, 1, 2)).diagram()
        self.assertEqual(normalized_pseudo_wronskian(M0 + 3), normalized_pseudo_wronskian(M0))
        self.assertEqual(normalized_pseudo_wronskian(M0 - 2), hermite_polynomial(M0))

    def test_random_shifts(self):
        rng = random.Random(5)
        for _ in range(50):
            M = MayaDiagram.from_members(rng.sample(range(-8, 9), rng.randint(0, 9)), -8, 9)
            expected = hermite_polynomial(M)
            self.assertEqual(normalized_pseudo_wronskian(M), expected, M)
            for k in (-2, -1, 1, 2, 3):
                self.assertEqual(normalized_pseudo_wronskian(M + k), expected, (M, k))


class TestExponentialForm(unittest.TestCase):
    def test_matches_weighted_wronskian(self):
        # e^{−rz²}·Wr[e^{z²}θ_s…, H_t…] with the same row order
        diagrams = [
            xi((0, 1, 4)),
            xi((0, 1, 4)) - 1,
            xi((0, 2, 4)) - 1,
            xi((0, 2, 4)) - 3,
            xi((0, 1, 3)) - 2,
            xi((0, 1, 2)) - 1,
            TRIVIAL - 2,
        ]
        for M in diagrams:
            with self.subTest(M=M):
                symbol = frobenius(M)
                fs = [exp(z**2) * conjugate_hermite(s).as_expr() for s in symbol.s_list]
                fs += [hermite(t).as_expr() for t in reversed(symbol.t_list)]
                pw = pseudo_wronskian(M)
                self.assertLessEqual(pw.poly.degree(), 6)
                weighted = exp(-symbol.r * z**2) * sympy_wronskian(fs, z)
                self.assertEqual(simplify(expand(weighted) - pw.poly.as_expr()), 0)


if __name__ == "__main__":
    unittest.main()
