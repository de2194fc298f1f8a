# tests/test_atlas.py
import json
import os
import random
import tempfile
import unittest
from pathlib import Path
from unittest import mock

import mpmath as mp

from mayachains.mc.core.config import Settings
from mayachains.mc.core.services.atlas import (
    RootSet,
    WronskianFamilySpec,
    conjugate_pairing,
    emit,
    family_polynomial,
    find_roots,
    is_triangular,
    origin_multiplicity,
)
from mayachains.mc.core.services.cache import _cache_name, cache_dir, cached_hermite_wronskian
from mayachains.mc.core.services.cyclic import Signature, enumerate_signatures
from mayachains.mc.core.services.exactalg import coefficients, hermite, hermite_wronskian, poly


class TempDirsMixin:
    def setUp(self):
        self._tmp = tempfile.TemporaryDirectory()
        self.tmp = Path(self._tmp.name)
        self._env = mock.patch.dict(
            os.environ,
            {
                "MAYACHAINS_CACHE_DIR": str(self.tmp / "cache"),
                "MAYACHAINS_DATA_DIR": str(self.tmp / "data"),
            },
        )
        self._env.start()

    def tearDown(self):
        self._env.stop()
        self._tmp.cleanup()


def published_indices(parts, n):
    """Hermite index lists of the three tabulated A_4 families, as lists."""
    n1, n2, n3, n4 = n
    if parts == (5,):
        return [n1 + j for j in range(n2)] + [n1 + n2 + n3 + j for j in range(n4)]
    if parts == (3, 1, 1):
        return (
            [3 * (n1 + j) for j in range(n2)]
            + [1 + 3 * j for j in range(n3)]
            + [2 + 3 * j for j in range(n4)]
        )
    return [r + 5 * j for r, count in zip((1, 2, 3, 4), n) for j in range(count)]


# reduced-size families, one per A_4 signature
ATLAS_FAMILIES = {
    (5,): (2, 3, 3, 2),
    (3, 1, 1): (2, 3, 4, 5),
    (1, 3, 1): (2, 1, 2, 3),
    (1, 1, 3): (3, 1, 1, 2),
    (1, 1, 1, 1, 1): (1, 2, 3, 4),
}


class TestFamilies(TempDirsMixin, unittest.TestCase):
    def test_single_entry_family(self):
        spec = WronskianFamilySpec(Signature((5,)), (1, 1, 0, 0))
        self.assertEqual(spec.indices(), (1,))
        self.assertEqual(coefficients(family_polynomial(spec)), [0, 2])

    def test_three_block_indices(self):
        spec = WronskianFamilySpec(Signature((3, 1, 1)), (1, 5, 8, 16))
        expected = (
            {3 * (1 + j) for j in range(5)}
            | {1 + 3 * j for j in range(8)}
            | {2 + 3 * j for j in range(16)}
        )
        self.assertEqual(spec.indices(), tuple(sorted(expected)))
        self.assertEqual(spec.label(), "H311_1-5-8-16")

    def test_five_block_degree(self):
        spec = WronskianFamilySpec(Signature((1, 1, 1, 1, 1)), (1, 1, 1, 1))
        self.assertEqual(spec.indices(), (1, 2, 3, 4))
        self.assertEqual(family_polynomial(spec).degree(), 4)

    def test_indices_follow_published_lists(self):
        rng = random.Random(11)
        for parts in [(5,), (3, 1, 1), (1, 1, 1, 1, 1)]:
            for _ in range(40):
                n = tuple(rng.randint(0, 5) for _ in range(4))
                listed = published_indices(parts, n)
                self.assertEqual(len(listed), len(set(listed)), (parts, n))
                spec = WronskianFamilySpec(Signature(parts), n)
                self.assertEqual(spec.indices(), tuple(sorted(listed)), (parts, n))

    def test_zero_entries_collapse_ranges(self):
        spec = WronskianFamilySpec(Signature((1, 1, 1, 1, 1)), (1, 1, 2, 2))
        self.assertEqual(spec.indices(), (1, 2, 3, 4, 8, 9))
        # n₁ = 0 keeps H_0: Wr(H_0, H_1, H_3) = 2·H_3''
        spec = WronskianFamilySpec(Signature((5,)), (0, 2, 1, 1))
        self.assertEqual(spec.indices(), (0, 1, 3))
        self.assertEqual(coefficients(family_polynomial(spec, use_cache=False)), [0, 96])
        self.assertEqual(
            WronskianFamilySpec(Signature((5,)), (1, 0, 2, 3)).indices(),
            WronskianFamilySpec(Signature((5,)), (3, 3, 0, 0)).indices(),
        )

    def test_origin_multiplicity_is_triangular(self):
        for sig, n in [((5,), (1, 1, 1, 1)), ((1, 1, 3), (1, 2, 1, 1)), ((3, 1, 1), (2, 1, 3, 1))]:
            p = family_polynomial(WronskianFamilySpec(Signature(sig), n), use_cache=False)
            self.assertTrue(is_triangular(origin_multiplicity(p)), (sig, n))
        self.assertEqual(origin_multiplicity(hermite_wronskian([1, 3])), 3)
        self.assertFalse(is_triangular(2))


class TestCache(TempDirsMixin, unittest.TestCase):
    def test_cache_roundtrip(self):
        first = cached_hermite_wronskian([2, 3, 4, 6])
        files = list(cache_dir().glob("wr_*.txt"))
        self.assertEqual(len(files), 1)
        self.assertTrue(files[0].read_text(encoding="utf-8").startswith("2,3,4,6\n"))
        with self.assertLogs("mayachains", level="INFO") as logs:
            second = cached_hermite_wronskian([2, 3, 4, 6])
        self.assertEqual(first, second)
        self.assertTrue(any("Cache hit" in line for line in logs.output))

    def test_corrupt_entry_is_recomputed(self):
        cached_hermite_wronskian([1, 2])
        (fp,) = cache_dir().glob("wr_*.txt")
        fp.write_text("1,2\nnot a list\n", encoding="utf-8")
        self.assertEqual(coefficients(cached_hermite_wronskian([1, 2])), [4, 0, 8])

    def test_long_keys_are_hashed(self):
        indices = list(range(1, 60))
        self.assertLess(len(_cache_name(indices)), 80)


class TestRoots(unittest.TestCase):
    def test_quadratic(self):
        rs = find_roots(poly([4, 0, 8]), 128)
        self.assertEqual(rs.degree, 2)
        self.assertTrue(rs.converged)
        with mp.workprec(128):
            for r in rs.roots:
                self.assertLess(abs(r.real), mp.mpf(10) ** -30)
                self.assertLess(abs(abs(r.imag) - 1 / mp.sqrt(2)), mp.mpf(10) ** -30)

    def test_hermite_zeros(self):
        rs = find_roots(hermite(4), 128)
        reals = sorted(float(r.real) for r in rs.roots)
        expected = [-1.6506801238857845, -0.5246476232752903, 0.5246476232752903, 1.6506801238857845]
        for got, want in zip(reals, expected):
            self.assertAlmostEqual(got, want, places=12)
        self.assertTrue(rs.max_residual < rs.residual_bound)

    def test_origin_multiplicity(self):
        rs = find_roots(poly([0, 0, 0, 1]), 64)
        self.assertEqual(rs.origin_multiplicity, 3)
        self.assertEqual(rs.degree, 3)
        self.assertTrue(all(r == 0 for r in rs.roots))

    def test_family_roots(self):
        p = hermite_wronskian([1, 2, 4, 7, 8])
        rs = find_roots(p, 96)
        self.assertEqual(rs.degree, p.degree())
        self.assertTrue(rs.converged)
        self.assertTrue(conjugate_pairing(rs))

    def test_conjugate_pairing_uses_root_precision(self):
        p = family_polynomial(WronskianFamilySpec(Signature((5,)), (2, 3, 3, 2)), use_cache=False)
        rs = find_roots(p, 128)
        self.assertEqual(rs.precision_bits, 128)
        with mp.workprec(53):
            self.assertTrue(conjugate_pairing(rs))
            self.assertTrue(conjugate_pairing(rs, rs.residual_bound))
        lonely = RootSet(
            roots=(mp.mpc(1, 1),),
            precision_bits=128,
            residual_bound=mp.ldexp(1, -64),
            max_residual=mp.mpf(0),
        )
        self.assertFalse(conjugate_pairing(lonely))

    def test_repeated_factor(self):
        rs = find_roots(poly([1, 0, 1]) ** 2, 64)
        self.assertEqual(rs.degree, 4)
        self.assertTrue(rs.converged)

    def test_precision_escalates(self):
        settings = Settings(precision=64, max_precision=256, max_iterations=1)
        p = hermite_wronskian([2, 3, 4, 6])
        rs = find_roots(p, settings=settings)
        self.assertGreaterEqual(rs.precision_bits, 64)
        self.assertLessEqual(rs.precision_bits, 256)
        self.assertEqual(rs.degree, p.degree())

    def test_constant_rejected(self):
        with self.assertRaises(ValueError):
            find_roots(poly([3]))


class TestAtlasFamilies(TempDirsMixin, unittest.TestCase):
    def test_every_a4_signature(self):
        signatures = [s.parts for k in (1, 3, 5) for s in enumerate_signatures(5, k)]
        self.assertEqual(sorted(signatures), sorted(ATLAS_FAMILIES))
        for parts, n in ATLAS_FAMILIES.items():
            with self.subTest(signature=parts, n=n):
                p = family_polynomial(WronskianFamilySpec(Signature(parts), n), use_cache=False)
                self.assertLessEqual(p.degree(), 60)
                rs = find_roots(p, 128)
                self.assertEqual(rs.degree, p.degree())
                self.assertTrue(rs.converged)
                self.assertLess(rs.max_residual, mp.ldexp(1, -64))
                self.assertTrue(conjugate_pairing(rs))
                self.assertEqual(rs.origin_multiplicity, origin_multiplicity(p))
                self.assertTrue(is_triangular(rs.origin_multiplicity))


class TestEmit(TempDirsMixin, unittest.TestCase):
    def test_empty_csv(self):
        rs = RootSet(roots=(), precision_bits=128, residual_bound=mp.mpf(2) ** -64, max_residual=mp.mpf(0))
        out = emit(rs, "csv", self.tmp / "empty.csv")
        self.assertEqual(out.read_text(encoding="utf-8"), "re,im\n")

    def test_csv_and_json(self):
        rs = find_roots(poly([4, 0, 8]), 128)
        lines = emit(rs, "csv", self.tmp / "q.csv").read_text(encoding="utf-8").splitlines()
        self.assertEqual(lines[0], "re,im")
        self.assertEqual(
            sorted(line[:12] for line in lines[1:]), ["0,-0.7071067", "0,0.70710678"]
        )
        data = json.loads(emit(rs, "json", self.tmp / "q.json").read_text(encoding="utf-8"))
        self.assertEqual(len(data), 2)
        self.assertEqual([row[0] for row in data], ["0", "0"])
        self.assertEqual(sorted(row[1][:9] for row in data), ["-0.707106", "0.7071067"])

    def test_svg(self):
        spec = WronskianFamilySpec(Signature((1, 1, 1, 1, 1)), (1, 1, 2, 2))
        rs = find_roots(family_polynomial(spec, use_cache=False), 96)
        body = emit(rs, "svg", self.tmp / "fig.svg", title=spec.label()).read_text(encoding="utf-8")
        self.assertTrue(body.startswith("<svg"))
        self.assertEqual(body.count("<circle"), rs.degree)
        self.assertIn(spec.label(), body)

    def test_unknown_format(self):
        rs = find_roots(poly([4, 0, 8]), 64)
        with self.assertRaises(ValueError):
            emit(rs, "png", self.tmp / "x.png")


if __name__ == "__main__":
    unittest.main()
