import itertools
import math

from django.test import SimpleTestCase, override_settings, tag

from codes.bijection import group_order
from core.exceptions import (
    BadClassIndexError,
    CeilingExceededError,
    RangeViolationError,
    RankTooLargeForOracleError,
)
from core.inversions import inv_b
from core.permutations import identity, longest_element, sign_change
from enumeration.oracles import (
    cayley_length,
    class_histogram,
    class_shift,
    fmaj_histogram,
    histogram_brute,
    total_brute,
    verify_relations,
)
from enumeration.stream import stream
from mahonian.totals import total_inversions
from mahonian.triangles import TriangleKind, row_product


class BruteForceTests(SimpleTestCase):
    def test_histogram_rows(self):
        self.assertEqual(histogram_brute(1).coeffs, (1, 1))
        self.assertEqual(histogram_brute(3).coeffs, (1, 3, 5, 7, 8, 8, 7, 5, 3, 1))
        self.assertEqual(histogram_brute(5), row_product(TriangleKind.B, 5))

    def test_totals(self):
        self.assertEqual([total_brute(n) for n in (1, 3, 4)], [1, 216, 3072])
        for n in range(1, 6):
            row = histogram_brute(n)
            self.assertEqual(total_brute(n), row.total)
            self.assertEqual(total_brute(n), total_inversions(TriangleKind.B, n))

    @tag("slow")
    def test_b7_histogram_independent_of_jobs(self):
        expected = row_product(TriangleKind.B, 7)
        for jobs in (1, 4, 16):
            self.assertEqual(histogram_brute(7, jobs=jobs), expected, msg=f"jobs={jobs}")

    def test_fmaj_is_equidistributed(self):
        self.assertEqual(fmaj_histogram(1).coeffs, (1, 1))
        self.assertEqual(fmaj_histogram(2).coeffs, (1, 2, 2, 2, 1))
        for n in range(3, 7):
            self.assertEqual(fmaj_histogram(n), histogram_brute(n))

    def test_ceiling(self):
        with self.assertRaises(CeilingExceededError):
            histogram_brute(4, ceiling=3)
        with override_settings(ENUMERATION_CEILING=2):
            with self.assertRaises(CeilingExceededError):
                total_brute(3)
        with self.assertRaises(RangeViolationError):
            histogram_brute(0)


class ClassTests(SimpleTestCase):
    def test_b2_classes(self):
        self.assertEqual(class_histogram(2, 2)[:2], [1, 1])
        self.assertEqual(sum(class_histogram(2, 2)), 2)
        counts = class_histogram(2, -2)
        self.assertEqual(counts[3:5], [1, 1])
        self.assertEqual(sum(counts), 2)

    def test_shift_law_and_sum(self):
        for n in range(2, 7):
            base = histogram_brute(n - 1).coeffs
            full = histogram_brute(n).coeffs
            size = 2 ** (n - 1) * math.factorial(n - 1)
            summed = [0] * len(full)
            for j in itertools.chain(range(-n, 0), range(1, n + 1)):
                counts = class_histogram(n, j)
                shift = class_shift(n, j)
                self.assertEqual(sum(counts), size)
                expected = [0] * shift + list(base)
                expected += [0] * (len(counts) - len(expected))
                self.assertEqual(counts, expected)
                summed = [a + b for a, b in zip(summed, counts)]
            self.assertEqual(tuple(summed), full)

    def test_bad_class_index(self):
        with self.assertRaises(BadClassIndexError):
            class_histogram(3, 0)
        with self.assertRaises(BadClassIndexError):
            class_histogram(3, -4)


class CayleyLengthTests(SimpleTestCase):
    def test_examples(self):
        self.assertEqual(cayley_length(identity(3)), 0)
        self.assertEqual(cayley_length(sign_change(1, 3)), 1)
        self.assertEqual(cayley_length(longest_element(2)), 4)

    def test_agrees_with_inv_b(self):
        for n in range(1, 5):
            for w in stream(n, 0, group_order(n)):
                self.assertEqual(cayley_length(w), inv_b(w))

    def test_too_large(self):
        with self.assertRaises(RankTooLargeForOracleError):
            cayley_length(identity(5))


class RelationTests(SimpleTestCase):
    def test_all_ranks(self):
        for n in range(2, 9):
            report = verify_relations(n)
            self.assertTrue(report.passed, report.first_failure)
            self.assertEqual(report.params, {"n": n})

    def test_range(self):
        with self.assertRaises(RangeViolationError):
            verify_relations(1)
        with self.assertRaises(RangeViolationError):
            verify_relations(9)
