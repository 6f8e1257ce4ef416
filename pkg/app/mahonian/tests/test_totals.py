from django.test import SimpleTestCase

from core.exceptions import RangeViolationError
from mahonian.totals import TotalsMethod, knuth_netto, pentagonal, total_inversions
from mahonian.triangles import TriangleKind, entry


class TotalsTests(SimpleTestCase):
    def test_table_columns(self):
        self.assertEqual(
            [total_inversions(TriangleKind.A, n) for n in range(1, 7)],
            [0, 1, 9, 72, 600, 5400],
        )
        self.assertEqual(
            [total_inversions(TriangleKind.B, n) for n in range(1, 6)],
            [1, 16, 216, 3072, 48000],
        )

    def test_b1_by_recurrence(self):
        self.assertEqual(total_inversions(TriangleKind.B, 1, TotalsMethod.RECURRENCE), 1)

    def test_methods_agree(self):
        for kind in TriangleKind:
            for n in range(1, 51):
                closed = total_inversions(kind, n, TotalsMethod.CLOSED_FORM)
                self.assertEqual(total_inversions(kind, n, TotalsMethod.RECURRENCE), closed)
                self.assertEqual(total_inversions(kind, n, TotalsMethod.MOMENT), closed)

    def test_unknown_method(self):
        with self.assertRaises(ValueError):
            total_inversions(TriangleKind.A, 3, "guess")


class KnuthNettoTests(SimpleTestCase):
    def test_pentagonal_numbers(self):
        self.assertEqual([pentagonal(j) for j in range(1, 6)], [1, 5, 12, 22, 35])

    def test_examples(self):
        self.assertEqual(knuth_netto(5, 4), 20)
        self.assertEqual(knuth_netto(6, 6), 90)
        self.assertEqual(knuth_netto(9, 0), 1)

    def test_matches_triangle(self):
        for n in range(1, 13):
            for k in range(n + 1):
                self.assertEqual(knuth_netto(n, k), entry(TriangleKind.A, n, k))

    def test_k_above_n(self):
        with self.assertRaises(RangeViolationError):
            knuth_netto(4, 5)
        with self.assertRaises(RangeViolationError):
            knuth_netto(4, -1)
