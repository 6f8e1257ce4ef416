from django.test import SimpleTestCase, override_settings

from codes.bijection import group_order
from enumeration.engine import Chunk, Tally, histogram, partition, tally_chunk
from mahonian.triangles import TriangleKind, row_product


class PartitionTests(SimpleTestCase):
    def test_covers_interval_contiguously(self):
        parts = partition(10, 110, 7)
        self.assertEqual(parts[0][0], 10)
        self.assertEqual(parts[-1][1], 110)
        for (_, b), (c, _) in zip(parts, parts[1:]):
            self.assertEqual(b, c)
        self.assertEqual(len(parts), 7)

    def test_more_parts_than_ranks(self):
        self.assertEqual(partition(0, 3, 10), [(0, 1), (1, 2), (2, 3)])

    def test_empty_interval(self):
        self.assertEqual(partition(5, 5, 4), [])


class TallyTests(SimpleTestCase):
    def test_merge_is_exact(self):
        a = Tally(counts=[1, 2], total=2, size=3)
        b = Tally(counts=[0, 1, 5], total=11, size=6)
        a.merge(b)
        self.assertEqual(a.counts, [1, 3, 5])
        self.assertEqual((a.total, a.size), (13, 9))

    def test_chunk_filter_on_last_entry(self):
        tally = tally_chunk(Chunk(n=2, lo=0, hi=16, last_entry=2))
        self.assertEqual(tally.size, 2)
        self.assertEqual(tally.counts[:2], [1, 1])


class HistogramTests(SimpleTestCase):
    def test_matches_product_rows(self):
        for n in range(1, 7):
            tally = histogram(n)
            self.assertEqual(tuple(tally.counts), row_product(TriangleKind.B, n).coeffs)
            self.assertEqual(tally.size, group_order(n))

    def test_partition_soundness(self):
        single = histogram(5, parts=1)
        for parts in (2, 3, 7, 64, 3840):
            other = histogram(5, parts=parts)
            self.assertEqual(other.counts, single.counts)
            self.assertEqual(other.total, single.total)

    def test_deterministic_across_workers(self):
        inline = histogram(6, jobs=1)
        for jobs in (2, 4):
            pooled = histogram(6, jobs=jobs)
            self.assertEqual(pooled.counts, inline.counts)
            self.assertEqual(pooled.total, inline.total)

    def test_fmaj_statistic(self):
        self.assertEqual(histogram(4, "fmaj").counts, histogram(4, "inv").counts)

    def test_unknown_statistic(self):
        with self.assertRaises(ValueError):
            histogram(3, "des")

    def test_sub_interval(self):
        tally = histogram(3, lo=47, hi=48)
        self.assertEqual(tally.size, 1)
        self.assertEqual(tally.counts[9], 1)

    @override_settings(ENUMERATION_PROGRESS_STRIDE=100)
    def test_progress_reaches_total(self):
        calls = []
        histogram(4, parts=8, progress=lambda done, total: calls.append((done, total)))
        self.assertEqual(calls[-1], (384, 384))
        dones = [d for d, _ in calls]
        self.assertEqual(dones, sorted(dones))
