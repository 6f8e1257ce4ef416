import itertools
import math

from django.test import SimpleTestCase
from hypothesis import given, strategies as st

from codes.bijection import (
    decode,
    encode,
    format_table,
    group_order,
    parse_table,
    radix_bounds,
    rank,
    rank_digits,
    unrank,
)
from core.exceptions import DigitOutOfRangeError, RankOutOfRangeError, WindowParseError
from core.inversions import InversionTable, inversion_table
from core.permutations import from_window, identity, longest_element
from core.tests.strategies import inversion_tables, signed_permutations
from enumeration.stream import stream

WORKED = (7, 3, -2, 8, -6, -4, -1, 5)


class RadixBoundsTests(SimpleTestCase):
    def test_bounds_and_order(self):
        for n in range(1, 9):
            rb = radix_bounds(n)
            self.assertEqual(rb.bounds, tuple(2 * (n - i) + 1 for i in range(1, n + 1)))
            self.assertEqual(math.prod(rb.radices), 2**n * math.factorial(n))
            self.assertEqual(group_order(n), 2**n * math.factorial(n))


class EncodeDecodeTests(SimpleTestCase):
    def test_encode_matches_inversion_table(self):
        w = from_window(8, WORKED)
        self.assertEqual(encode(w), inversion_table(w))
        self.assertEqual(encode(longest_element(2)).digits, (3, 1))

    def test_decode_worked_example(self):
        t = InversionTable(digits=(3, 7, 8, 7, 0, 3, 1, 0))
        self.assertEqual(decode(t).window, WORKED)

    def test_decode_extremes(self):
        self.assertEqual(decode(InversionTable(digits=(0, 0, 0))), identity(3))
        self.assertEqual(decode(InversionTable(digits=(5, 3, 1))), longest_element(3))

    def test_decode_validates_digits(self):
        t = object.__new__(InversionTable)
        object.__setattr__(t, "digits", (0, 2))
        with self.assertRaises(DigitOutOfRangeError):
            decode(t)

    def test_exhaustive_small_n(self):
        for n in range(1, 6):
            bounds = radix_bounds(n).bounds
            windows = set()
            for digits in itertools.product(*(range(b + 1) for b in bounds)):
                w = decode(InversionTable(digits=digits))
                self.assertEqual(encode(w).digits, digits)
                windows.add(w.window)
            self.assertEqual(len(windows), group_order(n))

    @given(inversion_tables(max_n=64))
    def test_decode_then_encode(self, t):
        self.assertEqual(encode(decode(t)), t)

    @given(signed_permutations(max_n=12))
    def test_encode_then_decode(self, w):
        self.assertEqual(decode(encode(w)), w)


class RankTests(SimpleTestCase):
    def test_identity_and_longest(self):
        for n in range(1, 7):
            self.assertEqual(rank(identity(n)), 0)
            self.assertEqual(rank(longest_element(n)), group_order(n) - 1)
            self.assertEqual(unrank(0, n), identity(n))
            self.assertEqual(unrank(group_order(n) - 1, n), longest_element(n))

    def test_two_digit_value(self):
        self.assertEqual(rank_digits((1, 0)), 2)

    def test_out_of_range(self):
        with self.assertRaises(RankOutOfRangeError):
            unrank(48, 3)
        with self.assertRaises(RankOutOfRangeError):
            unrank(-1, 3)

    def test_round_trip_exhaustive(self):
        for n in range(1, 6):
            ranks = set()
            for r in range(group_order(n)):
                w = unrank(r, n)
                self.assertEqual(rank(w), r)
                ranks.add(w.window)
            self.assertEqual(len(ranks), group_order(n))

    def test_rank_is_monotone_in_table_order(self):
        tables = [encode(w).digits for w in stream(4, 0, group_order(4))]
        self.assertEqual(tables, sorted(tables))

    def test_big_ranks_are_exact(self):
        n = 30
        top = group_order(n) - 1
        self.assertEqual(unrank(top, n), longest_element(n))
        self.assertEqual(rank(longest_element(n)), top)

    @given(st.integers(min_value=1, max_value=40).flatmap(
        lambda n: st.tuples(st.just(n), st.integers(min_value=0, max_value=group_order(n) - 1))
    ))
    def test_unrank_then_rank(self, case):
        n, r = case
        self.assertEqual(rank(unrank(r, n)), r)


class TableTextTests(SimpleTestCase):
    def test_format_and_parse(self):
        t = parse_table("(3:7:8:7:0:3:1:0)")
        self.assertEqual(t.digits, (3, 7, 8, 7, 0, 3, 1, 0))
        self.assertEqual(format_table(t), "(3:7:8:7:0:3:1:0)")
        self.assertEqual(parse_table("( 1 : 0 )").digits, (1, 0))

    def test_parse_rejects_garbage(self):
        with self.assertRaises(WindowParseError):
            parse_table("3:7")
        with self.assertRaises(DigitOutOfRangeError):
            parse_table("(4:1)")
