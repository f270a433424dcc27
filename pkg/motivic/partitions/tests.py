from django.test import SimpleTestCase

from core.polynomials import BiPoly
from partitions.enumeration import (
    Partition,
    compositions,
    falling_factorial,
    partitions_of,
)


def partition_count(n: int) -> int:
    # Euler's pentagonal number recurrence
    p = [1] + [0] * n
    for m in range(1, n + 1):
        k, total = 1, 0
        while True:
            g1 = k * (3 * k - 1) // 2
            g2 = k * (3 * k + 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[m - g1]
            if g2 <= m:
                total += sign * p[m - g2]
            k += 1
        p[m] = total
    return p[n]


class PartitionTests(SimpleTestCase):
    def test_empty_partition(self):
        self.assertEqual(partitions_of(0), [Partition()])
        self.assertEqual(Partition().weight, 0)
        self.assertEqual(Partition().aut_order(), 1)

    def test_order_for_four(self):
        self.assertEqual(
            [p.parts for p in partitions_of(4)],
            [[4], [3, 1], [2, 2], [2, 1, 1], [1, 1, 1, 1]],
        )

    def test_count_ten(self):
        self.assertEqual(len(partitions_of(10)), 42)

    def test_counts_match_recurrence(self):
        for n in range(31):
            with self.subTest(n=n):
                found = partitions_of(n)
                self.assertEqual(len(found), partition_count(n))
                self.assertEqual(len(set(found)), len(found))
                self.assertTrue(all(p.weight == n for p in found))

    def test_negative(self):
        with self.assertRaises(ValueError):
            partitions_of(-1)

    def test_aut_order(self):
        self.assertEqual(Partition.from_parts([2, 1, 1]).aut_order(), 2)
        self.assertEqual(Partition.from_parts([1, 1, 1, 1]).aut_order(), 24)
        self.assertEqual(Partition.from_parts([2, 2]).aut_order(), 2)

    def test_multiplicity_form(self):
        alpha = Partition.from_parts([3, 1, 1])
        self.assertEqual(alpha.mult, (2, 0, 1))
        self.assertEqual(alpha.norm, 3)
        self.assertEqual(alpha.weight, 5)
        self.assertEqual(str(alpha), "(3,1^2)")
        self.assertEqual(alpha.to_schema().model_dump(), {"mult": [2, 0, 1]})

    def test_trailing_zero_rejected(self):
        with self.assertRaises(ValueError):
            Partition((1, 0))

    def test_falling_factorial(self):
        self.assertEqual(falling_factorial(3, 3), BiPoly.constant(6))
        self.assertEqual(falling_factorial(BiPoly.parse("u^7+v"), 0), BiPoly.constant(1))
        self.assertEqual(falling_factorial(BiPoly.parse("u*v"), 2), BiPoly.parse("u^2*v^2 - u*v"))
        self.assertEqual(falling_factorial(-1, 3), BiPoly.constant(-6))

    def test_compositions(self):
        self.assertEqual(list(compositions(1, 2)), [(0, 1), (1, 0)])
        self.assertEqual(list(compositions(0, 3)), [(0, 0, 0)])
        self.assertEqual(len(list(compositions(4, 3))), 15)
        self.assertTrue(all(sum(c) == 4 for c in compositions(4, 3)))
