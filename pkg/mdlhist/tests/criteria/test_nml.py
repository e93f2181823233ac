#
# Copyright (C) 2024 mdlhist Developers.
#
# This software is licensed under the GNU Affero General Public License
# version 3 (see the file LICENSE).

"""Tests for the normalized maximum likelihood criterion."""

import math

from mdlhist.criterion.nml import (
    NMLCriterion,
    nml_complexity_table,
    nml_cost,
    nml_parametric_complexity,
    )
from mdlhist.model.histogram import HistogramModel
from mdlhist.tests import TestCase


def compositions(n, K):
    """Every K-tuple of non-negative integers summing to n."""
    if K == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in compositions(n - first, K - 1):
            yield (first,) + rest


def brute_force_complexity(n, K):
    """R(n, K) summed term by term."""
    total = 0.0
    for h in compositions(n, K):
        term = math.factorial(n)
        for count in h:
            term /= math.factorial(count)
            if count:
                term *= (count / n) ** count
        total += term
    return total


class TestParametricComplexity(TestCase):

    def test_one_category(self):
        for n in (0, 1, 10, 10 ** 5):
            self.assertEqual(0.0, nml_parametric_complexity(n, 1))

    def test_one_observation(self):
        self.assertClose(math.log(2), nml_parametric_complexity(1, 2), 1e-12)

    def test_two_observations(self):
        self.assertClose(
            math.log(2.5), nml_parametric_complexity(2, 2), 1e-12)

    def test_against_compositions(self):
        for n in range(1, 13):
            for K in range(1, 6):
                self.assertClose(
                    math.log(brute_force_complexity(n, K)),
                    nml_parametric_complexity(n, K), 1e-9)

    def test_no_observation(self):
        self.assertEqual(0.0, nml_parametric_complexity(0, 7))

    def test_increasing_in_K(self):
        table = nml_complexity_table(500, 200)
        self.assertTrue(all(b > a for a, b in zip(table[1:], table[2:])))

    def test_table_extends(self):
        short = list(nml_complexity_table(37, 5))
        longer = nml_complexity_table(37, 50)
        self.assertEqual(short, longer[:6])

    def test_invalid(self):
        self.assertRaises(ValueError, nml_parametric_complexity, 5, 0)
        self.assertRaises(ValueError, nml_parametric_complexity, -1, 2)


class TestNMLCost(TestCase):

    def test_single_interval(self):
        model = HistogramModel([0, 64], [25])
        self.assertClose(25 * math.log(64), nml_cost(model, 25, 64).total,
                         1e-9)

    def test_small_model(self):
        model = HistogramModel([0, 4, 8], [3, 1])
        complexity = 2 + 2 * 4 * 0.25 * 0.75 ** 3 + 6 * 0.5 ** 4
        expected = (math.log(8) + math.log(complexity)
                    + 4 * math.log(4) - 3 * math.log(3)
                    + 3 * math.log(4) + math.log(4))
        self.assertClose(expected, nml_cost(model, 4, 8).total, 1e-9)

    def test_too_many_intervals(self):
        criterion = NMLCriterion(5, 2)
        self.assertEqual(math.inf, criterion.model_cost(4))
        self.assertTrue(math.isfinite(criterion.model_cost(3)))

    def test_constant(self):
        self.assertClose(10 * math.log(10), NMLCriterion(10, 4).constant,
                         1e-12)
