#
# Copyright (C) 2024 mdlhist Developers.
#
# This software is licensed under the GNU Affero General Public License
# version 3 (see the file LICENSE).

"""Tests for the mdlhist.criterion.combinatorics module."""

import math

import numpy as np
from testtools.matchers import Equals

from mdlhist.criterion.combinatorics import (
    LOG_FACTORIAL_LIMIT,
    log_binomial,
    log_binomials,
    log_factorial,
    log_factorial_array,
    log_factorial_table,
    log_factorials,
    log_multinomial,
    log_star,
    log_stars,
    xlogw,
    xlogw_array,
    xlogx,
    )
from mdlhist.tests import TestCase


class TestLogStar(TestCase):

    def test_one(self):
        self.assertClose(math.log(2.865), log_star(1), 1e-12)

    def test_two(self):
        self.assertClose(math.log(2.865) + math.log(2), log_star(2), 1e-12)

    def test_four(self):
        # log2(4) = 2, log2(2) = 1, log2(1) = 0.
        self.assertClose(
            math.log(2.865) + 3 * math.log(2), log_star(4), 1e-12)

    def test_non_decreasing(self):
        values = [log_star(k) for k in range(1, 2000)]
        self.assertTrue(all(b >= a for a, b in zip(values, values[1:])))

    def test_zero(self):
        self.assertRaises(ValueError, log_star, 0)

    def test_vectorised(self):
        k = np.array([1, 2, 3, 4, 16, 17, 65536, 10 ** 9])
        for expected, observed in zip(k, log_stars(k)):
            self.assertClose(log_star(int(expected)), observed, 1e-12)

    def test_vectorised_zero(self):
        self.assertRaises(ValueError, log_stars, np.array([3, 0]))


class TestLogFactorial(TestCase):

    def test_small(self):
        self.assertThat(log_factorial(0), Equals(0.0))
        self.assertClose(math.log(3628800), log_factorial(10), 1e-12)

    def test_table_and_gamma_agree(self):
        k = LOG_FACTORIAL_LIMIT
        self.assertClose(
            float(log_factorials([k])[0]), log_factorial(k), 1e-6)
        self.assertClose(
            float(log_factorials([k + 1])[0]), log_factorial(k + 1), 1e-6)

    def test_negative(self):
        self.assertRaises(ValueError, log_factorial, -1)

    def test_table_indexing(self):
        table = log_factorial_table(500)
        self.assertTrue(len(table) >= 501)
        self.assertClose(log_factorial(500), table[500], 1e-9)

    def test_array_indexing(self):
        values = log_factorial_array(300)
        self.assertTrue(values.size >= 301)
        self.assertClose(math.log(3628800), values[10], 1e-9)
        self.assertClose(log_factorial(300), values[300], 1e-9)


class TestLogBinomial(TestCase):

    def test_five_two(self):
        self.assertClose(math.log(10), log_binomial(5, 2), 1e-12)

    def test_zero(self):
        self.assertThat(log_binomial(17, 0), Equals(0.0))
        self.assertThat(log_binomial(17, 17), Equals(0.0))

    def test_against_integers(self):
        for a in range(0, 200, 7):
            for b in range(0, a + 1):
                self.assertClose(
                    math.log(math.comb(a, b)), log_binomial(a, b), 1e-9)

    def test_huge_argument(self):
        a = 2 ** 30 + 15
        expected = math.log(math.comb(a, 15))
        observed = log_binomial(a, 15)
        self.assertTrue(abs(observed - expected) <= 1e-10 * expected)

    def test_many_chosen(self):
        a, b = 10 ** 7, 5000
        expected = math.log(math.comb(a, b))
        self.assertTrue(
            abs(log_binomial(a, b) - expected) <= 1e-10 * expected)

    def test_out_of_range(self):
        self.assertRaises(ValueError, log_binomial, 3, 4)
        self.assertRaises(ValueError, log_binomial, 3, -1)

    def test_vectorised(self):
        a = np.array([0, 5, 17, 40, 200, 10 ** 7, 2 ** 30 + 15])
        b = np.array([0, 2, 17, 13, 150, 5000, 15])
        for a_k, b_k, observed in zip(a, b, log_binomials(a, b)):
            expected = log_binomial(int(a_k), int(b_k))
            self.assertClose(expected, observed, 1e-10 * max(1.0, expected))

    def test_vectorised_broadcast(self):
        b = np.arange(0, 21)
        observed = log_binomials(20, b)
        for k in range(21):
            self.assertClose(
                math.log(math.comb(20, k)), observed[k], 1e-9)

    def test_vectorised_out_of_range(self):
        self.assertRaises(ValueError, log_binomials, [3, 5], [1, 6])
        self.assertRaises(ValueError, log_binomials, [3], [-1])


class TestLogMultinomial(TestCase):

    def test_one_class(self):
        self.assertThat(log_multinomial(4, [4]), Equals(0.0))

    def test_two_classes(self):
        self.assertClose(math.log(6), log_multinomial(4, [2, 2]), 1e-12)

    def test_all_ones(self):
        self.assertClose(
            log_factorial(10), log_multinomial(10, [1] * 10), 1e-12)

    def test_zero_counts(self):
        self.assertClose(
            math.log(6), log_multinomial(4, [0, 2, 0, 2]), 1e-12)

    def test_sum_mismatch(self):
        self.assertRaises(ValueError, log_multinomial, 5, [2, 2])


class TestXLog(TestCase):

    def test_zero_conventions(self):
        self.assertThat(xlogx(0), Equals(0.0))
        self.assertThat(xlogw(0, 0), Equals(0.0))
        self.assertThat(xlogw(3, 0), Equals(math.inf))

    def test_vectorised(self):
        h = np.array([0, 0, 2, 5])
        w = np.array([0, 3, 0, 7])
        values = xlogw_array(h, w)
        self.assertEqual([0.0, 0.0, math.inf], values[:3].tolist())
        self.assertClose(5 * math.log(7), values[3], 1e-12)
