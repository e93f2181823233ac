#
# Copyright (C) 2024 mdlhist Developers.
#
# This software is licensed under the GNU Affero General Public License
# version 3 (see the file LICENSE).

"""Tests for the compiled greedy merge loop."""

import heapq
import math

import numpy as np
from testtools.matchers import Equals

from mdlhist.criterion.base import INTERVAL_ENTROPY, INTERVAL_FACTORIAL
from mdlhist.criterion.combinatorics import log_factorial_array
from mdlhist.criterion.enumerative import EnumCriterion
from mdlhist.criterion.nml import NMLCriterion
from mdlhist.evaluation.densities import random_generator
from mdlhist.search import kernels
from mdlhist.search.state import initial_state
from mdlhist.tests import TestCase
from mdlhist.tests.factory import BinnedTestCase


class TestHeap(TestCase):

    def test_pops_in_tuple_order(self):
        rng = random_generator(3)
        # Few distinct keys, so that ties on the key are frequent.
        keys = rng.integers(0, 5, size=200).astype(np.float64)
        slots = rng.permutation(200)
        heap_keys = np.empty(200)
        heap_slots = np.empty(200, dtype=np.int64)
        size = 0
        for key, slot in zip(keys, slots):
            size = kernels.heap_push(
                heap_keys, heap_slots, size, key, slot)
        expected = sorted(zip(keys.tolist(), slots.tolist()))
        observed = []
        while size:
            key, slot, size = kernels.heap_pop(heap_keys, heap_slots, size)
            observed.append((float(key), int(slot)))
        self.assertEqual(expected, observed)

    def test_interleaved_with_heapq(self):
        rng = random_generator(4)
        heap_keys = np.empty(400)
        heap_slots = np.empty(400, dtype=np.int64)
        size = 0
        queue = []
        for step in range(400):
            if queue and rng.random() < 0.4:
                key, slot, size = kernels.heap_pop(
                    heap_keys, heap_slots, size)
                self.assertEqual(heapq.heappop(queue),
                                 (float(key), int(slot)))
            else:
                entry = (float(rng.integers(0, 10)), step)
                size = kernels.heap_push(
                    heap_keys, heap_slots, size, entry[0], entry[1])
                heapq.heappush(queue, entry)
        self.assertThat(size, Equals(len(queue)))


class TestIntervalCost(TestCase):

    def test_factorial_form(self):
        criterion = EnumCriterion(40, 100)
        table = log_factorial_array(40)
        for h, width in [(0, 0), (0, 7), (1, 1), (12, 30), (40, 100)]:
            self.assertClose(
                criterion.interval_cost(h, width),
                kernels.interval_cost(INTERVAL_FACTORIAL, h, width, table),
                1e-12)

    def test_entropy_form(self):
        criterion = NMLCriterion(40, 100)
        table = np.zeros(1)
        for h, width in [(0, 0), (0, 7), (1, 1), (12, 30), (40, 100)]:
            self.assertClose(
                criterion.interval_cost(h, width),
                kernels.interval_cost(INTERVAL_ENTROPY, h, width, table),
                1e-12)

    def test_zero_width(self):
        self.assertEqual(
            math.inf,
            kernels.interval_cost(INTERVAL_ENTROPY, 3, 0, np.zeros(1)))


class TestCompiledCollapse(BinnedTestCase):

    def assertCollapsesAlike(self, make_criterion, seed):
        for _, binned, _ in self.random_instances(60, seed=seed):
            criterion = make_criterion(binned.n, binned.E)
            cuts = np.arange(binned.E + 1)
            compiled = initial_state(binned, cuts, criterion)
            plain = initial_state(binned, cuts, criterion)
            removed, sums = compiled.collapse(compiled=True)
            expected_removed, expected_sums = plain.collapse(compiled=False)
            self.assertEqual(expected_removed, removed)
            for a, b in zip(expected_sums, sums):
                self.assertClose(a, b, 1e-9)
            self.assertThat(compiled.K, Equals(1))
            self.assertThat(compiled.merges, Equals(plain.merges))
            self.assertEqual(plain.counts, compiled.counts)
            self.assertClose(plain.cost, compiled.cost, 1e-9)

    def test_enum(self):
        self.assertCollapsesAlike(EnumCriterion, seed=11)

    def test_nml(self):
        self.assertCollapsesAlike(NMLCriterion, seed=12)

    def test_after_merges(self):
        _, binned, _ = next(self.random_instances(1, seed=5, max_n=40))
        criterion = EnumCriterion(binned.n, binned.E)
        cuts = np.arange(binned.E + 1)
        compiled = initial_state(binned, cuts, criterion)
        plain = initial_state(binned, cuts, criterion)
        while compiled.K > max(1, binned.E // 2):
            compiled.merge_best()
            plain.merge_best()
        self.assertEqual(
            plain.collapse(compiled=False)[0],
            compiled.collapse(compiled=True)[0])

    def test_single_interval(self):
        _, binned, _ = next(self.random_instances(1, seed=6))
        state = initial_state(
            binned, [0, binned.E], EnumCriterion(binned.n, binned.E))
        self.assertEqual(([], []), state.collapse(compiled=True))
        self.assertThat(state.K, Equals(1))
