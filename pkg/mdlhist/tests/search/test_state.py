#
# Copyright (C) 2024 mdlhist Developers.
#
# This software is licensed under the GNU Affero General Public License
# version 3 (see the file LICENSE).

"""Tests for the interval list and merge queue of the greedy search."""

import numpy as np
from testtools.matchers import Equals

from mdlhist.criterion.enumerative import EnumCriterion
from mdlhist.criterion.nml import NMLCriterion
from mdlhist.data.dataset import Dataset
from mdlhist.evaluation.densities import random_generator
from mdlhist.search.greedy import merge_to_one
from mdlhist.search.state import default_cuts, initial_state
from mdlhist.tests.factory import BinnedTestCase


class TestInitialState(BinnedTestCase):

    def test_single_pair(self):
        binned, _ = self.bin(Dataset([0.0, 5.0]))
        state = initial_state(binned, [0, binned.E], EnumCriterion(2, 6))
        self.assertThat(state.K, Equals(1))
        self.assertThat(state.pending_pairs(), Equals(0))
        self.assertRaises(ValueError, state.merge_best)

    def test_full_grid(self):
        binned, _ = self.bin(Dataset(np.arange(8, dtype=float)))
        state = initial_state(
            binned, np.arange(9), EnumCriterion(binned.n, binned.E))
        self.assertThat(state.K, Equals(8))
        self.assertThat(state.pending_pairs(), Equals(7))
        self.assertEqual([1] * 8, state.counts)

    def test_cost_matches_model(self):
        binned, _ = self.bin(Dataset([0.0, 1.0, 1.0, 6.0]))
        criterion = EnumCriterion(binned.n, binned.E)
        state = initial_state(binned, binned.candidate_cuts(), criterion)
        self.assertClose(
            criterion.breakdown(state.model()).total, state.cost, 1e-9)

    def test_default_cuts(self):
        binned, _ = self.bin_by_E(Dataset([0.0, 1.0]), 100)
        self.assertThat(default_cuts(binned, 4096).size, Equals(101))
        self.assertEqual([0, 1, 99, 100], default_cuts(binned, 10).tolist())


class TestMerge(BinnedTestCase):

    def test_merge_folds_right_slot(self):
        binned, _ = self.bin(Dataset(np.arange(8, dtype=float)))
        state = initial_state(
            binned, np.arange(9), EnumCriterion(binned.n, binned.E))
        _, position = state.merge(2)
        self.assertThat(position, Equals(3))
        self.assertThat(state.K, Equals(7))
        self.assertEqual(
            [0, 1, 2, 4, 5, 6, 7, 8], state.current_cuts().tolist())
        self.assertEqual([1, 1, 2, 1, 1, 1, 1], state.model().counts.tolist())
        self.assertThat(state.pending_pairs(), Equals(6))

    def test_last_slot_has_no_successor(self):
        binned, _ = self.bin(Dataset([0.0, 1.0, 2.0]))
        state = initial_state(
            binned, np.arange(4), EnumCriterion(binned.n, binned.E))
        self.assertRaises(ValueError, state.merge, 2)

    def test_merge_best_is_cheapest(self):
        rng = random_generator(4)
        for criterion_class in (EnumCriterion, NMLCriterion):
            for _, binned, _ in self.random_instances(30, seed=5):
                criterion = criterion_class(binned.n, binned.E)
                state = initial_state(
                    binned, np.arange(binned.E + 1), criterion)
                while state.K > 1:
                    cheapest = min(
                        state.merge_delta(i)
                        for i in list(state.slots())[:-1])
                    delta, _ = state.merge_best()
                    self.assertClose(cheapest, delta, 1e-9)
                    if rng.random() < 0.1:
                        break

    def test_incremental_cost_stays_exact(self):
        rng = random_generator(6)
        d = Dataset(rng.standard_normal(10 ** 4))
        binned, _ = self.bin_by_E(d, 2048)
        criterion = EnumCriterion(binned.n, binned.E)
        state = initial_state(binned, np.arange(binned.E + 1), criterion)
        live = list(state.slots())
        step = 0
        while state.K > 1:
            r = int(rng.integers(0, len(live) - 1))
            state.merge(live[r])
            del live[r + 1]
            step += 1
            if step % 100 == 0 or state.K == 1:
                self.assertClose(state.recompute_cost(), state.cost, 1e-8)
        self.assertEqual([0, binned.E], state.current_cuts().tolist())


class TestMergeToOne(BinnedTestCase):

    def test_best_cost_is_that_of_best_cuts(self):
        for _, binned, _ in self.random_instances(40, seed=8):
            criterion = EnumCriterion(binned.n, binned.E)
            cuts, cost, merges = merge_to_one(
                binned, np.arange(binned.E + 1), criterion)
            counts = binned.counts_between(cuts)
            self.assertClose(
                criterion.total_cost(counts.tolist(),
                                     np.diff(cuts).tolist()),
                cost, 1e-8)
            self.assertThat(merges, Equals(binned.E - 1))
