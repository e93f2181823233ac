#
# Copyright (C) 2024 mdlhist Developers.
#
# This software is licensed under the GNU Affero General Public License
# version 3 (see the file LICENSE).

"""Tests for the histogram model and its density."""

import numpy as np
from testtools.matchers import Equals

from mdlhist.data.dataset import Dataset
from mdlhist.data.grid import GridSpec
from mdlhist.model.histogram import (
    HistogramModel,
    count_singular,
    density_at,
    )
from mdlhist.tests.factory import BinnedTestCase, two_cluster_dataset


class TestHistogramModel(BinnedTestCase):

    def test_from_cuts(self):
        binned, _ = self.bin(two_cluster_dataset(1, 19))
        model = HistogramModel.from_cuts(binned, [0, 99, 100])
        self.assertEqual([1, 19], model.counts.tolist())
        self.assertEqual([99, 1], model.widths.tolist())
        self.assertThat(model.K, Equals(2))
        self.assertThat(model.n, Equals(20))
        self.assertThat(model.E, Equals(100))
        self.assertTrue(model.is_compatible(binned))

    def test_incompatible_counts(self):
        binned, _ = self.bin(two_cluster_dataset(1, 19))
        model = HistogramModel([0, 99, 100], [10, 10])
        self.assertFalse(model.is_compatible(binned))

    def test_single(self):
        binned, _ = self.bin(two_cluster_dataset(3, 3))
        model = HistogramModel.single(binned)
        self.assertEqual([0, 100], model.cut_indices.tolist())
        self.assertEqual([6], model.counts.tolist())

    def test_equality(self):
        self.assertEqual(
            HistogramModel([0, 2, 4], [1, 1]),
            HistogramModel([0, 2, 4], [1, 1]))
        self.assertNotEqual(
            HistogramModel([0, 2, 4], [1, 1]),
            HistogramModel([0, 1, 4], [1, 1]))

    def test_count_mismatch(self):
        self.assertRaises(ValueError, HistogramModel, [0, 2, 4], [1])

    def test_decreasing_endpoints(self):
        self.assertRaises(ValueError, HistogramModel, [0, 3, 2], [1, 1])

    def test_negative_count(self):
        self.assertRaises(ValueError, HistogramModel, [0, 2, 4], [1, -1])


class TestDensityAt(BinnedTestCase):

    def setUp(self):
        super(TestDensityAt, self).setUp()
        self.grid = GridSpec(0.1, 10, 0.0)
        self.model = HistogramModel([0, 5, 10], [2, 8])

    def test_interval_densities(self):
        densities = self.model.densities(self.grid)
        self.assertClose(0.4, densities[0], 1e-12)
        self.assertClose(1.6, densities[1], 1e-12)

    def test_evaluation(self):
        self.assertClose(0.4, density_at(self.model, self.grid, 0.25), 1e-12)
        self.assertClose(1.6, density_at(self.model, self.grid, 0.75), 1e-12)

    def test_intervals_are_closed_on_the_right(self):
        self.assertClose(0.4, density_at(self.model, self.grid, 0.5), 1e-12)
        self.assertClose(1.6, density_at(self.model, self.grid, 1.0), 1e-12)

    def test_zero_outside(self):
        self.assertThat(density_at(self.model, self.grid, 0.0), Equals(0.0))
        self.assertThat(density_at(self.model, self.grid, -1.0), Equals(0.0))
        self.assertThat(density_at(self.model, self.grid, 1.1), Equals(0.0))

    def test_array(self):
        values = self.model.density_at(self.grid, np.array([0.25, 0.75]))
        self.assertEqual((2,), values.shape)

    def test_single_interval(self):
        d = Dataset([0.0, 0.3, 1.0])
        binned, grid = self.bin(d, 0.01)
        model = HistogramModel.single(binned)
        self.assertClose(
            1.0 / (d.length + grid.epsilon),
            density_at(model, grid, 0.5), 1e-12)

    def test_normalised(self):
        for _, binned, grid in self.random_instances(20, seed=2):
            cuts = np.unique(np.concatenate(
                ([0, binned.E], binned.candidate_cuts()[::2])))
            model = HistogramModel.from_cuts(binned, cuts)
            mass = np.sum(
                model.densities(grid) * model.widths * grid.epsilon)
            self.assertClose(1.0, mass, 1e-12)

    def test_empty_interval_has_zero_density(self):
        binned, grid = self.bin(two_cluster_dataset(10, 10))
        model = HistogramModel.from_cuts(binned, [0, 1, 99, 100])
        self.assertThat(density_at(model, grid, 50.0), Equals(0.0))


class TestCountSingular(BinnedTestCase):

    def test_wide_interval(self):
        binned, _ = self.bin(two_cluster_dataset(5, 5))
        model = HistogramModel.single(binned)
        self.assertThat(count_singular(model, binned), Equals(0))

    def test_duplicates_in_one_cell(self):
        binned, grid = self.bin(Dataset([5.0] * 7))
        model = HistogramModel.single(binned)
        self.assertThat(count_singular(model, binned, grid), Equals(7))

    def test_two_cluster_optimum(self):
        # The width one interval holds all the repeated values.
        binned, _ = self.bin(two_cluster_dataset(1, 19))
        model = HistogramModel.from_cuts(binned, [0, 99, 100])
        self.assertThat(count_singular(model, binned), Equals(19))

    def test_several_values_in_one_cell(self):
        binned, _ = self.bin(Dataset([0.0, 0.1, 0.2, 10.0]))
        model = HistogramModel.from_cuts(binned, [0, 1, 10, 11])
        self.assertThat(count_singular(model, binned), Equals(1))
