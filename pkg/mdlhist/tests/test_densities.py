#
# Copyright (C) 2024 mdlhist Developers.
#
# This software is licensed under the GNU Affero General Public License
# version 3 (see the file LICENSE).

"""Tests for the reference densities and their samplers."""

import numpy as np
from testtools.matchers import Equals

from mdlhist.evaluation.densities import (
    density_registry,
    get_density,
    sample,
    )
from mdlhist.interface.density import IReferenceDensity
from mdlhist.tests import TestCase


def integrate(density, nodes=64):
    """The mass of `density` over its breakpoints plus its tails."""
    points = density.breakpoints()
    t, weights = np.polynomial.legendre.leggauss(nodes)
    lo, hi = points[:-1], points[1:]
    half = (hi - lo) / 2
    x = half[:, None] * t[None, :] + ((lo + hi) / 2)[:, None]
    inside = float(np.sum(half * (density.pdf(x) @ weights)))
    below, above = density.cdf(np.array([points[0], points[-1]]))
    return inside + float(below) + 1.0 - float(above)


class TestReferenceDensities(TestCase):

    def test_names(self):
        self.assertEqual(
            ['cauchy', 'claw', 'normal', 'triangle', 'triangle-mixture',
             'uniform'], density_registry.names())

    def test_provide_interface(self):
        for name in density_registry.names():
            self.assertProvides(get_density(name), IReferenceDensity)

    def test_integrate_to_one(self):
        for name in density_registry.names():
            self.assertClose(1.0, integrate(get_density(name)), 1e-6)

    def test_breakpoints_sorted(self):
        for name in density_registry.names():
            points = get_density(name).breakpoints()
            self.assertTrue(np.all(np.diff(points) > 0))

    def test_bounded_supports(self):
        self.assertEqual((0.0, 1.0), get_density('triangle').support)
        self.assertEqual(
            (0.0, 1.0), get_density('triangle-mixture').support)
        self.assertEqual(
            (-np.inf, np.inf), get_density('cauchy').support)

    def test_triangle_mode(self):
        triangle = get_density('triangle')
        x = np.array([0.1, 0.158, 0.5])
        values = triangle.pdf(x)
        self.assertEqual(1, int(np.argmax(values)))
        self.assertClose(2.0, float(values[1]), 1e-9)


class TestSample(TestCase):

    def test_uniform_mean(self):
        for seed in range(3):
            d = sample('uniform', 10 ** 4, seed)
            self.assertThat(d.n, Equals(10 ** 4))
            self.assertTrue(0.49 <= float(np.mean(d.values)) <= 0.51)

    def test_deterministic(self):
        for name in density_registry.names():
            first = sample(name, 100, 42)
            second = sample(name, 100, 42)
            self.assertTrue(np.array_equal(first.values, second.values))

    def test_seeds_differ(self):
        self.assertFalse(np.array_equal(
            sample('normal', 100, 1).values,
            sample('normal', 100, 2).values))

    def test_within_support(self):
        for name in ('uniform', 'triangle', 'triangle-mixture'):
            d = sample(name, 5000, 0)
            self.assertTrue(0.0 <= d.x_min and d.x_max <= 1.0)

    def test_cauchy_finite(self):
        d = sample('cauchy', 10 ** 4, 0)
        self.assertTrue(np.all(np.isfinite(d.values)))

    def test_claw_sample_size(self):
        self.assertThat(sample('claw', 333, 5).n, Equals(333))

    def test_needs_one_value(self):
        self.assertRaises(ValueError, get_density('normal').sample, 0, 1)
