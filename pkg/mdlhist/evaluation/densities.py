#
# Copyright (C) 2024 mdlhist Developers.
#
# This software is licensed under the GNU Affero General Public License
# version 3 (see the file LICENSE).

"""The reference densities of the benchmarks.

Every sample is drawn from a Philox counter-based stream so that a seed
gives the same data on every platform.
"""

import numpy as np
from scipy import stats
from zope.interface import implementer

from mdlhist.data.dataset import Dataset
from mdlhist.interface.density import IReferenceDensity

TRIANGLE_MODE = 0.158
TRIANGLE_MIXTURE = ((0.1, 0.158), (0.3, 0.258), (0.4, 0.500), (0.2, 0.858))
CLAW = ((0.5, 0.0, 1.0), (0.1, -1.0, 0.1), (0.1, -0.5, 0.1),
        (0.1, 0.0, 0.1), (0.1, 0.5, 0.1), (0.1, 1.0, 0.1))

# Multiples of the scale where the shape of a bell changes.
_BELL_OFFSETS = np.array([-12, -8, -4, -2, -1, 0, 1, 2, 4, 8, 12], dtype=float)


def random_generator(seed):
    return np.random.Generator(np.random.Philox(seed))


def triangle(mode):
    """The triangular distribution on [0, 1] peaking at mode."""
    return stats.triang(mode, loc=0.0, scale=1.0)


@implementer(IReferenceDensity)
class ReferenceDensity(object):
    """A density backed by a frozen scipy distribution."""

    def __init__(self, name, distribution, breakpoints):
        self.name = name
        self.distribution = distribution
        self.support = tuple(float(bound) for bound in distribution.support())
        self._breakpoints = np.unique(np.asarray(breakpoints, dtype=float))

    def __repr__(self):
        return '<%s %s>' % (self.__class__.__name__, self.name)

    def pdf(self, x):
        return self.distribution.pdf(x)

    def cdf(self, x):
        return self.distribution.cdf(x)

    def sample(self, n, seed):
        if n < 1:
            raise ValueError('A sample needs at least one value: %r' % (n,))
        return np.asarray(self._draw(random_generator(seed), n))

    def _draw(self, rng, n):
        return self.distribution.rvs(size=n, random_state=rng)

    def breakpoints(self):
        return self._breakpoints


class CauchyDensity(ReferenceDensity):
    """The standard Cauchy density, drawn as a ratio of two normals."""

    def __init__(self, name='cauchy'):
        decades = 10.0 ** np.arange(0, 9)
        super(CauchyDensity, self).__init__(
            name, stats.cauchy(),
            np.concatenate((-decades, [0.0], decades)))

    def _draw(self, rng, n):
        return rng.standard_normal(n) / rng.standard_normal(n)


@implementer(IReferenceDensity)
class MixtureDensity(object):
    """A finite mixture of frozen scipy distributions."""

    def __init__(self, name, weights, components, breakpoints):
        weights = np.asarray(weights, dtype=float)
        if not np.isclose(weights.sum(), 1.0):
            raise ValueError('Mixture weights must sum to one.')
        self.name = name
        self.weights = weights
        self.components = list(components)
        lows, highs = zip(*(c.support() for c in self.components))
        self.support = (float(min(lows)), float(max(highs)))
        self._breakpoints = np.unique(np.asarray(breakpoints, dtype=float))

    def __repr__(self):
        return '<MixtureDensity %s of %d>' % (
            self.name, len(self.components))

    def pdf(self, x):
        return sum(w * c.pdf(x)
                   for w, c in zip(self.weights, self.components))

    def cdf(self, x):
        return sum(w * c.cdf(x)
                   for w, c in zip(self.weights, self.components))

    def sample(self, n, seed):
        if n < 1:
            raise ValueError('A sample needs at least one value: %r' % (n,))
        rng = random_generator(seed)
        labels = rng.choice(len(self.components), size=n, p=self.weights)
        values = np.empty(n)
        for label, component in enumerate(self.components):
            mask = labels == label
            size = int(mask.sum())
            if size:
                values[mask] = component.rvs(size=size, random_state=rng)
        return values

    def breakpoints(self):
        return self._breakpoints


def normal_density(name='normal'):
    return ReferenceDensity(name, stats.norm(), _BELL_OFFSETS)


def uniform_density(name='uniform'):
    return ReferenceDensity(name, stats.uniform(), [0.0, 1.0])


def triangle_density(name='triangle', mode=TRIANGLE_MODE):
    return ReferenceDensity(name, triangle(mode), [0.0, mode, 1.0])


def triangle_mixture_density(name='triangle-mixture'):
    weights, modes = zip(*TRIANGLE_MIXTURE)
    return MixtureDensity(
        name, weights, [triangle(mode) for mode in modes],
        [0.0, 1.0] + list(modes))


def claw_density(name='claw'):
    weights, means, scales = zip(*CLAW)
    breakpoints = np.concatenate([
        mean + scale * _BELL_OFFSETS for mean, scale in zip(means, scales)])
    return MixtureDensity(
        name, weights,
        [stats.norm(loc=mean, scale=scale)
         for mean, scale in zip(means, scales)],
        breakpoints)


class DensityRegistry(object):
    """Has a dictionary of reference densities based on name."""

    def __init__(self):
        self.densities = {}
        for density in (normal_density(), CauchyDensity(), uniform_density(),
                        triangle_density(), triangle_mixture_density(),
                        claw_density()):
            self.densities[density.name] = density

    def __getitem__(self, name):
        return self.densities[name]

    def __contains__(self, name):
        return name in self.densities

    def names(self):
        return sorted(self.densities)


density_registry = DensityRegistry()


def get_density(name):
    """Get a reference density by name."""
    return density_registry[name]


def sample(ref, n, seed):
    """n independent draws from `ref` as a data set."""
    if isinstance(ref, str):
        ref = get_density(ref)
    return Dataset(ref.sample(n, seed))
