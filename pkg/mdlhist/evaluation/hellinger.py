#
# Copyright (C) 2024 mdlhist Developers.
#
# This software is licensed under the GNU Affero General Public License
# version 3 (see the file LICENSE).

"""The Hellinger distance between a density and a histogram.

H(p, q) = sqrt(1/2 * integral of (sqrt(p) - sqrt(q))^2), not squared.
"""

import math

import numpy as np

from mdlhist.context import DEFAULT_QUADRATURE_NODES
from mdlhist.evaluation import TailIntegralError


class PiecewiseDensity(object):
    """A density constant on each of K intervals, zero elsewhere.

    :ivar edges: The K + 1 increasing interval edges, in data units.
    :ivar values: The K densities.
    """

    def __init__(self, edges, values):
        edges = np.asarray(edges, dtype=np.float64)
        values = np.asarray(values, dtype=np.float64)
        if edges.size != values.size + 1:
            raise ValueError(
                '%d edges for %d values' % (edges.size, values.size))
        if np.any(np.diff(edges) < 0) or np.any(values < 0):
            raise ValueError('Edges must increase and values be positive.')
        self.edges = edges
        self.values = values

    @classmethod
    def from_model(cls, model, grid):
        return cls(model.edges(grid), model.densities(grid))

    def __repr__(self):
        return '<PiecewiseDensity K=%d on [%r, %r]>' % (
            self.values.size, self.edges[0], self.edges[-1])

    def __call__(self, x):
        padded = np.concatenate(([0.0], self.values, [0.0]))
        return padded[np.searchsorted(self.edges, x, side='left')]

    @property
    def mass(self):
        return float(np.sum(self.values * np.diff(self.edges)))


def _segments(edges, breakpoints):
    """The union of both point sets clipped to the span of edges."""
    lo, hi = edges[0], edges[-1]
    inside = breakpoints[(breakpoints > lo) & (breakpoints < hi)]
    return np.union1d(edges, inside)


def _tail_mass(p, lo, hi):
    below, above = p.cdf(np.array([lo, hi]))
    mass = float(below) + (1.0 - float(above))
    if not math.isfinite(mass) or mass < -1e-12:
        raise TailIntegralError(
            'The tail mass of %r outside [%r, %r] is %r' % (p, lo, hi, mass))
    return max(mass, 0.0)


def hellinger(p, q, nodes=DEFAULT_QUADRATURE_NODES):
    """The Hellinger distance between a reference density and a histogram.

    Inside the histogram the integral is computed by Gauss-Legendre
    quadrature on every piece between the histogram edges and the
    reference breakpoints.  Outside, q is zero and the integral is the
    mass of p there.

    :param p: An `IReferenceDensity`.
    :param q: A `PiecewiseDensity`.
    """
    points = _segments(q.edges, p.breakpoints())
    lo, hi = points[:-1], points[1:]
    keep = hi > lo
    lo, hi = lo[keep], hi[keep]
    t, weights = np.polynomial.legendre.leggauss(nodes)
    half = (hi - lo) / 2
    x = half[:, None] * t[None, :] + ((lo + hi) / 2)[:, None]
    density = np.sqrt(q((lo + hi) / 2))
    reference = p.pdf(x)
    if not np.all(np.isfinite(reference)):
        raise TailIntegralError('%r is not finite on the histogram.' % (p,))
    squares = (np.sqrt(reference) - density[:, None]) ** 2
    inside = float(np.sum(half * (squares @ weights)))
    total = inside + _tail_mass(p, q.edges[0], q.edges[-1])
    return math.sqrt(min(max(total / 2, 0.0), 1.0))


def hellinger_histograms(q1, q2):
    """The exact Hellinger distance between two piecewise densities."""
    points = np.union1d(q1.edges, q2.edges)
    lo, hi = points[:-1], points[1:]
    middle = (lo + hi) / 2
    squares = (np.sqrt(q1(middle)) - np.sqrt(q2(middle))) ** 2
    total = float(np.sum(squares * (hi - lo)))
    return math.sqrt(min(max(total / 2, 0.0), 1.0))


def histogram_from_cdf(ref, lo, hi, bins):
    """The equal-width histogram of `ref` on [lo, hi] from exact masses."""
    edges = np.linspace(lo, hi, bins + 1)
    masses = np.diff(ref.cdf(edges))
    return PiecewiseDensity(edges, np.maximum(masses, 0.0) / np.diff(edges))
