#
# Copyright (C) 2024 mdlhist Developers.
#
# This software is licensed under the GNU Affero General Public License
# version 3 (see the file LICENSE).

"""The fixed epsilon grid.

The grid endpoints are c_t = c0 + t * epsilon for t = 0..E with
c0 = x_min - epsilon / 2, so that E * epsilon = L + epsilon and every value
lies in exactly one half-open cell ]c_{t-1}, c_t].  Cells are numbered from
1 to E, endpoints from 0 to E.
"""

import math

import numpy as np


class GridSpec(object):
    """A regular grid of E epsilon-bins starting at c0."""

    def __init__(self, epsilon, E, c0):
        if epsilon <= 0:
            raise ValueError('epsilon must be positive: %r' % (epsilon,))
        if E < 1:
            raise ValueError('A grid needs at least one bin: %r' % (E,))
        self.epsilon = float(epsilon)
        self.E = int(E)
        self.c0 = float(c0)

    def __repr__(self):
        return '<GridSpec E=%d epsilon=%r c0=%r>' % (
            self.E, self.epsilon, self.c0)

    def __eq__(self, other):
        return (isinstance(other, GridSpec)
                and (self.epsilon, self.E, self.c0)
                == (other.epsilon, other.E, other.c0))

    def __hash__(self):
        return hash((self.epsilon, self.E, self.c0))

    @property
    def cE(self):
        return self.c0 + self.E * self.epsilon

    def endpoint(self, t):
        """The position of grid endpoint t."""
        return self.c0 + t * self.epsilon

    def endpoints(self, cuts):
        """The positions of a sequence of grid endpoint indices."""
        return self.c0 + np.asarray(cuts, dtype=np.float64) * self.epsilon

    def cell_of(self, x):
        """The cell index t with x in ]c_{t-1}, c_t], clamped to [1, E]."""
        t = np.ceil((np.asarray(x, dtype=np.float64) - self.c0)
                    / self.epsilon)
        return np.clip(t, 1, self.E).astype(np.int64)


def build_grid(d, epsilon_req):
    """Build the grid closest to the requested accuracy.

    E is rounded from L / epsilon_req and epsilon is then snapped to
    L / (E - 1), so that E * epsilon = L + epsilon holds exactly.
    """
    if epsilon_req <= 0:
        raise ValueError(
            'The accuracy must be positive: %r' % (epsilon_req,))
    L = d.length
    E = max(1, int(round(L / epsilon_req)) + 1)
    if E > 1:
        epsilon = L / (E - 1)
    elif L == 0:
        epsilon = float(epsilon_req)
    else:
        # A single cell must still hold both extremes.
        epsilon = max(float(epsilon_req), 2 * L)
    return GridSpec(epsilon, E, d.x_min - epsilon / 2)


def build_grid_by_E(d, E):
    """Build the grid with exactly E epsilon-bins."""
    E = int(E)
    if E < 1:
        raise ValueError('A grid needs at least one bin: %r' % (E,))
    epsilon = epsilon_for(d.length, E)
    return GridSpec(epsilon, E, d.x_min - epsilon / 2)


def granulated_grid(d, G, E_full):
    """The grid of G g-bins laid over the E_full epsilon grid of d.

    Each g-bin gathers g = E_full / G epsilon-bins, both grids share c0 and
    cE.
    """
    if G < 1 or E_full % G:
        raise ValueError(
            'The granularity %r does not divide %r' % (G, E_full))
    base = build_grid_by_E(d, E_full)
    return GridSpec(base.epsilon * (E_full // G), G, base.c0)


def _runs(sorted_bins):
    """Run-length encode a non-decreasing integer array."""
    if sorted_bins.size == 0:
        return sorted_bins, sorted_bins
    starts = np.flatnonzero(np.diff(sorted_bins)) + 1
    starts = np.concatenate(([0], starts))
    lengths = np.diff(np.concatenate((starts, [sorted_bins.size])))
    return sorted_bins[starts], lengths


class BinnedData(object):
    """The sparse image of a data set on a grid.

    :ivar indices: The occupied cell indices, increasing, in [1, E].
    :ivar counts: The number of observations in each occupied cell.
    :ivar distinct: The number of distinct values in each occupied cell.
    """

    def __init__(self, E, indices, counts, distinct=None):
        self.E = int(E)
        self.indices = np.asarray(indices, dtype=np.int64)
        self.counts = np.asarray(counts, dtype=np.int64)
        if distinct is None:
            distinct = np.ones_like(self.counts)
        self.distinct = np.asarray(distinct, dtype=np.int64)
        for array in (self.indices, self.counts, self.distinct):
            array.setflags(write=False)
        self.n = int(self.counts.sum())
        self._cumulative = np.concatenate(([0], np.cumsum(self.counts)))

    def __repr__(self):
        return '<BinnedData n=%d E=%d occupied=%d>' % (
            self.n, self.E, self.indices.size)

    def __eq__(self, other):
        return (isinstance(other, BinnedData)
                and self.E == other.E
                and np.array_equal(self.indices, other.indices)
                and np.array_equal(self.counts, other.counts)
                and np.array_equal(self.distinct, other.distinct))

    def as_dict(self):
        """The occupied cells as a {cell index: count} mapping."""
        return dict(zip(self.indices.tolist(), self.counts.tolist()))

    def cumulative(self, cuts):
        """The number of observations at or left of each grid endpoint."""
        positions = np.searchsorted(
            self.indices, np.asarray(cuts, dtype=np.int64), side='right')
        return self._cumulative[positions]

    def counts_between(self, cuts):
        """The interval counts for an increasing sequence of endpoints."""
        return np.diff(self.cumulative(cuts))

    def candidate_cuts(self):
        """The endpoints flanking each occupied cell, plus 0 and E."""
        cuts = np.concatenate(
            ([0, self.E], self.indices - 1, self.indices))
        return np.unique(cuts)


def bin_data(d, g):
    """Map every observation of d to its cell of the grid g."""
    bins = g.cell_of(d.values)
    indices, counts = _runs(bins)
    distinct_indices, distinct = _runs(g.cell_of(d.distinct_values))
    assert np.array_equal(indices, distinct_indices)
    return BinnedData(g.E, indices, counts, distinct)


def candidate_cuts(d, g):
    """The grid endpoints an optimal histogram can cut at.

    For each occupied cell, the endpoints on both of its sides are
    candidates; the grid extremes always are.  There are at most
    2 * (#distinct values) + 2 of them.
    """
    return bin_data(d, g).candidate_cuts()


def epsilon_for(L, E):
    """The accuracy of a grid with E bins over a domain of length L."""
    if L == 0:
        return 1.0
    if E == 1:
        return 2 * L
    return L / (E - 1)


def grid_covers(d, g):
    """True when every value lies strictly inside ]c0, cE]."""
    return bool(g.c0 < d.x_min and d.x_max <= g.cE + 1e-12 * max(
        1.0, math.fabs(g.cE)))
