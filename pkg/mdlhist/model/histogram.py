#
# Copyright (C) 2024 mdlhist Developers.
#
# This software is licensed under the GNU Affero General Public License
# version 3 (see the file LICENSE).

"""The histogram model and the density it defines."""

import numpy as np


class HistogramModel(object):
    """K intervals cut at grid endpoints, with their counts.

    :ivar cut_indices: The K + 1 endpoint indices t_0 = 0 < ... < t_K = E.
    :ivar counts: The K interval counts.
    """

    def __init__(self, cut_indices, counts):
        cut_indices = np.array(cut_indices, dtype=np.int64)
        counts = np.array(counts, dtype=np.int64)
        if cut_indices.ndim != 1 or cut_indices.size < 2:
            raise ValueError('A model needs at least two endpoints.')
        if counts.size != cut_indices.size - 1:
            raise ValueError(
                '%d counts for %d intervals' % (
                    counts.size, cut_indices.size - 1))
        if np.any(np.diff(cut_indices) < 0):
            raise ValueError('Endpoints must not decrease.')
        if np.any(counts < 0):
            raise ValueError('Counts must be non-negative.')
        cut_indices.setflags(write=False)
        counts.setflags(write=False)
        self.cut_indices = cut_indices
        self.counts = counts

    @classmethod
    def from_cuts(cls, binned, cuts):
        """The compatible model of `binned` with these endpoints."""
        cuts = np.asarray(cuts, dtype=np.int64)
        return cls(cuts, binned.counts_between(cuts))

    @classmethod
    def single(cls, binned):
        return cls.from_cuts(binned, [0, binned.E])

    def __repr__(self):
        return '<HistogramModel K=%d cuts=%s counts=%s>' % (
            self.K, self.cut_indices.tolist(), self.counts.tolist())

    def __eq__(self, other):
        return (isinstance(other, HistogramModel)
                and np.array_equal(self.cut_indices, other.cut_indices)
                and np.array_equal(self.counts, other.counts))

    def __hash__(self):
        return hash((self.cut_indices.tobytes(), self.counts.tobytes()))

    @property
    def K(self):
        return int(self.counts.size)

    @property
    def n(self):
        return int(self.counts.sum())

    @property
    def E(self):
        return int(self.cut_indices[-1] - self.cut_indices[0])

    @property
    def widths(self):
        return np.diff(self.cut_indices)

    def is_compatible(self, binned):
        return (int(self.cut_indices[0]) == 0
                and int(self.cut_indices[-1]) == binned.E
                and np.array_equal(
                    self.counts, binned.counts_between(self.cut_indices)))

    def edges(self, grid):
        """The interval edges in data units."""
        return grid.endpoints(self.cut_indices)

    def densities(self, grid):
        """The density on each interval; zero on empty intervals."""
        widths = self.widths.astype(np.float64)
        scale = self.n * grid.epsilon
        with np.errstate(divide='ignore', invalid='ignore'):
            values = self.counts / (scale * widths)
        return np.where(self.counts > 0, values, 0.0)

    def density_at(self, grid, x):
        return density_at(self, grid, x)


def density_at(model, grid, x):
    """The piecewise constant density of `model` at x.

    (1 / (n epsilon)) * h_k / E_k on ]c_{t_{k-1}}, c_{t_k}], zero outside
    ]c_0, c_E].  Accepts a scalar or an array.
    """
    edges = model.edges(grid)
    values = np.concatenate(([0.0], model.densities(grid), [0.0]))
    positions = np.searchsorted(edges, x, side='left')
    result = values[positions]
    if np.ndim(result) == 0:
        return float(result)
    return result


def count_singular(model, binned, grid=None):
    """The number of observations lying in singular intervals.

    A singular interval is one epsilon-bin wide, not empty, and all its
    observations share one value.
    """
    widths = model.widths
    right = model.cut_indices[1:]
    mask = (widths == 1) & (model.counts > 0)
    cells = right[mask]
    positions = np.searchsorted(binned.indices, cells)
    distinct = binned.distinct[positions]
    return int(model.counts[mask][distinct == 1].sum())
