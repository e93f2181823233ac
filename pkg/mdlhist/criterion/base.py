#
# Copyright (C) 2024 mdlhist Developers.
#
# This software is licensed under the GNU Affero General Public License
# version 3 (see the file LICENSE).

"""Base classes for the additive criteria."""

import logging
import math

import numpy as np

# Forms of the interval cost a compiled loop can evaluate.
INTERVAL_FACTORIAL = 0  # h ln w - ln h!
INTERVAL_ENTROPY = 1  # h ln w - h ln h


class CostBreakdown(object):
    """A criterion value split into the three groups of terms.

    :ivar index_terms: Indexing of the model (K, endpoints, granularity).
    :ivar multinomial_terms: Encoding of the counts.
    :ivar bin_index_terms: Encoding of the bins within the intervals.
    """

    def __init__(self, index_terms, multinomial_terms, bin_index_terms):
        self.index_terms = index_terms
        self.multinomial_terms = multinomial_terms
        self.bin_index_terms = bin_index_terms

    def __repr__(self):
        return ('<CostBreakdown total=%r index=%r multinomial=%r '
                'bin_index=%r>' % (
                    self.total, self.index_terms, self.multinomial_terms,
                    self.bin_index_terms))

    @property
    def total(self):
        return (self.index_terms + self.multinomial_terms
                + self.bin_index_terms)

    @property
    def compatible(self):
        return not math.isinf(self.total)

    def as_dict(self):
        return {
            'index_terms': self.index_terms,
            'multinomial_terms': self.multinomial_terms,
            'bin_index_terms': self.bin_index_terms,
            'total': self.total,
            }


class AdditiveCriterion(object):
    """A criterion of the form constant + model_cost(K) + sum of intervals.

    Derived classes provide `_model_cost`, `interval_cost`,
    `interval_costs`, `constant` and `breakdown`, and set `interval_kind`
    when their interval cost has one of the compiled forms.
    """

    name = None
    interval_kind = None

    def __init__(self, n, E):
        if n < 0 or E < 1:
            raise ValueError('Invalid criterion size n=%r E=%r' % (n, E))
        self.n = int(n)
        self.E = int(E)
        self._model_costs = {}
        self.logger = logging.getLogger('mdlhist')

    def __repr__(self):
        return '<%s n=%d E=%d>' % (self.__class__.__name__, self.n, self.E)

    def model_cost(self, K):
        try:
            return self._model_costs[K]
        except KeyError:
            cost = self._model_costs[K] = self._model_cost(K)
            return cost

    def model_costs(self, K):
        """model_cost for each entry of an array of interval counts."""
        return np.array([self.model_cost(int(k)) for k in np.ravel(K)])

    def merge_delta(self, h_a, width_a, h_b, width_b, K):
        """c(M_{K-1}) - c(M_K) when intervals A and B are merged."""
        return (self.model_cost(K - 1) - self.model_cost(K)
                + self.interval_cost(h_a + h_b, width_a + width_b)
                - self.interval_cost(h_a, width_a)
                - self.interval_cost(h_b, width_b))

    def total_cost(self, counts, widths):
        intervals = math.fsum(
            self.interval_cost(h, width) for h, width in zip(counts, widths))
        return self.constant + self.model_cost(len(counts)) + intervals
