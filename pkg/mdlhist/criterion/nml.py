#
# Copyright (C) 2024 mdlhist Developers.
#
# This software is licensed under the GNU Affero General Public License
# version 3 (see the file LICENSE).

"""The normalized maximum likelihood criterion.

    ln C(E, K-1) + ln R(n, K) + n ln n - sum of h_k ln h_k
        + sum of h_k ln E_k

where R(n, K) is the parametric complexity of the K-category multinomial.
"""

import math

import numpy as np
from scipy.special import gammaln, logsumexp, xlogy
from zope.interface import implementer

from mdlhist.criterion.base import (
    INTERVAL_ENTROPY,
    AdditiveCriterion,
    CostBreakdown,
    )
from mdlhist.criterion.combinatorics import (
    log_binomial,
    log_binomials,
    xlogw,
    xlogw_array,
    xlogx,
    )
from mdlhist.interface.criterion import ICriterion

# n -> [nan, ln R(n, 1), ln R(n, 2), ...]
_complexity_tables = {}


def _log_complexity_two(n):
    """ln R(n, 2) summed over the n + 1 compositions."""
    if n == 0:
        return 0.0
    h = np.arange(n + 1, dtype=np.float64)
    terms = (gammaln(n + 1) - gammaln(h + 1) - gammaln(n - h + 1)
             + xlogy(h, h / n) + xlogy(n - h, (n - h) / n))
    return float(logsumexp(terms))


def nml_complexity_table(n, K_max):
    """ln R(n, K) for K = 1..K_max, indexed by K.

    Uses R(n, K + 2) = R(n, K + 1) + (n / K) R(n, K) in log space.  The
    table is kept per n and extended when a larger K is requested.
    """
    table = _complexity_tables.get(n)
    if table is None:
        table = _complexity_tables[n] = [math.nan, 0.0]
    while len(table) <= K_max:
        K = len(table)
        if n == 0:
            table.append(0.0)
        elif K == 2:
            table.append(_log_complexity_two(n))
        else:
            table.append(float(np.logaddexp(
                table[K - 1], math.log(n / (K - 2)) + table[K - 2])))
    return table


def nml_parametric_complexity(n, K):
    """ln R(n, K), in nats."""
    if n < 0 or K < 1:
        raise ValueError(
            'The complexity needs n >= 0 and K >= 1: (%r, %r)' % (n, K))
    return nml_complexity_table(int(n), int(K))[int(K)]


@implementer(ICriterion)
class NMLCriterion(AdditiveCriterion):
    """NML criterion bound to n observations on E bins.

    The choice of E itself is not priced.
    """

    name = 'nml'
    interval_kind = INTERVAL_ENTROPY

    def __init__(self, n, E):
        super(NMLCriterion, self).__init__(n, E)
        self.constant = xlogx(self.n)

    def _model_cost(self, K):
        if K - 1 > self.E:
            return math.inf
        return (log_binomial(self.E, K - 1)
                + nml_parametric_complexity(self.n, K))

    def model_costs(self, K):
        K = np.asarray(K, dtype=np.int64)
        costs = np.full(K.shape, math.inf)
        feasible = K - 1 <= self.E
        if feasible.any():
            k = K[feasible]
            table = np.asarray(nml_complexity_table(self.n, int(k.max())))
            costs[feasible] = log_binomials(self.E, k - 1) + table[k]
        return costs

    def interval_cost(self, h, width):
        if h == 0:
            return 0.0
        if width == 0:
            return math.inf
        return h * math.log(width) - h * math.log(h)

    def interval_costs(self, h, width):
        return xlogw_array(h, width) - xlogy(h, h)

    def breakdown(self, model):
        K = model.K
        counts = [int(h) for h in model.counts]
        multinomial = (nml_parametric_complexity(self.n, K) + xlogx(self.n)
                       - sum(xlogx(h) for h in counts))
        return CostBreakdown(
            index_terms=(log_binomial(self.E, K - 1)
                         if K - 1 <= self.E else math.inf),
            multinomial_terms=multinomial,
            bin_index_terms=sum(
                xlogw(h, int(w)) for h, w in zip(counts, model.widths)))


def nml_cost(model, n, E):
    """The NML cost of `model` with its terms grouped."""
    return NMLCriterion(n, E).breakdown(model)
