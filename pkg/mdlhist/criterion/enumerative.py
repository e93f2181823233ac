#
# Copyright (C) 2024 mdlhist Developers.
#
# This software is licensed under the GNU Affero General Public License
# version 3 (see the file LICENSE).

"""The enumerative criterion.

The cost of a histogram of K intervals with counts h_k over E_k bins is

    log*(K) + ln C(E+K-1, K-1) + ln C(n+K-1, K-1)
        + ln(n! / (h_1! ... h_K!)) + sum of h_k ln E_k
"""

import math

import numpy as np
from zope.interface import implementer

from mdlhist.criterion.base import (
    INTERVAL_FACTORIAL,
    AdditiveCriterion,
    CostBreakdown,
    )
from mdlhist.criterion.combinatorics import (
    log_binomial,
    log_binomials,
    log_factorial_table,
    log_factorials,
    log_multinomial,
    log_star,
    log_stars,
    xlogw,
    xlogw_array,
    )
from mdlhist.interface.criterion import ICriterion


@implementer(ICriterion)
class EnumCriterion(AdditiveCriterion):
    """Enumerative criterion bound to n observations on E bins."""

    name = 'enum'
    interval_kind = INTERVAL_FACTORIAL

    def __init__(self, n, E):
        super(EnumCriterion, self).__init__(n, E)
        self._log_factorials = log_factorial_table(self.n)
        self.constant = self._log_factorials[self.n]

    def _model_cost(self, K):
        return (log_star(K) + log_binomial(self.E + K - 1, K - 1)
                + log_binomial(self.n + K - 1, K - 1))

    def model_costs(self, K):
        K = np.asarray(K, dtype=np.int64)
        return (log_stars(K) + log_binomials(self.E + K - 1, K - 1)
                + log_binomials(self.n + K - 1, K - 1))

    def interval_cost(self, h, width):
        if h == 0:
            return 0.0
        if width == 0:
            return math.inf
        return h * math.log(width) - self._log_factorials[h]

    def interval_costs(self, h, width):
        return xlogw_array(h, width) - log_factorials(h)

    def breakdown(self, model):
        K = model.K
        return CostBreakdown(
            index_terms=log_star(K) + log_binomial(self.E + K - 1, K - 1),
            multinomial_terms=(log_binomial(self.n + K - 1, K - 1)
                               + log_multinomial(self.n, model.counts)),
            bin_index_terms=_bin_index_terms(model.counts, model.widths))


def _bin_index_terms(counts, widths):
    return sum(xlogw(int(h), int(w)) for h, w in zip(counts, widths))


def enum_cost(model, n, E):
    """The enumerative cost of `model` with its terms grouped."""
    return EnumCriterion(n, E).breakdown(model)


def delta_two_vs_one(n, E, alpha, theta):
    """Enum cost of the best two-interval model minus the one-interval one.

    The two-interval model puts round(n * theta) observations on the first
    alpha * E bins and the rest on the remaining bins.  A negative value
    means two intervals are preferred.
    """
    a = int(round(n * theta))
    b = n - a
    two = (log_star(2) + log_binomial(E + 1, 1) + log_binomial(n + 1, 1)
           + log_multinomial(n, [a, b])
           + xlogw(a, alpha * E) + xlogw(b, (1 - alpha) * E))
    one = log_star(1) + n * math.log(E)
    return two - one


def kl_divergence(theta, alpha):
    """KL(theta || alpha) between two Bernoulli distributions, in nats."""
    total = 0.0
    for p, q in ((theta, alpha), (1 - theta, 1 - alpha)):
        if p > 0:
            total += p * math.log(p / q)
    return total


def delta_two_vs_one_asymptotic(n, E, alpha, theta):
    """ln(E + 1) - n KL(theta || alpha), the large n form of
    `delta_two_vs_one` up to terms that do not depend on E."""
    return math.log(E + 1) - n * kl_divergence(theta, alpha)


def kl_transition_threshold(n, alpha, theta, E_max=2 ** 62):
    """The smallest E for which one interval beats two.

    The difference grows like ln(E + 1) so an exponential search followed
    by a bisection finds it.  Returns None when E_max is not enough.
    """
    if delta_two_vs_one(n, 1, alpha, theta) >= 0:
        return 1
    low, high = 1, 2
    while delta_two_vs_one(n, high, alpha, theta) < 0:
        if high >= E_max:
            return None
        low, high = high, min(2 * high, E_max)
    while high - low > 1:
        middle = (low + high) // 2
        if delta_two_vs_one(n, middle, alpha, theta) < 0:
            low = middle
        else:
            high = middle
    return high


def transition_table(sizes=(10, 12, 16, 20, 30, 40, 50), alpha=0.1,
                     theta=0.5):
    """Map each sample size to its two-to-one transition grid size."""
    return dict(
        (n, kl_transition_threshold(n, alpha, theta)) for n in sizes)
