#
# Copyright (C) 2024 mdlhist Developers.
#
# This software is licensed under the GNU Affero General Public License
# version 3 (see the file LICENSE).

"""The granulated enumerative criterion.

Interval widths are counted in g-bins of g = E_full / G epsilon-bins.  For
a fixed G the cost is the enumerative cost on G bins plus
log*(G) + n ln(E_full / G).
"""

import math

from mdlhist.criterion.base import CostBreakdown
from mdlhist.criterion.combinatorics import (
    log_binomial,
    log_multinomial,
    log_star,
    xlogw,
    )
from mdlhist.criterion.enumerative import EnumCriterion


class GranularityContext(object):
    """G g-bins laid over E_full epsilon-bins."""

    def __init__(self, E_full, G):
        E_full = int(E_full)
        G = int(G)
        if G < 1 or G > E_full or E_full % G:
            raise ValueError(
                'The granularity %d does not divide %d' % (G, E_full))
        self.E_full = E_full
        self.G = G
        self.g = E_full // G

    def __repr__(self):
        return '<GranularityContext G=%d g=%d>' % (self.G, self.g)

    def granularity_cost(self, n):
        """The terms the granulated criterion adds to Enum on G bins."""
        return log_star(self.G) + n * math.log(self.g)


def genum_cost(model, n, ctx):
    """The granulated cost of a model whose widths are in g-bins."""
    K = model.K
    widths = [int(w) for w in model.widths]
    if sum(widths) != ctx.G:
        raise ValueError(
            'Widths sum to %d g-bins, not to %d' % (sum(widths), ctx.G))
    return CostBreakdown(
        index_terms=(log_star(K) + log_star(ctx.G)
                     + log_binomial(ctx.G + K - 1, K - 1)),
        multinomial_terms=(log_binomial(n + K - 1, K - 1)
                           + log_multinomial(n, model.counts)),
        bin_index_terms=(sum(xlogw(int(h), w)
                             for h, w in zip(model.counts, widths))
                         + n * math.log(ctx.g)))


class GranulatedCriterion(EnumCriterion):
    """Enum on G bins, shifted by the granularity terms.

    Merge deltas and argmins are those of Enum with E = G.
    """

    name = 'genum'

    def __init__(self, n, ctx):
        super(GranulatedCriterion, self).__init__(n, ctx.G)
        self.context = ctx
        self.constant = self.constant + ctx.granularity_cost(self.n)

    def breakdown(self, model):
        return genum_cost(model, self.n, self.context)
