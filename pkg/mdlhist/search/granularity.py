#
# Copyright (C) 2024 mdlhist Developers.
#
# This software is licensed under the GNU Affero General Public License
# version 3 (see the file LICENSE).

"""The granulated criterion searched over power of two granularities."""

import logging
import time

from mdlhist.context import ExecutionContext
from mdlhist.criterion.granulated import (
    GranularityContext,
    GranulatedCriterion,
    )
from mdlhist.data.grid import bin_data, granulated_grid
from mdlhist.search.dp import dp_optimal
from mdlhist.search.greedy import greedy_fit
from mdlhist.search.result import FitResult

logger = logging.getLogger('mdlhist')

SOLVERS = ('greedy', 'dp')


def granularities(n, context):
    """The granularities 2**i worth trying for n observations."""
    E_full = context.grid_bins
    for exponent in range(context.max_exponent + 1):
        G = 2 ** exponent
        if G > E_full or E_full % G:
            break
        if (G > 1 and context.granularity_cap is not None
                and G > context.granularity_cap * n):
            break
        yield G


def fit_granularity(d, G, context, solver='greedy'):
    """The best histogram on G g-bins under the granulated criterion."""
    grid = granulated_grid(d, G, context.grid_bins)
    binned = bin_data(d, grid)
    criterion = GranulatedCriterion(
        d.n, GranularityContext(context.grid_bins, G))
    if solver == 'dp':
        return dp_optimal(binned, grid, criterion, context=context)
    return greedy_fit(binned, grid, criterion, context=context)


def genum_fit(d, context=None, solver='greedy'):
    """Minimise the granulated criterion over models and granularities.

    Ties between granularities go to the smaller G.  A data set of equal
    values only tries G = 1.
    """
    if context is None:
        context = ExecutionContext()
    if solver not in SOLVERS:
        raise ValueError('Unknown solver: %r' % (solver,))
    start = time.perf_counter()
    if d.length == 0:
        candidates = [1]
    else:
        candidates = list(granularities(d.n, context))
    best = None
    costs = {}
    iterations = 0
    for G in candidates:
        result = fit_granularity(d, G, context, solver=solver)
        costs[G] = result.cost
        iterations += result.iterations
        logger.debug('genum G=%d: K=%d cost %.6f', G, result.K, result.cost)
        if best is None or result.cost < best.cost:
            best = result
            best.G = G
    seconds = time.perf_counter() - start
    return FitResult(
        best.model, best.breakdown, best.grid, method='genum',
        solver=solver, iterations=iterations, seconds=seconds, G=best.G,
        E_full=context.grid_bins, granularity_costs=costs)
