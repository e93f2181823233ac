#
# Copyright (C) 2024 mdlhist Developers.
#
# This software is licensed under the GNU Affero General Public License
# version 3 (see the file LICENSE).

"""Bottom-up greedy merging.

Starting from the finest histogram, the cheapest merge is applied until a
single interval is left.  The best histogram met on the way is kept, then
improved by local moves.
"""

import logging
import time

import numpy as np

from mdlhist.context import ExecutionContext
from mdlhist.criterion.registry import bind_criterion
from mdlhist.model.histogram import HistogramModel
from mdlhist.search.postopt import post_optimize
from mdlhist.search.result import FitResult
from mdlhist.search.state import default_cuts, initial_state

logger = logging.getLogger('mdlhist')


def merge_to_one(binned, cuts, criterion):
    """Merge down to one interval, returning the best endpoints seen.

    :return: A (cuts, cost, merges) tuple.  Ties keep the histogram with
        more intervals.
    """
    state = initial_state(binned, cuts, criterion)
    K = state.K
    interval_sums = [state.interval_sum]
    removed, sums = state.collapse()
    interval_sums.extend(sums)
    totals = (criterion.constant
              + criterion.model_costs(np.arange(K, K - len(removed) - 1, -1))
              + np.asarray(interval_sums))
    best_step = int(np.argmin(totals))
    best_cuts = np.delete(state.cuts, removed[:best_step])
    return best_cuts, float(totals[best_step]), state.merges


def greedy_fit(binned, grid, criterion, cuts=None, context=None,
               post_optimization=True):
    """Fit a histogram to `binned` by greedy merging.

    :param criterion: A criterion name, class or bound criterion.
    :param cuts: The initial endpoints; by default every grid endpoint
        for small grids and the candidate cuts otherwise.
    """
    if context is None:
        context = ExecutionContext()
    start = time.perf_counter()
    criterion = bind_criterion(criterion, binned.n, binned.E)
    if cuts is None:
        cuts = default_cuts(binned, context.full_grid_limit)
    cuts = np.asarray(cuts, dtype=np.int64)
    best_cuts, best_cost, merges = merge_to_one(binned, cuts, criterion)
    model = HistogramModel.from_cuts(binned, best_cuts)
    moves = 0
    if post_optimization:
        model, moves = post_optimize(
            model, binned, grid, criterion, cuts=cuts,
            max_passes=context.post_opt_passes, return_moves=True)
    breakdown = criterion.breakdown(model)
    seconds = time.perf_counter() - start
    logger.debug(
        'greedy %s n=%d E=%d: %d merges, %d moves, K=%d, cost %.6f',
        criterion.name, binned.n, binned.E, merges, moves, model.K,
        breakdown.total)
    return FitResult(
        model, breakdown, grid, method=criterion.name, solver='greedy',
        iterations=merges + moves, seconds=seconds)
