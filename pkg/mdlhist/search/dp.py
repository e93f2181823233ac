#
# Copyright (C) 2024 mdlhist Developers.
#
# This software is licensed under the GNU Affero General Public License
# version 3 (see the file LICENSE).

"""Exact minimisation by dynamic programming over a lattice of cuts."""

import logging
import time

import numpy as np

from mdlhist.context import ExecutionContext
from mdlhist.criterion.registry import bind_criterion
from mdlhist.model.histogram import HistogramModel
from mdlhist.search import BudgetExceeded
from mdlhist.search.result import FitResult
from mdlhist.search.state import default_cuts

logger = logging.getLogger('mdlhist')


def interval_cost_matrix(binned, cuts, criterion):
    """Q[p, q] = cost of the interval from cuts[p] to cuts[q], p < q.

    Entries with p >= q are +inf.
    """
    cumulative = binned.cumulative(cuts)
    counts = cumulative[None, :] - cumulative[:, None]
    widths = cuts[None, :] - cuts[:, None]
    upper = np.triu(np.ones(counts.shape, dtype=bool), k=1)
    costs = criterion.interval_costs(
        np.where(upper, counts, 0), np.where(upper, widths, 1))
    return np.where(upper, costs, np.inf)


def segment(Q, K_max):
    """The best cost of covering positions 0..q with k + 1 intervals.

    :return: C, T where C[k, q] is that cost and T[k, q] the position
        where the last interval starts.
    """
    size = Q.shape[0]
    C = np.full((K_max, size), np.inf)
    T = np.zeros((K_max, size), dtype=np.int64)
    C[0, :] = Q[0, :]
    for k in range(1, K_max):
        costs = C[k - 1][:, None] + Q
        T[k, :] = np.argmin(costs, axis=0)
        C[k, :] = costs[T[k, :], np.arange(size)]
    return C, T


def backtrack(T, K):
    """The K + 1 positions of the best K-interval segmentation."""
    positions = [0] * (K + 1)
    positions[K] = T.shape[1] - 1
    for k in range(K - 1, 0, -1):
        positions[k] = int(T[k, positions[k + 1]])
    return positions


def default_K_max(n, size):
    """At most 2n - 2 intervals are useful, and no more than the cuts
    allow."""
    return max(1, min(2 * n - 2, size))


def dp_optimal(binned, grid, criterion, K_max=None, cuts=None,
               context=None):
    """The exact best histogram with at most K_max intervals.

    :param cuts: The endpoint lattice, by default every grid endpoint for
        small grids and the candidate cuts otherwise.
    :raises BudgetExceeded: When (#cuts)^2 * K_max is over the budget.
    """
    if context is None:
        context = ExecutionContext()
    start = time.perf_counter()
    criterion = bind_criterion(criterion, binned.n, binned.E)
    if cuts is None:
        cuts = default_cuts(binned, context.full_grid_limit)
    cuts = np.asarray(cuts, dtype=np.int64)
    size = cuts.size - 1
    if K_max is None:
        K_max = default_K_max(binned.n, size)
    K_max = max(1, min(K_max, size))
    states = size * size * K_max
    if states > context.dp_budget:
        raise BudgetExceeded(states, context.dp_budget)
    Q = interval_cost_matrix(binned, cuts, criterion)
    C, T = segment(Q, K_max)
    totals = np.array([
        criterion.constant + criterion.model_cost(k + 1) + C[k, size]
        for k in range(K_max)])
    K = int(np.argmin(totals)) + 1
    positions = backtrack(T, K)
    model = HistogramModel.from_cuts(binned, cuts[positions])
    breakdown = criterion.breakdown(model)
    seconds = time.perf_counter() - start
    logger.debug(
        'dp %s n=%d E=%d over %d cuts: K=%d, cost %.6f',
        criterion.name, binned.n, binned.E, cuts.size, K, breakdown.total)
    return FitResult(
        model, breakdown, grid, method=criterion.name, solver='dp',
        iterations=K_max, seconds=seconds)
