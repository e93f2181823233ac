#
# Copyright (C) 2024 mdlhist Developers.
#
# This software is licensed under the GNU Affero General Public License
# version 3 (see the file LICENSE).

"""Local improvement of a histogram by hill climbing.

The moves are: split one interval at its best cut, merge two adjacent
intervals, merge three adjacent intervals and split them again at their
best cut, and shift one endpoint to the neighbouring cut.  Each sweep
visits the intervals from left to right and applies the best improving
move found at each.
"""

import logging
import math

import numpy as np

from mdlhist.context import (
    DEFAULT_FULL_GRID_LIMIT, DEFAULT_POST_OPT_PASSES)
from mdlhist.criterion.registry import bind_criterion
from mdlhist.model.histogram import HistogramModel
from mdlhist.search.state import default_cuts

# Improvements smaller than this are rounding noise.
MIN_IMPROVEMENT = 1e-9


class LocalSearch(object):
    """Hill climbing on endpoints taken from a sorted array of cuts.

    Endpoints are handled as positions in `cuts`.
    """

    def __init__(self, binned, cuts, criterion):
        self.cuts = np.asarray(cuts, dtype=np.int64)
        self.cumulative = binned.cumulative(self.cuts)
        self.criterion = criterion
        self.splits = {}
        self.logger = logging.getLogger('mdlhist')

    def interval_cost(self, p, q):
        return self.criterion.interval_cost(
            int(self.cumulative[q] - self.cumulative[p]),
            int(self.cuts[q] - self.cuts[p]))

    def best_split(self, a, b):
        """The position strictly between a and b that splits best.

        :return: (position, cost of the two halves), position being None
            when there is no cut between a and b.
        """
        if b - a < 2:
            return None, math.inf
        try:
            return self.splits[a, b]
        except KeyError:
            pass
        r = np.arange(a + 1, b)
        cumulative, cuts = self.cumulative, self.cuts
        costs = (
            self.criterion.interval_costs(
                cumulative[r] - cumulative[a], cuts[r] - cuts[a])
            + self.criterion.interval_costs(
                cumulative[b] - cumulative[r], cuts[b] - cuts[r]))
        best = int(np.argmin(costs))
        split = self.splits[a, b] = (a + 1 + best, float(costs[best]))
        return split

    def best_move(self, positions, k):
        """The most improving move involving interval k, or None."""
        K = len(positions) - 1
        model_cost = self.criterion.model_cost
        a, b = positions[k], positions[k + 1]
        first = self.interval_cost(a, b)
        moves = []
        r, split = self.best_split(a, b)
        if r is not None:
            moves.append((model_cost(K + 1) - model_cost(K)
                          + split - first, 'split', r))
        if k + 1 < K:
            c = positions[k + 2]
            pair = first + self.interval_cost(b, c)
            moves.append((model_cost(K - 1) - model_cost(K)
                          + self.interval_cost(a, c) - pair, 'merge', None))
            for r in (b - 1, b + 1):
                if a < r < c:
                    moves.append((
                        self.interval_cost(a, r) + self.interval_cost(r, c)
                        - pair, 'shift', r))
            if k + 2 < K:
                d = positions[k + 3]
                r, split = self.best_split(a, d)
                moves.append((
                    model_cost(K - 1) - model_cost(K) + split
                    - pair - self.interval_cost(c, d), 'resplit', r))
        if not moves:
            return None
        best = min(moves, key=lambda move: move[0])
        if not best[0] < -MIN_IMPROVEMENT:
            return None
        return best

    def apply(self, positions, k, move):
        _, kind, r = move
        if kind == 'split':
            positions.insert(k + 1, r)
        elif kind == 'merge':
            del positions[k + 1]
        elif kind == 'shift':
            positions[k + 1] = r
        else:
            positions[k + 1:k + 3] = [r]

    def run(self, positions, max_passes, on_move=None):
        """Sweep until no move improves or max_passes sweeps were made.

        :return: The number of moves applied.
        """
        moves = 0
        for sweep in range(max_passes):
            improved = False
            k = 0
            while k < len(positions) - 1:
                move = self.best_move(positions, k)
                if move is not None:
                    self.apply(positions, k, move)
                    self.logger.debug(
                        'post-optimisation %s at interval %d: %.6g',
                        move[1], k, move[0])
                    if on_move is not None:
                        on_move(move[1], move[0])
                    moves += 1
                    improved = True
                k += 1
            if not improved:
                break
        return moves


def post_optimize(model, binned, grid, criterion, cuts=None,
                  max_passes=DEFAULT_POST_OPT_PASSES, on_move=None,
                  return_moves=False):
    """Improve a compatible model by local moves; the cost never grows.

    :param cuts: The endpoints moves may use, by default those the
        greedy search starts from.  The model's own endpoints are always
        added.
    :param on_move: Called with the move kind and its cost change after
        each accepted move.
    """
    criterion = bind_criterion(criterion, binned.n, binned.E)
    if cuts is None:
        cuts = default_cuts(binned, DEFAULT_FULL_GRID_LIMIT)
    cuts = np.union1d(np.asarray(cuts, dtype=np.int64), model.cut_indices)
    search = LocalSearch(binned, cuts, criterion)
    positions = np.searchsorted(cuts, model.cut_indices).tolist()
    moves = search.run(positions, max_passes, on_move=on_move)
    result = model
    if moves:
        result = HistogramModel.from_cuts(binned, cuts[positions])
    if return_moves:
        return result, moves
    return result
