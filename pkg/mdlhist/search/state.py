#
# Copyright (C) 2024 mdlhist Developers.
#
# This software is licensed under the GNU Affero General Public License
# version 3 (see the file LICENSE).

"""The interval list and merge queue of the greedy search.

Intervals live in slots, one per initial interval, linked to their
neighbours.  A merge folds the right slot into the left one, so a slot's
left endpoint never changes.  The queue is keyed on the interval part of
the merge delta: the part depending on K is the same for every pair.

Each live slot keeps the interval part of merging it with its successor,
together with the cost of the merged interval.  A queue entry is current
when it carries the delta its slot holds; the others are skipped when
popped.
"""

import heapq
import math

import numpy as np

from mdlhist.criterion.base import INTERVAL_FACTORIAL
from mdlhist.criterion.combinatorics import log_factorial_array
from mdlhist.model.histogram import HistogramModel
from mdlhist.search import kernels

NO_SLOT = -1


class SearchState(object):
    """Intervals over `cuts` and the pending merges between them."""

    def __init__(self, binned, cuts, criterion):
        cuts = np.asarray(cuts, dtype=np.int64)
        counts = binned.counts_between(cuts)
        widths = np.diff(cuts)
        size = int(counts.size)
        costs = criterion.interval_costs(counts, widths)
        merged = criterion.interval_costs(
            counts[:-1] + counts[1:], widths[:-1] + widths[1:])
        deltas = merged - costs[:-1] - costs[1:]
        self.binned = binned
        self.cuts = cuts
        self.criterion = criterion
        self.counts = counts.tolist()
        self.widths = widths.tolist()
        self.costs = costs.tolist()
        self.merged_costs = merged.tolist() + [math.inf]
        self.deltas = deltas.tolist() + [math.inf]
        self.prev = list(range(-1, size - 1))
        self.next = list(range(1, size)) + [NO_SLOT]
        self.alive = [True] * size
        self.K = size
        self.interval_sum = math.fsum(self.costs)
        self.merges = 0
        self.queue = list(zip(self.deltas[:-1], range(size - 1)))
        heapq.heapify(self.queue)

    def __repr__(self):
        return '<SearchState K=%d cost=%r>' % (self.K, self.cost)

    @property
    def cost(self):
        """The criterion value of the current histogram."""
        criterion = self.criterion
        return (criterion.constant + criterion.model_cost(self.K)
                + self.interval_sum)

    def _is_current(self, entry):
        delta, i = entry
        return self.alive[i] and self.deltas[i] == delta

    def pending_pairs(self):
        """The number of adjacent pairs with a current queue entry."""
        return len(set(entry for entry in self.queue
                       if self._is_current(entry)))

    def merge_delta(self, i):
        """The exact cost change of merging slot i with its successor."""
        if self.next[i] == NO_SLOT:
            raise ValueError('Slot %d has no successor.' % (i,))
        model_cost = self.criterion.model_cost
        return model_cost(self.K - 1) - model_cost(self.K) + self.deltas[i]

    def _queue_pair(self, i, j):
        h = self.counts[i] + self.counts[j]
        width = self.widths[i] + self.widths[j]
        merged = self.criterion.interval_cost(h, width)
        delta = merged - self.costs[i] - self.costs[j]
        self.merged_costs[i] = merged
        self.deltas[i] = delta
        heapq.heappush(self.queue, (delta, i))

    def _fold(self, i):
        j = self.next[i]
        local = self.deltas[i]
        self.counts[i] += self.counts[j]
        self.widths[i] += self.widths[j]
        self.costs[i] = self.merged_costs[i]
        self.alive[j] = False
        following = self.next[j]
        self.next[i] = following
        self.K -= 1
        self.interval_sum += local
        self.merges += 1
        if self.prev[i] != NO_SLOT:
            self._queue_pair(self.prev[i], i)
        if following != NO_SLOT:
            self.prev[following] = i
            self._queue_pair(i, following)
        else:
            self.merged_costs[i] = self.deltas[i] = math.inf
        return j

    def merge(self, i):
        """Merge slot i with its successor.

        :return: The cost change and the position in `cuts` of the
            endpoint that disappeared.
        """
        delta = self.merge_delta(i)
        return delta, self._fold(i)

    def merge_best(self):
        """Apply the cheapest merge, ties going to the leftmost pair."""
        while self.queue:
            entry = heapq.heappop(self.queue)
            if self._is_current(entry):
                return self.merge(entry[1])
        raise ValueError('No interval left to merge.')

    def collapse(self, compiled=None):
        """Apply the cheapest merge until one interval is left.

        :param compiled: Use the compiled loop; by default whenever numba
            is installed and the criterion has a compiled interval cost.
        :return: The positions of the removed endpoints in merge order,
            and the sum of the interval costs after each merge.
        """
        kind = self.criterion.interval_kind
        if compiled is None:
            compiled = kernels.available and kind is not None
        if compiled:
            return self._collapse_compiled(kind)
        return self._collapse()

    def _collapse_compiled(self, kind):
        if kind == INTERVAL_FACTORIAL:
            log_factorials = log_factorial_array(self.criterion.n)
        else:
            log_factorials = np.zeros(1)
        counts = np.array(self.counts, dtype=np.int64)
        widths = np.array(self.widths, dtype=np.int64)
        costs = np.array(self.costs, dtype=np.float64)
        merged_costs = np.array(self.merged_costs, dtype=np.float64)
        deltas = np.array(self.deltas, dtype=np.float64)
        prev = np.array(self.prev, dtype=np.int64)
        next_ = np.array(self.next, dtype=np.int64)
        alive = np.array(self.alive, dtype=np.bool_)
        removed, sums, self.interval_sum = kernels.collapse(
            kind, counts, widths, costs, merged_costs, deltas, prev, next_,
            alive, log_factorials, self.K, self.interval_sum)
        self.counts = counts.tolist()
        self.widths = widths.tolist()
        self.costs = costs.tolist()
        self.merged_costs = merged_costs.tolist()
        self.deltas = deltas.tolist()
        self.prev = prev.tolist()
        self.next = next_.tolist()
        self.alive = alive.tolist()
        self.merges += int(removed.size)
        self.K -= int(removed.size)
        self.queue = []
        return removed.tolist(), sums.tolist()

    def _collapse(self):
        # merge_best in a loop, with _fold written out on local names.
        queue = self.queue
        counts, widths, costs = self.counts, self.widths, self.costs
        merged_costs, deltas = self.merged_costs, self.deltas
        prev, next_, alive = self.prev, self.next, self.alive
        interval_cost = self.criterion.interval_cost
        pop, push = heapq.heappop, heapq.heappush
        inf = math.inf
        removed = []
        sums = []
        interval_sum = self.interval_sum
        K = self.K
        while K > 1:
            local, i = pop(queue)
            if not alive[i] or deltas[i] != local:
                continue
            j = next_[i]
            h = counts[i] = counts[i] + counts[j]
            w = widths[i] = widths[i] + widths[j]
            cost = costs[i] = merged_costs[i]
            alive[j] = False
            following = next_[j]
            next_[i] = following
            K -= 1
            interval_sum += local
            removed.append(j)
            sums.append(interval_sum)
            p = prev[i]
            if p != NO_SLOT:
                merged = interval_cost(counts[p] + h, widths[p] + w)
                delta = merged - costs[p] - cost
                merged_costs[p] = merged
                deltas[p] = delta
                push(queue, (delta, p))
            if following != NO_SLOT:
                prev[following] = i
                merged = interval_cost(
                    h + counts[following], w + widths[following])
                delta = merged - cost - costs[following]
                merged_costs[i] = merged
                deltas[i] = delta
                push(queue, (delta, i))
            else:
                merged_costs[i] = deltas[i] = inf
        self.merges += self.K - K
        self.K = K
        self.interval_sum = interval_sum
        return removed, sums

    def slots(self):
        """The live slots from left to right."""
        i = 0
        while i != NO_SLOT:
            yield i
            i = self.next[i]

    def current_cuts(self):
        positions = [i for i in self.slots()] + [len(self.alive)]
        return self.cuts[positions]

    def model(self):
        return HistogramModel(
            self.current_cuts(),
            [self.counts[i] for i in self.slots()])

    def recompute_cost(self):
        slots = list(self.slots())
        return self.criterion.total_cost(
            [self.counts[i] for i in slots],
            [self.widths[i] for i in slots])


def default_cuts(binned, full_grid_limit):
    """Every grid endpoint for small grids, the candidate cuts otherwise."""
    if binned.E <= full_grid_limit:
        return np.arange(binned.E + 1, dtype=np.int64)
    return binned.candidate_cuts()


def initial_state(binned, cuts, criterion):
    """One interval per pair of consecutive cuts, all merges queued."""
    return SearchState(binned, cuts, criterion)
