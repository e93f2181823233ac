#
# Copyright (C) 2024 mdlhist Developers.
#
# This software is licensed under the GNU Affero General Public License
# version 3 (see the file LICENSE).

"""Compiled inner loop of the greedy merge.

The merge queue is a binary heap held in two arrays, ordered on
(delta, slot) like the tuples of the pure Python loop, so both loops
apply the same merges in the same order.  Without numba the functions
run uncompiled.
"""

import math

import numpy as np

try:
    import numba
except ImportError:
    numba = None

from mdlhist.criterion.base import INTERVAL_FACTORIAL

available = numba is not None


def _compiled(function):
    if numba is None:
        return function
    return numba.njit(cache=True)(function)


@_compiled
def interval_cost(kind, h, width, log_factorials):
    if h == 0:
        return 0.0
    if width == 0:
        return math.inf
    if kind == INTERVAL_FACTORIAL:
        return h * math.log(width) - log_factorials[h]
    return h * math.log(width) - h * math.log(h)


@_compiled
def _before(keys, slots, a, b):
    return keys[a] < keys[b] or (keys[a] == keys[b] and slots[a] < slots[b])


@_compiled
def _swap(keys, slots, a, b):
    keys[a], keys[b] = keys[b], keys[a]
    slots[a], slots[b] = slots[b], slots[a]


@_compiled
def heap_push(keys, slots, size, key, slot):
    """Add (key, slot) to the heap of `size` entries; return the size."""
    position = size
    keys[position] = key
    slots[position] = slot
    while position > 0:
        parent = (position - 1) // 2
        if not _before(keys, slots, position, parent):
            break
        _swap(keys, slots, position, parent)
        position = parent
    return size + 1


@_compiled
def heap_pop(keys, slots, size):
    """Remove the smallest entry; return it and the new size."""
    key = keys[0]
    slot = slots[0]
    size -= 1
    if size > 0:
        keys[0] = keys[size]
        slots[0] = slots[size]
        position = 0
        while True:
            child = 2 * position + 1
            if child >= size:
                break
            if child + 1 < size and _before(keys, slots, child + 1, child):
                child += 1
            if not _before(keys, slots, child, position):
                break
            _swap(keys, slots, child, position)
            position = child
    return key, slot, size


@_compiled
def collapse(kind, counts, widths, costs, merged_costs, deltas, prev,
             next_, alive, log_factorials, K, interval_sum):
    """Merge the cheapest pair until one interval is left.

    The arrays are those of a SearchState and are updated in place.

    :return: The removed slots in merge order, the interval cost sum
        after each merge, and the final sum.
    """
    size = counts.size
    keys = np.empty(3 * size + 1, dtype=np.float64)
    slots = np.empty(3 * size + 1, dtype=np.int64)
    heap = 0
    for i in range(size):
        if alive[i] and next_[i] != -1:
            heap = heap_push(keys, slots, heap, deltas[i], i)
    removed = np.empty(max(K - 1, 0), dtype=np.int64)
    sums = np.empty(max(K - 1, 0), dtype=np.float64)
    step = 0
    while K > 1:
        local, i, heap = heap_pop(keys, slots, heap)
        if not alive[i] or deltas[i] != local:
            continue
        j = next_[i]
        h = counts[i] + counts[j]
        w = widths[i] + widths[j]
        counts[i] = h
        widths[i] = w
        cost = merged_costs[i]
        costs[i] = cost
        alive[j] = False
        following = next_[j]
        next_[i] = following
        K -= 1
        interval_sum += local
        removed[step] = j
        sums[step] = interval_sum
        step += 1
        p = prev[i]
        if p != -1:
            merged = interval_cost(
                kind, counts[p] + h, widths[p] + w, log_factorials)
            delta = merged - costs[p] - cost
            merged_costs[p] = merged
            deltas[p] = delta
            heap = heap_push(keys, slots, heap, delta, p)
        if following != -1:
            prev[following] = i
            merged = interval_cost(
                kind, h + counts[following], w + widths[following],
                log_factorials)
            delta = merged - cost - costs[following]
            merged_costs[i] = merged
            deltas[i] = delta
            heap = heap_push(keys, slots, heap, delta, i)
        else:
            merged_costs[i] = math.inf
            deltas[i] = math.inf
    return removed[:step], sums[:step], interval_sum
