#
# Copyright (C) 2024 mdlhist Developers.
#
# This software is licensed under the GNU Affero General Public License
# version 3 (see the file LICENSE).

"""One entry point for every fitting method."""

from mdlhist.context import ExecutionContext
from mdlhist.criterion.registry import criterion_registry
from mdlhist.data.grid import bin_data, build_grid, build_grid_by_E
from mdlhist.search.dp import dp_optimal
from mdlhist.search.granularity import SOLVERS, genum_fit
from mdlhist.search.greedy import greedy_fit

METHODS = ('enum', 'genum', 'nml')


def fit(d, method, solver='greedy', epsilon=None, grid_bins=None,
        context=None):
    """Fit a histogram to the data set `d`.

    :param method: 'enum', 'nml' or 'genum'.
    :param epsilon: The requested accuracy of the grid for enum and nml.
    :param grid_bins: The number of bins of the grid for enum and nml,
        instead of an accuracy.  The granulated method ignores both.
    """
    if context is None:
        context = ExecutionContext()
    if solver not in SOLVERS:
        raise ValueError('Unknown solver: %r' % (solver,))
    if method == 'genum':
        return genum_fit(d, context=context, solver=solver)
    if method not in criterion_registry:
        raise ValueError('Unknown method: %r' % (method,))
    if epsilon is not None and grid_bins is not None:
        raise ValueError('Give either an accuracy or a number of bins.')
    if grid_bins is not None:
        grid = build_grid_by_E(d, grid_bins)
    else:
        grid = build_grid(d, epsilon if epsilon is not None
                          else context.epsilon)
    binned = bin_data(d, grid)
    if solver == 'dp':
        return dp_optimal(binned, grid, method, context=context)
    return greedy_fit(binned, grid, method, context=context)
