# -*- coding: utf-8 -*-
#
# Copyright (C) 2024 mdlhist Developers.
#
# This software is licensed under the GNU Affero General Public License
# version 3 (see the file LICENSE).

"""A means of storing execution context."""

import os

DEFAULT_EPSILON = 0.01
DEFAULT_GRID_BINS = 2 ** 30
DEFAULT_MAX_EXPONENT = 30
DEFAULT_GRANULARITY_CAP = 4
DEFAULT_FULL_GRID_LIMIT = 4096
DEFAULT_POST_OPT_PASSES = 16
DEFAULT_DP_BUDGET = 10 ** 8
DEFAULT_QUADRATURE_NODES = 64
DEFAULT_THREADS = 1

THREADS_ENVIRON = 'HIST_THREADS'


def threads_from_environ(environ=None):
    """The benchmark parallelism requested through HIST_THREADS."""
    if environ is None:
        environ = os.environ
    value = environ.get(THREADS_ENVIRON)
    if not value:
        return DEFAULT_THREADS
    try:
        threads = int(value)
    except ValueError:
        return DEFAULT_THREADS
    return max(1, threads)


class ExecutionContext(object):
    """Store run-time execution context data.

    This is the Encapsulate Context pattern.
    """

    def __init__(self, epsilon=None, grid_bins=None, max_exponent=None,
                 granularity_cap=DEFAULT_GRANULARITY_CAP,
                 full_grid_limit=None, post_opt_passes=None,
                 dp_budget=None, quadrature_nodes=None, threads=None):
        """Create an execution context for fits and benchmarks.

        :param epsilon: The accuracy used by the fixed grid criteria when
            neither an accuracy nor a bin count is given.
        :param grid_bins: The number of epsilon-bins E_full of the grid
            underneath the granulated criterion.
        :param max_exponent: Granularities 2**0 .. 2**max_exponent are
            explored.
        :param granularity_cap: Granularities above cap * n are skipped;
            None explores every granularity.
        :param full_grid_limit: Grids with at most this many bins start the
            greedy search from every bin rather than the candidate cuts.
        :param post_opt_passes: Maximum number of post-optimisation sweeps.
        :param dp_budget: Maximum number of dynamic programming states.
        :param quadrature_nodes: Gauss-Legendre nodes per segment.
        :param threads: Benchmark parallelism, HIST_THREADS by default.
        """
        if epsilon is None:
            epsilon = DEFAULT_EPSILON
        if grid_bins is None:
            grid_bins = DEFAULT_GRID_BINS
        if max_exponent is None:
            max_exponent = DEFAULT_MAX_EXPONENT
        if full_grid_limit is None:
            full_grid_limit = DEFAULT_FULL_GRID_LIMIT
        if post_opt_passes is None:
            post_opt_passes = DEFAULT_POST_OPT_PASSES
        if dp_budget is None:
            dp_budget = DEFAULT_DP_BUDGET
        if quadrature_nodes is None:
            quadrature_nodes = DEFAULT_QUADRATURE_NODES
        if threads is None:
            threads = threads_from_environ()
        if epsilon <= 0:
            raise ValueError('epsilon must be positive: %r' % (epsilon,))
        self.epsilon = epsilon
        self.grid_bins = grid_bins
        self.max_exponent = max_exponent
        self.granularity_cap = granularity_cap
        self.full_grid_limit = full_grid_limit
        self.post_opt_passes = post_opt_passes
        self.dp_budget = dp_budget
        self.quadrature_nodes = quadrature_nodes
        self.threads = threads
