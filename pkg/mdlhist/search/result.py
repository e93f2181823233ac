#
# Copyright (C) 2024 mdlhist Developers.
#
# This software is licensed under the GNU Affero General Public License
# version 3 (see the file LICENSE).

"""The outcome of a search."""


class FitResult(object):
    """The best histogram found and how it was found.

    :ivar model: The selected `HistogramModel`.
    :ivar breakdown: Its `CostBreakdown`.
    :ivar grid: The grid the model's endpoints refer to (g-bins for the
        granulated criterion).
    :ivar G: The selected granularity, None for fixed grid criteria.
    :ivar granularity_costs: G -> best granulated cost, when G was searched.
    """

    def __init__(self, model, breakdown, grid, method, solver,
                 iterations=0, seconds=0.0, G=None, E_full=None,
                 granularity_costs=None):
        self.model = model
        self.breakdown = breakdown
        self.grid = grid
        self.method = method
        self.solver = solver
        self.iterations = iterations
        self.seconds = seconds
        self.G = G
        self.E_full = E_full
        self.granularity_costs = granularity_costs

    def __repr__(self):
        return '<FitResult %s/%s K=%d cost=%r>' % (
            self.method, self.solver, self.K, self.cost)

    @property
    def K(self):
        return self.model.K

    @property
    def cost(self):
        return self.breakdown.total
