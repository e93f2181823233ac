#
# Copyright (C) 2024 mdlhist Developers.
#
# This software is licensed under the GNU Affero General Public License
# version 3 (see the file LICENSE).

"""Interfaces relating to model selection criteria."""

from zope.interface import Attribute, Interface


class ICriterion(Interface):
    """An additive criterion bound to a sample size and a grid size.

    The cost of a histogram with K intervals is

        constant + model_cost(K) + sum of interval_cost(h_k, E_k)

    which is what makes O(1) merge deltas possible.
    """

    name = Attribute("The registry name of the criterion.")

    n = Attribute("The number of observations.")

    E = Attribute("The number of elementary bins of the grid.")

    constant = Attribute(
        "The part of the cost that depends on neither K nor the intervals.")

    def model_cost(K):
        """The part of the cost that depends on K only, in nats."""

    def model_costs(K):
        """Vectorised model_cost over an integer array."""

    def interval_cost(h, width):
        """The cost of one interval holding h observations over width bins.

        Returns math.inf for a non-empty interval of zero width.
        """

    def interval_costs(h, width):
        """Vectorised interval_cost over numpy arrays."""

    def merge_delta(h_a, width_a, h_b, width_b, K):
        """The cost change when two adjacent intervals of a K-interval model
        are merged into one."""

    def total_cost(counts, widths):
        """The full cost of the model with these counts and widths."""

    def breakdown(model):
        """Return a `CostBreakdown` for the histogram model."""
