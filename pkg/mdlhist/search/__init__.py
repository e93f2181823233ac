#
# Copyright (C) 2024 mdlhist Developers.
#
# This software is licensed under the GNU Affero General Public License
# version 3 (see the file LICENSE).

"""Searching for the histogram of least description length."""


class BudgetExceeded(Exception):
    """The exact search would need more states than allowed."""

    def __init__(self, states, budget):
        super(BudgetExceeded, self).__init__(
            'The exact search needs %d states, the budget is %d'
            % (states, budget))
        self.states = states
        self.budget = budget
