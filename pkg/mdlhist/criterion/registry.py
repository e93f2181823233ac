#
# Copyright (C) 2024 mdlhist Developers.
#
# This software is licensed under the GNU Affero General Public License
# version 3 (see the file LICENSE).

"""The criterion registry is able to return criteria by name."""

from mdlhist.criterion.enumerative import EnumCriterion
from mdlhist.criterion.nml import NMLCriterion
from mdlhist.interface.criterion import ICriterion


class CriterionRegistry(object):
    """Has a dictionary of criterion classes based on name."""

    def __init__(self):
        self.criteria = {
            'enum': EnumCriterion,
            'nml': NMLCriterion,
            }

    def __getitem__(self, name):
        return self.criteria[name]

    def __contains__(self, name):
        return name in self.criteria

    def names(self):
        return sorted(self.criteria)


criterion_registry = CriterionRegistry()


def get_criterion(name):
    """Get a criterion class by name."""
    return criterion_registry[name]


def bind_criterion(criterion, n, E):
    """Return a criterion bound to n and E.

    :param criterion: A registered name, a criterion class or an already
        bound criterion, which is returned as is when its sizes match.
    """
    if ICriterion.providedBy(criterion):
        if (criterion.n, criterion.E) != (n, E):
            raise ValueError(
                '%r is not bound to n=%d E=%d' % (criterion, n, E))
        return criterion
    if isinstance(criterion, str):
        criterion = get_criterion(criterion)
    return criterion(n, E)


def merge_delta(criterion, h_a, width_a, h_b, width_b, K, n, E):
    """The cost change of merging adjacent intervals A and B of a
    K-interval model, for a criterion given by name or class."""
    return bind_criterion(criterion, n, E).merge_delta(
        h_a, width_a, h_b, width_b, K)
