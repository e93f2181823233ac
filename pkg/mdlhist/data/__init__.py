#
# Copyright (C) 2024 mdlhist Developers.
#
# This software is licensed under the GNU Affero General Public License
# version 3 (see the file LICENSE).

"""Data sets and the fixed grids they are approximated on.

A data set is loaded or sampled once, then mapped onto a grid of
epsilon-bins.  Histograms only ever cut the data on grid endpoints.
"""


class DataError(Exception):
    """The data could not be turned into a data set."""


class DatasetNotFound(DataError):
    """The input file does not exist."""


class ColumnMissing(DataError):
    """The requested column is not in the input file."""


class EmptyDataset(DataError):
    """No finite numeric value was found."""
