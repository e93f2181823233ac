#
# Copyright (C) 2024 mdlhist Developers.
#
# This software is licensed under the GNU Affero General Public License
# version 3 (see the file LICENSE).

"""The sub-commands of the mdlhist script.

Every module of this package is loaded by `mdlhist.dispatcher`; the
commands register themselves through the metaclass of `BaseCommand`.
"""

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DATA = 3
EXIT_BUDGET = 4


class UsageError(Exception):
    """The command line does not make sense."""
