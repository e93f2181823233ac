#
# Copyright (C) 2024 mdlhist Developers.
#
# This software is licensed under the GNU Affero General Public License
# version 3 (see the file LICENSE).

"""Reference densities, the Hellinger distance and benchmarks."""


class TailIntegralError(Exception):
    """The mass of the reference density outside the histogram could not
    be computed."""
