#
# Copyright (C) 2024 mdlhist Developers.
#
# This software is licensed under the GNU Affero General Public License
# version 3 (see the file LICENSE).

"""Description length criteria for histograms.

All costs are in nats.  Each criterion is additive: a constant, a term that
only depends on the number of intervals, and one term per interval.
"""
