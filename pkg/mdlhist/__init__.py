#
# Copyright (C) 2024 mdlhist Developers.
#
# This software is licensed under the GNU Affero General Public License
# version 3 (see the file LICENSE).

"""Irregular histograms selected by minimum description length."""


version = "0.1"
