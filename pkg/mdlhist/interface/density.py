#
# Copyright (C) 2024 mdlhist Developers.
#
# This software is licensed under the GNU Affero General Public License
# version 3 (see the file LICENSE).

"""Interfaces relating to reference densities."""

from zope.interface import Attribute, Interface


class IReferenceDensity(Interface):
    """A known density used to generate samples and score histograms."""

    name = Attribute("The registry name of the density.")

    support = Attribute(
        "A (lower, upper) tuple, infinite bounds for unbounded supports.")

    def pdf(x):
        """The density evaluated on a numpy array."""

    def cdf(x):
        """The cumulative distribution evaluated on a numpy array."""

    def sample(n, seed):
        """Draw n observations from a Philox stream seeded with seed."""

    def breakpoints():
        """A sorted array of points splitting the density into pieces that
        Gauss-Legendre quadrature integrates well."""
