#
# Copyright (C) 2024 mdlhist Developers.
#
# This software is licensed under the GNU Affero General Public License
# version 3 (see the file LICENSE).

"""The mdlhist tests for the mdlhist.criterion package."""

import unittest


def test_suite():
    names = [
        'combinatorics',
        'registry',
        'enumerative',
        'nml',
        'granulated',
        ]
    module_names = ['mdlhist.tests.criteria.test_' + name for name in names]
    loader = unittest.TestLoader()
    suite = loader.loadTestsFromNames(module_names)

    return suite
