#
# Copyright (C) 2024 mdlhist Developers.
#
# This software is licensed under the GNU Affero General Public License
# version 3 (see the file LICENSE).

"""Interface for the command line commands."""

from zope.interface import Attribute, Interface


class ICommand(Interface):
    """A sub-command of the mdlhist script."""

    name = Attribute("The name used on the command line.")

    help = Attribute("A one line description.")

    def add_arguments(parser):
        """Add the command's options to an argparse sub-parser."""

    def run(args):
        """Run the command with the parsed arguments.

        :return: The process exit code.
        """
