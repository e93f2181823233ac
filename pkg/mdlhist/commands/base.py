#
# Copyright (C) 2024 mdlhist Developers.
#
# This software is licensed under the GNU Affero General Public License
# version 3 (see the file LICENSE).

"""The base command class."""

import logging
import sys

from zope.interface import implementer

from mdlhist.dispatcher import register_command
from mdlhist.interface.command import ICommand


class BaseCommandMetaClass(type):
    """This metaclass registers the command with the dispatcher."""

    def __new__(cls, classname, bases, classdict):
        """Called when defining a new class."""
        instance = type.__new__(cls, classname, bases, classdict)
        register_command(instance)
        return instance


@implementer(ICommand)
class BaseCommand(object, metaclass=BaseCommandMetaClass):
    """The base command class.

    This is an abstract base class.
    """

    name = None
    help = None

    def __init__(self, execution_context, stdout=None):
        self.execution_context = execution_context
        if stdout is None:
            stdout = sys.stdout
        self.stdout = stdout
        self.logger = logging.getLogger('mdlhist')

    def add_arguments(self, parser):
        parser.add_argument(
            '--verbose', action='store_true',
            help='Log debugging messages.')

    def run(self, args):
        raise NotImplementedError(self.run)
