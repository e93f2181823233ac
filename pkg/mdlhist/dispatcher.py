#
# Copyright (C) 2024 mdlhist Developers.
#
# This software is licensed under the GNU Affero General Public License
# version 3 (see the file LICENSE).

"""The dispatcher for mdlhist commands.

When this module is loaded, it will load all the modules of the commands
package.  The commands inherit from BaseCommand which has a metaclass that
registers them with the dispatcher.
"""

import os

from mdlhist.context import ExecutionContext

# Maps a command name to its class.
_COMMAND_REGISTRY = {}


def get_command(name, execution_context=None, stdout=None):
    """Get an instance of the command registered under name.

    :raises KeyError: When there is no such command.
    """
    klass = _COMMAND_REGISTRY[name]
    if execution_context is None:
        execution_context = ExecutionContext()
    return klass(execution_context, stdout)


def command_names():
    return sorted(_COMMAND_REGISTRY)


def register_command(command_class):
    """Register the command."""
    name = getattr(command_class, 'name', None)
    if name is None:
        # Don't register.
        return
    assert name not in _COMMAND_REGISTRY, \
        "name already registered: %r" % (name,)
    _COMMAND_REGISTRY[name] = command_class


def unregister_command(command_class):
    """Unregister the command."""
    name = getattr(command_class, 'name', None)
    if name is None:
        return
    assert _COMMAND_REGISTRY[name] is command_class, \
        "name registered with different class: %r: %r != %r" % (
            name, _COMMAND_REGISTRY[name], command_class)
    del _COMMAND_REGISTRY[name]


def load_command_modules():
    command_dir = os.path.join(
        os.path.dirname(os.path.abspath(__file__)), 'commands')
    py_files = sorted(
        filename for filename in os.listdir(command_dir)
        if filename.endswith('.py') and not filename.startswith('__'))
    for filename in py_files:
        __import__('mdlhist.commands.%s' % filename[:-3])


load_command_modules()
