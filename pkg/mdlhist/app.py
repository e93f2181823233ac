#
# Copyright (C) 2024 mdlhist Developers.
#
# This software is licensed under the GNU Affero General Public License
# version 3 (see the file LICENSE).

"""The mdlhist command line application."""

import argparse
import logging
import sys

from mdlhist import version
from mdlhist.commands import (
    EXIT_BUDGET,
    EXIT_DATA,
    EXIT_USAGE,
    UsageError,
    )
from mdlhist.context import ExecutionContext
from mdlhist.data import DataError
from mdlhist.dispatcher import command_names, get_command
from mdlhist.evaluation import TailIntegralError
from mdlhist.search import BudgetExceeded

_handler = None


def setup_logging(verbose=False):
    """Set up a logger sending to stderr."""
    global _handler
    if _handler is None:
        _handler = logging.StreamHandler(sys.stderr)
        fmt = '%(asctime)s %(levelname)-7s %(message)s'
        formatter = logging.Formatter(
            fmt=fmt, datefmt="%Y-%m-%d %H:%M:%S")
        _handler.setFormatter(formatter)
        root = logging.getLogger()
        root.addHandler(_handler)
    logger = logging.getLogger('mdlhist')
    logger.setLevel(logging.DEBUG if verbose else logging.INFO)


def build_parser(commands):
    parser = argparse.ArgumentParser(
        prog='mdlhist',
        description='Irregular histograms by minimum description length.')
    parser.add_argument(
        '--version', action='version', version='%(prog)s ' + version)
    subparsers = parser.add_subparsers(dest='command', metavar='COMMAND')
    subparsers.required = True
    for name, command in commands.items():
        command.add_arguments(
            subparsers.add_parser(name, help=command.help))
    return parser


def main(argv=None, stdout=None, execution_context=None):
    """Run the mdlhist command line.

    :return: The exit code: 0 on success, 2 for usage errors, 3 for data
        errors and 4 when the exact search is over budget.
    """
    if execution_context is None:
        execution_context = ExecutionContext()
    commands = dict(
        (name, get_command(name, execution_context, stdout))
        for name in command_names())
    parser = build_parser(commands)
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code
    setup_logging(args.verbose)
    logger = logging.getLogger('mdlhist')
    try:
        return commands[args.command].run(args)
    except UsageError as e:
        logger.error('%s', e)
        return EXIT_USAGE
    except (DataError, TailIntegralError) as e:
        logger.error('%s', e)
        return EXIT_DATA
    except BudgetExceeded as e:
        logger.error('%s', e)
        return EXIT_BUDGET
