#
# Copyright (C) 2024 mdlhist Developers.
#
# This software is licensed under the GNU Affero General Public License
# version 3 (see the file LICENSE).

"""Run a benchmark described by a configuration file."""

import configparser

from mdlhist.commands import EXIT_OK, UsageError
from mdlhist.commands.base import BaseCommand
from mdlhist.evaluation.benchmark import (
    BenchmarkConfig,
    read_config,
    run_benchmark,
    summary_path,
    write_records,
    )
from mdlhist.report.summary import render_summary


class BenchmarkCommand(BaseCommand):
    """Fit samples of the reference densities and score the fits."""

    name = 'benchmark'
    help = 'Run a seeded benchmark and summarise it.'

    def add_arguments(self, parser):
        super(BenchmarkCommand, self).add_arguments(parser)
        parser.add_argument(
            '--config', default=None,
            help='The benchmark configuration file.')
        parser.add_argument(
            '--output', default=None,
            help='Where to write the records, overriding the configuration.')

    def read_config(self, path):
        if path is None:
            return BenchmarkConfig()
        try:
            return read_config(path)
        except OSError as e:
            raise UsageError('Cannot read %s: %s' % (path, e.strerror))
        except (configparser.Error, ValueError) as e:
            raise UsageError('Invalid configuration %s: %s' % (path, e))

    def run(self, args):
        config = self.read_config(args.config)
        if args.output is not None:
            config.output = args.output
        self.logger.info(
            'Running %d benchmark cells on %d threads',
            len(config.cells()), self.execution_context.threads)
        records = run_benchmark(config, self.execution_context)
        summary = write_records(records, config.output)
        self.logger.info(
            'Wrote %s and %s', config.output, summary_path(config.output))
        self.stdout.write(render_summary(summary))
        return EXIT_OK
