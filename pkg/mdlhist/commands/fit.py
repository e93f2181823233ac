#
# Copyright (C) 2024 mdlhist Developers.
#
# This software is licensed under the GNU Affero General Public License
# version 3 (see the file LICENSE).

"""Fit a histogram to one column of a file."""

from mdlhist.commands import EXIT_OK, UsageError
from mdlhist.commands.base import BaseCommand
from mdlhist.data.dataset import load_dataset
from mdlhist.evaluation.densities import density_registry, sample
from mdlhist.report.artifact import (
    HistogramArtifact,
    write_artifact,
    write_plot,
    )
from mdlhist.search.fitting import METHODS, fit
from mdlhist.search.granularity import SOLVERS


class FitCommand(BaseCommand):
    """Fit a histogram and write it as an artifact."""

    name = 'fit'
    help = 'Fit an irregular histogram to a column of a CSV or TSV file.'

    def add_arguments(self, parser):
        super(FitCommand, self).add_arguments(parser)
        parser.add_argument('--input', help='The CSV or TSV file to read.')
        parser.add_argument(
            '--column', default=None,
            help='The column name or 0-based index, the first by default.')
        parser.add_argument(
            '--sample', metavar='DENSITY', default=None,
            help='Fit a sample of a reference density instead of a file.')
        parser.add_argument(
            '--size', type=int, default=10000,
            help='The size of the sample.')
        parser.add_argument(
            '--seed', type=int, default=0, help='The seed of the sample.')
        parser.add_argument(
            '--method', choices=METHODS, default='genum',
            help='The criterion to minimise.')
        parser.add_argument(
            '--epsilon', type=float, default=None,
            help='The grid accuracy, for enum and nml.')
        parser.add_argument(
            '--grid-bins', type=int, default=None,
            help='The number of grid bins, for enum and nml.')
        parser.add_argument(
            '--solver', choices=SOLVERS, default='greedy',
            help='Greedy search or exact dynamic programming.')
        parser.add_argument(
            '--output', default=None,
            help='Where to write the artifact, standard output by default.')
        parser.add_argument(
            '--plot-out', default=None,
            help='Where to write the (x, density) plot file.')

    def check_arguments(self, args):
        if (args.input is None) == (args.sample is None):
            raise UsageError('Give exactly one of --input and --sample.')
        if args.sample is not None and args.sample not in density_registry:
            raise UsageError('Unknown density: %s' % (args.sample,))
        if args.method == 'genum':
            if args.epsilon is not None or args.grid_bins is not None:
                self.logger.info(
                    'genum uses its own grid, ignoring --epsilon and '
                    '--grid-bins')
            return None, None
        if (args.epsilon is None) == (args.grid_bins is None):
            raise UsageError(
                '%s needs exactly one of --epsilon and --grid-bins.'
                % (args.method,))
        if args.epsilon is not None and args.epsilon <= 0:
            raise UsageError('--epsilon must be positive.')
        if args.grid_bins is not None and args.grid_bins < 1:
            raise UsageError('--grid-bins must be at least 1.')
        return args.epsilon, args.grid_bins

    def load(self, args):
        if args.input is not None:
            return load_dataset(args.input, args.column)
        if args.size < 1:
            raise UsageError('--size must be at least 1.')
        return sample(args.sample, args.size, args.seed)

    def run(self, args):
        epsilon, grid_bins = self.check_arguments(args)
        d = self.load(args)
        result = fit(d, args.method, solver=args.solver, epsilon=epsilon,
                     grid_bins=grid_bins, context=self.execution_context)
        self.logger.info(
            'Fitted %d intervals with %s in %.3fs', result.K, args.method,
            result.seconds)
        artifact = HistogramArtifact.from_result(result)
        if args.output is None:
            self.stdout.write(artifact.to_text())
        else:
            write_artifact(artifact, args.output)
            self.logger.info('Wrote %s', args.output)
        if args.plot_out is not None:
            write_plot(artifact, args.plot_out)
        return EXIT_OK
