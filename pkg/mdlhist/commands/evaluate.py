#
# Copyright (C) 2024 mdlhist Developers.
#
# This software is licensed under the GNU Affero General Public License
# version 3 (see the file LICENSE).

"""Score an artifact against a reference density or another artifact."""

import os.path

from mdlhist.commands import EXIT_OK, UsageError
from mdlhist.commands.base import BaseCommand
from mdlhist.data import DataError
from mdlhist.evaluation.densities import density_registry
from mdlhist.evaluation.hellinger import hellinger, hellinger_histograms
from mdlhist.report import ArtifactError
from mdlhist.report.artifact import read_artifact


class EvaluateCommand(BaseCommand):
    """Print the Hellinger distance of a fitted histogram."""

    name = 'eval'
    help = 'Hellinger distance between an artifact and a reference.'

    def add_arguments(self, parser):
        super(EvaluateCommand, self).add_arguments(parser)
        parser.add_argument('artifact', help='The artifact to score.')
        parser.add_argument(
            'reference',
            help='A reference density name or a second artifact.')

    def read(self, path):
        if not os.path.isfile(path):
            raise DataError('No such artifact: %s' % (path,))
        try:
            return read_artifact(path)
        except ArtifactError as e:
            raise DataError('%s: %s' % (path, e))

    def run(self, args):
        q = self.read(args.artifact).to_density()
        if os.path.isfile(args.reference):
            distance = hellinger_histograms(
                q, self.read(args.reference).to_density())
        elif args.reference in density_registry:
            distance = hellinger(
                density_registry[args.reference], q,
                nodes=self.execution_context.quadrature_nodes)
        else:
            raise UsageError(
                'Unknown reference %r, expected an artifact or one of: %s'
                % (args.reference, ', '.join(density_registry.names())))
        self.stdout.write('%.10f\n' % (distance,))
        return EXIT_OK
