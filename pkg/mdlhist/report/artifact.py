#
# Copyright (C) 2024 mdlhist Developers.
#
# This software is licensed under the GNU Affero General Public License
# version 3 (see the file LICENSE).

"""The histogram artifact: a fitted histogram as versioned text.

The first line names the format and its version.  Header fields follow as
`key = value` lines in a fixed order, then one line per interval holding
its left edge, right edge, count and density.  Floats are written so that
they read back unchanged.
"""

import numpy as np

from mdlhist.evaluation.hellinger import PiecewiseDensity
from mdlhist.report import ArtifactError
from mdlhist.report.loader import get_templates

MAGIC = 'mdlhist-artifact'
VERSION = 1

# (name, type) in the order they are written.
HEADER_FIELDS = (
    ('method', str),
    ('solver', str),
    ('n', int),
    ('epsilon', float),
    ('E', int),
    ('c0', float),
    ('G', int),
    ('E_full', int),
    ('K', int),
    ('cost', float),
    ('index_terms', float),
    ('multinomial_terms', float),
    ('bin_index_terms', float),
    ('seconds', float),
    )


def _format(value):
    if value is None:
        return 'none'
    if isinstance(value, (float, np.floating)):
        return repr(float(value))
    return str(value)


def _parse(kind, text):
    if text == 'none':
        return None
    return kind(text)


class IntervalRecord(object):

    def __init__(self, left, right, count, density):
        self.left = left
        self.right = right
        self.count = count
        self.density = density


class HistogramArtifact(object):
    """A fitted histogram, its cost and how it was obtained.

    Interval edges are in data units; `epsilon` and `E` describe the grid
    the endpoints lie on (g-bins for the granulated method).
    """

    def __init__(self, method, solver, n, epsilon, E, c0, K, cost,
                 index_terms, multinomial_terms, bin_index_terms, seconds,
                 lefts, rights, counts, densities, G=None, E_full=None):
        self.method = method
        self.solver = solver
        self.n = n
        self.epsilon = epsilon
        self.E = E
        self.c0 = c0
        self.G = G
        self.E_full = E_full
        self.K = K
        self.cost = cost
        self.index_terms = index_terms
        self.multinomial_terms = multinomial_terms
        self.bin_index_terms = bin_index_terms
        self.seconds = seconds
        self.lefts = np.asarray(lefts, dtype=np.float64)
        self.rights = np.asarray(rights, dtype=np.float64)
        self.counts = np.asarray(counts, dtype=np.int64)
        self.densities = np.asarray(densities, dtype=np.float64)
        if not (self.lefts.size == self.rights.size == self.counts.size
                == self.densities.size == K):
            raise ArtifactError('The artifact does not hold %d intervals.'
                                % (K,))

    @classmethod
    def from_result(cls, result):
        model, grid, breakdown = result.model, result.grid, result.breakdown
        edges = model.edges(grid)
        return cls(
            method=result.method, solver=result.solver, n=model.n,
            epsilon=grid.epsilon, E=grid.E, c0=grid.c0, K=model.K,
            cost=breakdown.total, index_terms=breakdown.index_terms,
            multinomial_terms=breakdown.multinomial_terms,
            bin_index_terms=breakdown.bin_index_terms,
            seconds=result.seconds, lefts=edges[:-1], rights=edges[1:],
            counts=model.counts, densities=model.densities(grid),
            G=result.G, E_full=result.E_full)

    def __repr__(self):
        return '<HistogramArtifact %s K=%d cost=%r>' % (
            self.method, self.K, self.cost)

    def __eq__(self, other):
        if not isinstance(other, HistogramArtifact):
            return False
        for name, _ in HEADER_FIELDS:
            if getattr(self, name) != getattr(other, name):
                return False
        return all(
            np.array_equal(getattr(self, name), getattr(other, name))
            for name in ('lefts', 'rights', 'counts', 'densities'))

    @property
    def edges(self):
        return np.concatenate((self.lefts, self.rights[-1:]))

    def intervals(self):
        return [
            IntervalRecord(left, right, int(count), density)
            for left, right, count, density in zip(
                self.lefts, self.rights, self.counts, self.densities)]

    def to_density(self):
        return PiecewiseDensity(self.edges, self.densities)

    def to_text(self):
        fields = [(name, _format(getattr(self, name)))
                  for name, _ in HEADER_FIELDS]
        return get_templates().render(
            'artifact', magic=MAGIC, version=VERSION, fields=fields,
            rows=self.intervals())

    def plot_points(self):
        """(x, density) at both edges of every interval."""
        points = []
        for left, right, density in zip(
                self.lefts, self.rights, self.densities):
            points.append((left, density))
            points.append((right, density))
        return points

    def to_plot_text(self):
        return get_templates().render(
            'plot', method=self.method, K=self.K, points=self.plot_points())


def parse_artifact(text):
    """Read an artifact back from its text."""
    lines = [line for line in text.splitlines()
             if line.strip() and not line.startswith('#')]
    if not lines:
        raise ArtifactError('Empty artifact.')
    magic = lines[0].split()
    if len(magic) != 2 or magic[0] != MAGIC:
        raise ArtifactError('Not a histogram artifact: %r' % (lines[0],))
    if magic[1] != str(VERSION):
        raise ArtifactError('Unsupported artifact version %s' % (magic[1],))
    header = {}
    position = 1
    for position, line in enumerate(lines[1:], 1):
        key, sep, value = line.partition('=')
        if not sep:
            raise ArtifactError('Malformed header line: %r' % (line,))
        key, value = key.strip(), value.strip()
        if key == 'intervals':
            break
        header[key] = value
    else:
        raise ArtifactError('The artifact has no intervals.')
    kwargs = {}
    try:
        for name, kind in HEADER_FIELDS:
            kwargs[name] = _parse(kind, header[name])
        count = int(value)
    except (KeyError, ValueError) as e:
        raise ArtifactError('Malformed artifact header: %s' % (e,))
    rows = [line.split() for line in lines[position + 1:]]
    if len(rows) != count or any(len(row) != 4 for row in rows):
        raise ArtifactError('Expected %d interval lines.' % (count,))
    columns = list(zip(*rows)) or [(), (), (), ()]
    kwargs['lefts'] = [float(v) for v in columns[0]]
    kwargs['rights'] = [float(v) for v in columns[1]]
    kwargs['counts'] = [int(v) for v in columns[2]]
    kwargs['densities'] = [float(v) for v in columns[3]]
    return HistogramArtifact(**kwargs)


def read_artifact(path):
    with open(path) as artifact_file:
        return parse_artifact(artifact_file.read())


def write_artifact(artifact, path):
    with open(path, 'w') as artifact_file:
        artifact_file.write(artifact.to_text())


def write_plot(artifact, path):
    with open(path, 'w') as plot_file:
        plot_file.write(artifact.to_plot_text())
