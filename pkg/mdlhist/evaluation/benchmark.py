#
# Copyright (C) 2024 mdlhist Developers.
#
# This software is licensed under the GNU Affero General Public License
# version 3 (see the file LICENSE).

"""The multi-seed benchmark harness.

A benchmark is the product of distributions, sample sizes, seeds and
methods.  Each cell samples a data set, fits it and scores the fit against
the density it was drawn from.  A failing cell is recorded with its error
and the run goes on.
"""

import configparser
import itertools
import logging
import math
import time
from concurrent.futures import ProcessPoolExecutor

import pandas as pd

from mdlhist.context import ExecutionContext
from mdlhist.evaluation.densities import density_registry, sample
from mdlhist.evaluation.hellinger import PiecewiseDensity, hellinger
from mdlhist.search.fitting import fit

METHODS = {
    'enum-greedy': ('enum', 'greedy'),
    'enum-dp': ('enum', 'dp'),
    'nml-greedy': ('nml', 'greedy'),
    'nml-dp': ('nml', 'dp'),
    'genum': ('genum', 'greedy'),
    }

RECORD_FIELDS = (
    'distribution', 'n', 'seed', 'method', 'K', 'seconds', 'hellinger',
    'status')

CONFIG_SECTION = 'benchmark'


class BenchmarkConfig(object):
    """The cells of a benchmark and where its records go."""

    def __init__(self, distributions=None, sizes=(10000,), seeds=range(10),
                 methods=('genum',), epsilon=None, output='benchmark.csv'):
        if distributions is None:
            distributions = density_registry.names()
        self.distributions = list(distributions)
        self.sizes = [int(n) for n in sizes]
        self.seeds = [int(seed) for seed in seeds]
        self.methods = list(methods)
        self.epsilon = epsilon
        self.output = output
        if not self.methods:
            raise ValueError('A benchmark needs at least one method.')
        for method in self.methods:
            if method not in METHODS:
                raise ValueError('Unknown method: %r' % (method,))
        for name in self.distributions:
            if name not in density_registry:
                raise ValueError('Unknown distribution: %r' % (name,))

    def __repr__(self):
        return '<BenchmarkConfig %d cells>' % (len(self.cells()),)

    def cells(self):
        return list(itertools.product(
            self.distributions, self.sizes, self.seeds, self.methods))


def _split(value):
    return [item.strip() for item in value.split(',') if item.strip()]


def parse_config(text):
    """Read `key = value` lines into a `BenchmarkConfig`.

    Lists are comma separated; `seeds` may also be a single count, meaning
    seeds 0 to count - 1.
    """
    parser = configparser.ConfigParser(inline_comment_prefixes=('#',))
    parser.read_string('[%s]\n%s' % (CONFIG_SECTION, text))
    section = parser[CONFIG_SECTION]
    kwargs = {}
    if 'distributions' in section:
        kwargs['distributions'] = _split(section['distributions'])
    if 'sizes' in section:
        kwargs['sizes'] = [int(n) for n in _split(section['sizes'])]
    if 'seeds' in section:
        seeds = _split(section['seeds'])
        if len(seeds) == 1:
            kwargs['seeds'] = range(int(seeds[0]))
        else:
            kwargs['seeds'] = [int(seed) for seed in seeds]
    if 'methods' in section:
        kwargs['methods'] = _split(section['methods'])
    if 'epsilon' in section:
        kwargs['epsilon'] = float(section['epsilon'])
    if 'output' in section:
        kwargs['output'] = section['output']
    return BenchmarkConfig(**kwargs)


def read_config(path):
    with open(path) as config_file:
        return parse_config(config_file.read())


class BenchmarkRecord(object):
    """The outcome of one benchmark cell."""

    def __init__(self, distribution, n, seed, method, K=None, seconds=None,
                 hellinger=None, status='ok'):
        self.distribution = distribution
        self.n = n
        self.seed = seed
        self.method = method
        self.K = K
        self.seconds = seconds
        self.hellinger = hellinger
        self.status = status

    def __repr__(self):
        return '<BenchmarkRecord %s n=%d seed=%d %s: %s>' % (
            self.distribution, self.n, self.seed, self.method, self.status)

    @property
    def key(self):
        return (self.distribution, self.n, self.seed, self.method)

    def as_dict(self):
        return dict((field, getattr(self, field)) for field in RECORD_FIELDS)


def run_cell(distribution, n, seed, method, epsilon=None, context=None):
    """Sample, fit and score one cell."""
    logger = logging.getLogger('mdlhist')
    if context is None:
        context = ExecutionContext()
    criterion, solver = METHODS[method]
    record = BenchmarkRecord(distribution, n, seed, method)
    try:
        density = density_registry[distribution]
        d = sample(density, n, seed)
        start = time.perf_counter()
        result = fit(d, criterion, solver=solver, epsilon=epsilon,
                     context=context)
        record.seconds = time.perf_counter() - start
        record.K = result.K
        record.hellinger = hellinger(
            density, PiecewiseDensity.from_model(result.model, result.grid),
            nodes=context.quadrature_nodes)
    except Exception as e:
        logger.warning('Benchmark cell %r failed: %s', record.key, e)
        record.status = 'failed: %s' % (e.__class__.__name__,)
    else:
        logger.debug(
            'Benchmark cell %r: K=%d HD=%.4f in %.2fs', record.key,
            record.K, record.hellinger, record.seconds)
    return record


def _run_cell(arguments):
    return run_cell(*arguments)


def run_benchmark(config, context=None):
    """Run every cell of `config`, in parallel with more than one thread.

    :return: The records ordered by (distribution, n, seed, method).
    """
    if context is None:
        context = ExecutionContext()
    jobs = [cell + (config.epsilon, context) for cell in config.cells()]
    if context.threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=context.threads) as executor:
            records = list(executor.map(_run_cell, jobs))
    else:
        records = [_run_cell(job) for job in jobs]
    return sorted(records, key=lambda record: record.key)


def records_frame(records):
    """The records as a data frame with the columns in fixed order."""
    return pd.DataFrame(
        [record.as_dict() for record in records], columns=RECORD_FIELDS)


def aggregate(records):
    """Mean and standard deviation of K, HD and time per cell group.

    Failed cells are left out.
    """
    frame = records_frame(records)
    frame = frame[frame['status'] == 'ok']
    frame = frame.astype({'K': float, 'hellinger': float, 'seconds': float})
    grouped = frame.groupby(['distribution', 'n', 'method'], sort=True)
    summary = grouped[['K', 'hellinger', 'seconds']].agg(['mean', 'std'])
    summary.columns = ['%s_%s' % column for column in summary.columns]
    summary['runs'] = grouped.size()
    return summary.reset_index()


def summary_path(output):
    return '%s.summary.csv' % (output,)


def write_records(records, output):
    """Write the raw records to `output` and the aggregate next to it.

    :return: The aggregate data frame.
    """
    records_frame(records).to_csv(output, index=False)
    summary = aggregate(records)
    summary.to_csv(summary_path(output), index=False)
    return summary


def format_cell(mean, std, digits):
    if math.isnan(mean):
        return '-'
    if math.isnan(std):
        std = 0.0
    return '%.*f ± %.*f' % (digits, mean, digits, std)
