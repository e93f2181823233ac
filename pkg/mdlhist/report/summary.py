#
# Copyright (C) 2024 mdlhist Developers.
#
# This software is licensed under the GNU Affero General Public License
# version 3 (see the file LICENSE).

"""Aligned text tables of benchmark aggregates.

One table per metric and sample size: distributions in rows, methods in
columns and `mean ± std` in the cells.
"""

from mdlhist.evaluation.benchmark import format_cell
from mdlhist.report.loader import get_templates

METRICS = (
    ('hellinger', 'Hellinger distance', 3),
    ('K', 'Number of intervals', 2),
    )


class SummaryTable(object):

    def __init__(self, title, header, lines):
        self.title = title
        self.header = header
        self.lines = lines


def _table(frame, metric, title, digits):
    methods = sorted(frame['method'].unique())
    distributions = sorted(frame['distribution'].unique())
    cells = {}
    for row in frame.itertuples(index=False):
        row = row._asdict()
        cells[(row['distribution'], row['method'])] = format_cell(
            row['%s_mean' % metric], row['%s_std' % metric], digits)
    grid = [['distribution'] + methods]
    for distribution in distributions:
        grid.append([distribution] + [
            cells.get((distribution, method), '-') for method in methods])
    widths = [max(len(line[i]) for line in grid)
              for i in range(len(grid[0]))]
    lines = ['  '.join(cell.ljust(width) for cell, width in zip(line, widths))
             .rstrip() for line in grid]
    return SummaryTable(title, lines[0], lines[1:])


def summary_tables(summary):
    """Build the tables from the aggregate frame of a benchmark."""
    tables = []
    for n in sorted(summary['n'].unique()):
        frame = summary[summary['n'] == n]
        for metric, title, digits in METRICS:
            tables.append(_table(
                frame, metric, '%s, n = %d' % (title, n), digits))
    return tables


def render_summary(summary):
    return get_templates().render('summary', tables=summary_tables(summary))
