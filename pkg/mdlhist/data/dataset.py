#
# Copyright (C) 2024 mdlhist Developers.
#
# This software is licensed under the GNU Affero General Public License
# version 3 (see the file LICENSE).

"""Univariate data sets and their ingestion from delimited text files."""

import logging
import os.path

import numpy as np
import pandas as pd

from mdlhist.data import (
    ColumnMissing, DataError, DatasetNotFound, EmptyDataset)

CHUNK_SIZE = 100000


class Dataset(object):
    """Sorted finite observations, duplicates kept with their multiplicity.

    Instances are not modified after construction.
    """

    def __init__(self, values, skipped=0):
        values = np.sort(np.asarray(values, dtype=np.float64).ravel())
        if values.size == 0:
            raise EmptyDataset('A data set needs at least one value.')
        if not np.all(np.isfinite(values)):
            raise DataError('A data set only holds finite values.')
        values.setflags(write=False)
        self.values = values
        self.skipped = skipped
        self.distinct_values, self.multiplicities = np.unique(
            values, return_counts=True)

    @classmethod
    def from_values(cls, values):
        return cls(values)

    def __repr__(self):
        return '<Dataset n=%d [%r, %r]>' % (self.n, self.x_min, self.x_max)

    def __len__(self):
        return self.n

    @property
    def n(self):
        return int(self.values.size)

    @property
    def x_min(self):
        return float(self.values[0])

    @property
    def x_max(self):
        return float(self.values[-1])

    @property
    def length(self):
        """The domain length L."""
        return self.x_max - self.x_min

    @property
    def min_gap(self):
        """The smallest gap between two distinct values, if any."""
        if self.distinct_values.size < 2:
            return None
        return float(np.min(np.diff(self.distinct_values)))


def _guess_separator(path, first_line):
    if path.endswith('.tsv') or '\t' in first_line:
        return '\t'
    if ';' in first_line and ',' not in first_line:
        return ';'
    return ','


def _is_number(text):
    try:
        float(text)
    except ValueError:
        return False
    return True


def _column_position(column, fields):
    """Resolve a column name or 0-based index against the first line."""
    if isinstance(column, int):
        position = column
    elif column is None:
        position = 0
    elif column.isdigit():
        position = int(column)
    else:
        names = [field.strip().strip('"') for field in fields]
        if column not in names:
            raise ColumnMissing(
                'Column %r not found, available: %s'
                % (column, ', '.join(names)))
        return names.index(column), True
    if position < 0 or position >= len(fields):
        raise ColumnMissing(
            'Column index %d out of range, the file has %d columns'
            % (position, len(fields)))
    # A numeric field in the selected column means there is no header.
    has_header = not _is_number(fields[position].strip().strip('"'))
    return position, has_header


def load_dataset(path, column=None):
    """Load one numeric column of a CSV or TSV file.

    The header is detected from the first line.  Rows whose value is not a
    finite number are skipped and counted.

    :param path: The file to read.
    :param column: A column name, or a 0-based index (int or digit string).
    :return: A `Dataset`.
    """
    logger = logging.getLogger('mdlhist')
    if not os.path.isfile(path):
        raise DatasetNotFound('No such file: %s' % path)
    with open(path, 'r') as f:
        first_line = f.readline().rstrip('\r\n')
    if not first_line.strip():
        raise EmptyDataset('The file %s is empty.' % path)
    separator = _guess_separator(path, first_line)
    fields = first_line.split(separator)
    position, has_header = _column_position(column, fields)

    chunks = pd.read_csv(
        path, sep=separator, header=0 if has_header else None,
        usecols=[position], dtype=str, chunksize=CHUNK_SIZE,
        skip_blank_lines=True, on_bad_lines='skip')
    parts = []
    skipped = 0
    for chunk in chunks:
        numbers = pd.to_numeric(chunk.iloc[:, 0], errors='coerce')
        numbers = numbers.to_numpy(dtype=np.float64)
        finite = np.isfinite(numbers)
        skipped += int(numbers.size - np.count_nonzero(finite))
        parts.append(numbers[finite])
    if skipped:
        logger.warning(
            'Skipped %d rows without a finite value in %s', skipped, path)
    values = np.concatenate(parts) if parts else np.empty(0)
    if values.size == 0:
        raise EmptyDataset('No finite numeric value found in %s' % path)
    dataset = Dataset(values, skipped=skipped)
    logger.info('Loaded %d values from %s', dataset.n, path)
    return dataset
