#
# Copyright (C) 2024 mdlhist Developers.
#
# This software is licensed under the GNU Affero General Public License
# version 3 (see the file LICENSE).

"""Numerically stable logarithms of combinatorial quantities."""

import math
from functools import lru_cache

import numpy as np
from scipy.special import gammaln, xlogy

KAPPA0 = 2.865
# log_factorial grows the shared table up to here, log_factorial_table
# past it.
LOG_FACTORIAL_LIMIT = 10 ** 6
# Below this the Stirling remainder is not accurate to 1e-14.
STIRLING_THRESHOLD = 16

_LOG2 = math.log(2)
_log_factorials = [0.0, 0.0]
_log_factorial_array = np.zeros(2)


def _extend_log_factorials(new_size):
    size = len(_log_factorials)
    if new_size > size:
        values = gammaln(np.arange(size, new_size, dtype=np.float64) + 1)
        _log_factorials.extend(values.tolist())


def _grow_log_factorials(k):
    size = len(_log_factorials)
    _extend_log_factorials(
        min(LOG_FACTORIAL_LIMIT + 1, max(k + 1, 2 * size)))


def log_factorial(k):
    """ln k!, from a cached table up to LOG_FACTORIAL_LIMIT."""
    if k < 0:
        raise ValueError('Factorial of a negative number: %r' % (k,))
    if k > LOG_FACTORIAL_LIMIT:
        return float(gammaln(k + 1))
    if k >= len(_log_factorials):
        _grow_log_factorials(k)
    return _log_factorials[k]


def log_factorial_table(k):
    """The list of ln j! for j = 0..k at least, for direct indexing."""
    if k < 0:
        raise ValueError('Factorial of a negative number: %r' % (k,))
    _extend_log_factorials(k + 1)
    return _log_factorials


def log_factorials(k):
    """ln k! for each entry of an array."""
    return gammaln(np.asarray(k, dtype=np.float64) + 1)


def log_factorial_array(k):
    """ln j! for j = 0..k at least, as a numpy array."""
    global _log_factorial_array
    if k < 0:
        raise ValueError('Factorial of a negative number: %r' % (k,))
    size = _log_factorial_array.size
    if k >= size:
        _log_factorial_array = log_factorials(
            np.arange(max(k + 1, 2 * size)))
    return _log_factorial_array


@lru_cache(maxsize=65536)
def log_star(k):
    """The universal code length for the positive integer k, in nats.

    ln(2) * (log2(kappa0) + sum over j >= 1 of max(log2^(j)(k), 0)) where
    log2^(j) is the j-th composition of log2.
    """
    if k < 1:
        raise ValueError('log* is defined for positive integers: %r' % (k,))
    bits = math.log2(KAPPA0)
    x = math.log2(k)
    while x > 0:
        bits += x
        x = math.log2(x)
    return _LOG2 * bits


def log_stars(k):
    """log_star for each entry of an integer array."""
    k = np.asarray(k, dtype=np.float64)
    if np.any(k < 1):
        raise ValueError('log* is defined for positive integers')
    bits = np.full(k.shape, math.log2(KAPPA0))
    x = np.log2(k)
    positive = x > 0
    while positive.any():
        bits[positive] += x[positive]
        x = np.where(positive, np.log2(np.where(positive, x, 1.0)), 0.0)
        positive = x > 0
    return _LOG2 * bits


def _stirling_remainder(a):
    """ln Gamma(a) - ((a - 1/2) ln a - a + ln(2 pi) / 2), for large a."""
    inv = 1.0 / a
    inv2 = inv * inv
    return inv * (1.0 / 12 - inv2 * (1.0 / 360 - inv2 * (
        1.0 / 1260 - inv2 / 1680)))


def _log_gamma_ratio(z, m):
    """ln(Gamma(z + m) / Gamma(z)) for z >= STIRLING_THRESHOLD."""
    return (m * math.log(z) + (z + m - 0.5) * math.log1p(m / z) - m
            + _stirling_remainder(z + m) - _stirling_remainder(z))


def log_binomial(a, b):
    """ln C(a, b) for integers 0 <= b <= a."""
    a = int(a)
    b = int(b)
    if b < 0 or b > a:
        raise ValueError('Binomial needs 0 <= b <= a: (%d, %d)' % (a, b))
    m = min(b, a - b)
    if m == 0:
        return 0.0
    z = a - m + 1
    if z < STIRLING_THRESHOLD:
        return log_factorial(a) - log_factorial(m) - log_factorial(a - m)
    return _log_gamma_ratio(z, m) - log_factorial(m)


def log_binomials(a, b):
    """log_binomial for each pair of entries of two integer arrays."""
    a, b = np.broadcast_arrays(
        np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
    if np.any(b < 0) or np.any(b > a):
        raise ValueError('Binomial needs 0 <= b <= a')
    m = np.minimum(b, a - b).astype(np.float64)
    a = a.astype(np.float64)
    z = a - m + 1
    small = z < STIRLING_THRESHOLD
    # Each branch is evaluated everywhere, on arguments it is safe for.
    zl = np.where(small, STIRLING_THRESHOLD, z)
    large = (m * np.log(zl) + (zl + m - 0.5) * np.log1p(m / zl) - m
             + _stirling_remainder(zl + m) - _stirling_remainder(zl))
    exact = gammaln(a + 1) - gammaln(a - m + 1)
    result = np.where(small, exact, large) - gammaln(m + 1)
    return np.where(m == 0, 0.0, result)


def log_multinomial(n, h):
    """ln(n! / (h_1! ... h_K!)) with 0! = 1."""
    h = [int(count) for count in h]
    if sum(h) != n:
        raise ValueError(
            'Counts sum to %d, not to %d' % (sum(h), n))
    return log_factorial(n) - sum(log_factorial(count) for count in h)


def xlogx(h):
    """h ln h with 0 ln 0 = 0."""
    if h == 0:
        return 0.0
    return h * math.log(h)


def xlogw(h, width):
    """h ln width with 0 ln 0 = 0 and +inf for h > 0 over no width."""
    if h == 0:
        return 0.0
    if width == 0:
        return math.inf
    return h * math.log(width)


def xlogw_array(h, width):
    """Vectorised xlogw."""
    h = np.asarray(h, dtype=np.float64)
    width = np.asarray(width, dtype=np.float64)
    with np.errstate(divide='ignore'):
        values = xlogy(h, width)
    return np.where((h > 0) & (width == 0), np.inf, values)
