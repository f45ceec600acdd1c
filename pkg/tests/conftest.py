"""Shared populations and oracles for the sweep-level tests.

Building a full 9,900-filter population takes a few seconds, so the
acceptance tests share session-scoped fixtures; unit tests use small grids.
"""

import functools

import numpy as np
import pytest

from blmacfir import Window, design, quantize, sweep
from blmacfir.rlc import IMAGE_CAPACITY, filter_memory_image


@functools.lru_cache(maxsize=None)
def min_pulses(v):
    """Independent minimality oracle: dynamic program over signed-digit forms.

    An odd value must spend a pulse and can round to either even neighbour;
    an even value halves for free.  Both children of an odd v >= 3 are
    strictly smaller, so the recursion is well founded; v == 1 is the base.
    """
    if v == 0:
        return 0
    if v == 1:
        return 1
    if v % 2 == 0:
        return min_pulses(v // 2)
    return 1 + min(min_pulses((v - 1) // 2), min_pulses((v + 1) // 2))


def build_population(taps, window=Window.hamming(), grid_n=100):
    """(RealFilter, QuantizedFilter) pairs of the whole cutoff-grid sweep."""
    pairs = []
    for spec in sweep(grid_n, [taps], window):
        real = design(spec)
        pairs.append((real, quantize(real)))
    return pairs


@pytest.fixture(scope="session")
def ham127_pairs():
    return build_population(127)


@pytest.fixture(scope="session")
def ham55_pairs():
    return build_population(55)


@pytest.fixture(scope="session")
def ham255_pairs():
    return build_population(255)


@pytest.fixture(scope="session")
def ham127_images(ham127_pairs):
    """(QuantizedFilter, image) for every filter, loadable or not."""
    return [(q, filter_memory_image(q.half_coeffs(), capacity=None)) for _, q in ham127_pairs]


@pytest.fixture(scope="session")
def ham127_loadable(ham127_images):
    return [(q, img) for q, img in ham127_images if len(img) <= IMAGE_CAPACITY]


@pytest.fixture(scope="session")
def rng():
    return np.random.default_rng(20240601)
