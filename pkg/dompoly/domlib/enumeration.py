# -*- coding: utf-8 -*-

# dompoly, exact domination polynomial computation and analysis
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU Affero General Public License as
# published by the Free Software Foundation, either version 3 of the
# License, or any later version.

# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU Affero General Public License for more details.

# You should have received a copy of the GNU Affero General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.

"""Exhaustive enumeration of dominating sets.

The vertex set is split in a low half (the first `inner_bits` vertices) and
a high half. For each half, the union of closed neighbourhoods and the size
of every subset are tabulated by doubling: adding vertex v to all subsets of
the first v vertices appends `table | N[v]` to `table`.

A subset S = A + B (A low, B high) dominates iff dom(A) | dom(B) covers every
vertex. The high subsets are processed by chunks of rows, each row compared
against the whole low table at once with numpy broadcasting, and the sizes
of the dominating combinations are histogrammed with bincount.

The high subsets are split in contiguous shards which may run in separate
processes. Each shard returns a plain count vector, merged by addition, so
the result does not depend on the number of shards.
"""

import logging
import math
import multiprocessing

import numpy as np

import dompoly
from dompoly.commons import EnumerationCapError
from dompoly.polylib.coeffseq import CoeffSeq
from .profile import DominationProfile

LOG = logging.getLogger('dompoly')

# number of broadcast cells handled per chunk
CHUNK_CELLS = 1 << 20

# below this order a process pool costs more than it saves
PARALLEL_MIN_ORDER = 22


def _subset_tables(masks):
    """
    Union of the masks of every subset, and its size, indexed by the subset
    bitmask over the given masks.
    """
    dom = np.zeros(1, dtype=np.uint64)
    size = np.zeros(1, dtype=np.int64)
    for mask in masks:
        dom = np.concatenate((dom, dom | np.uint64(mask)))
        size = np.concatenate((size, size + 1))
    return dom, size

def _count_shard(args):
    """ Count dominating sets whose high part lies in [start, stop)

    Top-level so that it can be shipped to worker processes.

    Parameters
    ----------
    args : tuple
        (closed neighbourhoods, order, inner bits, start, stop)

    Returns
    -------
    list of int
        n+1 counts indexed by cardinality.
    """
    closed, n, inner, start, stop = args
    full = np.uint64((1 << n) - 1)

    dom_low, size_low = _subset_tables(closed[:inner])
    dom_high, size_high = _subset_tables(closed[inner:])

    counts = np.zeros(n + 1, dtype=np.int64)
    rows = max(1, CHUNK_CELLS // len(dom_low))
    for first in range(start, stop, rows):
        last = min(first + rows, stop)
        covered = (dom_high[first:last, None] | dom_low[None, :]) == full
        sizes = (size_high[first:last, None] + size_low[None, :])[covered]
        counts += np.bincount(sizes, minlength=n + 1)
    return [int(c) for c in counts]

def _shards(total, count):
    """Split range(total) in at most `count` contiguous non-empty ranges."""
    count = max(1, min(count, total))
    step, extra = divmod(total, count)
    bounds = []
    start = 0
    for i in range(count):
        stop = start + step + (1 if i < extra else 0)
        bounds.append((start, stop))
        start = stop
    return bounds

def brute_force_profile(g, config=None, threads=None):
    """ Domination profile by exhaustive enumeration

    Parameters
    ----------
    g : Graph
    config : Configuration, optional
        Provides the order cap, the low half width and the number of worker
        processes. Defaults to dompoly.Configuration().
    threads : int, optional
        Overrides config.threads.

    Returns
    -------
    DominationProfile
        Exact counts; independent of the number of workers.

    Throws
    ------
    EnumerationCapError
        When the order of g exceeds config.cap.
    """
    if config is None:
        config = dompoly.Configuration()
    if threads is None:
        threads = config.threads

    n = g.n
    if n > config.cap:
        raise EnumerationCapError("Graph of order %d exceeds the brute-force "
                                  "cap of %d" % (n, config.cap))

    inner = min(n, config.inner_bits)
    outer_total = 1 << (n - inner)
    closed = tuple(g.closed)

    if threads > 1 and n >= PARALLEL_MIN_ORDER:
        work = [(closed, n, inner, start, stop)
                for start, stop in _shards(outer_total, threads)]
    else:
        work = [(closed, n, inner, 0, outer_total)]

    LOG.debug('Enumerating 2^%d subsets of %r in %d shard(s)'
              % (n, g, len(work)))

    if len(work) > 1:
        with multiprocessing.Pool(processes=len(work)) as pool:
            results = pool.map(_count_shard, work)
    else:
        results = [_count_shard(item) for item in work]

    counts = [sum(column) for column in zip(*results)]
    return DominationProfile(n, CoeffSeq(counts))

def enumerate_dominating_sets(g):
    """ Every dominating set of g, as a vertex bitmask

    Recomputes the dominated vertices of each subset from scratch; slow,
    intended as a reference for small graphs.
    """
    closed = g.closed
    full = g.full_mask
    for subset in range(1 << g.n):
        dominated = 0
        rest = subset
        while rest:
            low = rest & -rest
            dominated |= closed[low.bit_length() - 1]
            rest ^= low
        if dominated == full:
            yield subset

def naive_profile(g):
    """Profile counted with enumerate_dominating_sets."""
    counts = [0] * (g.n + 1)
    for subset in enumerate_dominating_sets(g):
        counts[bin(subset).count('1')] += 1
    return DominationProfile(g.n, CoeffSeq(counts))

def dependent_profile(g, config=None):
    """ Dependent-set polynomial of g

    Counts the vertex subsets containing at least one edge, by size. An
    independence table is built by doubling: S + {v} is independent iff S is
    and no neighbour of v lies in S.

    Returns
    -------
    CoeffSeq
        n+1 coefficients.

    Throws
    ------
    EnumerationCapError
        When the order of g exceeds config.cap.
    """
    if config is None:
        config = dompoly.Configuration()
    n = g.n
    if n > config.cap:
        raise EnumerationCapError("Graph of order %d exceeds the brute-force "
                                  "cap of %d" % (n, config.cap))

    independent = np.ones(1, dtype=bool)
    size = np.zeros(1, dtype=np.int64)
    for v in range(n):
        below = np.arange(1 << v, dtype=np.uint64)
        clear = (below & np.uint64(g.adj[v] & ((1 << v) - 1))) == 0
        independent = np.concatenate((independent, independent & clear))
        size = np.concatenate((size, size + 1))

    independent_counts = np.bincount(size[independent], minlength=n + 1)
    return CoeffSeq(math.comb(n, i) - int(independent_counts[i])
                    for i in range(n + 1))
