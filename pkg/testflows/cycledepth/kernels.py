# Copyright 2023 Katteli Inc.
# TestFlows.com Open-Source Software Testing Framework (http://testflows.com)
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Compiled subset dynamic programs.

Graphs are passed as ``int64`` arrays of neighbor bitmasks over dense
vertex ids ``0..n-1`` with ``n <= 62``.
"""
import numpy as np

from numba import njit

#: largest vertex count a mask fits into
max_vertices = 62


@njit(cache=True)
def _index(low):
    """Index of the single set bit of ``low``."""
    i = 0
    while low > 1:
        low >>= 1
        i += 1
    return i


@njit(cache=True)
def _popcount(x):
    count = 0
    while x != 0:
        x &= x - 1
        count += 1
    return count


@njit(cache=True)
def _boundary(adj, inner, v):
    """Vertices outside ``inner`` and ``v`` reachable from ``v`` through ``inner``."""
    one = np.int64(1)
    seen = one << v
    stack = seen
    reach = np.int64(0)
    while stack != 0:
        low = stack & -stack
        stack ^= low
        a = adj[_index(low)]
        reach |= a
        new = a & inner & ~seen
        seen |= new
        stack |= new
    return reach & ~(inner | (one << v))


@njit(cache=True)
def treewidth_dp(adj, n):
    """Treewidth by dynamic programming over elimination prefixes.

    ``best[S]`` is the least possible maximum boundary size over orderings
    that eliminate ``S`` first.
    """
    if n == 0:
        return -1
    size = np.int64(1) << n
    best = np.full(size, n, dtype=np.int64)
    best[0] = -1
    one = np.int64(1)
    for mask in range(size):
        current = best[mask]
        if current >= n:
            continue
        for v in range(n):
            if mask & (one << v):
                continue
            q = _popcount(_boundary(adj, mask, v))
            value = current if current > q else q
            target = mask | (one << v)
            if value < best[target]:
                best[target] = value
    return best[size - 1]


@njit(cache=True)
def path_ends(adj, n, start, allowed):
    """``ends[S]`` is the set of vertices ``v`` such that some path from
    ``start`` to ``v`` has vertex set exactly ``S`` (``S`` within ``allowed``)."""
    one = np.int64(1)
    size = one << n
    ends = np.zeros(size, dtype=np.int64)
    ends[one << start] = one << start
    for mask in range(size):
        e = ends[mask]
        while e != 0:
            low = e & -e
            e ^= low
            nxt = adj[_index(low)] & allowed & ~mask
            while nxt != 0:
                step = nxt & -nxt
                nxt ^= step
                ends[mask | step] |= step
    return ends


@njit(cache=True)
def longest_closing(ends, targets, min_vertices):
    """Largest ``S`` with at least ``min_vertices`` members having a path end
    in ``targets``. Returns ``(S, end)`` or ``(0, -1)``."""
    best_mask = np.int64(0)
    best_count = 0
    best_end = -1
    for mask in range(ends.shape[0]):
        hit = ends[mask] & targets
        if hit == 0:
            continue
        count = _popcount(np.int64(mask))
        if count < min_vertices or count <= best_count:
            continue
        best_mask = np.int64(mask)
        best_count = count
        best_end = _index(hit & -hit)
    return best_mask, best_end


def adjacency_array(masks) -> np.ndarray:
    return np.array(masks, dtype=np.int64)


def trace_path(ends: np.ndarray, masks, start: int, mask: int, end: int) -> tuple:
    """Recover a ``start``-``end`` path with vertex set ``mask`` from ``ends``."""
    vertices = [end]
    while mask != 1 << start:
        previous_mask = mask & ~(1 << end)
        candidates = int(ends[previous_mask]) & masks[end]
        end = (candidates & -candidates).bit_length() - 1
        vertices.append(end)
        mask = previous_mask
    vertices.reverse()
    return tuple(vertices)
