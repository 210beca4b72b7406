"""Exact minimum-cost Hamiltonian cycles on 8-node complete graphs."""

from __future__ import annotations

from itertools import permutations

import numpy as np

N_NODES = 8
MIN_WEIGHT = 1
MAX_WEIGHT = 255

Tour = tuple  # canonical node order, e.g. (0, 1, 2, 3, 4, 5, 6, 7)


def _canonical_orders(n: int = N_NODES) -> np.ndarray:
    # permutations() of a sorted range is emitted in lexicographic order,
    # so row 0 of the result is the lexicographically smallest cycle.
    rows = [(0,) + p for p in permutations(range(1, n)) if p[0] < p[-1]]
    return np.array(rows, dtype=np.intp)


CANONICAL_ORDERS = _canonical_orders()  # (2520, 8)
_NEXT = np.roll(CANONICAL_ORDERS, -1, axis=1)
CANONICAL_ORDERS.setflags(write=False)


def validate_weights(w) -> np.ndarray:
    """Check an 8x8 symmetric weight matrix with zero diagonal and entries in [1, 255]."""
    w = np.asarray(w)
    if w.shape != (N_NODES, N_NODES):
        raise ValueError(f"weight matrix must be {N_NODES}x{N_NODES}, got {w.shape}")
    if not np.issubdtype(w.dtype, np.integer):
        raise ValueError("weights must be integers")
    if not np.array_equal(w, w.T):
        raise ValueError("weight matrix must be symmetric")
    if np.any(np.diag(w) != 0):
        raise ValueError("weight matrix diagonal must be zero")
    off = w[~np.eye(N_NODES, dtype=bool)]
    if off.min() < MIN_WEIGHT or off.max() > MAX_WEIGHT:
        raise ValueError("off-diagonal weights must lie in [1, 255]")
    return w.astype(np.int64)


def is_canonical(order) -> bool:
    order = tuple(int(v) for v in order)
    return (
        len(order) == N_NODES
        and sorted(order) == list(range(N_NODES))
        and order[0] == 0
        and order[1] < order[-1]
    )


def canonicalize(order) -> Tour:
    """Rotate a cycle to start at node 0 and orient it so order[1] < order[-1]."""
    order = [int(v) for v in order]
    k = order.index(0)
    order = order[k:] + order[:k]
    if order[1] > order[-1]:
        order = [order[0]] + order[:0:-1]
    return tuple(order)


def tour_cost(w, order) -> int:
    """Total weight of the closed cycle visiting ``order``."""
    w = np.asarray(w)
    order = np.asarray(order, dtype=np.intp)
    return int(w[order, np.roll(order, -1)].sum())


def all_tour_costs(w) -> np.ndarray:
    """Cost of every canonical cycle, aligned with ``CANONICAL_ORDERS``."""
    w = np.asarray(w, dtype=np.int64)
    return w[CANONICAL_ORDERS, _NEXT].sum(axis=1)


def solve_tsp(w) -> Tour:
    """Minimum-cost canonical tour; ties go to the lexicographically smallest order."""
    w = validate_weights(w)
    costs = all_tour_costs(w)
    # argmin returns the first minimum, i.e. the lexicographic one
    return tuple(int(v) for v in CANONICAL_ORDERS[int(np.argmin(costs))])


def held_karp_cost(w) -> int:
    """Optimal cycle cost by the Held-Karp subset DP, starting from node 0.

    Independent of the enumeration in :func:`solve_tsp`; the two must agree.
    """
    w = np.asarray(w, dtype=np.int64)
    n = w.shape[0]
    full = 1 << n
    inf = np.iinfo(np.int64).max // 4
    best = np.full((full, n), inf, dtype=np.int64)
    best[1, 0] = 0
    for mask in range(1, full, 2):
        for last in range(n):
            c = best[mask, last]
            if c >= inf:
                continue
            for nxt in range(1, n):
                bit = 1 << nxt
                if mask & bit:
                    continue
                cand = c + w[last, nxt]
                if cand < best[mask | bit, nxt]:
                    best[mask | bit, nxt] = cand
    return int(min(best[full - 1, k] + w[k, 0] for k in range(1, n)))
