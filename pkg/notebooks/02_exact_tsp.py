"""
Exact tours on 8-node graphs
============================

An 8-node complete graph has only 2520 distinct Hamiltonian cycles, so the
optimum is found by scoring all of them. Held-Karp gives the same cost.
"""

import numpy as np

from tspsbox.tsp import CANONICAL_ORDERS, all_tour_costs, held_karp_cost, solve_tsp, tour_cost

rng = np.random.default_rng(1)
w = np.zeros((8, 8), dtype=np.int64)
w[np.triu_indices(8, 1)] = rng.integers(1, 256, size=28)
w = w + w.T
print(w)

tour = solve_tsp(w)
costs = all_tour_costs(w)
print("optimal tour:", tour, "cost:", tour_cost(w, tour))
print("Held-Karp cost:", held_karp_cost(w))
print("cycles scored:", len(CANONICAL_ORDERS), "worst cost:", costs.max())
print("how many cycles tie for the optimum:", int((costs == costs.min()).sum()))
