"""Chaotic, TSP-ordered 8x8 S-box synthesis and S-box quality metrics."""

from .chaos import ChaosParams, ChaosStream, extract_byte, extract_weight, pwlcm_step
from .metrics import (
    MetricsReport,
    analyze,
    coordinate_function,
    difference_distribution_table,
    differential_uniformity,
    is_bijective,
    nonlinearity,
    sac_average,
    sac_matrix,
    walsh_spectrum,
)
from .pipeline import GenerationTrace, IterationCapError, generate_sbox
from .sboxio import load_published_sbox, read_grid, write_grid
from .tsp import solve_tsp, tour_cost

__version__ = "0.1.0"
