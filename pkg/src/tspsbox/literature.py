"""Nonlinearity rows of previously published 8x8 S-boxes, for side-by-side display.

Values are copied as printed, including rounded means and the Ozkaynak
row whose max (104) disagrees with its own n3 entry (106). The S-boxes
themselves are not reconstructed here.
"""

from __future__ import annotations

from typing import NamedTuple


class ComparisonRow(NamedTuple):
    label: str
    nl: tuple
    nl_min: int
    nl_max: int
    nl_mean: float


PROPOSED = ComparisonRow("Proposed (TSP+PWLCM)", (108, 110, 110, 108, 106, 106, 106, 106), 106, 110, 107.5)

LITERATURE = (
    ComparisonRow("Ahmad et al. (ACO)", (108, 106, 106, 106, 106, 110, 106, 108), 106, 110, 107.0),
    ComparisonRow("Ozkaynak et al. (Lorenz)", (104, 100, 106, 102, 104, 102, 104, 104), 100, 104, 103.3),
    ComparisonRow("Khan et al.", (108, 102, 100, 104, 104, 102, 98, 106), 98, 108, 103.0),
    ComparisonRow("Gondal et al. (Baker)", (98, 100, 106, 104, 106, 100, 106, 104), 98, 106, 103.0),
    ComparisonRow("Belazi et al. (Rossler)", (102, 106, 104, 106, 108, 106, 106, 104), 102, 108, 105.25),
)
