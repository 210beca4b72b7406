"""
The piece-wise linear chaotic map
=================================

Iterate the map, look at how two nearby starting points separate, and draw
bytes and edge weights from a burned-in trajectory.
"""

import numpy as np

from tspsbox.chaos import ChaosParams, ChaosStream, pwlcm_step

# two trajectories that start 1e-12 apart
a, b = 0.3, 0.3 + 1e-12
gap = []
for _ in range(60):
    a, b = pwlcm_step(a, 0.499), pwlcm_step(b, 0.499)
    gap.append(abs(a - b))
print("separation after 10, 30, 60 steps:", gap[9], gap[29], gap[59])

# bytes after the 1000-step transient
stream = ChaosStream(ChaosParams(0.3, 0.499)).burn_in()
print("first bytes:", [stream.next_byte() for _ in range(16)])
print("first weights:", [stream.next_weight() for _ in range(16)])

# byte histogram over a long run is close to flat
counts = np.bincount([stream.next_byte() for _ in range(256 * 400)], minlength=256)
print("byte counts min/max over 102400 draws:", counts.min(), counts.max())
