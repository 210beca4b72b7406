"""Cryptographic scores for 8x8 S-boxes: bijectivity, nonlinearity, SAC, DU."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

N_BITS = 8
SIZE = 1 << N_BITS
_X = np.arange(SIZE)


def _table(s) -> np.ndarray:
    s = np.asarray(s, dtype=np.int64)
    if s.shape != (SIZE,):
        raise ValueError(f"S-box must have {SIZE} entries, got shape {s.shape}")
    if s.min() < 0 or s.max() >= SIZE:
        raise ValueError("S-box entries must lie in [0, 255]")
    return s


def is_bijective(s) -> bool:
    s = _table(s)
    return len(np.unique(s)) == SIZE


def coordinate_function(s, j: int) -> np.ndarray:
    """Truth table of output bit ``j`` (0 = least significant)."""
    if not 0 <= j < N_BITS:
        raise IndexError(f"coordinate index must be in [0, {N_BITS - 1}], got {j}")
    return ((_table(s) >> j) & 1).astype(np.int8)


def fwht(a) -> np.ndarray:
    """Fast Walsh-Hadamard transform (natural ordering, unnormalized)."""
    a = np.array(a, dtype=np.int64, copy=True)
    n = a.shape[0]
    if n & (n - 1):
        raise ValueError("length must be a power of two")
    h = 1
    while h < n:
        a = a.reshape(-1, 2, h)
        a = np.stack((a[:, 0] + a[:, 1], a[:, 0] - a[:, 1]), axis=1)
        h *= 2
    return a.reshape(n)


def walsh_spectrum(f) -> np.ndarray:
    """coeffs[w] = sum_x (-1)^(f(x) xor <x, w>), via the FWHT of (-1)^f."""
    f = np.asarray(f)
    if f.shape != (SIZE,) or np.any((f != 0) & (f != 1)):
        raise ValueError("Boolean table must hold 256 values in {0, 1}")
    return fwht(1 - 2 * f.astype(np.int64))


def nonlinearity(f) -> int:
    """128 - max|W_f| / 2: distance to the nearest affine function."""
    peak = int(np.abs(walsh_spectrum(f)).max())
    nl, rem = divmod(SIZE - peak, 2)
    if rem:
        raise ArithmeticError(f"odd Walsh peak {peak}; nonlinearity is not an integer")
    return nl


def coordinate_nonlinearities(s) -> list:
    return [nonlinearity(coordinate_function(s, j)) for j in range(N_BITS)]


def sac_matrix(s) -> np.ndarray:
    """Dependence matrix: entry (i, j) is the fraction of inputs for which
    flipping input bit i flips output bit j."""
    s = _table(s)
    m = np.empty((N_BITS, N_BITS))
    for i in range(N_BITS):
        d = s ^ s[_X ^ (1 << i)]
        for j in range(N_BITS):
            m[i, j] = ((d >> j) & 1).sum() / SIZE
    return m


def sac_average(s) -> float:
    return float(sac_matrix(s).mean())


def difference_distribution_table(s) -> np.ndarray:
    """ddt[dx, dy] = #{x : S(x) ^ S(x ^ dx) == dy}."""
    s = _table(s)
    dx = _X[:, None]
    dy = s[None, :] ^ s[_X[None, :] ^ dx]
    flat = (dx * SIZE + dy).ravel()
    return np.bincount(flat, minlength=SIZE * SIZE).reshape(SIZE, SIZE)


def _du_from_ddt(ddt) -> tuple:
    rows = ddt[1:]
    k = int(np.argmax(rows))
    dx, dy = divmod(k, SIZE)
    return int(rows[dx, dy]), (dx + 1, dy)


def differential_uniformity(s) -> int:
    """Largest DDT entry over nonzero input differences."""
    return _du_from_ddt(difference_distribution_table(s))[0]


@dataclass
class MetricsReport:
    bijective: bool
    nl: list
    sac: np.ndarray
    du: int
    ddt_max_entry_location: tuple
    nl_min: int = field(init=False)
    nl_max: int = field(init=False)
    nl_mean: float = field(init=False)
    sac_avg: float = field(init=False)

    def __post_init__(self):
        self.nl_min = min(self.nl)
        self.nl_max = max(self.nl)
        self.nl_mean = sum(self.nl) / len(self.nl)
        self.sac_avg = float(np.mean(self.sac))

    def to_dict(self) -> dict:
        return {
            "bijective": self.bijective,
            "nl": list(self.nl),
            "nl_min": self.nl_min,
            "nl_max": self.nl_max,
            "nl_mean": self.nl_mean,
            "sac": self.sac.tolist(),
            "sac_avg": self.sac_avg,
            "du": self.du,
            "ddt_max_entry_location": list(self.ddt_max_entry_location),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1)

    def format_table(self, label: str = "S-box") -> str:
        head = ["S-box"] + [f"n{k + 1}" for k in range(N_BITS)] + ["min", "max", "mean"]
        row = [label] + [str(v) for v in self.nl] + [str(self.nl_min), str(self.nl_max), f"{self.nl_mean:.4f}"]
        lines = [format_row(head), format_row(row), ""]
        lines.append(f"bijective: {'yes' if self.bijective else 'NO'}")
        lines.append(f"SAC average: {self.sac_avg:.4f}")
        dx, dy = self.ddt_max_entry_location
        lines.append(f"differential uniformity: {self.du} (first at dx={dx}, dy={dy})")
        return "\n".join(lines)


def format_row(cells) -> str:
    return f"{cells[0]:<26}" + "".join(f"{c:>6}" for c in cells[1:-1]) + f"{cells[-1]:>10}"


def analyze(s) -> MetricsReport:
    s = _table(s)
    ddt = difference_distribution_table(s)
    du, loc = _du_from_ddt(ddt)
    return MetricsReport(
        bijective=is_bijective(s),
        nl=coordinate_nonlinearities(s),
        sac=sac_matrix(s),
        du=du,
        ddt_max_entry_location=loc,
    )
