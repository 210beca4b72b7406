"""S-box synthesis: chaotic initial permutation reordered by exact TSP tours."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .chaos import BURN_IN_STEPS, ChaosParams, ChaosStream
from .tsp import N_NODES, solve_tsp

SBOX_SIZE = 256
N_LINEAR = SBOX_SIZE // N_NODES  # 32
N_EDGES = N_NODES * (N_NODES - 1) // 2  # 28
MAX_DRAWS = 10**7

MIDDLE_POSITIONS = tuple(range(124, 132))
LAST_POSITIONS = tuple(range(248, 256))

_EDGES = [(i, j) for i in range(N_NODES) for j in range(i + 1, N_NODES)]


class IterationCapError(RuntimeError):
    """Raised when the chaotic trajectory fails to produce all 256 byte values."""


def as_sbox(table) -> np.ndarray:
    s = np.asarray(table, dtype=np.int64)
    if s.shape != (SBOX_SIZE,):
        raise ValueError(f"S-box must have {SBOX_SIZE} entries, got shape {s.shape}")
    if s.min() < 0 or s.max() > 255:
        raise ValueError("S-box entries must lie in [0, 255]")
    return s


def is_permutation(s) -> bool:
    s = np.asarray(s)
    return s.shape == (SBOX_SIZE,) and np.array_equal(np.sort(s), np.arange(SBOX_SIZE))


@dataclass
class SubGraph:
    positions: tuple
    nodes: tuple
    weights: np.ndarray = field(default_factory=lambda: np.zeros((N_NODES, N_NODES), dtype=np.int64))

    @classmethod
    def from_sbox(cls, s, positions) -> "SubGraph":
        positions = tuple(int(p) for p in positions)
        if len(positions) != N_NODES or list(positions) != sorted(set(positions)):
            raise ValueError("sub-graph needs 8 strictly ascending positions")
        return cls(positions, tuple(int(s[p]) for p in positions))


@dataclass
class SubGraphRecord:
    label: str
    positions: tuple
    nodes: tuple
    weights: np.ndarray
    tour: tuple
    draws_before: int  # stream.n when weight assignment started
    sbox_after: np.ndarray | None = None

    def to_dict(self, verbose: bool = False) -> dict:
        d = {
            "label": self.label,
            "positions": list(self.positions),
            "nodes": list(self.nodes),
            "weights": self.weights.tolist(),
            "tour": list(self.tour),
            "draws_before": self.draws_before,
        }
        if verbose and self.sbox_after is not None:
            d["sbox_after"] = self.sbox_after.tolist()
        return d


@dataclass
class GenerationTrace:
    params: ChaosParams
    initial_sbox: np.ndarray
    initial_draws: int
    records: list = field(default_factory=list)
    final_sbox: np.ndarray | None = None

    def to_dict(self, verbose: bool = False) -> dict:
        d = {
            "params": self.params.to_dict(),
            "burn_in": BURN_IN_STEPS,
            "initial_draws": self.initial_draws,
            "subgraphs": [r.to_dict(verbose) for r in self.records],
            "final_sbox": None if self.final_sbox is None else self.final_sbox.tolist(),
        }
        if verbose:
            d["initial_sbox"] = self.initial_sbox.tolist()
        return d

    def to_json(self, verbose: bool = False) -> str:
        return json.dumps(self.to_dict(verbose), indent=1)


def gen_initial_sbox(stream: ChaosStream, max_draws: int = MAX_DRAWS) -> np.ndarray:
    """Collect chaotic bytes, skipping repeats, until all 256 values have appeared.

    The stream must already be burned in.
    """
    seen = bytearray(SBOX_SIZE)
    out = []
    for _ in range(max_draws):
        t = stream.next_byte()
        if not seen[t]:
            seen[t] = 1
            out.append(t)
            if len(out) == SBOX_SIZE:
                return np.array(out, dtype=np.int64)
    raise IterationCapError(
        f"only {len(out)} distinct bytes after {max_draws} draws; trajectory looks periodic"
    )


def decompose_linear(s) -> list:
    """Split the S-box into 32 consecutive windows of 8 positions."""
    return [SubGraph.from_sbox(s, range(N_NODES * k, N_NODES * (k + 1))) for k in range(N_LINEAR)]


def assign_weights(stream: ChaosStream, g: SubGraph) -> SubGraph:
    """Draw 28 weights for edges (0,1), (0,2), ..., (6,7) in that order."""
    w = np.zeros((N_NODES, N_NODES), dtype=np.int64)
    for i, j in _EDGES:
        w[i, j] = w[j, i] = stream.next_weight()
    g.weights = w
    return g


def apply_tour(s, g: SubGraph, tour) -> np.ndarray:
    """Write ``g.nodes`` back into ``g.positions`` in tour order; returns a new S-box."""
    out = np.array(s, dtype=np.int64, copy=True)
    for k, pos in enumerate(g.positions):
        out[pos] = g.nodes[tour[k]]
    return out


def _process(s, stream, positions, label, trace):
    g = SubGraph.from_sbox(s, positions)
    n0 = stream.n
    assign_weights(stream, g)
    tour = solve_tsp(g.weights)
    s = apply_tour(s, g, tour)
    if trace is not None:
        trace.records.append(SubGraphRecord(label, g.positions, g.nodes, g.weights, tour, n0, s.copy()))
    return s


def middle_pass(s, stream: ChaosStream, trace: GenerationTrace | None = None) -> np.ndarray:
    """Reorder the central window (positions 124..131) through one more TSP."""
    return _process(s, stream, MIDDLE_POSITIONS, "middle", trace)


def final_pass(s, stream: ChaosStream, trace: GenerationTrace | None = None) -> np.ndarray:
    """Reorder the last window (positions 248..255) with fresh weights."""
    return _process(s, stream, LAST_POSITIONS, "last", trace)


def generate_sbox(params: ChaosParams) -> tuple:
    """Run the full synthesis for ``params``; returns ``(sbox, trace)``.

    A single chaotic trajectory feeds the initial permutation and all 34
    weight assignments, in program order.
    """
    stream = ChaosStream(params).burn_in(BURN_IN_STEPS)
    s = gen_initial_sbox(stream)
    trace = GenerationTrace(params, s.copy(), stream.n - BURN_IN_STEPS)
    for k, g in enumerate(decompose_linear(s)):
        s = _process(s, stream, g.positions, f"linear-{k}", trace)
    s = middle_pass(s, stream, trace)
    s = final_pass(s, stream, trace)
    trace.final_sbox = s.copy()
    return s, trace
