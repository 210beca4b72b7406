"""Piece-wise linear chaotic map (PWLCM) and the byte/weight streams drawn from it."""

from __future__ import annotations

import math
import struct
from dataclasses import dataclass

BURN_IN_STEPS = 1000
SCALE = 10**10

# replacement state when a step lands on 0 or 1 (x == p gives exactly 1.0)
REPAIR_VALUE = 0.5 - 1e-12


def _in_unit_interval(v: float) -> bool:
    return 0.0 < v < 1.0


def pwlcm_step(x: float, p: float) -> float:
    """One iteration of the PWLCM.

    Returns ``x / p`` for ``0 < x <= p`` and ``(1 - x) / (1 - p)`` otherwise.
    Results that fall on the boundary of (0, 1) are replaced by ``REPAIR_VALUE``.
    """
    if not _in_unit_interval(x):
        raise ValueError(f"state x must lie in (0, 1), got {x!r}")
    if not _in_unit_interval(p):
        raise ValueError(f"control parameter p must lie in (0, 1), got {p!r}")
    if x <= p:
        y = x / p
    else:
        y = (1.0 - x) / (1.0 - p)
    if not _in_unit_interval(y):
        return REPAIR_VALUE
    return y


def _scaled_floor(x: float) -> int:
    # floor of the double product, then exact integer arithmetic
    return int(math.floor(x * 1e10))


def extract_byte(x: float) -> int:
    """floor(x * 10**10) mod 256."""
    return _scaled_floor(x) % 256


def extract_weight(x: float) -> int:
    """Edge weight in [1, 255]: (floor(x * 10**10) mod 255) + 1."""
    return _scaled_floor(x) % 255 + 1


def float_to_hex(v: float) -> str:
    """IEEE-754 binary64 bit pattern as 16 big-endian hex digits."""
    return struct.pack(">d", v).hex()


def hex_to_float(h: str) -> float:
    h = h.strip().lower()
    if h.startswith("0x"):
        h = h[2:]
    if len(h) != 16:
        raise ValueError(f"expected 16 hex digits, got {h!r}")
    return struct.unpack(">d", bytes.fromhex(h))[0]


@dataclass(frozen=True)
class ChaosParams:
    """Initial condition ``x0`` and control parameter ``p``, both in (0, 1)."""

    x0: float
    p: float

    def __post_init__(self):
        for name in ("x0", "p"):
            v = getattr(self, name)
            if not isinstance(v, (int, float)) or not _in_unit_interval(float(v)):
                raise ValueError(f"{name} must lie in the open interval (0, 1), got {v!r}")
            object.__setattr__(self, name, float(v))

    @property
    def x0_hex(self) -> str:
        return float_to_hex(self.x0)

    @property
    def p_hex(self) -> str:
        return float_to_hex(self.p)

    def to_dict(self) -> dict:
        # hex fields are authoritative; decimals are for humans
        return {"x0_hex": self.x0_hex, "p_hex": self.p_hex, "x0": repr(self.x0), "p": repr(self.p)}

    @classmethod
    def from_dict(cls, d: dict) -> "ChaosParams":
        if "x0_hex" in d and "p_hex" in d:
            return cls(hex_to_float(d["x0_hex"]), hex_to_float(d["p_hex"]))
        return cls(float(d["x0"]), float(d["p"]))

    @classmethod
    def from_hex(cls, x0_hex: str, p_hex: str) -> "ChaosParams":
        return cls(hex_to_float(x0_hex), hex_to_float(p_hex))


class ChaosStream:
    """Stateful PWLCM trajectory.

    ``x`` is the current state and ``n`` the number of steps taken so far.
    Not safe to step from several threads at once.
    """

    def __init__(self, params: ChaosParams):
        self.params = params
        self.x = params.x0
        self.n = 0

    def __repr__(self):
        return f"ChaosStream(x={self.x!r}, p={self.params.p!r}, n={self.n})"

    def step(self) -> float:
        self.x = pwlcm_step(self.x, self.params.p)
        self.n += 1
        return self.x

    def burn_in(self, count: int = BURN_IN_STEPS) -> "ChaosStream":
        """Advance ``count`` steps, discarding every intermediate state."""
        if count < 0:
            raise ValueError("burn-in count must be non-negative")
        for _ in range(count):
            self.step()
        return self

    def next_byte(self) -> int:
        return extract_byte(self.step())

    def next_weight(self) -> int:
        return extract_weight(self.step())


def burn_in(stream: ChaosStream, count: int = BURN_IN_STEPS) -> ChaosStream:
    return stream.burn_in(count)
