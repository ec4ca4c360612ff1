"""Seed handling.

All randomness goes through numpy's PCG64 bit generator.  Derived seeds
(per-trial, per-retry) are produced with the SplitMix64 finalizer so the
derivation is independent of execution order and easy to reproduce.
"""

from __future__ import annotations

import numpy as np

MASK64 = (1 << 64) - 1


def splitmix64(x: int) -> int:
    """One SplitMix64 step: advance by the golden gamma and apply the finalizer."""
    z = (x + 0x9E3779B97F4A7C15) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def derive_seed(master: int, *parts: int) -> int:
    """Mix ``master`` with integer ``parts`` into a new 64-bit seed."""
    x = splitmix64(master & MASK64)
    for p in parts:
        x = splitmix64(x ^ (p & MASK64))
    return x


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed & MASK64))
