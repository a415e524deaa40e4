"""Seeding: counter-based Philox streams keyed by 64-bit seeds."""

from __future__ import annotations

import hashlib
import secrets

import numpy as np

SEED_BITS = 64


def check_seed(seed: int) -> int:
    seed = int(seed)
    if not 0 <= seed < 2**SEED_BITS:
        raise ValueError(f"seed must be a 64-bit unsigned integer, got {seed}")
    return seed


def fresh_seed() -> int:
    return secrets.randbits(SEED_BITS)


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(check_seed(seed)))


def child_seed(master: int, index: int) -> int:
    """Derive the seed of stream ``index`` from ``master`` by hashing both."""
    payload = check_seed(master).to_bytes(8, "little") + int(index).to_bytes(8, "little", signed=True)
    return int.from_bytes(hashlib.blake2b(payload, digest_size=8).digest(), "little")


def resolve(seed: int | None) -> tuple[int, np.random.Generator]:
    seed = fresh_seed() if seed is None else check_seed(seed)
    return seed, make_rng(seed)
