"""Seeded random ideals and cone-membership instances."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .monomial import Exponent, MonomialIdeal, minimalize


@dataclass(frozen=True)
class RandomIdealConfig:
    min_vars: int = 2
    max_vars: int = 4
    min_gens: int = 2
    max_gens: int = 6
    max_coord: int = 8
    # chance of appending one generator drawn from inside the Newton polyhedron,
    # which is how ideals with generators above delta(I) show up at all
    interior_prob: float = 0.0


def _nonzero_vector(rng: random.Random, s: int, max_coord: int) -> Exponent:
    while True:
        v = tuple(rng.randint(0, max_coord) for _ in range(s))
        if any(v):
            return v


def random_ideal(rng: random.Random, cfg: RandomIdealConfig = RandomIdealConfig(), num_vars: int | None = None) -> MonomialIdeal:
    s = num_vars if num_vars is not None else rng.randint(cfg.min_vars, cfg.max_vars)
    k = rng.randint(cfg.min_gens, cfg.max_gens)
    gens = [_nonzero_vector(rng, s, cfg.max_coord) for _ in range(k)]
    if cfg.interior_prob and k < cfg.max_gens and rng.random() < cfg.interior_prob:
        gens.append(_interior_point(rng, gens, cfg.max_coord, max_slack=2))
    return minimalize(gens, s)


def _interior_point(rng: random.Random, pts, max_coord: int, max_slack: int) -> Exponent:
    s = len(pts[0])
    weights = [rng.randint(0, 9) for _ in pts]
    if not any(weights):
        weights[rng.randrange(len(pts))] = 1
    total = sum(weights)
    combo = [sum(Fraction(w, total) * p[j] for w, p in zip(weights, pts)) for j in range(s)]
    return tuple(min(max_coord, math.ceil(c) + rng.randint(0, max_slack)) for c in combo)


@dataclass(frozen=True)
class ConeInstance:
    points: tuple[Exponent, ...]
    v: Exponent


def random_cone_instance(rng: random.Random, cfg: RandomIdealConfig = RandomIdealConfig(), max_slack: int = 3) -> ConeInstance:
    """A point of conv(U) + R_+^s: random convex combination of U plus random
    slack, rounded up to integers."""
    s = rng.randint(cfg.min_vars, cfg.max_vars)
    k = rng.randint(cfg.min_gens, cfg.max_gens)
    pts = tuple(sorted({_nonzero_vector(rng, s, cfg.max_coord) for _ in range(k)}))
    return ConeInstance(pts, _interior_point(rng, list(pts), 10**9, max_slack))
