"""Seeded generators for random exact test instances."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .exact_core import Poly, poly_gcd


@dataclass(frozen=True)
class InstanceConfig:
    max_degree: int = 8
    coeff_bound: int = 10
    max_denominator: int = 4
    seed: int = 0

    def rng(self) -> random.Random:
        return random.Random(self.seed)


def random_rat(rng: random.Random, cfg: InstanceConfig) -> Fraction:
    den = rng.randint(1, cfg.max_denominator)
    return Fraction(rng.randint(-cfg.coeff_bound * den, cfg.coeff_bound * den), den)


def random_monic(rng: random.Random, cfg: InstanceConfig, degree: int) -> Poly:
    return Poly([random_rat(rng, cfg) for _ in range(degree)] + [1])


def random_pair(rng: random.Random, cfg: InstanceConfig, min_degree: int = 1) -> tuple[Poly, Poly]:
    """Monic ``p`` and monic ``q`` with ``deg q = deg p - 1`` (not necessarily coprime)."""
    n = rng.randint(min_degree, cfg.max_degree)
    return random_monic(rng, cfg, n), random_monic(rng, cfg, n - 1)


def random_coprime_pair(rng: random.Random, cfg: InstanceConfig, min_degree: int = 1):
    while True:
        p, q = random_pair(rng, cfg, min_degree)
        if poly_gcd(p, q).degree == 0:
            return p, q


def distinct_rats(rng: random.Random, k: int, bound: int = 6, den: int = 3) -> list[Fraction]:
    pool = sorted({Fraction(a, b) for a in range(-bound * den, bound * den + 1)
                   for b in range(1, den + 1)})
    return rng.sample(pool, k)


def irreducible_quadratic(rng: random.Random) -> Poly:
    """``(x - u)^2 + v`` with ``v > 0``."""
    u = Fraction(rng.randint(-12, 12), rng.randint(1, 3))
    v = Fraction(rng.randint(1, 12), rng.randint(1, 3))
    return Poly([u * u + v, -2 * u, 1])


def roots_and_quadratics(rng: random.Random, max_degree: int = 8) -> tuple[Poly, int]:
    """Squarefree product of ``k`` distinct rational linear factors and ``m`` quadratics.

    Returns the polynomial and ``k``; ``k + 2m`` is between 1 and ``max_degree``.
    """
    while True:
        m = rng.randint(0, max_degree // 2)
        k = rng.randint(0, max_degree - 2 * m)
        if k + 2 * m == 0:
            continue
        p = Poly.from_roots(distinct_rats(rng, k))
        for _ in range(m):
            p = p * irreducible_quadratic(rng)
        if poly_gcd(p, p.derivative()).degree == 0:
            return p, k
