"""Seeded random expressions for cross-validation runs."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import List, Sequence

from .comparison import CostFunction
from .expr import EMPTY, EPSILON, Are, approx, concat, star, sym, union


@dataclass
class PopulationConfig:
    alphabet: str = "ab"
    costs: Sequence[CostFunction] = field(default_factory=list)
    max_depth: int = 3
    max_budget: int = 2
    size: int = 500
    seed: int = 0
    # chance that the root is a similarity operator
    approx_root: float = 0.7


def random_are(rng: random.Random, depth: int, config: PopulationConfig) -> Are:
    """Canonical expression of syntactic depth at most ``depth``."""
    if depth == 0 or rng.random() < 0.25:
        roll = rng.random()
        if roll < 0.08:
            return EPSILON
        if roll < 0.1:
            return EMPTY
        return sym(rng.choice(config.alphabet))
    kind = rng.choice(("sum", "concat", "concat", "star", "approx"))
    if kind == "approx" and config.costs:
        return random_approx(rng, depth, config)
    if kind == "sum":
        return union(random_are(rng, depth - 1, config), random_are(rng, depth - 1, config))
    if kind == "star":
        return star(random_are(rng, depth - 1, config))
    return concat(random_are(rng, depth - 1, config), random_are(rng, depth - 1, config))


def random_approx(rng: random.Random, depth: int, config: PopulationConfig) -> Are:
    cost = rng.choice(list(config.costs))
    budget = rng.randint(0, config.max_budget)
    return approx(cost, budget, random_are(rng, depth - 1, config))


def population(config: PopulationConfig) -> List[Are]:
    """``config.size`` distinct expressions, none of them ``nil``."""
    rng = random.Random(config.seed)
    seen = set()
    result = []
    attempts = 0
    while len(result) < config.size:
        attempts += 1
        if attempts > 100 * config.size:
            raise RuntimeError("could not generate enough distinct expressions")
        if config.costs and rng.random() < config.approx_root:
            e = random_approx(rng, config.max_depth, config)
        else:
            e = random_are(rng, config.max_depth, config)
        if e == EMPTY or e in seen:
            continue
        seen.add(e)
        result.append(e)
    return result
