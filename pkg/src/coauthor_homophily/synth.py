"""Random co-authorship datasets.

Labels are drawn independently per author. That is enough for checking
algebraic identities between the metrics, which hold on every network;
nothing here plants homophily.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Mapping

from .graph import NEGATIVE, POSITIVE, PaperRecord

__all__ = ["SynthConfig", "generate", "parse_size_dist"]

DEFAULT_MAX_SIZE = 12


@dataclass(frozen=True)
class SynthConfig:
    """Generation parameters.

    Give either ``size`` (every paper has that many authors) or
    ``size_weights`` (relative weight per paper size).
    """

    num_papers: int
    size: int | None = 3
    size_weights: Mapping[int, float] | None = None
    positive_fraction: float = 0.5
    seed: int = 0
    max_size: int = DEFAULT_MAX_SIZE

    def __post_init__(self):
        if self.num_papers < 0:
            raise ValueError("num_papers must be >= 0")
        if not 0.0 < self.positive_fraction < 1.0:
            raise ValueError("positive_fraction must lie in (0, 1)")
        if self.size_weights is not None:
            object.__setattr__(self, "size", None)
            object.__setattr__(self, "size_weights", dict(sorted(self.size_weights.items())))
            sizes = list(self.size_weights)
            if not sizes:
                raise ValueError("size_weights is empty")
            if any(w < 0 for w in self.size_weights.values()) or not sum(self.size_weights.values()) > 0:
                raise ValueError("size weights must be nonnegative and not all zero")
        elif self.size is not None:
            sizes = [self.size]
        else:
            raise ValueError("give size or size_weights")
        if min(sizes) < 2 or max(sizes) > self.max_size:
            raise ValueError(f"paper sizes must lie in [2, {self.max_size}]")


def parse_size_dist(text: str) -> dict[int, float]:
    """Parse ``"2-8"`` (uniform over the range) or ``"2:5,3:3,4:1"`` (weights)."""
    text = text.strip()
    if ":" not in text:
        lo, sep, hi = text.partition("-")
        if not sep:
            raise ValueError(f"bad size distribution {text!r}")
        lo, hi = int(lo), int(hi)
        if lo > hi:
            raise ValueError(f"empty size range {text!r}")
        return {k: 1.0 for k in range(lo, hi + 1)}
    weights = {}
    for part in text.split(","):
        k, _, w = part.partition(":")
        weights[int(k)] = float(w)
    return weights


def generate(config: SynthConfig) -> list[PaperRecord]:
    """Draw ``config.num_papers`` papers; the same config always gives the same list."""
    rng = random.Random(config.seed)
    if config.size_weights is not None:
        sizes, weights = list(config.size_weights), list(config.size_weights.values())
    records = []
    width = max(1, len(str(config.num_papers)))
    for k in range(config.num_papers):
        if config.size_weights is None:
            n = config.size
        else:
            n = rng.choices(sizes, weights)[0]
        labels = tuple(POSITIVE if rng.random() < config.positive_fraction else NEGATIVE for _ in range(n))
        records.append(PaperRecord(f"s{k + 1:0{width}d}", labels))
    return records
