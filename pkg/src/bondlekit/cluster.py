"""Two-stage clustering of named diagrams.

Stage 1 groups diagrams by coloring count; stage 2 refines each group by the
state sum.  ``distinguished_pairs`` lists pairs that share a stage-1 cluster
but land in different stage-2 clusters, i.e. pairs separated only by the
enhancement.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .algebra import FiniteBondle
from .diagram import BondedDiagram
from .solver import count_colorings
from .statesum import StateSum, state_sum
from .weights import BoltzmannWeights


@dataclass(frozen=True)
class ClusterReport:
    stage1: dict[int, list[str]]
    stage2: dict[tuple[int, str], list[str]]
    distinguished_pairs: list[tuple[str, str]]

    def to_json(self) -> dict:
        return {
            "stage1": {str(k): v for k, v in sorted(self.stage1.items())},
            "stage2": {
                f"{count}|{rendered}": names
                for (count, rendered), names in sorted(self.stage2.items())
            },
            "distinguished_pairs": [list(p) for p in self.distinguished_pairs],
        }


def cluster(
    diagrams: dict[str, BondedDiagram], B: FiniteBondle, W: BoltzmannWeights
) -> ClusterReport:
    names = sorted(diagrams)
    threads = max(1, int(os.environ.get("BONDLE_THREADS", "1")))

    def compute(name: str) -> tuple[int, StateSum]:
        D = diagrams[name]
        return count_colorings(D, B), state_sum(D, B, W)

    if threads > 1 and len(names) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(compute, names))
    else:
        results = [compute(name) for name in names]
    counts: dict[str, int] = {name: c for name, (c, _) in zip(names, results)}
    sums: dict[str, StateSum] = {name: s for name, (_, s) in zip(names, results)}

    stage1: dict[int, list[str]] = {}
    for name in sorted(diagrams):
        stage1.setdefault(counts[name], []).append(name)
    stage2: dict[tuple[int, str], list[str]] = {}
    for name in sorted(diagrams):
        stage2.setdefault((counts[name], sums[name].render()), []).append(name)

    pairs: list[tuple[str, str]] = []
    for members in stage1.values():
        for a, b in itertools.combinations(members, 2):
            if sums[a] != sums[b]:
                pairs.append((a, b))
    pairs.sort()
    return ClusterReport(stage1, stage2, pairs)
