"""Random probe of the lower bound |O_rel| > sqrt(2|A|) for connected odd-even graphs.

Runs two populations side by side: vertex sets avoiding 0 and vertex sets
containing 0. Only the second is expected to produce violations.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from _common import parse_config, write_json
from goldgraph.oddeven import check_con1


@dataclass
class Config:
    trials: int = 10_000
    min_size: int = 2
    max_size: int = 64
    seed: int = 1
    out: str = "results/con1_probe.json"


def sample(rng: random.Random, cfg: Config, with_zero: bool):
    size = rng.randint(cfg.min_size, cfg.max_size)
    span = 4 * size + 40
    A = rng.sample(range(2, span, 2), size - with_zero) + ([0] if with_zero else [])
    density = rng.choice((0.1, 0.3, 0.6))
    O = [o for o in range(1, span, 2) if rng.random() < density]
    return A, O


def main(cfg: Config) -> None:
    rng = random.Random(cfg.seed)
    summary = {}
    for with_zero in (False, True):
        connected = violated = 0
        examples = []
        for _ in range(cfg.trials):
            A, O = sample(rng, cfg, with_zero)
            rep = check_con1(A, O)
            connected += rep["connected"]
            if rep["theorem_violated"]:
                violated += 1
                if len(examples) < 5:
                    examples.append({"A": sorted(A), "O_rel_size": rep["O_rel_size"]})
        key = "with_zero" if with_zero else "without_zero"
        summary[key] = {"trials": cfg.trials, "connected": connected, "violations": violated, "examples": examples}
        print(f"{key:<13} connected={connected:>5} violations={violated}")
    print(f"wrote {write_json(cfg.out, {'config': vars(cfg), **summary})}")


if __name__ == "__main__":
    main(parse_config(Config))
