"""Connectivity of G_n over a range of n, plus partition counts of each new vertex.

The partition count of ``2k`` is the number of edges joining ``2k`` to
smaller vertices, so its minimum over the range shows how much slack the
incremental argument has.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from _common import parse_config, write_json
from goldgraph.goldbach import goldbach_partitions, sieve_for, small_n_connectivity, verify_goldbach_connectivity


@dataclass
class Config:
    n_max: int = 5000
    out: str = "results/connectivity.json"


def main(cfg: Config) -> None:
    t0 = time.perf_counter()
    rep = verify_goldbach_connectivity(cfg.n_max)
    dt = time.perf_counter() - t0
    sieve = sieve_for(2 * cfg.n_max)
    counts = {k: len(goldbach_partitions(2 * k, sieve)) for k in range(4, cfg.n_max + 1)}
    k_min = min(counts, key=lambda k: (counts[k], -k))
    payload = {
        **rep,
        "seconds": round(dt, 3),
        "small_n": small_n_connectivity(6),
        "fewest_partitions": {"vertex": 2 * k_min, "count": counts[k_min]},
        "largest_vertex_with_one_partition": 2 * max(k for k, c in counts.items() if c == 1),
    }
    print(f"all_connected={rep['all_connected']} over 7..{cfg.n_max} in {dt:.2f}s")
    print(f"wrote {write_json(cfg.out, payload)}")


if __name__ == "__main__":
    main(parse_config(Config))
