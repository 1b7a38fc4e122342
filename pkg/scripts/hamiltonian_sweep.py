"""Hamiltonian cycles of the starred Goldbach graph for even n, paths for odd n.

Records nodes expanded, restart attempts and wall time per n. Pushing
``--n-max`` past 58 probes how far the search keeps succeeding.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from _common import parse_config, write_rows
from goldgraph.hamiltonian import hamiltonian_cycle, hamiltonian_path


@dataclass
class Config:
    n_min: int = 4
    n_max: int = 58
    seed: int = 0
    node_limit: int = 5_000_000
    out: str = "results/hamiltonian_sweep.csv"


def main(cfg: Config) -> None:
    rows = []
    for n in range(cfg.n_min, cfg.n_max + 1):
        t0 = time.perf_counter()
        if n % 2 == 0:
            r = hamiltonian_cycle(n, cfg.node_limit, seed=cfg.seed)
        else:
            r = hamiltonian_path(n, cfg.node_limit)
        dt = time.perf_counter() - t0
        st = r.search_stats
        rows.append((n, r.kind, r.found, st.get("nodes"), st.get("attempts"), f"{dt:.4f}",
                     " ".join(map(str, r.sequence))))
        print(f"n={n:>3} {r.kind:<5} found={r.found} nodes={st.get('nodes')} {dt:.3f}s")
    path = write_rows(cfg.out, ["n", "kind", "found", "nodes", "attempts", "seconds", "sequence"], rows)
    print(f"wrote {path}")


if __name__ == "__main__":
    main(parse_config(Config))
