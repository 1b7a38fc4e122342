"""Census of complete bipartite subgraphs K_{s,t} in G_n and their mod-6 shapes."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from _common import parse_config, write_json
from goldgraph.goldbach import build_goldbach, check_kmn_structure, complete_bipartite_cores


@dataclass
class Config:
    n: int = 200
    s_max: int = 4
    min_t: int = 2
    out: str = "results/kmn_census.json"


def main(cfg: Config) -> None:
    G = build_goldbach(cfg.n)
    census = {}
    for s in range(2, cfg.s_max + 1):
        cores = complete_bipartite_cores(cfg.n, s, cfg.min_t, graph=G)
        shapes = Counter()
        failures = []
        largest = max((len(w.Yside) for w in cores), default=0)
        for w in cores:
            rep = check_kmn_structure(w)
            shapes[rep["pattern"]] += 1
            if not rep["ok"]:
                failures.append({"X": w.Xside, "Y": w.Yside})
        census[f"s={s}"] = {"cores": len(cores), "largest_t": largest, "patterns": dict(shapes),
                            "failures": failures[:20]}
        print(f"s={s}: {len(cores)} cores, largest t={largest}, failures={len(failures)}")
    print(f"wrote {write_json(cfg.out, {'config': vars(cfg), **census})}")


if __name__ == "__main__":
    main(parse_config(Config))
