"""Degree tables of G_n: partition counts, difference counts and the degree-sum inequality margins."""

from __future__ import annotations

from dataclasses import dataclass

from _common import parse_config, write_rows
from goldgraph.goldbach import degree_inequality_sides, degree_profile


@dataclass
class Config:
    r_max: int = 100
    m_max: int = 4
    offsets: str = "0,10,50"
    out: str = "results/degree_inequality.csv"


def main(cfg: Config) -> None:
    offsets = [int(o) for o in cfg.offsets.split(",")]
    rows, worst = [], None
    for r in range(1, cfg.r_max + 1):
        for off in offsets:
            n = 2 * r + off
            P = degree_profile(n)
            for m in range(cfg.m_max + 1):
                lhs, rhs = degree_inequality_sides(r, n, m, P)
                rows.append((r, n, m, lhs, rhs, lhs - rhs))
                if worst is None or lhs - rhs < worst[-1]:
                    worst = rows[-1]
    print(f"{len(rows)} instances, smallest margin lhs-rhs = {worst[-1]} at r={worst[0]}, n={worst[1]}, m={worst[2]}")
    print(f"wrote {write_rows(cfg.out, ['r', 'n', 'm', 'lhs', 'rhs', 'margin'], rows)}")


if __name__ == "__main__":
    main(parse_config(Config))
