"""Tiny helpers shared by the experiment scripts: dataclass configs from argv, result files."""

from __future__ import annotations

import argparse
import csv
import dataclasses
import json
from pathlib import Path


def parse_config(cls, argv=None):
    """Expose every dataclass field as ``--field-name`` with its default."""
    p = argparse.ArgumentParser(description=cls.__doc__)
    for f in dataclasses.fields(cls):
        default = f.default if f.default is not dataclasses.MISSING else f.default_factory()
        kind = type(default) if default is not None else str
        if kind is bool:
            p.add_argument(f"--{f.name.replace('_', '-')}", action=argparse.BooleanOptionalAction, default=default)
        else:
            p.add_argument(f"--{f.name.replace('_', '-')}", type=kind, default=default)
    return cls(**vars(p.parse_args(argv)))


def write_rows(path: str, header: list[str], rows) -> Path:
    out = Path(path)
    out.parent.mkdir(parents=True, exist_ok=True)
    with out.open("w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(header)
        w.writerows(rows)
    return out


def write_json(path: str, payload) -> Path:
    out = Path(path)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(json.dumps(payload, indent=2, default=str) + "\n")
    return out
