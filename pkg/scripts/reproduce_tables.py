"""Print the b, c and d tables for q = 3, s = 2 and diff them against the golden files."""

from __future__ import annotations

import argparse
from dataclasses import dataclass
from pathlib import Path

from autotrans.lseries import make_params
from autotrans.tables import build_table

GOLDEN = Path(__file__).resolve().parent.parent / "tests" / "golden"


@dataclass(frozen=True)
class Config:
    p: int = 3
    s: int = 2
    a: int = 0
    jobs: tuple[tuple[str, int, int], ...] = (("b", 2, 4), ("c", 2, 4), ("d", 2, 5), ("b", 3, 13))


def main(cfg: Config) -> int:
    params = make_params(cfg.p, cfg.s, cfg.a)
    stale = 0
    for kind, j, m_max in cfg.jobs:
        text = build_table(kind, j, params, m_max).to_ascii()
        print(text)
        golden = GOLDEN / f"table_{kind}_j{j}.txt"
        if (cfg.p, cfg.s) == (3, 2) and golden.exists() and golden.read_text() != text:
            print(f"!! differs from {golden.name}")
            stale += 1
    return 1 if stale else 0


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p", type=int, default=3)
    ap.add_argument("--s", type=int, default=2)
    args = ap.parse_args()
    raise SystemExit(main(Config(p=args.p, s=args.s)))
