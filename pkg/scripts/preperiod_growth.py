"""Preperiod of the rows (u([1^m 0^j]_q))_m as j grows, for every a in F_q."""

from __future__ import annotations

import argparse
import json
from dataclasses import asdict, dataclass

from autotrans.analysis import stable_preperiod
from autotrans.lseries import make_params


@dataclass(frozen=True)
class Config:
    p: int = 3
    e: int = 1
    s: int = 2
    j_max: int = 5
    as_json: bool = False


def run(cfg: Config) -> list[dict]:
    base = make_params(cfg.p, cfg.s, e=cfg.e)
    q = base.q
    out = []
    for a in base.ctx.elements():
        P = base.with_a(a)
        prev = None
        for j in range(1, cfg.j_max + 1):
            r = stable_preperiod(j, P)
            gap = None if prev is None or r.preperiod is None else r.preperiod - prev
            out.append({"a": a.literal, "j": j, **r.to_json(), "gap": gap, "q^(j-1)": q ** (j - 1)})
            prev = r.preperiod
    return out


def main(cfg: Config):
    rows = run(cfg)
    if cfg.as_json:
        print(json.dumps({"config": asdict(cfg), "rows": rows}, indent=2))
        return
    print(f"{'a':>5} {'j':>3} {'pre':>6} {'per':>4} {'gap':>6} {'q^(j-1)':>8}  ok")
    for r in rows:
        gap = "" if r["gap"] is None else r["gap"]
        print(f"{r['a']:>5} {r['j']:>3} {str(r['preperiod']):>6} {str(r['period']):>4} {gap:>6} {r['q^(j-1)']:>8}  {r['conclusive']}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p", type=int, default=3)
    ap.add_argument("--e", type=int, default=1)
    ap.add_argument("--s", type=int, default=2)
    ap.add_argument("--j-max", type=int, default=5)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    main(Config(args.p, args.e, args.s, args.j_max, args.json))
