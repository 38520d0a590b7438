"""Time the exact check Pi * star == alpha * L for growing precision."""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from autotrans.lseries import make_params, series_alpha, series_L_direct, series_Pi, series_star


@dataclass(frozen=True)
class Config:
    p: int = 3
    e: int = 1
    s: int = 2
    max_power: int = 10


def main(cfg: Config):
    base = make_params(cfg.p, cfg.s, e=cfg.e)
    q = base.q
    print(f"q={q} s={cfg.s}")
    for k in range(2, cfg.max_power + 1):
        N = q**k
        for a in base.ctx.elements():
            P = base.with_a(a)
            t0 = time.perf_counter()
            lhs = series_Pi(P, N) * series_star(P, N)
            rhs = series_alpha(P, N) * series_L_direct(P, N)
            idx = lhs.first_difference(rhs)
            dt = time.perf_counter() - t0
            status = "equal" if idx is None else f"differ at x^{idx}"
            print(f"N={q}^{k}={N:<8} a={a.literal:<5} {dt:7.3f}s  {status}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p", type=int, default=3)
    ap.add_argument("--e", type=int, default=1)
    ap.add_argument("--s", type=int, default=2)
    ap.add_argument("--max-power", type=int, default=10)
    args = ap.parse_args()
    main(Config(args.p, args.e, args.s, args.max_power))
