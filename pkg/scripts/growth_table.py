#!/usr/bin/env python3
"""Growth rates and coefficient asymptotics for the embedded systems.

For each entry: the growth rate, a_k^(1/k) and a_k/a_(k-1) at the chosen k,
showing how slowly the k-th roots approach the limit compared with ratios.
"""
from __future__ import annotations

import argparse
from dataclasses import dataclass

import mpmath

from coxgrowth.catalog import catalog_entries, get_entry
from coxgrowth.growth import coefficients, growth_rate
from coxgrowth.poincare import steinberg_poincare


@dataclass
class Config:
    k: int = 200
    digits: int = 30
    only: tuple[str, ...] = ()  # catalog ids; empty means all


def main(cfg: Config) -> int:
    wanted = {get_entry(i).id for i in cfg.only}
    print(f"{'id':<9} {'rank':>4}  {'growth':<32} {'root err':>9} {'ratio err':>9}")
    for e in catalog_entries():
        if wanted and e.id not in wanted:
            continue
        p = steinberg_poincare(e.matrix)
        value = growth_rate(p, cfg.digits).value
        a = coefficients(p, cfg.k + 1)
        with mpmath.workdps(cfg.digits + 10):
            omega = mpmath.mpf(value)
            root = mpmath.mpf(a[cfg.k]) ** (mpmath.mpf(1) / cfg.k)
            ratio = mpmath.mpf(a[cfg.k]) / a[cfg.k - 1]
            root_err, ratio_err = float(root / omega - 1), float(ratio / omega - 1)
        print(f"{e.id:<9} {e.rank:>4}  {value:<32} {root_err:>9.2e} {ratio_err:>9.2e}")
    return 0


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--k", type=int, default=Config.k)
    p.add_argument("--digits", type=int, default=Config.digits)
    p.add_argument("--only", nargs="*", default=[], help="catalog ids")
    args = p.parse_args()
    raise SystemExit(main(Config(args.k, args.digits, tuple(args.only))))
