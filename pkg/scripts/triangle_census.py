#!/usr/bin/env python3
"""Triangle groups <a,b,c>: growth rates, closed-form check and minimality.

Prints one row per hyperbolic triangle with finite labels up to ``max_label``
(plus rows with infinite labels when ``--with-infinity`` is set).
"""
from __future__ import annotations

import argparse
import csv
import itertools
import sys
from dataclasses import asdict, dataclass
from fractions import Fraction

from coxgrowth.coxeter import INF, triangle_matrix
from coxgrowth.growth import growth_rate
from coxgrowth.order import is_minimal
from coxgrowth.poincare import steinberg_poincare, triangle_poincare


@dataclass
class Config:
    max_label: int = 9
    with_infinity: bool = False
    digits: int = 20


def hyperbolic(abc) -> bool:
    return sum(Fraction(0) if x == INF else Fraction(1, x) for x in abc) < 1


def rows(cfg: Config):
    labels = list(range(2, cfg.max_label + 1)) + ([INF] if cfg.with_infinity else [])
    for abc in itertools.combinations_with_replacement(labels, 3):
        if not hyperbolic(abc):
            continue
        m = triangle_matrix(*abc)
        p = steinberg_poincare(m)
        yield {
            "triangle": "<" + ",".join("inf" if x == INF else str(x) for x in abc) + ">",
            "growth": growth_rate(p, cfg.digits).value,
            "closed_form_agrees": triangle_poincare(*abc).rf == p.rf,
            "minimal": is_minimal(m),
        }


def main(cfg: Config) -> int:
    out = list(rows(cfg))
    out.sort(key=lambda r: r["growth"])
    w = csv.DictWriter(sys.stdout, fieldnames=list(out[0]))
    w.writeheader()
    w.writerows(out)
    minimal = [r["triangle"] for r in out if r["minimal"]]
    print(f"# {len(out)} triangles, minimal: {', '.join(minimal)}", file=sys.stderr)
    return 0 if all(r["closed_form_agrees"] for r in out) else 1


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-label", type=int, default=Config.max_label)
    p.add_argument("--with-infinity", action="store_true")
    p.add_argument("--digits", type=int, default=Config.digits)
    raise SystemExit(main(Config(**vars(p.parse_args()))))
