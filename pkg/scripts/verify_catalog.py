#!/usr/bin/env python3
"""Recompute the embedded dataset from its matrices and write a JSON report."""
from __future__ import annotations

import argparse
import json
import time
from dataclasses import asdict, dataclass

from coxgrowth.catalog import VerifyConfig, check_manifest, verify_catalog


@dataclass
class Config:
    workers: int = 4
    growth_digits: int = 30
    required_digits: int = 28
    output: str = "catalog_report.json"


def main(cfg: Config) -> int:
    bad = check_manifest()
    t0 = time.perf_counter()
    report = verify_catalog(config=VerifyConfig(cfg.growth_digits, cfg.required_digits, cfg.workers))
    elapsed = time.perf_counter() - t0
    data = report.to_json() | {"config": asdict(cfg), "manifest_mismatches": bad,
                               "seconds": round(elapsed, 2)}
    with open(cfg.output, "w") as fh:
        json.dump(data, fh, indent=2, sort_keys=True)
    for e in report.entries:
        flag = "ok  " if e.passed else "FAIL"
        print(f"{flag} {e.id:<9} growth digits {e.growth_digits:>2}  {e.computed_growth}")
    print(f"{report.summary()} entries verified in {elapsed:.1f}s -> {cfg.output}")
    return 0 if report.ok and not bad else 1


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    for name, default in asdict(Config()).items():
        p.add_argument("--" + name.replace("_", "-"), type=type(default), default=default)
    raise SystemExit(main(Config(**vars(p.parse_args()))))
