"""Embedded dataset of the three minimal triangle systems and 72 exceptional
hyperbolic systems, with regression drivers that recompute every tabulated
quantity from the Coxeter matrix alone.

Each entry lives in ``data/catalog/<nn>_<id>.json``; ``MANIFEST.sha256``
pins the file contents.  Entry schema::

    {"id": "EHC1", "rank": 4, "matrix": [[1, 5, 2, 2], ...],
     "as_printed": {"numerator": ["-1", "-2", ...], "denominator": [...]},
     "coefficients": ["1", "4", ...], "growth": "1.3599...",
     "cocompact": true, "in_M": true, "magma_index": 1}

Polynomials are ascending-degree arrays of decimal strings, exactly as
printed (some entries have both polynomials negated).
"""
from __future__ import annotations

import hashlib
import json
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from decimal import Decimal
from functools import lru_cache
from importlib import resources
from typing import Optional, Sequence

from .classification import is_cocompact
from .coxeter import CoxeterMatrix, parse_matrix
from .growth import coefficients, growth_rate
from .order import is_minimal
from .poincare import steinberg_poincare
from .polyarith import IntPolynomial, rf_normalize

CHECKS = ("numerator", "denominator", "coefficients", "growth", "cocompact", "in_M")


class CatalogError(KeyError):
    pass


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    rank: int
    matrix: CoxeterMatrix
    expected_num: IntPolynomial
    expected_den: IntPolynomial
    expected_coeffs: tuple[int, ...]
    expected_growth: str
    cocompact: bool
    in_M: bool
    magma_index: Optional[int] = None
    as_printed: tuple[IntPolynomial, IntPolynomial] | None = None

    @property
    def aliases(self) -> list[str]:
        out = [self.id]
        if self.magma_index is not None:
            out.append(str(self.magma_index))
        return out

    @classmethod
    def from_json(cls, data: dict) -> "CatalogEntry":
        num = IntPolynomial.from_json(data["as_printed"]["numerator"])
        den = IntPolynomial.from_json(data["as_printed"]["denominator"])
        rf = rf_normalize(num, den)
        return cls(
            id=data["id"],
            rank=data["rank"],
            matrix=parse_matrix(data["matrix"]),
            expected_num=rf.num,
            expected_den=rf.den,
            expected_coeffs=tuple(int(x) for x in data["coefficients"]),
            expected_growth=data["growth"],
            cocompact=data["cocompact"],
            in_M=data["in_M"],
            magma_index=data.get("magma_index"),
            as_printed=(num, den),
        )

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "rank": self.rank,
            "matrix": self.matrix.to_json()["matrix"],
            "as_printed": {"numerator": self.as_printed[0].to_json(),
                           "denominator": self.as_printed[1].to_json()},
            "coefficients": [str(c) for c in self.expected_coeffs],
            "growth": self.expected_growth,
            "cocompact": self.cocompact,
            "in_M": self.in_M,
            "magma_index": self.magma_index,
        }


def _data_dir():
    return resources.files("coxgrowth") / "data" / "catalog"


def check_manifest() -> list[str]:
    """Names of data files whose checksum differs from the manifest."""
    d = _data_dir()
    bad = []
    for line in (d / "MANIFEST.sha256").read_text().splitlines():
        if not line.strip():
            continue
        digest, name = line.split()
        if hashlib.sha256((d / name).read_bytes()).hexdigest() != digest:
            bad.append(name)
    return bad


@lru_cache(maxsize=1)
def catalog_entries() -> tuple[CatalogEntry, ...]:
    """All 75 entries: triangles first, then EHC 1-14, then EHNC 1-58."""
    d = _data_dir()
    names = [line.split()[1] for line in (d / "MANIFEST.sha256").read_text().splitlines()
             if line.strip()]
    return tuple(CatalogEntry.from_json(json.loads((d / n).read_text())) for n in names)


def _key(s: str) -> str:
    s = s.strip().upper().replace(" ", "").replace("_", "")
    s = s.replace("⟨", "T(").replace("⟩", ")").replace("<", "T(").replace(">", ")")
    return s


def get_entry(ident: str) -> CatalogEntry:
    """Look up an entry by id (``EHC3``, ``EHNC 23``, ``T(2,3,7)``) or magma index."""
    k = _key(str(ident))
    for e in catalog_entries():
        if k in (_key(a) for a in e.aliases):
            return e
    raise CatalogError(f"unknown catalog id {ident!r}")


def is_catalog_id(ident: str) -> bool:
    try:
        get_entry(ident)
    except CatalogError:
        return False
    return True


# -- verification ----------------------------------------------------------------

@dataclass(frozen=True)
class VerifyConfig:
    growth_digits: int = 30
    required_digits: int = 28
    workers: int = 1


@dataclass(frozen=True)
class EntryReport:
    id: str
    checks: dict
    growth_digits: int
    computed_growth: str

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def failures(self) -> list[str]:
        return [k for k in CHECKS if not self.checks[k]]

    def to_json(self) -> dict:
        return {"id": self.id, "passed": self.passed,
                "checks": {k: self.checks[k] for k in CHECKS},
                "growth_digits_matched": self.growth_digits,
                "computed_growth": self.computed_growth}


@dataclass(frozen=True)
class VerificationReport:
    entries: tuple[EntryReport, ...] = field(default_factory=tuple)

    @property
    def total(self) -> int:
        return len(self.entries)

    @property
    def passed(self) -> int:
        return sum(e.passed for e in self.entries)

    @property
    def ok(self) -> bool:
        return self.passed == self.total

    def summary(self) -> str:
        return f"{self.passed}/{self.total}"

    def to_json(self) -> dict:
        return {
            "total": self.total,
            "passed": self.passed,
            "checks": {k: sum(e.checks[k] for e in self.entries) for k in CHECKS},
            "entries": [e.to_json() for e in self.entries],
        }


_DIGITS = re.compile(r"\d")


def matching_digits(computed: str, expected: str) -> int:
    """Number of leading significant digits on which two decimal strings agree."""
    a = Decimal(computed)
    b = Decimal(expected)
    if a.adjusted() != b.adjusted():
        return 0
    da = "".join(_DIGITS.findall(str(a))).lstrip("0")
    db = "".join(_DIGITS.findall(str(b))).lstrip("0")
    k = 0
    for x, y in zip(da, db):
        if x != y:
            break
        k += 1
    return k


def _truncate(value: str, digits: int) -> str:
    # cut a longer decimal string to `digits` significant digits without rounding
    out, seen = [], 0
    for ch in value:
        if ch.isdigit():
            if seen or ch != "0":
                seen += 1
            if seen > digits:
                break
        out.append(ch)
    return "".join(out)


def verify_entry(e: CatalogEntry, config: VerifyConfig = VerifyConfig()) -> EntryReport:
    """Recompute everything from ``e.matrix`` and compare with the tabulated data."""
    m = e.matrix
    p = steinberg_poincare(m)
    checks = {
        "numerator": p.num == e.expected_num,
        "denominator": p.den == e.expected_den,
        "coefficients": tuple(coefficients(p, len(e.expected_coeffs))) == e.expected_coeffs,
    }
    # most tabulated values are rounded, a few truncated: accept either convention
    computed = growth_rate(p, config.growth_digits).value
    truncated = _truncate(growth_rate(p, config.growth_digits + 10).value, config.growth_digits)
    digits = max(matching_digits(computed, e.expected_growth),
                 matching_digits(truncated, e.expected_growth))
    checks["growth"] = digits >= config.required_digits
    try:
        checks["cocompact"] = is_cocompact(m) == e.cocompact
    except ValueError:
        checks["cocompact"] = False
    try:
        checks["in_M"] = is_minimal(m) == e.in_M
    except ValueError:
        checks["in_M"] = False
    return EntryReport(e.id, checks, digits, computed)


def _verify_one(args):
    e, config = args
    return verify_entry(e, config)


def verify_catalog(entries: Sequence[CatalogEntry] | None = None,
                   config: VerifyConfig = VerifyConfig()) -> VerificationReport:
    """Verify entries; the report keeps input order regardless of parallelism."""
    if entries is None:
        entries = catalog_entries()
    jobs = [(e, config) for e in entries]
    if config.workers > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            reports = list(pool.map(_verify_one, jobs))
    else:
        reports = [_verify_one(j) for j in jobs]
    return VerificationReport(tuple(reports))
