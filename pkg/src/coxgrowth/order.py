"""The label-domination preorder on Coxeter systems and minimality in X.

(W,S) <= (W',S') when an injection phi: S -> S' has
m[s,r] <= m'[phi s, phi r] for all s, r, with infinity the top label.
X is the class of irreducible systems that are neither spherical nor affine.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .classification import affine_type_of, finite_type_of
from .coxeter import (INF, CoxeterMatrix, are_isomorphic, components,
                      find_injection, induced)


@dataclass(frozen=True)
class OrderWitness:
    injection: tuple[int, ...]
    verified: bool

    def to_json(self) -> dict:
        return {"injection": list(self.injection), "verified": self.verified}


def _leq_label(x, y) -> bool:
    return x <= y  # INF is math.inf, so it tops every finite label


def verify_witness(a: CoxeterMatrix, b: CoxeterMatrix, phi) -> bool:
    if len(set(phi)) != len(phi) or len(phi) != a.rank:
        return False
    return all(_leq_label(a[s, r], b[phi[s], phi[r]])
               for s in range(a.rank) for r in range(a.rank))


def is_leq(a: CoxeterMatrix, b: CoxeterMatrix) -> Optional[OrderWitness]:
    """Witness that a <= b, or None."""
    phi = find_injection(a, b, _leq_label, bijective=False)
    if phi is None:
        return None
    return OrderWitness(phi, verify_witness(a, b, phi))


def _irreducible_spherical_or_affine(c: CoxeterMatrix) -> bool:
    return finite_type_of(c) is not None or affine_type_of(c) is not None


def in_X(m: CoxeterMatrix) -> bool:
    """Irreducible, non-spherical, non-affine."""
    comps = components(m)
    if len(comps) != 1:
        return False
    return not _irreducible_spherical_or_affine(comps[0][1])


def children(m: CoxeterMatrix) -> Iterator[CoxeterMatrix]:
    """Single-step descendants: one vertex deleted, or one label lowered by one."""
    n = m.rank
    for v in range(n):
        yield induced(m, [w for w in range(n) if w != v])
    for i in range(n):
        for j in range(i + 1, n):
            lab = m[i, j]
            if lab == 2 or lab == INF:
                continue
            rows = [list(r) for r in m.entries]
            rows[i][j] = rows[j][i] = lab - 1
            yield CoxeterMatrix(tuple(map(tuple, rows)))


def has_X_at_or_below(m: CoxeterMatrix) -> bool:
    """True if some system <= m lies in X.

    Each irreducible component is spherical, affine, or itself in X, and
    nothing below a spherical or affine system lies in X, so the downward
    search stops at the components.
    """
    return any(not _irreducible_spherical_or_affine(c) for _, c in components(m))


def is_minimal(m: CoxeterMatrix) -> bool:
    """Whether m is a <=-minimal element of X."""
    if not in_X(m):
        raise ValueError("is_minimal expects a system in X (irreducible, non-spherical, non-affine)")
    if m.has_infinity():
        if m.rank == 3:
            # a triangle with an infinite label dominates a finite hyperbolic triangle
            return False
        raise ValueError("minimality with infinite labels is only decided for triangle groups")
    return not any(has_X_at_or_below(c) for c in children(m))


def is_strictly_below(a: CoxeterMatrix, b: CoxeterMatrix) -> bool:
    return is_leq(a, b) is not None and not are_isomorphic(a, b)


__all__ = ["OrderWitness", "is_leq", "in_X", "is_minimal", "children",
           "has_X_at_or_below", "verify_witness", "is_strictly_below"]
