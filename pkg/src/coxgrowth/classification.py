"""Recognition of spherical and affine diagrams and the irreducible tetrachotomy.

Finite and affine types are recognized combinatorially from the Coxeter
graph.  :func:`signature_class` is an independent numerical check based on
the eigenvalues of the Gram matrix.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

import mpmath

from .coxeter import INF, CoxeterMatrix, components, from_graph, gram_matrix, induced

SPHERICAL = "spherical"
AFFINE = "affine"
HYPERBOLIC = "hyperbolic"
OTHER = "other"
REDUCIBLE = "reducible"


@dataclass(frozen=True)
class FiniteType:
    family: str  # A B D E F H I2
    rank: int
    label: Optional[int] = None  # only for I2

    @property
    def name(self) -> str:
        if self.family == "I2":
            return f"I2({self.label})"
        return f"{self.family}_{self.rank}"

    def degrees(self) -> tuple[int, ...]:
        return degrees(self)

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class AffineType:
    """Affine type X~_n; ``n`` is the rank of the spherical type X_n."""

    family: str  # A B C D E F G
    n: int

    @property
    def rank(self) -> int:
        return self.n + 1

    @property
    def name(self) -> str:
        return f"~{self.family}_{self.n}"

    def spherical(self) -> FiniteType:
        """The finite type X_n whose degrees enter Bott's formula."""
        if self.family == "G":
            return FiniteType("I2", 2, 6)
        if self.family == "C":
            return FiniteType("B", self.n)
        return FiniteType(self.family, self.n)

    def __str__(self):
        return self.name


_EXCEPTIONAL_DEGREES = {
    ("E", 6): (2, 5, 6, 8, 9, 12),
    ("E", 7): (2, 6, 8, 10, 12, 14, 18),
    ("E", 8): (2, 8, 12, 14, 18, 20, 24, 30),
    ("F", 4): (2, 6, 8, 12),
    ("H", 3): (2, 6, 10),
    ("H", 4): (2, 12, 20, 30),
}


def degrees(t: FiniteType) -> tuple[int, ...]:
    """Degrees of the basic polynomial invariants."""
    n = t.rank
    if t.family == "A":
        return tuple(range(2, n + 2))
    if t.family == "B":
        return tuple(range(2, 2 * n + 1, 2))
    if t.family == "D":
        return tuple(sorted(tuple(range(2, 2 * n - 1, 2)) + (n,)))
    if t.family == "I2":
        return (2, t.label)
    return _EXCEPTIONAL_DEGREES[(t.family, n)]


def make_finite_type(family: str, rank: int, label: int | None = None) -> FiniteType:
    """Validated constructor; I2(3) and I2(4) canonicalize to A_2 and B_2."""
    if family == "I2":
        if label == 3:
            return FiniteType("A", 2)
        if label == 4:
            return FiniteType("B", 2)
        if label is None or label < 5 or label == INF:
            raise ValueError(f"invalid dihedral label {label}")
        return FiniteType("I2", 2, label)
    ok = {
        "A": rank >= 1, "B": rank >= 2, "D": rank >= 4,
        "E": rank in (6, 7, 8), "F": rank == 4, "H": rank in (3, 4),
    }.get(family, False)
    if not ok:
        raise ValueError(f"no finite type {family}_{rank}")
    return FiniteType(family, rank)


# -- diagram helpers ---------------------------------------------------------

def _require_irreducible(m: CoxeterMatrix):
    if m.rank == 0 or len(components(m)) != 1:
        raise ValueError("expects irreducible Coxeter matrix")


def _path_order(m: CoxeterMatrix) -> list[int]:
    """Vertices of a path graph in order from one end."""
    ends = [v for v in range(m.rank) if len(m.neighbours(v)) <= 1]
    order = [ends[0]]
    prev = None
    while len(order) < m.rank:
        v = order[-1]
        nxt = [w for w in m.neighbours(v) if w != prev]
        prev = v
        order.append(nxt[0])
    return order


def _arms(m: CoxeterMatrix, centre: int) -> list[list[int]]:
    """For a tree with one branch vertex, the arms hanging off ``centre``."""
    arms = []
    for first in m.neighbours(centre):
        arm = [first]
        prev = centre
        while True:
            nxt = [w for w in m.neighbours(arm[-1]) if w != prev]
            if not nxt:
                break
            prev = arm[-1]
            arm.append(nxt[0])
        arms.append(arm)
    return arms


def finite_type_of(m: CoxeterMatrix) -> FiniteType | None:
    """Finite (spherical) type of an irreducible matrix, or None."""
    _require_irreducible(m)
    n = m.rank
    if n == 1:
        return FiniteType("A", 1)
    if n == 2:
        lab = m[0, 1]
        return None if lab == INF else make_finite_type("I2", 2, lab)
    edges = m.edges()
    if len(edges) != n - 1:
        return None  # has a cycle
    labels = [e[2] for e in edges]
    if any(x == INF or x >= 6 for x in labels):
        return None
    big = [e for e in edges if e[2] > 3]
    deg = [len(m.neighbours(v)) for v in range(n)]
    if not big:
        if max(deg) <= 2:
            return FiniteType("A", n)
        branch = [v for v in range(n) if deg[v] >= 3]
        if len(branch) != 1 or deg[branch[0]] != 3:
            return None
        lengths = sorted(len(a) for a in _arms(m, branch[0]))
        if lengths[:2] == [1, 1]:
            return FiniteType("D", n)
        if lengths[:2] == [1, 2] and lengths[2] in (2, 3, 4):
            return FiniteType("E", n)
        return None
    if len(big) > 1 or max(deg) > 2:
        return None
    s, r, lab = big[0]
    path = _path_order(m)
    pos = sorted((path.index(s), path.index(r)))
    at_end = pos[0] == 0 or pos[1] == n - 1
    if lab == 4:
        if at_end:
            return FiniteType("B", n)
        if n == 4:
            return FiniteType("F", 4)
        return None
    # lab == 5
    if at_end and n in (3, 4):
        return FiniteType("H", n)
    return None


def affine_type_of(m: CoxeterMatrix) -> AffineType | None:
    """Affine type of an irreducible matrix, or None."""
    _require_irreducible(m)
    n = m.rank
    if n == 1:
        return None
    if n == 2:
        return AffineType("A", 1) if m[0, 1] == INF else None
    edges = m.edges()
    labels = [e[2] for e in edges]
    if any(x == INF or x > 6 or x == 5 for x in labels):
        return None
    deg = [len(m.neighbours(v)) for v in range(n)]
    if len(edges) == n:
        if all(x == 3 for x in labels) and all(d == 2 for d in deg):
            return AffineType("A", n - 1)
        return None
    if len(edges) != n - 1:
        return None
    big = [e for e in edges if e[2] > 3]
    branch = [v for v in range(n) if deg[v] >= 3]

    if any(e[2] == 6 for e in big):
        if n == 3 and len(big) == 1 and not branch:
            return AffineType("G", 2)
        return None

    if len(big) == 2:
        if branch:
            return None
        path = _path_order(m)
        ends = {frozenset(path[:2]), frozenset(path[-2:])}
        if {frozenset(e[:2]) for e in big} == ends:
            return AffineType("C", n - 1)
        return None

    if len(big) == 1:
        s, r, _ = big[0]
        if not branch:
            if n != 5:
                return None
            path = _path_order(m)
            pos = sorted((path.index(s), path.index(r)))
            return AffineType("F", 4) if pos in ([2, 3], [1, 2]) else None
        if len(branch) != 1 or deg[branch[0]] != 3:
            return None
        arms = _arms(m, branch[0])
        lengths = sorted(len(a) for a in arms)
        if lengths[:2] != [1, 1]:
            return None
        # the label-4 edge must end the longest arm
        longest = max(arms, key=len)
        candidates = [a for a in arms if len(a) == len(longest)]
        for arm in candidates:
            tail = {arm[-1], arm[-2] if len(arm) > 1 else branch[0]}
            if tail == {s, r}:
                return AffineType("B", n - 1)
        return None

    if len(big) > 2:
        return None
    # simply laced trees
    if not branch:
        return None
    if len(branch) == 1:
        c = branch[0]
        if deg[c] == 4:
            return AffineType("D", 4) if n == 5 else None
        if deg[c] != 3:
            return None
        lengths = sorted(len(a) for a in _arms(m, c))
        return {(2, 2, 2): AffineType("E", 6),
                (1, 3, 3): AffineType("E", 7),
                (1, 2, 5): AffineType("E", 8)}.get(tuple(lengths))
    if len(branch) == 2 and all(deg[v] == 3 for v in branch):
        leaves = [sum(1 for w in m.neighbours(v) if deg[w] == 1) for v in branch]
        if leaves == [2, 2]:
            return AffineType("D", n - 1)
    return None


def is_spherical(m: CoxeterMatrix) -> bool:
    """True if every component has finite type (the empty matrix included)."""
    return all(finite_type_of(c) is not None for _, c in components(m))


def _spherical_or_affine(c: CoxeterMatrix) -> bool:
    return finite_type_of(c) is not None or affine_type_of(c) is not None


# -- classification ------------------------------------------------------------

@dataclass(frozen=True)
class ComponentLabel:
    vertices: tuple[int, ...]
    verdict: str
    type: Optional[str] = None

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices), "verdict": self.verdict, "type": self.type}


@dataclass(frozen=True)
class ClassLabel:
    verdict: str
    components: tuple[ComponentLabel, ...] = field(default_factory=tuple)

    def to_json(self) -> dict:
        return {"verdict": self.verdict, "components": [c.to_json() for c in self.components]}

    def __str__(self):
        if self.verdict == REDUCIBLE:
            parts = [f"{c.verdict} {c.type}" if c.type else c.verdict for c in self.components]
            return "reducible: " + " x ".join(parts)
        if self.components and self.components[0].type:
            return f"{self.verdict} {self.components[0].type}"
        return self.verdict


def _classify_irreducible(m: CoxeterMatrix) -> tuple[str, Optional[str]]:
    ft = finite_type_of(m)
    if ft is not None:
        return SPHERICAL, ft.name
    at = affine_type_of(m)
    if at is not None:
        return AFFINE, at.name
    # every proper irreducible parabolic lies in a component of some S - {v}
    for v in range(m.rank):
        rest = induced(m, [w for w in range(m.rank) if w != v])
        if not all(_spherical_or_affine(c) for _, c in components(rest)):
            return OTHER, None
    return HYPERBOLIC, None


def classify(m: CoxeterMatrix) -> ClassLabel:
    if m.rank == 0:
        return ClassLabel(SPHERICAL, ())
    comps = components(m)
    labels = []
    for verts, c in comps:
        verdict, name = _classify_irreducible(c)
        labels.append(ComponentLabel(verts, verdict, name))
    if len(labels) == 1:
        return ClassLabel(labels[0].verdict, tuple(labels))
    return ClassLabel(REDUCIBLE, tuple(labels))


def signature_class(m: CoxeterMatrix, tolerance: float = 1e-20, precision: int = 40) -> str:
    """Eigenvalue sign census of the Gram matrix.

    Returns ``"positive-definite"``, ``"semidefinite-corank-1"``,
    ``"signature (n-1,1)"`` (with n the rank filled in) or ``"other"``.
    """
    n = m.rank
    B = gram_matrix(m, precision)
    with mpmath.workdps(precision):
        eig = mpmath.eigsy(mpmath.matrix(B), eigvals_only=True)
        pos = sum(1 for x in eig if x > tolerance)
        neg = sum(1 for x in eig if x < -tolerance)
    zero = n - pos - neg
    if pos == n:
        return "positive-definite"
    if pos == n - 1 and zero == 1:
        return "semidefinite-corank-1"
    if pos == n - 1 and neg == 1:
        return f"signature ({n - 1},1)"
    return "other"


def spherical_residues(m: CoxeterMatrix) -> list[tuple[int, ...]]:
    """All I (including the empty set) with W_I finite, by size then lexicographically."""
    out = [()]
    layer = {()}
    for k in range(1, m.rank + 1):
        nxt = set()
        for sub in combinations(range(m.rank), k):
            # downward closed: all maximal subsets must already be spherical
            if any(sub[:i] + sub[i + 1:] not in layer for i in range(k)):
                continue
            if is_spherical(induced(m, sub)):
                nxt.add(sub)
        if not nxt:
            break
        out.extend(sorted(nxt))
        layer = nxt
    return out


def is_cocompact(m: CoxeterMatrix) -> bool:
    """For hyperbolic m: True iff no proper parabolic has an affine component."""
    if classify(m).verdict != HYPERBOLIC:
        raise ValueError("is_cocompact expects a hyperbolic Coxeter system")
    for v in range(m.rank):
        rest = induced(m, [w for w in range(m.rank) if w != v])
        if not all(finite_type_of(c) is not None for _, c in components(rest)):
            return False
    return True


# -- standard diagrams ---------------------------------------------------------

def _star(arm_lengths) -> list[tuple[int, int, int]]:
    """Edges of a tree: centre 0 with simply laced arms of the given lengths."""
    edges = []
    nxt = 1
    for length in arm_lengths:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt, 3))
            prev = nxt
            nxt += 1
    return edges


def _path(labels) -> list[tuple[int, int, int]]:
    return [(i, i + 1, lab) for i, lab in enumerate(labels)]


def finite_type_matrix(t: FiniteType) -> CoxeterMatrix:
    """Standard Coxeter matrix of a finite type."""
    n, f = t.rank, t.family
    if f == "I2":
        return from_graph(2, [(0, 1, t.label)])
    if f == "A":
        return from_graph(n, _path([3] * (n - 1)))
    if f == "B":
        return from_graph(n, _path([3] * (n - 2) + [4]))
    if f == "D":
        return from_graph(n, _path([3] * (n - 2)) + [(n - 3, n - 1, 3)])
    if f == "E":
        return from_graph(n, _star([1, 2, n - 4]))
    if f == "F":
        return from_graph(4, _path([3, 4, 3]))
    if f == "H":
        return from_graph(n, _path([5] + [3] * (n - 2)))
    raise ValueError(f"unknown family {f}")


def affine_type_matrix(t: AffineType) -> CoxeterMatrix:
    """Standard Coxeter matrix of an affine type (rank n + 1)."""
    n, f = t.n, t.family
    if f == "A":
        if n == 1:
            return from_graph(2, [(0, 1, INF)])
        return from_graph(n + 1, _path([3] * n) + [(n, 0, 3)])
    if f == "B":
        return from_graph(n + 1, _path([3] * (n - 2) + [4]) + [(1, n, 3)])
    if f == "C":
        return from_graph(n + 1, _path([4] + [3] * (n - 2) + [4]))
    if f == "D":
        return from_graph(n + 1, _path([3] * (n - 2)) + [(1, n - 1, 3), (n - 3, n, 3)])
    if f == "E":
        arms = {6: [2, 2, 2], 7: [1, 3, 3], 8: [1, 2, 5]}[n]
        return from_graph(n + 1, _star(arms))
    if f == "F":
        return from_graph(5, _path([3, 3, 4, 3]))
    if f == "G":
        return from_graph(3, _path([3, 6]))
    raise ValueError(f"unknown family {f}")


def finite_types_up_to(rank: int, max_dihedral: int = 12) -> list[FiniteType]:
    out = []
    for n in range(1, rank + 1):
        out.append(FiniteType("A", n))
        if n >= 2:
            out.append(FiniteType("B", n))
        if n >= 4:
            out.append(FiniteType("D", n))
        if n in (6, 7, 8):
            out.append(FiniteType("E", n))
        if n == 4:
            out.append(FiniteType("F", 4))
        if n in (3, 4):
            out.append(FiniteType("H", n))
        if n == 2:
            out.extend(FiniteType("I2", 2, m) for m in range(5, max_dihedral + 1))
    return out


def affine_types_up_to(rank: int) -> list[AffineType]:
    out = []
    for n in range(1, rank):
        out.append(AffineType("A", n))
        if n >= 3:
            out.append(AffineType("B", n))
        if n >= 2:
            out.append(AffineType("C", n))
        if n >= 4:
            out.append(AffineType("D", n))
        if n in (6, 7, 8):
            out.append(AffineType("E", n))
        if n == 4:
            out.append(AffineType("F", 4))
        if n == 2:
            out.append(AffineType("G", 2))
    return out
