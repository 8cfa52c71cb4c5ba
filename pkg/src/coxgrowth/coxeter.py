"""Coxeter matrices: parsing, serialization, subsystems, isomorphism, Gram matrix."""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import mpmath

INF = math.inf
"""Sentinel for an infinite label.  Compares above every finite label."""


class CoxeterMatrixError(ValueError):
    pass


def _label(x) -> int | float:
    if isinstance(x, str):
        tok = x.strip().lower()
        if tok in ("inf", "infinity", "oo", "∞"):
            return INF
        try:
            x = int(tok)
        except ValueError:
            raise CoxeterMatrixError(f"bad label {x!r}") from None
    if isinstance(x, float):
        if math.isinf(x) and x > 0:
            return INF
        if not x.is_integer():
            raise CoxeterMatrixError(f"bad label {x!r}")
        x = int(x)
    if isinstance(x, bool) or not isinstance(x, int):
        raise CoxeterMatrixError(f"bad label {x!r}")
    return x


@dataclass(frozen=True)
class CoxeterMatrix:
    entries: tuple[tuple, ...]

    def __post_init__(self):
        rows = tuple(tuple(_label(x) for x in row) for row in self.entries)
        n = len(rows)
        for i, row in enumerate(rows):
            if len(row) != n:
                raise CoxeterMatrixError(f"row {i} has {len(row)} entries, expected {n}")
        for i in range(n):
            if rows[i][i] != 1:
                raise CoxeterMatrixError(f"diagonal entry ({i},{i}) must be 1, got {rows[i][i]}")
            for j in range(i + 1, n):
                a, b = rows[i][j], rows[j][i]
                if a != b:
                    raise CoxeterMatrixError(f"matrix is not symmetric at ({i},{j}): {a} != {b}")
                if a != INF and a < 2:
                    raise CoxeterMatrixError(f"off-diagonal label at ({i},{j}) must be >= 2 or inf, got {a}")
        object.__setattr__(self, "entries", rows)

    @property
    def rank(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def edges(self) -> list[tuple[int, int, int | float]]:
        """Coxeter graph edges (s, r, label) with s < r and label >= 3."""
        n = self.rank
        return [(i, j, self.entries[i][j]) for i in range(n) for j in range(i + 1, n)
                if self.entries[i][j] != 2]

    def neighbours(self, i: int) -> list[int]:
        return [j for j in range(self.rank) if j != i and self.entries[i][j] != 2]

    def labels(self) -> list:
        n = self.rank
        return [self.entries[i][j] for i in range(n) for j in range(i + 1, n)]

    def has_infinity(self) -> bool:
        return any(x == INF for x in self.labels())

    def permuted(self, perm: Sequence[int]) -> "CoxeterMatrix":
        """Matrix whose vertex i is vertex perm[i] of self."""
        return CoxeterMatrix(tuple(tuple(self.entries[a][b] for b in perm) for a in perm))

    def to_json(self) -> dict:
        return {"rank": self.rank,
                "matrix": [["inf" if x == INF else x for x in row] for row in self.entries]}

    def to_compact(self) -> str:
        return "\n".join(" ".join("0" if x == INF else str(x) for x in row) for row in self.entries)

    def __str__(self):
        return self.to_compact()


def from_graph(rank: int, edges: Iterable[tuple[int, int, int | float]]) -> CoxeterMatrix:
    """Build a matrix from Coxeter graph edges; missing pairs get label 2."""
    m = [[1 if i == j else 2 for j in range(rank)] for i in range(rank)]
    for s, r, lab in edges:
        m[s][r] = m[r][s] = lab
    return CoxeterMatrix(tuple(map(tuple, m)))


def triangle_matrix(a, b, c) -> CoxeterMatrix:
    """Rank-3 matrix of the <a,b,c> triangle group."""
    a, b, c = _label(a), _label(b), _label(c)
    return CoxeterMatrix(((1, b, a), (b, 1, c), (a, c, 1)))


def parse_matrix(data) -> CoxeterMatrix:
    """Parse a matrix from a JSON document, a nested list, or compact text.

    JSON accepts ``{"rank": n, "matrix": [[...]]}`` or a bare list of rows,
    with ``"inf"`` (or 0) for an infinite label.  Compact text is one row per
    line (``;`` also separates rows), labels separated by whitespace or
    commas, with 0 meaning infinity.
    """
    if isinstance(data, CoxeterMatrix):
        return data
    if isinstance(data, str):
        text = data.strip()
        if text.startswith("[") or text.startswith("{"):
            try:
                data = json.loads(text)
            except json.JSONDecodeError as exc:
                raise CoxeterMatrixError(f"invalid JSON: {exc}") from None
        else:
            rows = [r for r in text.replace(";", "\n").splitlines() if r.strip()]
            data = [r.replace(",", " ").split() for r in rows]
    if isinstance(data, dict):
        if "matrix" not in data:
            raise CoxeterMatrixError('JSON object needs a "matrix" field')
        rank = data.get("rank")
        data = data["matrix"]
        if rank is not None and rank != len(data):
            raise CoxeterMatrixError(f"rank {rank} does not match {len(data)} rows")
    if not isinstance(data, (list, tuple)):
        raise CoxeterMatrixError("expected a list of rows")
    rows = []
    for row in data:
        if not isinstance(row, (list, tuple)):
            raise CoxeterMatrixError("expected a list of rows")
        rows.append(tuple(_wire_label(x) for x in row))
    return CoxeterMatrix(tuple(rows))


def _wire_label(x):
    lab = _label(x)
    return INF if lab == 0 else lab


def load_matrix(path) -> CoxeterMatrix:
    with open(path) as fh:
        return parse_matrix(fh.read())


def induced(m: CoxeterMatrix, subset: Iterable[int]) -> CoxeterMatrix:
    """Parabolic submatrix on ``subset``, keeping the original vertex order."""
    idx = sorted(set(subset))
    for i in idx:
        if not 0 <= i < m.rank:
            raise IndexError(f"vertex {i} out of range for rank {m.rank}")
    return CoxeterMatrix(tuple(tuple(m.entries[a][b] for b in idx) for a in idx))


def components(m: CoxeterMatrix) -> list[tuple[tuple[int, ...], CoxeterMatrix]]:
    """Connected components of the Coxeter graph, ordered by smallest vertex."""
    seen = set()
    out = []
    for start in range(m.rank):
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for w in m.neighbours(v):
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        verts = tuple(sorted(comp))
        out.append((verts, induced(m, verts)))
    return out


def is_irreducible(m: CoxeterMatrix) -> bool:
    return m.rank > 0 and len(components(m)) == 1


def _row_profile(m: CoxeterMatrix, i: int) -> tuple:
    return tuple(sorted((x for j, x in enumerate(m.entries[i]) if j != i), reverse=True))


def _dominates(big: tuple, small: tuple) -> bool:
    # both sorted descending; small's k-th largest must not exceed big's
    return len(big) >= len(small) and all(s <= b for s, b in zip(small, big))


def find_injection(a: CoxeterMatrix, b: CoxeterMatrix,
                   rel: Callable[[object, object], bool],
                   bijective: bool) -> tuple[int, ...] | None:
    """Backtracking search for phi with rel(a[s,r], b[phi s, phi r]) for all s, r.

    Candidates are pruned by comparing sorted row-label profiles.
    """
    n, k = a.rank, b.rank
    if n > k or (bijective and n != k):
        return None
    pa = [_row_profile(a, i) for i in range(n)]
    pb = [_row_profile(b, j) for j in range(k)]
    if bijective:
        if sorted(pa) != sorted(pb):
            return None
        cand = [[j for j in range(k) if pb[j] == pa[i]] for i in range(n)]
    else:
        # compare only the top n-1 labels of b's row
        cand = [[j for j in range(k) if _dominates(pb[j][: n - 1], pa[i])] for i in range(n)]
    if any(not c for c in cand):
        return None
    # most constrained (then most connected) vertex first
    order = sorted(range(n), key=lambda i: (len(cand[i]), -len(a.neighbours(i))))
    phi = [-1] * n
    used = [False] * k

    def extend(pos: int) -> bool:
        if pos == n:
            return True
        s = order[pos]
        for j in cand[s]:
            if used[j]:
                continue
            ok = True
            for prev in order[:pos]:
                if not rel(a.entries[s][prev], b.entries[j][phi[prev]]):
                    ok = False
                    break
            if not ok:
                continue
            phi[s] = j
            used[j] = True
            if extend(pos + 1):
                return True
            used[j] = False
            phi[s] = -1
        return False

    return tuple(phi) if extend(0) else None


def find_isomorphism(a: CoxeterMatrix, b: CoxeterMatrix) -> tuple[int, ...] | None:
    """Label-preserving bijection phi (a vertex s -> b vertex phi[s]), or None."""
    return find_injection(a, b, lambda x, y: x == y, bijective=True)


def are_isomorphic(a: CoxeterMatrix, b: CoxeterMatrix) -> bool:
    return find_isomorphism(a, b) is not None


def gram_matrix(m: CoxeterMatrix, precision: int = 40) -> list[list[mpmath.mpf]]:
    """B[s][r] = -cos(pi / m[s][r]) with pi/inf = 0, as mpf at ``precision`` digits."""
    if precision < 15:
        raise ValueError("precision must be at least 15 digits")
    with mpmath.workdps(precision):
        cache = {}

        def entry(x):
            if x == 1:
                return mpmath.mpf(1)
            if x == 2:
                return mpmath.mpf(0)
            if x == 3:
                return mpmath.mpf(-0.5)
            if x == INF:
                return mpmath.mpf(-1)
            if x not in cache:
                cache[x] = -mpmath.cos(mpmath.pi / x)
            return cache[x]

        return [[entry(x) for x in row] for row in m.entries]
