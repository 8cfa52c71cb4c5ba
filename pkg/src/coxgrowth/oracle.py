"""Brute-force census of group elements by word length.

Independent of the series machinery.  Elements are tracked as sets of
reduced words: two reduced words name the same element iff they are joined
by braid moves (Tits), and w*s is shorter than w iff some reduced word of w
ends in s.  Each element is keyed by its lexicographically least reduced word.
"""
from __future__ import annotations

from dataclasses import dataclass

from .coxeter import INF, CoxeterMatrix

DEFAULT_BUDGET = 10 ** 8


class CensusBudgetError(RuntimeError):
    pass


@dataclass(frozen=True)
class WordCensus:
    counts: tuple[int, ...]
    complete: bool

    def to_json(self) -> dict:
        return {"counts": list(self.counts), "complete": self.complete}


def _braid_moves(m: CoxeterMatrix):
    """For each ordered pair (s, r) with finite label, the alternating words to swap."""
    moves = {}
    for s in range(m.rank):
        for r in range(m.rank):
            lab = m[s, r]
            if s == r or lab == INF:
                continue
            left = tuple(s if i % 2 == 0 else r for i in range(lab))
            right = tuple(r if i % 2 == 0 else s for i in range(lab))
            moves[left] = right
    return moves


def braid_class(word: tuple[int, ...], moves: dict) -> frozenset:
    """All words reachable from ``word`` by braid moves."""
    lengths = sorted({len(k) for k in moves})
    seen = {word}
    stack = [word]
    while stack:
        w = stack.pop()
        for L in lengths:
            for i in range(len(w) - L + 1):
                rep = moves.get(w[i:i + L])
                if rep is not None:
                    u = w[:i] + rep + w[i + L:]
                    if u not in seen:
                        seen.add(u)
                        stack.append(u)
    return frozenset(seen)


def count_by_length(m: CoxeterMatrix, max_len: int, budget: int | None = DEFAULT_BUDGET) -> WordCensus:
    """Numbers of elements of length 0..max_len.

    ``budget`` bounds rank**max_len; pass None to disable the guard.
    """
    if max_len < 0:
        raise ValueError("max_len must be nonnegative")
    n = m.rank
    if budget is not None and n ** max_len > budget:
        raise CensusBudgetError(
            f"census cost rank**max_len = {n}**{max_len} exceeds budget {budget}")
    moves = _braid_moves(m)
    layer = {(): frozenset({()})}
    counts = [1]
    for _ in range(max_len):
        nxt: dict = {}
        owner: dict = {}  # word -> canonical word of its element in nxt
        for cls in layer.values():
            last = {w[-1] for w in cls if w}
            rep = min(cls)
            for s in range(n):
                if s in last:
                    continue  # a reduced word ends in s: w*s is shorter
                u = rep + (s,)
                if u in owner:
                    continue
                c = braid_class(u, moves)
                key = min(c)
                nxt[key] = c
                for w in c:
                    owner[w] = key
        counts.append(len(nxt))
        layer = nxt
        if not layer:
            counts.extend([0] * (max_len + 1 - len(counts)))
            return WordCensus(tuple(counts), True)
    # complete iff nothing at the top layer can be extended
    complete = all({w[-1] for w in cls if w} >= set(range(n)) for cls in layer.values())
    return WordCensus(tuple(counts), complete)
