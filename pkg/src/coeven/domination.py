"""Exact domination and co-even domination numbers with certificates.

A vertex of odd or zero degree can never sit outside a co-even dominating
set, so the solver starts from that forced set and only searches over the
even-degree vertices for whatever the forced set leaves undominated.
Optimal certificates are the lexicographically smallest sorted id sequence
among all minimum sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable

from .errors import InvalidVertexError, TooLargeError
from .graph import Graph, iter_bits, to_mask

ORACLE_CAP = 20


@dataclass(frozen=True)
class DominationResult:
    value: int
    certificate: tuple[int, ...]
    explored: int = 0


def _set_mask(g: Graph, s: Iterable[int]) -> int:
    mask = 0
    for v in s:
        if not isinstance(v, int) or not 0 <= v < g.n:
            raise InvalidVertexError(f"vertex {v!r} not in [0, {g.n})")
        mask |= 1 << v
    return mask


def _dominated(g: Graph, mask: int) -> int:
    covered = mask
    for v in iter_bits(mask):
        covered |= g.adj[v]
    return covered


def is_dominating_set(g: Graph, s: Iterable[int]) -> bool:
    mask = _set_mask(g, s)
    return _dominated(g, mask) == (1 << g.n) - 1


def is_coeven_dominating_set(g: Graph, s: Iterable[int]) -> bool:
    mask = _set_mask(g, s)
    if _dominated(g, mask) != (1 << g.n) - 1:
        return False
    return all(g.adj[v].bit_count() % 2 == 0 for v in range(g.n) if not mask >> v & 1)


def forced_mask(g: Graph) -> int:
    mask = 0
    for v, row in enumerate(g.adj):
        d = row.bit_count()
        if d % 2 == 1 or d == 0:
            mask |= 1 << v
    return mask


def forced_vertices(g: Graph) -> frozenset[int]:
    """Vertices of odd or zero degree; they belong to every co-even dominating set."""
    return frozenset(iter_bits(forced_mask(g)))


class _Cover:
    """Lexicographically-first minimum set of candidates whose closed
    neighbourhoods cover ``target``."""

    def __init__(self, g: Graph, target: int, candidates: list[int]):
        self.target = target
        self.cands = candidates
        self.reach = [(g.adj[c] | 1 << c) & target for c in candidates]
        # highest candidate position able to cover each target vertex
        self.last = {}
        for i, r in enumerate(self.reach):
            for x in iter_bits(r):
                self.last[x] = i
        self.explored = 0

    def solve(self) -> list[int] | None:
        if not self.target:
            return []
        if any(x not in self.last for x in iter_bits(self.target)):
            return None
        best = max(r.bit_count() for r in self.reach)
        k = -(-self.target.bit_count() // best)
        self.best = best
        for k in range(k, len(self.cands) + 1):
            picked: list[int] = []
            if self._dfs(0, self.target, k, picked):
                return [self.cands[i] for i in picked]
        return None

    def _dfs(self, start: int, left: int, r: int, picked: list[int]) -> bool:
        self.explored += 1
        if not left:
            return True
        if r == 0 or left.bit_count() > r * self.best:
            return False
        stop = min(self.last[x] for x in iter_bits(left))
        stop = min(stop, len(self.cands) - r)
        for i in range(start, stop + 1):
            picked.append(i)
            if self._dfs(i + 1, left & ~self.reach[i], r - 1, picked):
                return True
            picked.pop()
        return False


def _solve(g: Graph, base: int, restrict_candidates: int) -> DominationResult:
    chosen = base
    explored = 0
    for comp in g.component_masks():
        target = comp & ~_dominated(g, base & comp)
        cands = list(iter_bits(comp & restrict_candidates & ~base))
        cover = _Cover(g, target, cands)
        extra = cover.solve()
        explored += cover.explored
        if extra is None:  # pragma: no cover - cannot happen, V itself qualifies
            raise RuntimeError("no feasible set found")
        chosen |= to_mask(extra)
    cert = tuple(iter_bits(chosen))
    return DominationResult(len(cert), cert, explored)


def domination_number(g: Graph) -> DominationResult:
    return _solve(g, 0, (1 << g.n) - 1)


def coeven_domination_number(g: Graph) -> DominationResult:
    """Minimum co-even dominating set by forced-set reduction plus branch and bound."""
    forced = forced_mask(g)
    return _solve(g, forced, ((1 << g.n) - 1) & ~forced)


@lru_cache(maxsize=1 << 20)
def coeven_value(g: Graph) -> int:
    """Memoised optimum value, for sweeps that revisit the same graphs."""
    return coeven_domination_number(g).value


def coeven_brute_force(g: Graph, cap: int = ORACLE_CAP) -> DominationResult:
    """Exhaustive scan over all subsets by increasing size, lexicographic within a size."""
    if g.n > cap:
        raise TooLargeError(f"n={g.n} exceeds oracle cap {cap}")
    explored = 0
    for k in range(g.n + 1):
        for combo in combinations(range(g.n), k):
            explored += 1
            if is_coeven_dominating_set(g, combo):
                return DominationResult(k, combo, explored)
    raise AssertionError("vertex set must be co-even dominating")  # pragma: no cover


def domination_brute_force(g: Graph, cap: int = ORACLE_CAP) -> DominationResult:
    if g.n > cap:
        raise TooLargeError(f"n={g.n} exceeds oracle cap {cap}")
    explored = 0
    for k in range(g.n + 1):
        for combo in combinations(range(g.n), k):
            explored += 1
            if is_dominating_set(g, combo):
                return DominationResult(k, combo, explored)
    raise AssertionError("vertex set must be dominating")  # pragma: no cover


def optimal_coeven_sets(g: Graph) -> list[frozenset[int]]:
    """Every minimum co-even dominating set, in lexicographic order."""
    forced = forced_vertices(g)
    value = coeven_domination_number(g).value
    free = [v for v in range(g.n) if v not in forced]
    out = []
    for combo in combinations(free, value - len(forced)):
        s = forced.union(combo)
        if is_coeven_dominating_set(g, s):
            out.append(s)
    return out
