"""Whole-order lookup tables of the co-even domination number.

For small ``n`` every labeled graph is indexed by its upper-triangle key
(see :meth:`Graph.key`), so numpy can evaluate all of them at once. This
is what makes the exhaustive n <= 7 sweep (2^21 graphs) fast enough on a
single core; the branch-and-bound solver remains the reference and the
tests cross-check the two.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .corpus import emit_graph6
from .errors import TooLargeError
from .graph import Graph, pair_index

MAX_TABLE_N = 7
_POPCOUNT = np.array([bin(i).count("1") for i in range(256)], dtype=np.uint8)


def _rows(n: int, keys: np.ndarray) -> list[np.ndarray]:
    rows = [np.zeros(keys.shape, dtype=np.uint8) for _ in range(n)]
    for j in range(1, n):
        for i in range(j):
            bit = ((keys >> pair_index(i, j)) & 1).astype(np.uint8)
            rows[i] |= bit << j
            rows[j] |= bit << i
    return rows


@lru_cache(maxsize=None)
def coeven_table(n: int) -> np.ndarray:
    """``table[key]`` is the co-even domination number of ``Graph.from_key(n, key)``."""
    if n > MAX_TABLE_N:
        raise TooLargeError(f"tables are limited to n <= {MAX_TABLE_N}")
    keys = np.arange(1 << (n * (n - 1) // 2), dtype=np.uint32)
    rows = _rows(n, keys)
    # a vertex may stay outside only if its degree is even and non-zero
    may_skip = []
    for row in rows:
        deg = _POPCOUNT[row]
        may_skip.append((deg % 2 == 0) & (deg > 0))
    best = np.full(keys.shape, n, dtype=np.uint8)
    # largest subsets first so smaller sizes overwrite
    for s in sorted(range(1 << n), key=lambda m: -bin(m).count("1")):
        ok = np.ones(keys.shape, dtype=bool)
        for v in range(n):
            if not s >> v & 1:
                ok &= may_skip[v] & ((rows[v] & s) != 0)
        best[ok] = bin(s).count("1")
    best.flags.writeable = False
    return best


def _relabel_keys(n: int, keys: np.ndarray, v: int, contract: bool) -> np.ndarray:
    """Keys of G - v (or G/v) for every graph in ``keys``, on n - 1 vertices."""
    old = [i for i in range(n) if i != v]
    out = np.zeros(keys.shape, dtype=np.uint32)
    for b in range(1, n - 1):
        for a in range(b):
            oa, ob = old[a], old[b]
            bit = (keys >> pair_index(oa, ob)) & 1
            if contract:
                bit |= (keys >> pair_index(oa, v)) & (keys >> pair_index(ob, v)) & 1
            out |= bit << pair_index(a, b)
    return out


@dataclass
class SurveyReport:
    """Outcome of the vertex removal/contraction lower-bound equality sweep."""

    max_n: int
    # (operation, n, degree) -> number of (G, v) pairs with equality
    equality_counts: dict[tuple[str, int, int], int] = field(default_factory=dict)
    checked: dict[tuple[str, int], int] = field(default_factory=dict)
    violations: dict[tuple[str, int], int] = field(default_factory=dict)
    # first few witnesses with degree >= min_degree, ordered by (op, n, key, v)
    witnesses: list[dict] = field(default_factory=list)
    min_degree: int = 2

    def to_dict(self) -> dict:
        by_op: dict[str, dict] = {}
        for (op, n, deg), count in sorted(self.equality_counts.items()):
            by_op.setdefault(op, {}).setdefault(str(n), {})[str(deg)] = count
        nontrivial = {
            op: sum(c for (o, _, d), c in self.equality_counts.items() if o == op and d >= self.min_degree)
            for op in ("vertex-removal", "vertex-contraction")
        }
        return {
            "max_n": self.max_n,
            "relation": "lower-equality",
            "checked": {f"{op}/n={n}": c for (op, n), c in sorted(self.checked.items())},
            "violations": {f"{op}/n={n}": c for (op, n), c in sorted(self.violations.items())},
            "equality_by_n_and_degree": by_op,
            "min_degree": self.min_degree,
            "witnesses_with_min_degree": nontrivial,
            "verdict": {
                op: ("witnesses found" if count else f"none at n <= {self.max_n}") for op, count in nontrivial.items()
            },
            "examples": self.witnesses,
        }


def lower_bound_survey(max_n: int = MAX_TABLE_N, min_degree: int = 2, examples: int = 10) -> SurveyReport:
    """Sweep all labeled graphs with 1 <= n <= ``max_n`` for
    ``gamma_coe(G op v) == gamma_coe(G) - deg(v) - 1`` under vertex removal and contraction.

    Degree-0 and degree-1 vertices attain the bound trivially (K1, K2), so
    the verdict and examples only count vertices of degree >= ``min_degree``.
    Window violations are counted too; a sound bound gives zero.
    """
    report = SurveyReport(max_n=max_n, min_degree=min_degree)
    found: list[tuple] = []
    for n in range(1, max_n + 1):
        keys = np.arange(1 << (n * (n - 1) // 2), dtype=np.uint32)
        base = coeven_table(n).astype(np.int16)
        smaller = coeven_table(n - 1).astype(np.int16)
        rows = _rows(n, keys)
        for op, contract in (("vertex-removal", False), ("vertex-contraction", True)):
            for v in range(n):
                deg = _POPCOUNT[rows[v]].astype(np.int16)
                after = smaller[_relabel_keys(n, keys, v, contract)]
                lower = base - deg - 1
                upper = base + deg - 1
                report.checked[(op, n)] = report.checked.get((op, n), 0) + len(keys)
                bad = int(np.count_nonzero((after < lower) | (after > upper)))
                report.violations[(op, n)] = report.violations.get((op, n), 0) + bad
                hit = after == lower
                for d in np.unique(deg[hit]):
                    k = (op, n, int(d))
                    report.equality_counts[k] = report.equality_counts.get(k, 0) + int(np.count_nonzero(hit & (deg == d)))
                idx = np.flatnonzero(hit & (deg >= min_degree))[:examples]
                for key in idx:
                    found.append((op, n, int(key), v, int(deg[key]), int(base[key]), int(after[key])))
    found.sort()
    per_op: dict[str, int] = {}
    for op, n, key, v, deg, b, a in found:
        if per_op.get(op, 0) >= examples:
            continue
        per_op[op] = per_op.get(op, 0) + 1
        report.witnesses.append({
            "operation": op, "graph6": emit_graph6(Graph.from_key(n, key)), "n": n, "vertex": v,
            "degree": deg, "base": b, "transformed": a,
        })
    return report
