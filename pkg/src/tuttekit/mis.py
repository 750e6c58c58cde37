"""Exact independent-set counting (ground truth for the hardness instances)."""

from __future__ import annotations

from .errors import BudgetExceededError
from .graph import WeightedMultigraph

__all__ = ["mis_oracle", "independence_counts"]


def independence_counts(g: WeightedMultigraph, cap: int = 32) -> list[int]:
    """Coefficients of the independence polynomial: entry k = number of
    independent vertex sets of size k.  Loops make their vertex unusable;
    parallel edges collapse.
    """
    n = g.vertex_count
    if n > cap:
        raise BudgetExceededError(f"independent-set cap exceeded: {n} > {cap}")
    adj = [0] * n
    blocked = 0
    for u, v in g.ends:
        if u == v:
            blocked |= 1 << u
        else:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    full = ((1 << n) - 1) & ~blocked

    memo: dict[int, tuple[int, ...]] = {}

    def rec(mask: int) -> tuple[int, ...]:
        if mask == 0:
            return (1,)
        hit = memo.get(mask)
        if hit is not None:
            return hit
        # branch on a max-degree-in-mask vertex
        best_v, best_d = -1, -1
        m = mask
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            d = bin(adj[v] & mask).count("1")
            if d > best_d:
                best_v, best_d = v, d
        v = best_v
        without = rec(mask & ~(1 << v))
        with_v = rec(mask & ~(1 << v) & ~adj[v])
        out = list(without) + [0] * max(0, len(with_v) + 1 - len(without))
        for k, c in enumerate(with_v):
            out[k + 1] += c
        res = tuple(out)
        memo[mask] = res
        return res

    counts = list(rec(full))
    # isolated-by-loop vertices were excluded entirely, which is correct:
    # a looped vertex is adjacent to itself and can join no independent set
    return counts


def mis_oracle(g: WeightedMultigraph, cap: int = 32) -> tuple[int, int, list[int]]:
    """(maximum independent set size, number of maximum sets, counts by size)."""
    counts = independence_counts(g, cap)
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    return len(counts) - 1, counts[-1], counts
