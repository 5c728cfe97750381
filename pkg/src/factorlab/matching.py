"""Exact maximum matching on small graphs, used as an independent oracle.

Memoized recursion over vertex bitmasks: the lowest vertex of the mask is
either left unmatched or matched to one of its neighbors.  Exact on general
graphs (no blossom machinery needed) and fast for n up to ~20, which covers
every desk-scale corpus this package sweeps.
"""

from __future__ import annotations

from .graph import Graph, iter_bits


def max_matching_size(g: Graph) -> int:
    """Size of a maximum matching."""
    adj = g.adj
    memo: dict[int, int] = {0: 0}

    def best(mask: int) -> int:
        cached = memo.get(mask)
        if cached is not None:
            return cached
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        result = best(rest)
        for u in iter_bits(adj[v] & rest):
            candidate = 1 + best(rest ^ (1 << u))
            if candidate > result:
                result = candidate
        memo[mask] = result
        return result

    return best(g.full_mask)


def has_perfect_matching(g: Graph) -> bool:
    return g.n % 2 == 0 and max_matching_size(g) == g.n // 2
