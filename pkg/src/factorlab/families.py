"""Constructors for the extremal graph families under study.

Every constructor returns a ``LabeledConstruction``: the graph plus named
vertex blocks (as bitmasks) in a fixed labeling order, so tests and
verification runs can address specific blocks deterministically.  Theorem
hypotheses that are deliberately not enforced (so small-n probing stays
possible) are recorded in the ``hypothesis`` field.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import BadParamsError
from .graph import Graph, complete, disjoint_union, edgeless, join


@dataclass(frozen=True)
class LabeledConstruction:
    """A constructed graph with named blocks partitioning its vertices."""

    graph: Graph
    blocks: dict[str, int]
    params: dict[str, int]
    hypothesis: dict[str, int | str] = field(default_factory=dict)

    def block_vertices(self, name: str) -> list[int]:
        from .graph import vertices_of

        return vertices_of(self.blocks[name])

    def parts(self) -> list[int]:
        """Block masks in declaration order (a partition of V)."""
        return list(self.blocks.values())


def _range_mask(start: int, size: int) -> int:
    return ((1 << size) - 1) << start


def g_na(n: int, a: int) -> LabeledConstruction:
    """K_{a-1} joined to (K_{n-2a-1} + (a+1) isolated vertices), plus one
    extra vertex adjacent to exactly the a+1 independent vertices.

    Labels: small clique 0..a-2, big clique a-1..n-a-3, independent set
    n-a-2..n-2, added vertex n-1.
    """
    if a < 2:
        raise BadParamsError(f"g_na requires a >= 2, got a={a}")
    if n < 2 * a + 3:
        raise BadParamsError(f"g_na requires n >= 2a+3 = {2 * a + 3}, got n={n}")
    core = join(complete(a - 1), disjoint_union(complete(n - 2 * a - 1), edgeless(a + 1)))
    indep = _range_mask(n - a - 2, a + 1)
    w_bit = 1 << (n - 1)
    rows = list(core.adj) + [indep]
    for v in range(n - a - 2, n - 1):
        rows[v] |= w_bit
    graph = Graph(n, rows)
    blocks = {
        "clique_small": _range_mask(0, a - 1),
        "clique_big": _range_mask(a - 1, n - 2 * a - 1),
        "indep": indep,
        "w": w_bit,
    }
    return LabeledConstruction(graph, blocks, {"n": n, "a": a})


def h_nab(n: int, a: int, b: int) -> LabeledConstruction:
    """K_a joined to (K_{n-a-b-1} + (b+1) isolated vertices), with a-1 extra
    edges from one designated independent vertex into the big clique.

    Labels: small clique 0..a-1, big clique a..n-b-2, plain independent
    vertices n-b-1..n-2, designated vertex n-1.
    """
    if not 1 <= a < b:
        raise BadParamsError(f"h_nab requires 1 <= a < b, got a={a}, b={b}")
    if n < a + b + 2:
        raise BadParamsError(f"h_nab requires n >= a+b+2 = {a + b + 2}, got n={n}")
    big = n - a - b - 1
    if big < a - 1:
        # the designated vertex needs a-1 distinct clique neighbors
        raise BadParamsError(f"h_nab requires n - a - b - 1 >= a - 1, got {big}")
    core = join(complete(a), disjoint_union(complete(big), edgeless(b + 1)))
    rows = list(core.adj)
    special = n - 1
    for v in range(a, a + (a - 1)):  # first a-1 big-clique vertices
        rows[special] |= 1 << v
        rows[v] |= 1 << special
    graph = Graph(n, rows)
    blocks = {
        "clique_small": _range_mask(0, a),
        "clique_big": _range_mask(a, big),
        "indep": _range_mask(a + big, b),
        "special": 1 << special,
    }
    return LabeledConstruction(graph, blocks, {"n": n, "a": a, "b": b})


def odd_1b(n: int, b: int) -> LabeledConstruction:
    """K_1 joined to (K_{n-b-2} + (b+1) isolated vertices).

    Labels: hub 0, big clique 1..n-b-2, independent set n-b-1..n-1.
    """
    if b < 1:
        raise BadParamsError(f"odd_1b requires b >= 1, got b={b}")
    if n < b + 3:
        raise BadParamsError(f"odd_1b requires n >= b+3 = {b + 3}, got n={n}")
    graph = join(complete(1), disjoint_union(complete(n - b - 2), edgeless(b + 1)))
    blocks = {
        "hub": 1,
        "clique_big": _range_mask(1, n - b - 2),
        "indep": _range_mask(n - b - 1, b + 1),
    }
    hyp = {"n_even": "required by the odd-factor setting", "n_min": 4 * b + 8}
    return LabeledConstruction(graph, blocks, {"n": n, "b": b}, hyp)


def book_family(n: int, s: int, b: int) -> LabeledConstruction:
    """K_s joined to (K_{n-b-s-1} + (b+1) isolated vertices).

    Labels: small clique 0..s-1, big clique s..n-b-2, independent set
    n-b-1..n-1.  The three blocks form an equitable partition.
    """
    if s < 1:
        raise BadParamsError(f"book_family requires s >= 1, got s={s}")
    if b < 1:
        raise BadParamsError(f"book_family requires b >= 1, got b={b}")
    if n < b + s + 2:
        raise BadParamsError(f"book_family requires n >= b+s+2 = {b + s + 2}, got n={n}")
    graph = join(complete(s), disjoint_union(complete(n - b - s - 1), edgeless(b + 1)))
    blocks = {
        "clique_small": _range_mask(0, s),
        "clique_big": _range_mask(s, n - b - s - 1),
        "indep": _range_mask(n - b - 1, b + 1),
    }
    hyp = {"n_min": max(2 * b, (b + 1) * s + 1), "b_min": 4}
    return LabeledConstruction(graph, blocks, {"n": n, "s": s, "b": b}, hyp)
