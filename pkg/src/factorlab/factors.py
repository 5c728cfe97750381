"""Parity [a,b]-factor existence decided two independent ways.

``decide_by_criterion`` sweeps every assignment of vertices to (S, T,
neither) and evaluates the deficiency

    eta(S,T) = b|S| - a|T| + sum_{x in T} d_{G-S}(x) - q(S,T),

where q(S,T) counts components Q of G-S-T with a|V(Q)| + e(Q,T) odd.  The
graph has a parity [a,b]-factor iff eta is nonnegative for every disjoint
pair; a violating pair (eta <= -2) is returned as a machine-checkable
witness.  ``decide_by_search`` instead backtracks over edge subsets with
degree-feasibility pruning and returns an explicit certificate when a
factor exists.  The two routes share nothing beyond the graph type, so they
cross-validate each other.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .errors import (
    InvalidGFError,
    NonDisjointError,
    ParityPreconditionError,
    SizeLimitError,
)
from .graph import Graph, VertexSet, components, iter_bits, mask_of

CRITERION_VERTEX_LIMIT = 18
SEARCH_EDGE_LIMIT = 40


@dataclass(frozen=True)
class ParityParams:
    """Degree window [a, b] with the parity-factor side conditions."""

    a: int
    b: int

    def __post_init__(self):
        if not 1 <= self.a <= self.b:
            raise ParityPreconditionError(f"need 1 <= a <= b, got a={self.a}, b={self.b}")
        if (self.a - self.b) % 2 != 0:
            raise ParityPreconditionError(f"need a == b (mod 2), got a={self.a}, b={self.b}")

    def validate_for(self, n: int) -> None:
        if (n * self.a) % 2 != 0:
            raise ParityPreconditionError(f"n*a must be even, got n={n}, a={self.a}")


@dataclass(frozen=True)
class GFParams:
    """Per-vertex degree windows [g(v), f(v)] with g(v) == f(v) (mod 2)."""

    g: tuple[int, ...]
    f: tuple[int, ...]

    def __post_init__(self):
        if len(self.g) != len(self.f):
            raise InvalidGFError("g and f must have equal length")
        for v, (gv, fv) in enumerate(zip(self.g, self.f)):
            if not 0 <= gv <= fv:
                raise InvalidGFError(f"need 0 <= g(v) <= f(v) at v={v}: g={gv}, f={fv}")
            if (gv - fv) % 2 != 0:
                raise InvalidGFError(f"need g(v) == f(v) (mod 2) at v={v}: g={gv}, f={fv}")

    @staticmethod
    def constant(n: int, a: int, b: int) -> "GFParams":
        return GFParams((a,) * n, (b,) * n)


@dataclass(frozen=True)
class CriterionWitness:
    """A violating disjoint pair: a certificate that no parity factor exists."""

    s_set: int
    t_set: int
    eta: int
    q: int
    deg_sum: int


@dataclass(frozen=True)
class FactorCertificate:
    """An edge subset whose degrees prove factor existence."""

    edges: tuple[tuple[int, int], ...]
    degrees: tuple[int, ...]


@dataclass(frozen=True)
class Verdict:
    exists: bool
    witness: CriterionWitness | None = None
    certificate: FactorCertificate | None = None


def _disjoint_masks(g: Graph, s: VertexSet, t: VertexSet) -> tuple[int, int]:
    s_mask, t_mask = mask_of(s), mask_of(t)
    if s_mask & t_mask:
        raise NonDisjointError("S and T must be disjoint")
    if (s_mask | t_mask) & ~g.full_mask:
        raise NonDisjointError("S or T references vertices outside the graph")
    return s_mask, t_mask


def a_odd_count(g: Graph, s: VertexSet, t: VertexSet, a: int) -> int:
    """Number of components Q of G-S-T with a|V(Q)| + e(Q,T) odd."""
    s_mask, t_mask = _disjoint_masks(g, s, t)
    rest = g.full_mask & ~s_mask & ~t_mask
    count = 0
    for comp in components(g, rest):
        e_qt = sum((g.adj[v] & t_mask).bit_count() for v in iter_bits(comp))
        if (a * comp.bit_count() + e_qt) % 2 == 1:
            count += 1
    return count


def eta(g: Graph, s: VertexSet, t: VertexSet, params: ParityParams) -> int:
    """Deficiency b|S| - a|T| + sum_{x in T} d_{G-S}(x) - q(S,T); always even."""
    params.validate_for(g.n)
    s_mask, t_mask = _disjoint_masks(g, s, t)
    deg_sum = sum((g.adj[x] & ~s_mask).bit_count() for x in iter_bits(t_mask))
    q = a_odd_count(g, s_mask, t_mask, params.a)
    return params.b * s_mask.bit_count() - params.a * t_mask.bit_count() + deg_sum - q


def eta_gf(g: Graph, s: VertexSet, t: VertexSet, gf: GFParams) -> int:
    """General deficiency f(S) - g(T) + sum_{x in T} d_{G-S}(x) - q(S,T).

    Here q counts components Q of G-S-T with g(V(Q)) + e(Q,T) odd.  With
    constant g = a, f = b this equals ``eta``.
    """
    if len(gf.g) != g.n:
        raise InvalidGFError(f"gf defined on {len(gf.g)} vertices, graph has {g.n}")
    s_mask, t_mask = _disjoint_masks(g, s, t)
    f_s = sum(gf.f[v] for v in iter_bits(s_mask))
    g_t = sum(gf.g[v] for v in iter_bits(t_mask))
    deg_sum = sum((g.adj[x] & ~s_mask).bit_count() for x in iter_bits(t_mask))
    rest = g.full_mask & ~s_mask & ~t_mask
    q = 0
    for comp in components(g, rest):
        g_q = sum(gf.g[v] for v in iter_bits(comp))
        e_qt = sum((g.adj[v] & t_mask).bit_count() for v in iter_bits(comp))
        if (g_q + e_qt) % 2 == 1:
            q += 1
    return f_s - g_t + deg_sum - q


def decide_by_criterion(g: Graph, params: ParityParams, force: bool = False) -> Verdict:
    """Exists iff eta(S,T) >= 0 for all disjoint S,T; else a witness.

    Exhaustive over all 3^n assignments, organized as: for every mask R of
    "neither" vertices (ascending), every T inside the complement W = V - R
    (S = W - T).  Sound pruning discards assignments that provably cannot
    reach eta <= -2; the witness returned is the first one this enumeration
    meets, which makes reruns reproducible.
    """
    return criterion_scan(g, [params], force=force)[0]


def criterion_scan(g: Graph, params_list: list[ParityParams], force: bool = False) -> list[Verdict]:
    """Run ``decide_by_criterion`` for several parameter pairs in one sweep.

    Component data per R mask is shared across parameter pairs; verdicts and
    witnesses are identical to per-pair calls.
    """
    n = g.n
    for p in params_list:
        p.validate_for(n)
    if n > CRITERION_VERTEX_LIMIT:
        if not force:
            raise SizeLimitError(
                f"criterion decider capped at n <= {CRITERION_VERTEX_LIMIT}; pass force=True to override"
            )
        warnings.warn(f"criterion sweep over 3^{n} assignments; this may take very long")
    adj = g.adj
    full = g.full_mask
    witnesses: dict[int, CriterionWitness] = {}
    live = list(range(len(params_list)))
    for r_mask in range(full + 1):
        if not live:
            break
        w_mask = full ^ r_mask
        w_list = list(iter_bits(w_mask))
        w_cnt = len(w_list)
        r_cnt = n - w_cnt
        dr = [(adj[x] & r_mask).bit_count() for x in w_list]
        todo = []
        for i in live:
            a, b = params_list[i].a, params_list[i].b
            bound = b * w_cnt - r_cnt
            for d in dr:
                v = d - a - b
                if v < 0:
                    bound += v
            if bound <= -2:
                todo.append(i)
        if not todo:
            continue
        comps = components(g, r_mask) if r_mask else []
        c = len(comps)
        sizes = [comp.bit_count() for comp in comps]
        pbits = []
        for x in w_list:
            ax = adj[x]
            pb = 0
            for ci, comp in enumerate(comps):
                if (ax & comp).bit_count() & 1:
                    pb |= 1 << ci
            pbits.append(pb)
        for i in todo:
            a, b = params_list[i].a, params_list[i].b
            base_par = 0
            for ci, sz in enumerate(sizes):
                if (a * sz) & 1:
                    base_par |= 1 << ci
            vals = [d - a - b for d in dr]
            order = sorted(range(w_cnt), key=lambda k: (vals[k], w_list[k]))
            vs = [vals[k] for k in order]
            xs = [w_list[k] for k in order]
            ps = [pbits[k] for k in order]
            suffmin = [0] * (w_cnt + 1)
            for j in range(w_cnt - 1, -1, -1):
                suffmin[j] = suffmin[j + 1] + (vs[j] if vs[j] < 0 else 0)
            t_found = _violating_t(adj, xs, vs, ps, suffmin, b * w_cnt, base_par, c)
            if t_found is not None:
                s_mask = w_mask ^ t_found
                witnesses[i] = _witness(g, s_mask, t_found, params_list[i])
                live = [k for k in live if k != i]
    return [
        Verdict(exists=False, witness=witnesses[i]) if i in witnesses else Verdict(exists=True)
        for i in range(len(params_list))
    ]


def _violating_t(adj, xs, vs, ps, suffmin, acc0, par0, c):
    """First T (by DFS order) with eta <= -2; None when every T is clean.

    Walks subsets of the W vertices xs by always choosing the next included
    index; acc tracks eta without its -q term, par tracks per-component
    parity bits so q = popcount(par).  Branches whose optimistic completion
    stays above -2 are cut; minimums are exact, so no witness is missed.
    """
    w_cnt = len(xs)
    if acc0 - par0.bit_count() <= -2:
        return 0
    # stack entries: (next index j, t_mask, acc, par)
    stack = [(0, 0, acc0, par0)]
    while stack:
        j, t_mask, acc, par = stack.pop()
        if j >= w_cnt or acc + suffmin[j] - c > -2:
            continue
        # resume the sibling loop after descending into branch j
        stack.append((j + 1, t_mask, acc, par))
        x = xs[j]
        t2 = t_mask | (1 << x)
        acc2 = acc + vs[j] + 2 * (adj[x] & t_mask).bit_count()
        par2 = par ^ ps[j]
        if acc2 - par2.bit_count() <= -2:
            return t2
        stack.append((j + 1, t2, acc2, par2))
    return None


def _witness(g: Graph, s_mask: int, t_mask: int, params: ParityParams) -> CriterionWitness:
    deg_sum = sum((g.adj[x] & ~s_mask).bit_count() for x in iter_bits(t_mask))
    q = a_odd_count(g, s_mask, t_mask, params.a)
    value = params.b * s_mask.bit_count() - params.a * t_mask.bit_count() + deg_sum - q
    return CriterionWitness(s_set=s_mask, t_set=t_mask, eta=value, q=q, deg_sum=deg_sum)


def decide_by_search(
    g: Graph, params: ParityParams, parity: bool = True, force: bool = False
) -> Verdict:
    """Backtracking over edge subsets with degree-feasibility pruning.

    With parity on, looks for a spanning subgraph with every degree in
    [a, b] and congruent to a mod 2; with parity off, a plain [a,b]-factor.
    Edges are processed in a fixed order that visits low-degree (most
    constrained) vertices first, include-branch first, so the certificate
    for a given graph is deterministic.
    """
    if parity:
        params.validate_for(g.n)
    if g.m > SEARCH_EDGE_LIMIT:
        if not force:
            raise SizeLimitError(
                f"search decider capped at m <= {SEARCH_EDGE_LIMIT} edges; pass force=True to override"
            )
        warnings.warn(f"edge-subset search over 2^{g.m} subsets; this may take very long")
    n = g.n
    a, b = params.a, params.b
    rank = sorted(range(n), key=lambda v: (g.degree(v), v))
    pos = [0] * n
    for i, v in enumerate(rank):
        pos[v] = i
    edge_list = sorted(g.edges(), key=lambda e: tuple(sorted((pos[e[0]], pos[e[1]]))))
    cur = [0] * n
    und = g.degrees()

    def feasible(v: int) -> bool:
        lo = cur[v] if cur[v] > a else a
        hi = cur[v] + und[v]
        if hi > b:
            hi = b
        if lo > hi:
            return False
        if parity and lo == hi and (lo - a) % 2 != 0:
            return False
        return True

    for v in range(n):
        if not feasible(v):
            return Verdict(exists=False)

    chosen: list[tuple[int, int]] = []

    def search(i: int) -> bool:
        if i == len(edge_list):
            return True
        u, v = edge_list[i]
        if cur[u] < b and cur[v] < b:
            cur[u] += 1
            cur[v] += 1
            und[u] -= 1
            und[v] -= 1
            if feasible(u) and feasible(v):
                chosen.append((u, v))
                if search(i + 1):
                    return True
                chosen.pop()
            cur[u] -= 1
            cur[v] -= 1
            und[u] += 1
            und[v] += 1
        und[u] -= 1
        und[v] -= 1
        ok = feasible(u) and feasible(v) and search(i + 1)
        und[u] += 1
        und[v] += 1
        return ok

    if not search(0):
        return Verdict(exists=False)
    edges = tuple(sorted((u, v) if u < v else (v, u) for u, v in chosen))
    degrees = [0] * n
    for u, v in edges:
        degrees[u] += 1
        degrees[v] += 1
    return Verdict(exists=True, certificate=FactorCertificate(edges=edges, degrees=tuple(degrees)))


def verify_certificate(
    g: Graph, cert: FactorCertificate, params: ParityParams, parity: bool = True
) -> bool:
    """True iff the certificate's edges lie in G and its degrees qualify."""
    degrees = [0] * g.n
    seen = set()
    for u, v in cert.edges:
        e = (u, v) if u < v else (v, u)
        if e in seen:
            return False
        seen.add(e)
        if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
            return False
        degrees[u] += 1
        degrees[v] += 1
    if tuple(degrees) != cert.degrees:
        return False
    for d in degrees:
        if not params.a <= d <= params.b:
            return False
        if parity and (d - params.a) % 2 != 0:
            return False
    return True
