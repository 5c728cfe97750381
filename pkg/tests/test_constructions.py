"""Extremal family constructors: degree profiles, edge counts, blocks."""

import pytest

from factorlab import (
    BadParamsError,
    ParityParams,
    book_family,
    complete,
    components,
    delete_set,
    disjoint_union,
    edgeless,
    edges_between,
    eta,
    g_na,
    h_nab,
    join,
    min_degree,
    odd_1b,
    quotient,
    vertices_of,
)
from factorlab.graph import validate
from factorlab.spectral import QuotientMatrix


def block_degrees(cons, name):
    g = cons.graph
    return {g.degree(v) for v in vertices_of(cons.blocks[name])}


class TestGna:
    def test_block_sizes_partition(self):
        for n, a in [(8, 2), (12, 2), (13, 3), (20, 5)]:
            cons = g_na(n, a)
            sizes = {name: mask.bit_count() for name, mask in cons.blocks.items()}
            assert sizes == {"clique_small": a - 1, "clique_big": n - 2 * a - 1,
                             "indep": a + 1, "w": 1}
            union = 0
            for mask in cons.blocks.values():
                assert union & mask == 0
                union |= mask
            assert union == cons.graph.full_mask
            validate(cons.graph)

    def test_degree_profile(self):
        for n, a in [(8, 2), (14, 2), (15, 3), (18, 4)]:
            cons = g_na(n, a)
            assert block_degrees(cons, "indep") == {a}
            assert block_degrees(cons, "w") == {a + 1}
            assert block_degrees(cons, "clique_small") == {n - 2}
            assert block_degrees(cons, "clique_big") == {n - a - 3}
            assert min_degree(cons.graph) == a

    def test_edge_count_formula(self):
        for n, a in [(8, 2), (11, 2), (13, 3), (20, 5), (40, 4)]:
            cons = g_na(n, a)
            assert cons.graph.m == (n - a - 2) * (n - a - 3) // 2 + a * a + a

    def test_join_base_matches_figure(self):
        # without w, the graph is exactly the join of the small clique with
        # the big clique plus isolated vertices
        n, a = 12, 2
        cons = g_na(n, a)
        base, _ = delete_set(cons.graph, cons.blocks["w"])
        expected = join(complete(a - 1), disjoint_union(complete(n - 2 * a - 1),
                                                        edgeless(a + 1)))
        assert base == expected

    def test_delete_indep_leaves_clique_and_w(self):
        n, a = 12, 2
        cons = g_na(n, a)
        rest = cons.graph.full_mask ^ cons.blocks["indep"]
        parts = components(cons.graph, rest)
        assert sorted(p.bit_count() for p in parts) == [1, n - a - 2]
        assert max(parts, key=lambda p: p.bit_count()) == (
            cons.blocks["clique_small"] | cons.blocks["clique_big"]
        )

    def test_equitable_four_blocks(self):
        for n, a in [(9, 2), (13, 3), (16, 4)]:
            cons = g_na(n, a)
            qm = quotient(cons.graph, cons.parts())
            assert isinstance(qm, QuotientMatrix)
            assert qm.entries == (
                (a - 2, n - 2 * a - 1, a + 1, 0),
                (a - 1, n - 2 * a - 2, 0, 0),
                (a - 1, 0, 0, 1),
                (0, 0, a + 1, 0),
            )

    def test_bad_params(self):
        with pytest.raises(BadParamsError):
            g_na(10, 1)
        with pytest.raises(BadParamsError):
            g_na(6, 2)  # needs n >= 7


class TestHnab:
    def test_degrees(self):
        for n, a, b in [(12, 2, 4), (13, 3, 5), (11, 1, 2), (16, 3, 4)]:
            cons = h_nab(n, a, b)
            assert block_degrees(cons, "special") == {2 * a - 1}
            assert block_degrees(cons, "indep") == {a}
            assert min_degree(cons.graph) == a
            validate(cons.graph)

    def test_edge_additivity(self):
        n, a, b = 14, 3, 5
        cons = h_nab(n, a, b)
        base = join(complete(a), disjoint_union(complete(n - a - b - 1), edgeless(b + 1)))
        assert cons.graph.m == base.m + a - 1

    def test_needs_room_for_extra_edges(self):
        with pytest.raises(BadParamsError):
            h_nab(10, 3, 5)  # big clique would have 1 < a-1 vertices
        with pytest.raises(BadParamsError):
            h_nab(10, 3, 3)
        with pytest.raises(BadParamsError):
            h_nab(7, 2, 4)


class TestOdd1b:
    def test_degrees(self):
        n, b = 12, 3
        cons = odd_1b(n, b)
        assert block_degrees(cons, "indep") == {1}
        assert block_degrees(cons, "hub") == {n - 1}
        assert min_degree(cons.graph) == 1

    def test_no_odd_factor_witness(self):
        # S = hub, T = independent block violates the criterion for (1, b)
        for n, b in [(12, 3), (16, 5), (20, 3)]:
            cons = odd_1b(n, b)
            value = eta(cons.graph, cons.blocks["hub"], cons.blocks["indep"],
                        ParityParams(1, b))
            assert value == -2

    def test_hypothesis_recorded_not_enforced(self):
        cons = odd_1b(10, 3)  # below 4b+8 = 20: allowed, recorded
        assert cons.hypothesis["n_min"] == 20

    def test_bad_params(self):
        with pytest.raises(BadParamsError):
            odd_1b(5, 3)


class TestBookFamily:
    def test_indep_degree_is_s(self):
        for n, s, b in [(20, 1, 4), (25, 3, 6), (40, 5, 9)]:
            cons = book_family(n, s, b)
            assert block_degrees(cons, "indep") == {s}
            validate(cons.graph)

    def test_s1_equals_odd_1b(self):
        n, b = 18, 4
        assert book_family(n, 1, b).graph == odd_1b(n, b).graph

    def test_quotient_rows_match_closed_form(self):
        for n, s, b in [(20, 1, 4), (26, 2, 5), (50, 4, 8)]:
            cons = book_family(n, s, b)
            qm = quotient(cons.graph, cons.parts())
            assert isinstance(qm, QuotientMatrix)
            assert qm.entries == (
                (s - 1, n - b - s - 1, b + 1),
                (s, n - b - s - 2, 0),
                (s, 0, 0),
            )

    def test_edges_between_blocks(self):
        n, s, b = 20, 2, 5
        cons = book_family(n, s, b)
        assert edges_between(cons.graph, cons.blocks["clique_small"], cons.blocks["indep"]) == s * (b + 1)
        assert edges_between(cons.graph, cons.blocks["clique_big"], cons.blocks["indep"]) == 0

    def test_bad_params(self):
        with pytest.raises(BadParamsError):
            book_family(7, 2, 4)
        with pytest.raises(BadParamsError):
            book_family(10, 0, 4)
