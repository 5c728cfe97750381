"""Spectral engine: power iteration, bounds, quotients, the cubic, rotations."""

import math
import random

import numpy as np
import pytest

from factorlab import (
    BadParamsError,
    BadRotationError,
    NotAPartitionError,
    NotConvergedError,
    NotEquitable,
    book_charpoly,
    book_family,
    complete,
    cycle,
    disjoint_union,
    edge_rotation,
    f_monotone_check,
    from_edges,
    g_na,
    hong_nikiforov_bound,
    is_connected,
    path,
    quotient,
    quotient_rho,
    spectral_radius,
    star,
)
from factorlab.spectral import QuotientMatrix, charpoly_coefficients


def random_graph(n, p, rng):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return from_edges(n, edges)


def random_connected(n, p, rng):
    while True:
        g = random_graph(n, p, rng)
        if is_connected(g):
            return g


class TestSpectralRadius:
    def test_complete_graphs(self):
        for n in (2, 5, 17, 60):
            assert abs(spectral_radius(complete(n)).rho - (n - 1)) <= 1e-9

    def test_cycles_including_bipartite(self):
        for n in (3, 4, 8, 25, 64):
            assert abs(spectral_radius(cycle(n)).rho - 2.0) <= 1e-9

    def test_stars(self):
        for n in (2, 5, 10, 50):
            assert abs(spectral_radius(star(n)).rho - math.sqrt(n - 1)) <= 1e-9

    def test_gna_exceeds_clique_floor(self):
        for a in (2, 3, 4, 5):
            for n in range(2 * a + 4, 2 * a + 30, 5):
                rho = spectral_radius(g_na(n, a).graph).rho
                assert rho > n - a - 3

    def test_perron_positive_on_connected(self):
        rng = random.Random(4)
        for _ in range(20):
            g = random_connected(9, 0.35, rng)
            r = spectral_radius(g)
            assert np.all(r.perron > 0)
            assert abs(np.linalg.norm(r.perron) - 1.0) < 1e-12
            assert r.residual <= 1e-10

    def test_disconnected_takes_max(self):
        g = disjoint_union(complete(5), cycle(4))
        r = spectral_radius(g)
        assert abs(r.rho - 4.0) <= 1e-9
        # perron vector supported on the winning component
        assert np.all(r.perron[:5] > 0)
        assert np.all(r.perron[5:] == 0)

    def test_singleton(self):
        r = spectral_radius(complete(1))
        assert r.rho == 0.0 and r.residual == 0.0

    def test_not_converged(self):
        with pytest.raises(NotConvergedError):
            spectral_radius(path(30), tol=1e-12, max_iter=3)

    def test_residual_contract(self):
        rng = random.Random(12)
        for _ in range(10):
            g = random_connected(12, 0.3, rng)
            r = spectral_radius(g, tol=1e-8)
            a = np.zeros((12, 12))
            for u, v in g.edges():
                a[u, v] = a[v, u] = 1.0
            assert np.max(np.abs(a @ r.perron - r.rho * r.perron)) <= 1e-8


class TestHongNikiforovBound:
    def test_regular_graphs_attain_it(self):
        for n, d in [(8, 3), (10, 4), (12, 5)]:
            bound = hong_nikiforov_bound(n, n * d // 2, d)
            assert abs(bound - d) <= 1e-12

    def test_complete_graph(self):
        n = 20
        assert abs(hong_nikiforov_bound(n, n * (n - 1) // 2, n - 1) - (n - 1)) <= 1e-12

    def test_dominates_sampled_rho(self):
        rng = random.Random(21)
        for _ in range(150):
            n = rng.randrange(5, 20)
            g = random_graph(n, rng.choice([0.3, 0.5, 0.8]), rng)
            if g.m == 0 or min(g.degrees()) < 1:
                continue
            rho = spectral_radius(g).rho
            bound = hong_nikiforov_bound(g.n, g.m, min(g.degrees()))
            assert rho <= bound + 1e-9

    def test_bidegree_graphs_attain_it(self):
        # the other equality case: every degree is either delta or n-1
        for n in (5, 8, 13):
            g = star(n)
            bound = hong_nikiforov_bound(n, g.m, 1)
            assert abs(spectral_radius(g).rho - bound) <= 1e-7
        from factorlab import disjoint_union, join

        g = join(complete(1), disjoint_union(complete(2), complete(2)))
        bound = hong_nikiforov_bound(g.n, g.m, 2)  # degrees are {2, n-1}
        assert abs(spectral_radius(g).rho - bound) <= 1e-7

    def test_bad_params(self):
        with pytest.raises(BadParamsError):
            hong_nikiforov_bound(10, 45, 0)
        with pytest.raises(BadParamsError):
            hong_nikiforov_bound(10, 2, 3)  # 2m < n*delta


class TestMonotoneCurve:
    def test_example_grid(self):
        # the grid runs 0..n-1; points past the radicand's domain are skipped
        assert f_monotone_check(10, 20, [float(x) for x in range(10)])

    def test_endpoints_only(self):
        from factorlab.spectral import degree_size_curve

        n, m = 12, 60  # dense enough that both endpoints are in-domain
        assert f_monotone_check(n, m, [0.0, float(n - 1)])
        assert degree_size_curve(n, m, 0.0) >= degree_size_curve(n, m, float(n - 1))

    def test_constant_at_complete_graph(self):
        # with m = n(n-1)/2 the curve is identically n-1
        n = 9
        m = n * (n - 1) // 2
        from factorlab.spectral import degree_size_curve

        for x in range(n):
            assert abs(degree_size_curve(n, m, float(x)) - (n - 1)) <= 1e-9

    def test_sampled_property(self):
        rng = random.Random(6)
        for _ in range(200):
            n = rng.randrange(3, 50)
            m = rng.randrange(0, n * (n - 1) // 2 + 1)
            grid = []
            for x in range(n):
                if 2 * m - n * x + (x + 1) ** 2 / 4.0 >= 0:
                    grid.append(float(x))
                else:
                    break
            assert f_monotone_check(n, m, grid)


class TestQuotient:
    def test_book_family_rows(self):
        n, s, b = 30, 2, 5
        cons = book_family(n, s, b)
        qm = quotient(cons.graph, cons.parts())
        assert qm.entries == ((s - 1, n - b - s - 1, b + 1), (s, n - b - s - 2, 0), (s, 0, 0))

    def test_gna_equitable(self):
        cons = g_na(14, 3)
        qm = quotient(cons.graph, cons.parts())
        assert isinstance(qm, QuotientMatrix)

    def test_arbitrary_partition_not_equitable(self):
        rng = random.Random(9)
        hits = 0
        for _ in range(30):
            g = random_connected(10, 0.4, rng)
            parts = [0, 0]
            for v in range(10):
                parts[rng.randrange(2)] |= 1 << v
            if not parts[0] or not parts[1]:
                continue
            result = quotient(g, parts)
            if isinstance(result, NotEquitable):
                hits += 1
                # the reported vertex really does break the constant row sum
                pm = parts[0] if (parts[0] >> result.vertex) & 1 else parts[1]
                same_part = [v for v in range(10) if (pm >> v) & 1]
                counts = {
                    v: (g.adj[v] & parts[result.part]).bit_count() for v in same_part
                }
                assert len(set(counts.values())) > 1
        assert hits >= 20  # random 2-partitions are almost never equitable

    def test_not_a_partition(self):
        g = complete(4)
        with pytest.raises(NotAPartitionError):
            quotient(g, [0b0011, 0b0110])
        with pytest.raises(NotAPartitionError):
            quotient(g, [0b0011])
        with pytest.raises(NotAPartitionError):
            quotient(g, [0b0011, 0b1100, 0])


class TestQuotientRho:
    def test_single_part_complete(self):
        g = complete(12)
        qm = quotient(g, [g.full_mask])
        assert isinstance(qm, QuotientMatrix)
        assert quotient_rho(qm) == 11.0

    def test_book_matches_full_graph(self):
        for n, s, b in [(20, 1, 4), (30, 3, 6), (60, 5, 9), (200, 2, 4)]:
            cons = book_family(n, s, b)
            qm = quotient(cons.graph, cons.parts())
            assert abs(quotient_rho(qm) - spectral_radius(cons.graph).rho) <= 1e-8

    def test_gna_matches_full_graph(self):
        for n, a in [(9, 2), (16, 3), (40, 5)]:
            cons = g_na(n, a)
            qm = quotient(cons.graph, cons.parts())
            assert abs(quotient_rho(qm) - spectral_radius(cons.graph).rho) <= 1e-8

    def test_two_by_two_exact(self):
        # star K_{1,8} partitioned hub/leaves: quotient [[0,8],[1,0]], rho = sqrt(8)
        g = star(9)
        qm = quotient(g, [1, g.full_mask ^ 1])
        assert abs(quotient_rho(qm) - math.sqrt(8)) <= 1e-12


class TestBookCubic:
    def test_coefficients_match_quotient_charpoly(self):
        # independent route: expand det(xI - R) from the actual quotient matrix
        for n, s, b in [(20, 1, 4), (26, 2, 5), (61, 3, 7), (199, 5, 9)]:
            cons = book_family(n, s, b)
            qm = quotient(cons.graph, cons.parts())
            assert isinstance(qm, QuotientMatrix)
            expected = charpoly_coefficients(qm.entries)
            poly, _, _ = book_charpoly(n, s, b)
            assert list(poly.coeffs) == expected

    def test_value_at_nb2(self):
        for n, s, b in [(20, 1, 4), (30, 2, 5), (100, 5, 9), (57, 3, 4)]:
            _, _, at_nb2 = book_charpoly(n, s, b)
            assert at_nb2 == -(b + 1) * s * s

    def test_value_at_nb1_s1(self):
        for n, b in [(20, 4), (40, 7), (203, 9)]:
            _, at_nb1, _ = book_charpoly(n, 1, b)
            assert at_nb1 == n * n - (2 * b + 1) * n + b * b - b - 2

    def test_value_at_nb1_general_s(self):
        for n, s, b in [(30, 2, 5), (60, 4, 6), (150, 5, 9)]:
            _, at_nb1, _ = book_charpoly(n, s, b)
            expected = (
                n * n - (2 * b + 1) * n - b * s * s + b * b - b * s - s * s + b - s
            )
            assert at_nb1 == expected

    def test_root_sum_is_trace(self):
        for n, s, b in [(20, 1, 4), (50, 3, 6)]:
            poly, _, _ = book_charpoly(n, s, b)
            assert -poly.coeffs[1] == n - b - 3


class TestEdgeRotation:
    def test_pendant_rotation_keeps_path_shape(self):
        # re-hang the pendant vertex 0 from vertex 1 onto the far endpoint 4:
        # the result is the path 1-2-3-4-0
        g = path(5)
        rotated = edge_rotation(g, 4, 1, {0})
        assert sorted(rotated.degrees()) == sorted(g.degrees())
        assert is_connected(rotated)
        assert rotated.has_edge(0, 4) and not rotated.has_edge(0, 1)

    def test_empty_moved_set_rejected(self):
        with pytest.raises(BadRotationError):
            edge_rotation(path(5), 4, 0, 0)

    def test_vi_in_moved_set_rejected(self):
        g = path(3)  # N(1) = {0, 2}
        with pytest.raises(BadRotationError):
            edge_rotation(g, 0, 1, {0})

    def test_moved_must_avoid_common_neighbors(self):
        g = complete(4)
        with pytest.raises(BadRotationError):
            edge_rotation(g, 0, 1, {2})  # 2 is adjacent to both

    def test_rho_increases_with_perron_ordering(self):
        rng = random.Random(14)
        done = 0
        while done < 60:
            g = random_connected(10, 0.35, rng)
            r = spectral_radius(g)
            vi, vj = None, None
            for cand_i in range(10):
                for cand_j in range(10):
                    if cand_i == cand_j:
                        continue
                    movable = g.adj[cand_j] & ~g.adj[cand_i] & ~(1 << cand_i)
                    if movable and r.perron[cand_i] >= r.perron[cand_j] + 1e-9:
                        vi, vj = cand_i, cand_j
                        break
                if vi is not None:
                    break
            if vi is None:
                continue
            movable = g.adj[vj] & ~g.adj[vi] & ~(1 << vi)
            rotated = edge_rotation(g, vi, vj, movable)
            assert spectral_radius(rotated).rho > r.rho + 1e-10
            done += 1


class TestSubgraphMonotonicity:
    def test_edge_deletion_strictly_decreases_rho(self):
        rng = random.Random(18)
        done = 0
        while done < 40:
            g = random_connected(9, 0.5, rng)
            edges = g.edges()
            rng.shuffle(edges)
            for u, v in edges:
                rows = list(g.adj)
                rows[u] &= ~(1 << v)
                rows[v] &= ~(1 << u)
                from factorlab.graph import Graph

                h = Graph(9, rows)
                if is_connected(h):
                    assert spectral_radius(h).rho < spectral_radius(g).rho - 1e-10
                    done += 1
                    break
