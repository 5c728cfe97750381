"""Verification harness: corpora, recognizer, sweeps, survey, grids."""

import random

import pytest

from factorlab import (
    FactorLabError,
    ParityParams,
    SamplerExhaustedError,
    bundled_connected_graphs,
    complete,
    decide_by_criterion,
    from_edges,
    from_graph6,
    g_na,
    grid_bound_monotonicity,
    grid_book_spectral_bound,
    grid_clique_merge_dominance,
    grid_degree_size_bound,
    grid_gna_no_factor,
    grid_parity_evenness,
    is_connected,
    min_degree,
    recognize_gna,
    relabel,
    sample_connected_min_degree,
    survey_theorem,
    sweep_oracle_equivalence,
    to_graph6,
)
from factorlab.harness import sample_regular

CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}


class TestBundledCorpora:
    def test_counts_match_published_values(self):
        for n, expected in CONNECTED_COUNTS.items():
            graphs = bundled_connected_graphs(n)
            assert len(graphs) == expected

    def test_entries_are_connected_with_right_order(self):
        for n in (4, 6):
            for g in bundled_connected_graphs(n):
                assert g.n == n
                assert is_connected(g)

    def test_no_duplicate_lines(self):
        for n in (5, 7):
            lines = [to_graph6(g) for g in bundled_connected_graphs(n)]
            assert len(set(lines)) == len(lines)

    def test_out_of_range(self):
        with pytest.raises(FactorLabError):
            bundled_connected_graphs(9)


class TestRecognizeGna:
    def test_recognizes_shuffled_copy(self):
        rng = random.Random(41)
        for n, a in [(15, 3), (12, 2), (18, 4), (2 * 5 + 3, 5)]:
            g = g_na(n, a).graph
            perm = list(range(n))
            rng.shuffle(perm)
            shuffled = relabel(g, perm)
            match = recognize_gna(shuffled, a)
            assert match.is_gna
            # remapping blocks through the constructor reproduces the graph
            blocks = match.blocks
            order = []
            from factorlab import vertices_of

            for name in ("clique_small", "clique_big", "indep", "w"):
                order.extend(vertices_of(blocks[name]))
            back = [0] * n
            for new, old in enumerate(order):
                back[old] = new
            assert relabel(shuffled, back) == g_na(n, a).graph

    def test_boundary_small_n(self):
        # smallest legal order and the degree-collision order both recognize
        for a in (2, 3):
            for n in (2 * a + 3, 2 * a + 4):
                assert recognize_gna(g_na(n, a).graph, a).is_gna

    def test_extra_edge_breaks_it(self):
        cons = g_na(15, 3)
        g = cons.graph
        for u in range(g.n):
            v = next((x for x in range(u + 1, g.n) if not g.has_edge(u, x)), None)
            if v is not None:
                rows = list(g.adj)
                rows[u] |= 1 << v
                rows[v] |= 1 << u
                from factorlab.graph import Graph

                assert not recognize_gna(Graph(g.n, rows), 3).is_gna
                break

    def test_wrong_family_members(self):
        assert not recognize_gna(complete(15), 3).is_gna
        assert not recognize_gna(g_na(15, 3).graph, 4).is_gna
        from factorlab import cycle

        assert not recognize_gna(cycle(12), 2).is_gna


class TestOracleSweep:
    def test_tiny_corpus_no_disagreements(self):
        graphs = [g for n in range(1, 6) for g in bundled_connected_graphs(n)]
        pairs = [ParityParams(*ab) for ab in ((1, 1), (1, 3), (2, 2), (2, 4), (3, 3), (3, 5))]
        report = sweep_oracle_equivalence(graphs, pairs)
        assert report.all_pass
        ok_rows = [r for r in report.rows if r[4] == "ok"]
        skipped = [r for r in report.rows if r[4] == "skipped_parity"]
        assert ok_rows and skipped  # odd orders skip odd-a pairs

    def test_gna_row_shows_no_factor_on_both_routes(self):
        cons = g_na(11, 2)
        report = sweep_oracle_equivalence([cons.graph], [ParityParams(2, 4)])
        (row,) = report.rows
        assert row[4] == "ok" and row[5] is True
        assert row[6] is False and row[7] is False  # criterion, search agree: no factor

    def test_parallel_matches_serial(self):
        graphs = bundled_connected_graphs(6)[:40]
        pairs = [ParityParams(2, 2), ParityParams(1, 3)]
        serial = sweep_oracle_equivalence(graphs, pairs, jobs=1)
        parallel = sweep_oracle_equivalence(graphs, pairs, jobs=2)
        assert serial.rows == parallel.rows


class TestSampler:
    def test_deterministic_per_seed(self):
        g1 = sample_connected_min_degree(10, 2, random.Random("7:3"))
        g2 = sample_connected_min_degree(10, 2, random.Random("7:3"))
        assert g1 == g2

    def test_meets_constraints(self):
        rng = random.Random(100)
        for _ in range(20):
            g = sample_connected_min_degree(12, 3, rng)
            assert is_connected(g) and min_degree(g) >= 3

    def test_exhaustion(self):
        with pytest.raises(SamplerExhaustedError):
            sample_connected_min_degree(4, 9, random.Random(0), max_tries=20)

    def test_regular_sampler(self):
        rng = random.Random(5)
        for n, d in [(8, 3), (11, 4), (14, 5)]:
            g = sample_regular(n, d, rng)
            assert g.degrees() == [d] * n
        with pytest.raises(SamplerExhaustedError):
            sample_regular(5, 3, rng)  # n*d odd


class TestSurvey:
    def test_deterministic_report(self):
        r1 = survey_theorem(n=11, a=2, b=4, samples=8, seed=5)
        r2 = survey_theorem(n=11, a=2, b=4, samples=8, seed=5)
        assert r1.render() == r2.render()

    def test_extremal_graph_is_record_zero(self):
        report = survey_theorem(n=12, a=2, b=4, samples=5, seed=3)
        first = report.records[0]
        assert first.index == 0
        assert not first.has_factor
        assert first.min_deg == 2
        assert first.is_gna
        assert first.classification == "boundary"  # rho equals rho_extremal exactly

    def test_rho_extremal_exceeds_clique_floor(self):
        report = survey_theorem(n=13, a=2, b=4, samples=3, seed=2)
        assert report.rho_extremal > 13 - 2 - 3

    def test_records_reverify(self):
        report = survey_theorem(n=12, a=2, b=4, samples=6, seed=11)
        for record in report.records:
            g = from_graph6(record.graph6)
            verdict = decide_by_criterion(g, ParityParams(2, 4))
            assert verdict.exists == record.has_factor

    def test_hypothesis_metadata(self):
        report = survey_theorem(n=12, a=2, b=4, samples=1, seed=1)
        assert report.hypothesis_n_min == max(2 * 4 + 272 + 264, 2 * 16 + 40 + 28 + 34)
        assert report.hypothesis_n_min_alt < report.hypothesis_n_min
        assert f"hypothesis_n_min={report.hypothesis_n_min}" in report.render()


class TestGrids:
    def test_gna_no_factor_small(self):
        report = grid_gna_no_factor(a_values=(2, 3), n_max=20, decide_max=12)
        assert report.all_pass
        assert all(row[3] == -2 and row[4] == 2 for row in report.rows)

    def test_book_bound_small(self):
        report = grid_book_spectral_bound(s_values=(1, 2), b_values=(4, 5), n_max=40)
        assert report.all_pass

    def test_merge_dominance_small(self):
        report = grid_clique_merge_dominance(n_max=10, s_max=2, q_max=3)
        assert report.all_pass

    def test_degree_size_bound_small(self):
        report = grid_degree_size_bound(samples=150, regular_samples=25, seed=3)
        assert report.all_pass

    def test_monotonicity_small(self):
        report = grid_bound_monotonicity(samples=60, seed=4)
        assert report.all_pass

    def test_parity_evenness_small(self):
        report = grid_parity_evenness(trials=3000, seed=6)
        assert report.all_pass

    def test_csv_shape(self):
        report = grid_gna_no_factor(a_values=(2,), n_max=12, decide_max=10)
        csv = report.to_csv()
        lines = csv.strip().split("\n")
        assert lines[0] == "a,b,n,eta,q,criterion_no_factor,search_no_factor,pass"
        assert len(lines) == len(report.rows) + 1

    def test_lemma_grid_dispatch(self):
        from factorlab import lemma_grid

        report = lemma_grid("eq1", trials=500, seed=1)
        assert report.suite == "eq1" and report.all_pass
        report = lemma_grid("lemma2.8", a_values=(2,), n_max=12, decide_max=10)
        assert report.suite == "lemma2.8"
        with pytest.raises(FactorLabError):
            lemma_grid("lemma9.9")
