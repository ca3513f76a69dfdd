"""Exact optimum: BFS and coset search, their agreement, and the bound report."""

from fractions import Fraction

import pytest
from hypothesis import given, settings

from dollargame import (BudgetError, CapExceededError, GreedyFailedError,
                        InvalidNError, Move, MoveKind, PreconditionError,
                        apply_firing, bfs_min_moves, borrowing_binge,
                        build_graph, check_least_action, coset_min_moves,
                        dualize, firing_to_moves, greedy_stabilize,
                        hybrid_example, intro_example, is_coset_minimal,
                        is_effective, is_stable, minimal_norm, single_move,
                        star_example, verify_bound)

from conftest import graph_with_divisor


def edge():
    return build_graph(2, [(0, 1)])


def star_centered_at(idx, n, k):
    """Star with the hub moved off index 0, keeping leaves at k chips."""
    g = build_graph(n, [(idx, i) for i in range(n) if i != idx])
    divisor = tuple(-n * k if i == idx else k for i in range(n))
    return g, divisor


class TestBfs:
    def test_intro_effective_one_lend(self):
        inst = intro_example()
        res = bfs_min_moves(inst.graph, inst.divisor, "effective", 4)
        assert res.m_min == 1
        assert res.moves == (Move(4, MoveKind.LEND),)
        assert res.target == (0, 0, 2, 0, 0, 4)
        assert is_effective(res.target)

    def test_hybrid_stable_one_borrow_at_hub(self):
        inst = hybrid_example(4, 1)
        res = bfs_min_moves(inst.graph, inst.divisor, "stable", 2)
        assert res.m_min == 1
        assert res.moves == (Move(0, MoveKind.BORROW),)
        assert res.target == (0, -1, -1, 0, 0)

    def test_zero_moves_when_already_there(self):
        assert bfs_min_moves(edge(), (1, 1), "effective", 1).m_min == 0
        assert bfs_min_moves(edge(), (0, -1), "stable", 1).m_min == 0

    def test_unreachable_target_exhausts_cap(self):
        with pytest.raises(CapExceededError, match="3 moves"):
            bfs_min_moves(edge(), (-1, -1), "effective", 3)

    def test_single_vertex_has_no_stable_state(self):
        g = build_graph(1, [])
        with pytest.raises(CapExceededError):
            bfs_min_moves(g, (0,), "stable", 5)

    def test_bad_target_name(self):
        with pytest.raises(ValueError, match="winning"):
            bfs_min_moves(edge(), (0, 0), "winning", 1)

    def test_raising_cap_does_not_change_the_answer(self):
        inst = intro_example()
        a = bfs_min_moves(inst.graph, inst.divisor, "effective", 1)
        b = bfs_min_moves(inst.graph, inst.divisor, "effective", 6)
        assert a.m_min == b.m_min == 1 and a.moves == b.moves

    def test_effective_search_is_the_reflected_stable_search(self):
        inst = intro_example()
        g = inst.graph
        eff = bfs_min_moves(g, inst.divisor, "effective", 4)
        stab = bfs_min_moves(g, dualize(g, inst.divisor), "stable", 4)
        assert eff.m_min == stab.m_min
        assert [(m.vertex, m.kind) for m in stab.moves] == [
            (m.vertex, MoveKind.BORROW if m.kind is MoveKind.LEND else MoveKind.LEND)
            for m in eff.moves]
        assert dualize(g, stab.target) == eff.target

    def test_witness_replays_to_target(self):
        inst = intro_example()
        res = bfs_min_moves(inst.graph, inst.divisor, "effective", 4)
        c = inst.divisor
        for m in res.moves:
            c = single_move(inst.graph, c, m)
        assert c == res.target


class TestCosetSearch:
    def test_star_proves_greedy_suboptimal(self):
        inst = star_example(5, 2)
        res = coset_min_moves(inst.graph, inst.divisor)
        assert res.m_min == 2
        assert res.witness == (-2, 0, 0, 0, 0)
        assert res.base == (0, 2, 2, 2, 2)
        assert res.target == (-2, 0, 0, 0, 0)
        assert res.moves == (Move(0, MoveKind.BORROW), Move(0, MoveKind.BORROW))

    def test_off_center_star_matches_the_worked_example(self):
        g, divisor = star_centered_at(2, 5, 2)
        res = coset_min_moves(g, divisor)
        assert res.m_min == 2
        assert res.witness == (0, 0, -2, 0, 0)

    def test_hybrid_finds_the_hub_shortcut(self):
        inst = hybrid_example(8, 2)
        res = coset_min_moves(inst.graph, inst.divisor)
        assert res.m_min == 2
        assert res.witness == (-2, 0, 0, 0, 0, 0, 0, 0, 0)
        assert res.target == (0, -2, -2, -2, -2, 0, 0, 0, 0)
        assert res.target != res.base_final

    def test_stable_start_returns_zero(self):
        res = coset_min_moves(edge(), (0, -1))
        assert res.m_min == 0 and res.witness == (0, 0) and res.moves == ()

    def test_candidates_all_dominate_the_greedy_aggregate(self):
        inst = hybrid_example(6, 2)
        res = coset_min_moves(inst.graph, inst.divisor)
        assert res.candidates[0] == res.base
        for u in res.candidates:
            assert all(a >= b for a, b in zip(u, res.base))
            assert min(u) == 0
            assert is_stable(inst.graph, apply_firing(inst.graph, inst.divisor, u))

    def test_nonterminating_greedy_fails(self):
        with pytest.raises(GreedyFailedError):
            coset_min_moves(edge(), (1, 1))

    def test_budget_error_carries_the_incumbent(self):
        inst = hybrid_example(8, 2)
        with pytest.raises(BudgetError) as exc:
            coset_min_moves(inst.graph, inst.divisor, budget=10)
        assert exc.value.examined == 11
        assert exc.value.best_so_far >= 2

    def test_agrees_with_bfs_on_smaller_cases(self):
        for inst in [star_example(3, 1), star_example(4, 2), hybrid_example(4, 2),
                     hybrid_example(6, 1)]:
            trace = greedy_stabilize(inst.graph, inst.divisor, keep_states=False)
            res_b = bfs_min_moves(inst.graph, inst.divisor, "stable", trace.move_count)
            res_c = coset_min_moves(inst.graph, inst.divisor)
            assert res_b.m_min == res_c.m_min, inst.name

    def test_witness_norm_is_the_reported_optimum(self):
        inst = hybrid_example(8, 1)
        res = coset_min_moves(inst.graph, inst.divisor)
        assert sum(abs(x) for x in res.witness) == res.m_min
        assert minimal_norm(res.best) == res.m_min
        assert is_coset_minimal(res.witness)


class TestVerifyBound:
    def test_intro_report(self):
        inst = intro_example()
        rep = verify_bound(inst.graph, inst.divisor)
        assert rep.status == "ok" and rep.side == "dollar" and rep.method == "bfs"
        assert rep.m0 == 4 and rep.m_min == 1
        assert rep.bound_rational == Fraction(4, 5) and rep.bound_ceiling == 1
        assert rep.holds and not rep.tight
        assert rep.witness_moves == (Move(4, MoveKind.LEND),)
        assert rep.witness_target == (0, 0, 2, 0, 0, 4)

    def test_intro_report_serializes(self):
        inst = intro_example()
        d = verify_bound(inst.graph, inst.divisor).to_dict()
        assert d["bound_rational"] == {"num": 4, "den": 5}
        assert d["witness_moves"] == [{"vertex": 4, "kind": "lend"}]
        assert d["witness"] is None

    def test_star_chip_side_is_tight(self):
        inst = star_example(5, 2)
        rep = verify_bound(inst.graph, inst.divisor, side="chip")
        assert rep.m0 == 8 and rep.m_min == 2
        assert rep.bound_rational == Fraction(2) and rep.tight and rep.holds

    def test_auto_switches_to_coset_for_long_greedy_runs(self):
        inst = star_example(8, 4)
        rep = verify_bound(inst.graph, inst.divisor, side="chip")
        assert rep.method == "coset"
        assert rep.m0 == 28 and rep.m_min == 4 and rep.tight

    def test_methods_agree_on_the_dual_side(self):
        inst = intro_example()
        a = verify_bound(inst.graph, inst.divisor, method="bfs")
        b = verify_bound(inst.graph, inst.divisor, method="coset")
        assert a.m_min == b.m_min == 1
        assert b.witness_target is not None and is_effective(b.witness_target)
        c = inst.divisor
        for m in b.witness_moves:
            c = single_move(inst.graph, c, m)
        assert c == b.witness_target

    def test_unwinnable_report(self):
        rep = verify_bound(edge(), (-1, -1))
        assert rep.status == "unwinnable" and rep.m0 is None
        assert rep.witness == (-1, -1)
        assert rep.to_dict()["witness"] == [-1, -1]

    def test_chip_side_unwinnable_report(self):
        rep = verify_bound(edge(), (1, 1), side="chip")
        assert rep.status == "unwinnable" and rep.witness == (1, 1)

    def test_argument_validation(self):
        with pytest.raises(ValueError, match="side"):
            verify_bound(edge(), (0, 0), side="both")
        with pytest.raises(ValueError, match="method"):
            verify_bound(edge(), (0, 0), method="dfs")
        with pytest.raises(InvalidNError):
            verify_bound(build_graph(1, []), (0,))

    def test_witness_length_always_matches_m_min(self):
        inst = hybrid_example(6, 2)
        for method in ("bfs", "coset"):
            rep = verify_bound(inst.graph, inst.divisor, side="chip", method=method)
            assert len(rep.witness_moves) == rep.m_min == 2
            assert is_stable(inst.graph, rep.witness_target)


class TestLeastAction:
    def test_greedy_aggregate_passes(self):
        g = intro_example().graph
        c = (4, 2, 0, 2, -1, -1)
        assert check_least_action(g, c, (1, 1, 1, 1, 0, 0))

    def test_padded_stabilizing_vector_passes(self):
        g = intro_example().graph
        c = (4, 2, 0, 2, -1, -1)
        v1 = (2, 2, 2, 2, 1, 1)  # aggregate plus the all-ones kernel vector
        assert check_least_action(g, c, v1)

    def test_negative_entries_rejected(self):
        g = intro_example().graph
        with pytest.raises(PreconditionError, match="nonnegative"):
            check_least_action(g, (4, 2, 0, 2, -1, -1), (1, 1, 1, 1, 0, -1))

    def test_unstable_endpoint_rejected(self):
        g = intro_example().graph
        with pytest.raises(PreconditionError, match="not stable"):
            check_least_action(g, (4, 2, 0, 2, -1, -1), (0, 0, 0, 0, 0, 0))

    def test_nonterminating_instance_has_no_valid_input(self):
        # on (1,1) no firing vector stabilizes (total stays positive on an
        # edge), so the endpoint precondition always fires
        with pytest.raises(PreconditionError):
            check_least_action(edge(), (1, 1), (1, 0))

    @settings(max_examples=30, deadline=None)
    @given(graph_with_divisor(max_n=5, lo=-3, hi=3))
    def test_bfs_witness_normalizations_obey_least_action(self, gc):
        g, c = gc
        dual = dualize(g, c)
        trace = greedy_stabilize(g, dual, max_steps=20000, keep_states=False)
        if trace.status != "stable":
            return
        res = bfs_min_moves(g, dual, "stable", max(trace.move_count, 1))
        agg = [0] * g.num_vertices
        for m in res.moves:
            agg[m.vertex] += 1 if m.kind is MoveKind.LEND else -1
        shift = min(agg)
        normalized = tuple(x - shift for x in agg)
        assert check_least_action(g, dual, normalized, max_steps=20000)
