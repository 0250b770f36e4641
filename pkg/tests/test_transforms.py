from fractions import Fraction
from itertools import permutations

import pytest

from cenet import catalog
from cenet.core import Fused2, Link, Network, decompose, run
from cenet.engine import LimitExceeded, exhaustive_stats, verify_sorts
from cenet.transforms import deoffend, fuse, minimize_max_swaps, pre_exchange

F = Fraction


def net(order, *elements):
    return Network(order, tuple(elements))


def all_link_catalog_networks(max_order=8):
    """Catalog networks as plain-link sequences (fused ones decomposed)."""
    out = []
    for name in catalog.names():
        entry = catalog.get(name)
        if entry.network is None or entry.network.order > max_order:
            continue
        out.append((name, decompose(entry.network)))
    return out


class TestPreExchange:
    def test_rewrites_bubble_sorter(self):
        assert pre_exchange(catalog.get("fig1a").network, 1) == catalog.get("fig2a").network

    def test_rewrites_symmetric_sorter(self):
        assert pre_exchange(catalog.get("fig1b").network, 2) == catalog.get("fig2b").network

    def test_rewrites_classic_four_sorter(self):
        knuth44 = catalog.get("knuth44").network
        result = pre_exchange(knuth44, 4)
        assert result == catalog.get("fig11a").network
        before = exhaustive_stats(knuth44).element_probs[4].slots[0]
        after = exhaustive_stats(result).element_probs[4].slots[0]
        assert (before, after) == (F(2, 3), F(1, 3))

    def test_reaches_reduced_worst_case_sorter(self):
        assert pre_exchange(catalog.get("fig11a").network, 2) == catalog.get("fig12").network

    def test_rejects_fused_networks_and_bad_targets(self):
        with pytest.raises(ValueError, match="all-link"):
            pre_exchange(catalog.get("fig3").network, 0)
        with pytest.raises(ValueError, match="out of range"):
            pre_exchange(catalog.get("fig1a").network, 3)

    def test_involution_flip_and_preservation(self):
        for name, network in all_link_catalog_networks():
            report = exhaustive_stats(network)
            sorts = verify_sorts(network)
            degrees = sorted(w for e in network.elements for w in e.endpoints)
            for target in range(len(network.elements)):
                rewritten = pre_exchange(network, target)
                assert pre_exchange(rewritten, target) == network
                assert rewritten.link_count == network.link_count
                assert sorted(w for e in rewritten.elements for w in e.endpoints) == degrees
                flipped = exhaustive_stats(rewritten)
                assert flipped.element_probs[target].slots[0] == (
                    1 - report.element_probs[target].slots[0]
                )
                assert verify_sorts(rewritten) == sorts


class TestDeoffend:
    def test_bubble_sorter_becomes_guarded_form(self):
        assert deoffend(catalog.get("fig1a").network) == catalog.get("fig2a").network

    def test_fixed_point(self):
        fig2a = catalog.get("fig2a").network
        assert deoffend(fig2a) == fig2a

    def test_empty_network(self):
        empty = net(3)
        assert deoffend(empty) == empty

    def test_no_link_biased_past_half_afterwards(self):
        for name, network in all_link_catalog_networks(max_order=6):
            calmed = deoffend(network)
            report = exhaustive_stats(calmed)
            assert all(ep.slots[0] <= F(1, 2) for ep in report.element_probs)
            assert verify_sorts(calmed) == verify_sorts(network)


class TestFuse:
    def test_guarded_pair_fuses(self):
        assert fuse(catalog.get("fig2a").network).elements == (
            Link(1, 3),
            Fused2(1, 2, 3),
        )

    def test_reversed_guarded_pair_fuses(self):
        # (23)(12) chain through wire 2 just like (12)(23)
        assert fuse(catalog.get("fig2b").network).elements == (
            Link(1, 3),
            Fused2(1, 2, 3),
        )

    def test_unguarded_pair_left_alone(self):
        network = net(3, Link(1, 2), Link(2, 3))
        assert fuse(network) == network

    def test_disjoint_elements_left_alone(self):
        network = net(4, Link(1, 2), Link(3, 4))
        assert fuse(network) == network

    def test_pair_separated_by_disjoint_element(self):
        # the in-between (5,6) blocks nothing: it is wire-disjoint from (2,3)
        network = net(6, Link(1, 3), Link(1, 2), Link(5, 6), Link(2, 3))
        fused = fuse(network)
        assert fused.elements == (Link(1, 3), Fused2(1, 2, 3), Link(5, 6))
        for p in permutations(range(1, 7)):
            assert run(network, p).output == run(fused, p).output

    def test_function_and_statistics_preserved(self):
        for name, network in all_link_catalog_networks(max_order=6):
            fused = fuse(network)
            before, after = exhaustive_stats(network), exhaustive_stats(fused)
            assert after.avg_swaps == before.avg_swaps
            assert after.max_swaps == before.max_swaps
            assert dict(after.histogram) == dict(before.histogram)
            assert after.avg_comparisons <= before.avg_comparisons
            for p in permutations(range(1, network.order + 1)):
                assert run(network, p).output == run(fused, p).output


class TestMinimizeMaxSwaps:
    def test_finds_reduced_worst_case_four_sorter(self):
        result = minimize_max_swaps(catalog.get("fig11a").network, budget=200)
        assert result.network == catalog.get("fig12").network
        assert result.max_swaps == 4
        assert result.avg_swaps == F(7, 3)
        assert not result.budget_exhausted

    def test_fixed_point(self):
        fig12 = catalog.get("fig12").network
        result = minimize_max_swaps(fig12, budget=200)
        assert result.network == fig12
        assert result.max_swaps == 4

    def test_six_sorter_reaches_eight(self):
        flat = decompose(catalog.get("sort6-fig15").network)
        assert exhaustive_stats(flat).max_swaps == 9
        result = minimize_max_swaps(flat, budget=500)
        assert result.max_swaps == 8
        assert result.avg_swaps == F(139, 30)
        assert verify_sorts(result.network)
        assert not result.budget_exhausted

    def test_budget_exhaustion_flagged(self):
        result = minimize_max_swaps(catalog.get("fig11a").network, budget=2)
        assert result.budget_exhausted
        assert result.explored == 2
        assert result.max_swaps <= 5

    def test_never_worse_than_input(self):
        for name, network in all_link_catalog_networks(max_order=6):
            start = exhaustive_stats(network).max_swaps
            assert minimize_max_swaps(network, budget=150).max_swaps <= start

    def test_order_cap(self):
        with pytest.raises(LimitExceeded, match="cap 8"):
            minimize_max_swaps(decompose(catalog.get("median9-old-mmm").network))
