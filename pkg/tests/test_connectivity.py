import random

import pytest

from cubicmatch.connectivity import (
    NO_CYCLIC_CUT,
    bridges,
    connectivity_report,
    cyclic_edge_connectivity,
    cyclically_edge_connected_at_least,
    edge_connectivity,
    enumerate_cuts,
    is_cyclic_cut,
    vertex_connectivity_at_most,
)
from cubicmatch.multigraph import from_edge_list, make_cut
from cubicmatch.named_graphs import (
    doubled_c4,
    exceptional_graph,
    k4,
    k33,
    petersen,
    prism,
    three_bond,
)
from conftest import random_bridgeless_cubic


def bridged_gadget():
    # two bigon-triangle gadgets joined by a single edge
    return from_edge_list(
        6, [(0, 1), (0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (3, 5), (4, 5), (4, 5)]
    )


def cyclic_connectivity_oracle(g):
    """Direct enumeration over all 2^(n-1) bipartitions."""
    n = g.vertex_count
    best = None
    for bits in range(1, 1 << (n - 1)):
        side = {0} | {v for v in range(1, n) if (bits >> (v - 1)) & 1}
        if len(side) == n:
            continue
        cut = make_cut(g, side)
        if is_cyclic_cut(g, cut) and (best is None or cut.size < best):
            best = cut.size
    return NO_CYCLIC_CUT if best is None else best


class TestBridges:
    def test_k4_none(self):
        assert bridges(k4()) == []

    def test_single_joining_edge(self):
        g = bridged_gadget()
        assert bridges(g) == [4]
        assert g.edges[4] == (2, 3)

    def test_petersen_none(self):
        assert bridges(petersen()) == []

    def test_parallel_edges_never_bridges(self):
        g = from_edge_list(4, [(0, 1), (0, 1), (1, 2), (2, 3), (2, 3)])
        assert bridges(g) == [2]


class TestCyclicCuts:
    def test_vertex_star_not_cyclic(self):
        g = petersen()
        assert not is_cyclic_cut(g, make_cut(g, {0}))

    def test_prism_triangle_cut_cyclic(self):
        g = prism()
        assert is_cyclic_cut(g, make_cut(g, {0, 1, 2}))

    def test_bigon_counts_as_cycle(self):
        g = doubled_c4()
        assert is_cyclic_cut(g, make_cut(g, {0, 1}))

    def test_min_degree_three_observation(self):
        # in a min-degree-3 graph, a k-cut with both sides >= k-1 vertices
        # is cyclic
        rnd = random.Random(23)
        for _ in range(20):
            g = random_bridgeless_cubic(10, rnd)
            for _ in range(20):
                side = rnd.sample(range(10), rnd.randrange(2, 9))
                cut = make_cut(g, side)
                k = cut.size
                if len(cut.side_a) >= k - 1 and len(cut.side_b) >= k - 1:
                    assert is_cyclic_cut(g, cut)


class TestCyclicEdgeConnectivity:
    def test_named_values(self):
        assert cyclic_edge_connectivity(petersen()) == 5
        assert cyclic_edge_connectivity(prism()) == 3
        assert cyclic_edge_connectivity(k4()) is NO_CYCLIC_CUT
        assert cyclic_edge_connectivity(k33()) is NO_CYCLIC_CUT
        assert cyclic_edge_connectivity(three_bond()) is NO_CYCLIC_CUT
        assert cyclic_edge_connectivity(exceptional_graph()) == 3

    def test_sentinel_treated_as_large(self):
        assert cyclically_edge_connected_at_least(k4(), 5)
        assert not cyclically_edge_connected_at_least(prism(), 4)

    def test_preconditions(self):
        with pytest.raises(ValueError):
            cyclic_edge_connectivity(from_edge_list(3, [(0, 1), (1, 2)]))

    def test_agrees_with_bipartition_oracle(self):
        rnd = random.Random(31)
        graphs = [k4(), prism(), petersen(), doubled_c4(), k33()]
        graphs += [random_bridgeless_cubic(8, rnd) for _ in range(10)]
        graphs += [random_bridgeless_cubic(10, rnd) for _ in range(10)]
        for g in graphs:
            assert cyclic_edge_connectivity(g) == cyclic_connectivity_oracle(g)


class TestEnumerateCuts:
    def test_k4_single_vertex_cuts_only(self):
        cuts = enumerate_cuts(k4(), 3)
        assert len(cuts) == 4
        assert all(c.size == 3 for c in cuts)
        assert all(min(len(c.side_a), len(c.side_b)) == 1 for c in cuts)

    def test_petersen_no_nontrivial_small_cuts(self):
        assert enumerate_cuts(petersen(), 3, nontrivial_only=True) == []

    def test_exceptional_triangle_cuts(self):
        g = exceptional_graph()
        cuts = enumerate_cuts(g, 3, nontrivial_only=True)
        triangle_sides = [
            c for c in cuts
            if min(len(c.side_a), len(c.side_b)) == 3 and c.size == 3
        ]
        assert len(triangle_sides) == 3

    def test_one_representative_per_bipartition(self):
        for g in (k4(), prism(), petersen()):
            cuts = enumerate_cuts(g, 4)
            seen = set()
            for c in cuts:
                key = frozenset((c.side_a, c.side_b))
                assert key not in seen
                seen.add(key)
                assert 0 in c.side_a

    def test_matches_bipartition_scan(self):
        # no cut of size <= 4 is missed, including disconnected sides
        rnd = random.Random(7)
        for g in [prism(), doubled_c4()] + [random_bridgeless_cubic(8, rnd) for _ in range(8)]:
            n = g.vertex_count
            expected = set()
            for bits in range(1 << (n - 1)):
                side = frozenset({0} | {v for v in range(1, n) if (bits >> (v - 1)) & 1})
                if len(side) == n:
                    continue
                cut = make_cut(g, side)
                if cut.size <= 4:
                    expected.add(side)
            got = {c.side_a for c in enumerate_cuts(g, 4)}
            assert got == expected


class TestVertexConnectivity:
    def test_k4(self):
        assert not vertex_connectivity_at_most(k4(), 2)

    def test_petersen(self):
        assert not vertex_connectivity_at_most(petersen(), 2)

    def test_witness(self):
        g = bridged_gadget()
        w = vertex_connectivity_at_most(g, 1)
        assert w and w.vertices in ({2}, {3})

    def test_k_above_three_rejected(self):
        with pytest.raises(ValueError):
            vertex_connectivity_at_most(k4(), 4)


class TestReport:
    def test_petersen_report(self):
        rep = connectivity_report(petersen())
        assert rep.connected and rep.bridge_count == 0
        assert rep.edge_connectivity == 3
        assert rep.vertex_connectivity == 3
        assert rep.cyclic_edge_connectivity == 5

    def test_edge_connectivity_le_min_degree(self):
        rnd = random.Random(41)
        for _ in range(10):
            g = random_bridgeless_cubic(8, rnd)
            assert edge_connectivity(g) <= 3
