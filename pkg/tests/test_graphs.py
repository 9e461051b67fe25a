import pytest

from admseq.errors import (
    AcyclicityError,
    FilterViolationError,
    IndecomposabilityError,
    InvalidCartanError,
)
from admseq.graphs import (
    Graph,
    Quiver,
    acyclic_orientations,
    graph_from_cartan,
    quiver_from_arrows,
    quiver_from_dict,
)


A3_CARTAN = [[2, -1, 0], [-1, 2, -1], [0, -1, 2]]


class TestGraphFromCartan:
    def test_a3_path(self):
        g = graph_from_cartan(A3_CARTAN)
        assert g.n == 3
        assert g.edges == ((1, 2), (2, 3))

    def test_double_edge(self):
        g = graph_from_cartan([[2, -2], [-2, 2]])
        assert g.edge_mult(1, 2) == 2

    def test_block_diagonal_rejected(self):
        with pytest.raises(IndecomposabilityError):
            graph_from_cartan([[2, 0], [0, 2]])

    @pytest.mark.parametrize(
        "bad",
        [
            [[2, -1], [-2, 2]],  # not symmetric
            [[1, -1], [-1, 2]],  # wrong diagonal
            [[2, 1], [1, 2]],  # positive off-diagonal
        ],
    )
    def test_invalid_cartan(self, bad):
        with pytest.raises(InvalidCartanError):
            graph_from_cartan(bad)

    def test_round_trip_small(self):
        mats = [
            A3_CARTAN,
            [[2, -2], [-2, 2]],
            [[2, -1, -1], [-1, 2, -1], [-1, -1, 2]],
            [[2, -1, 0, 0], [-1, 2, -1, 0], [0, -1, 2, -1], [0, 0, -1, 2]],
            [[2, -3], [-3, 2]],
        ]
        for a in mats:
            g = graph_from_cartan(a)
            assert list(map(list, g.cartan())) == a


class TestQuiver:
    def test_fixtures(self, q3, qk):
        assert q3.arrows == ((1, 2), (2, 3))
        assert qk.arrows == ((1, 2), (1, 2))

    def test_two_cycle_rejected(self):
        with pytest.raises(AcyclicityError):
            quiver_from_arrows(2, [(1, 2), (2, 1)])

    def test_arrow_multiplicity_must_match_graph(self):
        g = graph_from_cartan([[2, -2], [-2, 2]])
        with pytest.raises(InvalidCartanError):
            Quiver(g, [(1, 2)])

    def test_sinks(self, q3, qk):
        assert q3.sinks() == {3}
        assert qk.sinks() == {2}
        assert q3.reflect(3).sinks() == {2}

    def test_reflect(self, q3, qk):
        assert q3.reflect(3).arrows == ((1, 2), (3, 2))
        assert q3.reflect(3).reflect(2).arrows == ((2, 1), (2, 3))
        assert qk.reflect(2).arrows == ((2, 1), (2, 1))

    def test_reflect_involutive(self, q3, qk):
        for q in (q3, qk):
            for x in q.vertices():
                try:
                    assert q.reflect(x).reflect(x) == q
                except AcyclicityError:
                    pass

    def test_reflect_interior_cycle(self):
        # reflecting at the middle of 1 -> 2 -> 3 with a chord 1 -> 3
        q = quiver_from_arrows(3, [(1, 2), (2, 3), (1, 3)])
        with pytest.raises(AcyclicityError):
            q.reflect(2)

    def test_poset(self, q3):
        assert q3.leq(1, 3)
        assert not q3.leq(3, 1)
        assert q3.leq(2, 2)

    def test_is_filter(self, q3):
        assert q3.is_filter({2, 3})
        assert not q3.is_filter({2})
        assert q3.is_filter(set())

    def test_principal_filter(self, q3, qk):
        assert q3.principal_filter(3) == {3}
        assert q3.principal_filter(1) == {1, 2, 3}
        assert qk.principal_filter(1) == {1, 2}

    def test_hull(self, q3):
        assert q3.hull({3}) == {2, 3}
        assert q3.hull({2, 3}) == {1, 2, 3}
        assert q3.hull(set()) == set()

    def test_hull_rejects_non_filter(self, q3):
        with pytest.raises(FilterViolationError):
            q3.hull({1})

    def test_quiver_from_dict_cartan_consistency(self):
        q = quiver_from_dict({"cartan": [[2, -2], [-2, 2]], "arrows": [[1, 2], [1, 2]]})
        assert q.arrows == ((1, 2), (1, 2))
        with pytest.raises(InvalidCartanError):
            quiver_from_dict({"cartan": [[2, -2], [-2, 2]], "arrows": [[1, 2]]})


class TestSmallExhaustive:
    def test_sinks_are_maximal_elements(self, a4_graph, triangle_graph, q3, qk):
        quivers = list(acyclic_orientations(a4_graph))
        quivers += list(acyclic_orientations(triangle_graph))
        quivers += [q3, qk]
        for q in quivers:
            maximal = {
                v
                for v in q.vertices()
                if all(u == v or not q.leq(v, u) for u in q.vertices())
            }
            assert q.sinks() == maximal

    def test_reflect_at_sink_only_touches_incident_arrows(self, a4_orientations):
        for q in a4_orientations:
            for x in q.sinks():
                r = q.reflect(x)
                assert r.is_source(x)
                for a, b in zip(q.arrows, r.arrows):
                    if x in a:
                        assert b == (a[1], a[0])
                    else:
                        assert b == a

    def test_hull_properties(self, q3, qk):
        for q in (q3, qk):
            filters = q.all_filters()
            for f in filters:
                h = q.hull(f)
                assert f <= h
                assert q.is_filter(h)
                assert q.hull(h) >= h
            for f1 in filters:
                for f2 in filters:
                    assert q.hull(f1 | f2) == q.hull(f1) | q.hull(f2)
                    assert q.hull(f1 & f2) <= q.hull(f1) & q.hull(f2)

    def test_hull_monotone(self, q3):
        filters = q3.all_filters()
        for f1 in filters:
            for f2 in filters:
                if f1 <= f2:
                    assert q3.hull(f1) <= q3.hull(f2)
