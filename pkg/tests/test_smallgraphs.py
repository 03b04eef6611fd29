from math import comb

import pytest

from permrec.errors import CapacityError
from permrec.formulas import hamming_max_overlap, johnson_max_overlap
from permrec.smallgraphs import (
    SmallGraph,
    complete_multipartite_graph,
    graph_from_edges,
    hamming_graph,
    johnson_graph,
    lattice_graph,
    parse_edge_list,
    small_graph_is_distance_regular,
    small_graph_report,
    triangular_graph,
)


class TestBuilders:
    def test_hamming_shape(self):
        g = hamming_graph(3, 2)  # the 3-cube
        assert g.v == 8
        assert g.valency == 3

    def test_lattice_is_strongly_regular(self):
        for q in (2, 3, 4):
            report = small_graph_report(lattice_graph(q), 1)
            assert (report.v, report.k) == (q * q, 2 * (q - 1))
            assert (report.lam, report.mu) == (max(q - 2, 0), 2)

    def test_triangular_is_strongly_regular(self):
        for n in (4, 5, 6):
            report = small_graph_report(triangular_graph(n), 1)
            assert (report.v, report.k) == (comb(n, 2), 2 * (n - 2))
            assert (report.lam, report.mu) == (n - 2, 4)

    def test_johnson_valency(self):
        g = johnson_graph(6, 3)
        assert g.v == 20
        assert g.valency == 9

    def test_multipartite_parameters(self):
        for t in (2, 3):
            for m in (2, 3):
                report = small_graph_report(complete_multipartite_graph(t, m), 1)
                assert report.v == t * m
                assert report.k == (t - 1) * m
                assert report.lam == (t - 2) * m
                assert report.mu == (t - 1) * m

    def test_bad_parameters(self):
        with pytest.raises(ValueError):
            johnson_graph(4, 0)
        with pytest.raises(ValueError):
            hamming_graph(2, 1)
        with pytest.raises(ValueError):
            complete_multipartite_graph(1, 3)

    def test_capacity(self):
        with pytest.raises(CapacityError):
            hamming_graph(12, 3)


class TestEdgeList:
    def test_square(self):
        g = parse_edge_list("0 1\n1 2\n2 3\n3 0\n")
        assert g.v == 4
        assert g.valency == 2

    def test_comments_and_blanks(self):
        g = parse_edge_list("# a square\n0 1\n\n1 2\n2 3 # wrap\n3 0\n")
        assert g.v == 4

    @pytest.mark.parametrize("bad", ["", "0\n", "0 1 2\n", "0 a\n", "-1 0\n", "1 1\n"])
    def test_rejects(self, bad):
        with pytest.raises(ValueError):
            parse_edge_list(bad)

    def test_validation_catches_asymmetry(self):
        with pytest.raises(ValueError):
            SmallGraph("broken", (frozenset({1}), frozenset()))


class TestReport:
    def test_square_profile(self):
        report = small_graph_report(parse_edge_list("0 1\n1 2\n2 3\n3 0\n"), 2)
        assert report.n_value(1) == 2
        assert report.n_value(2) == 4
        assert report.diameter == 2
        assert (report.lam, report.mu) == (0, 2)

    def test_disconnected_rejected(self):
        g = graph_from_edges("two-edges", 4, [(0, 1), (2, 3)])
        with pytest.raises(ValueError):
            small_graph_report(g, 1)

    @pytest.mark.parametrize("n,q", [(2, 2), (2, 3), (3, 2)])
    @pytest.mark.parametrize("r", [1, 2])
    def test_hamming_matches_closed_form(self, n, q, r):
        report = small_graph_report(hamming_graph(n, q), r)
        assert report.n_value(r) == hamming_max_overlap(n, q, r)

    @pytest.mark.parametrize("n,e", [(4, 2), (5, 2), (6, 3)])
    @pytest.mark.parametrize("r", [1, 2])
    def test_johnson_matches_closed_form(self, n, e, r):
        report = small_graph_report(johnson_graph(n, e), r)
        assert report.n_value(r) == johnson_max_overlap(n, e, r)

    def test_multipartite_attains_upper_bound(self):
        report = small_graph_report(complete_multipartite_graph(3, 2), 1)
        assert report.n_value(1) == (report.v + report.lam) // 2

    def test_absent_sphere_reported_none(self):
        report = small_graph_report(parse_edge_list("0 1\n1 2\n2 3\n3 0\n"), 2)
        per_s = {sm.s: sm.value for sm in report.final.per_s}
        assert per_s[3] is None and per_s[4] is None  # diameter 2

    def test_witnesses_listed(self):
        report = small_graph_report(complete_multipartite_graph(2, 2), 1)
        wit = report.final.per_s[1].witnesses
        assert wit  # same-part pairs attain the maximum


class TestDistanceRegularity:
    def test_cube_is_distance_regular(self):
        res = small_graph_is_distance_regular(hamming_graph(3, 2))
        assert res.is_distance_regular
        assert res.intersection_array == ((3, 2, 1), (1, 2, 3))

    def test_triangular_five_is_distance_regular(self):
        res = small_graph_is_distance_regular(johnson_graph(5, 2))
        assert res.is_distance_regular

    def test_irregular_graph_witnessed_by_degrees(self):
        res = small_graph_is_distance_regular(parse_edge_list("0 1\n1 2\n"))
        assert not res.is_distance_regular
        assert res.witness is not None

    def test_regular_but_not_distance_regular(self):
        # two triangles joined by a perfect matching (the 3-prism): regular,
        # but c_2 differs between pairs
        prism = parse_edge_list("0 1\n1 2\n2 0\n3 4\n4 5\n5 3\n0 3\n1 4\n2 5\n")
        res = small_graph_is_distance_regular(prism)
        assert not res.is_distance_regular
        assert res.witness is not None
