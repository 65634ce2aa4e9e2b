from fractions import Fraction

import pytest

from conftest import random_star_graph
from qamont.classifier import enumerate_family
from qamont.errors import ParseError
from qamont.montesinos import (MontesinosLink, determinant, epsilon,
                               to_negative_form)
from qamont.plumbing import (PlumbingGraph, adjacency_matrix, build_graph,
                             format_graph, h1_order, is_negative_definite,
                             negative_definite_by_minors,
                             negative_definite_by_sign, parse_graph,
                             seifert_euler_number)


def M(e, *tangles):
    return MontesinosLink(e, tuple(Fraction(t) for t in tangles))


class TestBuildGraph:
    def test_examples(self):
        assert build_graph(M(-2, -2, -2, -2)) == PlumbingGraph(-2, ((-2,), (-2,), (-2,)))
        assert build_graph(M(-1, -2, -3, -7)) == PlumbingGraph(-1, ((-2,), (-3,), (-7,)))
        assert build_graph(M(-2, *[Fraction(-3, 2)] * 3)) == \
            PlumbingGraph(-2, ((-2, -2),) * 3)

    def test_rejects_tangles_at_or_above_minus_one(self):
        with pytest.raises(ValueError):
            build_graph(M(0, 2))

    def test_legs_must_be_nonempty(self):
        with pytest.raises(ValueError):
            PlumbingGraph(-2, ((),))


class TestAdjacency:
    def test_single_vertex(self):
        assert adjacency_matrix(PlumbingGraph(-4, ())) == ((-4,),)

    def test_one_leg(self):
        assert adjacency_matrix(PlumbingGraph(-2, ((-2,),))) == ((-2, 1), (1, -2))

    def test_three_legs(self):
        m = adjacency_matrix(PlumbingGraph(-2, ((-2,), (-2,), (-2,))))
        assert m == ((-2, 1, 1, 1), (1, -2, 0, 0), (1, 0, -2, 0), (1, 0, 0, -2))

    def test_distinct_legs_do_not_touch(self, rng):
        for _ in range(50):
            graph = random_star_graph(rng)
            m = adjacency_matrix(graph)
            start = 1
            spans = []
            for leg in graph.legs:
                spans.append(range(start, start + len(leg)))
                start += len(leg)
            for a, span_a in enumerate(spans):
                for b, span_b in enumerate(spans):
                    if a != b:
                        assert all(m[i][j] == 0 for i in span_a for j in span_b)


class TestDefiniteness:
    def test_examples(self):
        assert is_negative_definite(PlumbingGraph(-1, ((-2,), (-3,), (-7,))))
        assert is_negative_definite(PlumbingGraph(-2, ((-2,), (-2,), (-2,))))
        assert not is_negative_definite(PlumbingGraph(0, ((-2,),) * 4))

    def test_euler_number_values(self):
        graph = PlumbingGraph(-1, ((-2,), (-3,), (-7,)))
        assert seifert_euler_number(graph) == Fraction(-1, 42)
        assert seifert_euler_number(PlumbingGraph(-2, ((-2,), (-2,), (-2,)))) == \
            Fraction(-1, 2)

    def test_sign_test_needs_cf_legs(self):
        with pytest.raises(ValueError):
            negative_definite_by_sign(PlumbingGraph(-9, ((-1,),)))
        # ... but the minor test still decides it
        assert negative_definite_by_minors(PlumbingGraph(-9, ((-1,),)))

    def test_methods_agree_on_random_graphs(self, rng):
        for _ in range(500):
            graph = random_star_graph(rng, max_legs=4, max_leg_len=4,
                                      central_range=(-7, -1))
            assert negative_definite_by_sign(graph) == negative_definite_by_minors(graph)

    def test_methods_agree_on_family_graphs(self):
        for link in enumerate_family(3, 4, -2, 3):
            if determinant(link) != 0 and epsilon(link) < 0:
                graph = build_graph(to_negative_form(link))
                assert negative_definite_by_sign(graph)
                assert negative_definite_by_minors(graph)


class TestH1Order:
    def test_examples(self):
        assert h1_order(PlumbingGraph(-4, ())) == 4
        assert h1_order(PlumbingGraph(-2, ((-2,), (-2,), (-2,)))) == 4
        assert h1_order(PlumbingGraph(-1, ((-2,), (-3,), (-7,)))) == 1

    def test_matches_link_determinant(self):
        for link in enumerate_family(2, 4, -2, 2):
            if determinant(link) != 0 and epsilon(link) < 0:
                graph = build_graph(to_negative_form(link))
                assert is_negative_definite(graph)
                assert h1_order(graph) == determinant(link)


class TestGraphFiles:
    def test_round_trip(self, rng):
        for _ in range(20):
            graph = random_star_graph(rng)
            assert parse_graph(format_graph(graph)) == graph

    def test_parses_comments_and_blanks(self):
        text = "# a comment\n\ncentral: -2\nleg: -2 -2\n"
        assert parse_graph(text) == PlumbingGraph(-2, ((-2, -2),))

    @pytest.mark.parametrize("text,fragment", [
        ("leg: -2\n", "no central"),
        ("central: -2\ncentral: -3\n", "duplicate"),
        ("central: -2 -3\n", "exactly one"),
        ("central: x\n", "non-integer"),
        ("central: -2\nleg:\n", "at least one"),
        ("central: -2\nspoke: -2\n", "'spoke'"),
    ])
    def test_errors(self, text, fragment):
        with pytest.raises(ParseError) as err:
            parse_graph(text)
        assert fragment in str(err.value)
