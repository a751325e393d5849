import json

import pytest

from soergel_forge import coxeter, exprgraph as eg


def W(s):
    return tuple(int(c) for c in s)


class TestExpandedGraph:
    def test_braid_pair(self):
        g = eg.build_expanded(coxeter.longest((1, 2), 2)[0])
        assert len(g.vertices) == 2
        assert len(g.edges) == 1 and g.edges[0][2] == eg.ADJACENT

    def test_hexagon_word(self):
        g = eg.build_expanded(coxeter.evaluate((1, 3, 5), 5))
        assert len(g.vertices) == 6
        assert all(k == eg.DISTANT for _, _, k, _ in g.edges)
        assert g.is_connected()

    def test_longest_s4(self):
        g = eg.build_expanded(coxeter.longest((1, 2, 3), 3)[0])
        assert len(g.vertices) == 16
        assert g.is_connected()

    def test_connectivity_random(self):
        for word in [(2, 1, 2, 3, 2), (1, 2, 3, 4), (2, 1, 3, 2, 4)]:
            g = eg.build_expanded(coxeter.evaluate(word, 4))
            assert g.is_connected()

    def test_json_schema(self):
        g = eg.build_expanded(coxeter.longest((1, 2), 2)[0])
        payload = g.to_json()
        assert set(payload) == {"vertices", "edges", "source", "sink"}
        edge = payload["edges"][0]
        assert set(edge) == {"u", "v", "kind", "pos"}
        json.dumps(payload)

    def test_dot_export(self):
        g = eg.build_expanded(coxeter.evaluate((1, 3), 3))
        dot = g.to_dot()
        assert dot.startswith("digraph") and "style=dashed" in dot


class TestConflated:
    def test_braid_pair(self):
        g, cg = eg.parabolic_graph((1, 2), 2)
        assert len(cg.classes) == 2
        assert cg.edges == ((cg.class_of[(1, 2, 1)], cg.class_of[(2, 1, 2)]),)

    def test_hexagon_single_class(self):
        g = eg.build_expanded(coxeter.evaluate((1, 3, 5), 5))
        cg = eg.conflate(g)
        assert len(cg.classes) == 1

    def test_class_count_s4(self):
        g, cg = eg.parabolic_graph((1, 2, 3), 3)
        assert len(cg.classes) == 8
        # quotient by brute-force partition refinement
        groups = {}
        for v in g.vertices:
            groups.setdefault(cg.class_of[v], set()).add(v)
        assert sum(len(s) for s in groups.values()) == 16


class TestSourceSink:
    def test_pair(self):
        s, t = eg.source_sink((1, 2), 2)
        assert (1, 2, 1) in s and (2, 1, 2) in t

    def test_triple_matches_listed_words(self):
        s, t = eg.source_sink((1, 2, 3), 3)
        assert W("121321") in s and W("323123") in t

    def test_quadruple_sink(self):
        s, t = eg.source_sink((1, 2, 3, 4), 4)
        assert W("4342341234") in t and W("1213214321") in s

    @pytest.mark.parametrize("J", [(1,), (1, 2), (2, 3), (1, 2, 3),
                                   (2, 3, 4), (1, 2, 3, 4)])
    def test_uniqueness(self, J):
        _, cg = eg.parabolic_graph(J, 4)
        assert len(cg.sources) == 1 and len(cg.sinks) == 1


class TestCanonicalVertices:
    def test_listed_words(self):
        J = (1, 2, 3, 4, 5)
        assert eg.canonical_vertex(J, "sR") == W("121321432154321")
        assert eg.canonical_vertex(J, "tR") == W("545345234512345")
        assert eg.canonical_vertex(J, "sL") == W("123451234123121")

    def test_spliced_variants(self):
        J = (1, 2, 3, 4, 5)
        assert eg.canonical_vertex(J, "sR", 3) == W("123451234121321")
        assert eg.canonical_vertex(J, "sR", 4) == W("123451213214321")
        assert eg.canonical_vertex(J, "tR", 2) == W("543215453452345")

    def test_endpoints_are_source_sink_class_members(self):
        for J in [(1, 2), (1, 2, 3)]:
            s, t = eg.source_sink(J, 3)
            assert eg.canonical_vertex(J, "sR") in s
            assert eg.canonical_vertex(J, "tR") in t

    def test_shifted_interval(self):
        assert eg.canonical_vertex((2, 3), "sR") == (2, 3, 2)
        assert eg.canonical_vertex((2, 3), "tR") == (3, 2, 3)


class TestFlip:
    def test_single_braid(self):
        p = eg.flip_path(1, 2, (1, 2, 1), 0)
        assert p.end == (2, 1, 2) and p.length() == 1

    def test_paper_three_five(self):
        p = eg.flip_path(3, 5, (3, 4, 5, 4, 3), 0)
        assert p.end == (5, 4, 3, 4, 5) and p.length() == 2

    def test_paper_one_four(self):
        p = eg.flip_path(1, 4, (1, 2, 3, 4, 3, 2, 1), 0)
        assert p.end == (4, 3, 2, 1, 2, 3, 4)
        assert p.length() == 3 and p.is_oriented()

    def test_embedded_offset(self):
        word = (4,) + (1, 2, 1) + (4,)
        p = eg.flip_path(1, 2, word, 1)
        assert p.end == (4, 2, 1, 2, 4)

    def test_rejects_bad_segment(self):
        with pytest.raises(ValueError):
            eg.flip_path(1, 3, (1, 2, 1), 0)


class TestVPath:
    def test_singleton_trivial(self):
        assert eg.v_path((1,)).steps == ()

    def test_pair_single_edge(self):
        p = eg.v_path((1, 2))
        assert p.start == (1, 2, 1) and p.end == (2, 1, 2)
        assert p.length() == 1

    @pytest.mark.parametrize("J", [(1, 2, 3), (2, 3, 4), (1, 2, 3, 4),
                                   (1, 2, 3, 4, 5)])
    def test_endpoints_and_orientation(self, J):
        p = eg.v_path(J)
        assert p.start == eg.canonical_vertex(J, "sR")
        assert p.end == eg.canonical_vertex(J, "tR")
        assert p.is_oriented()

    def test_paper_intermediate_vertices(self):
        # the listed waypoints of the five-color cascade, up to commutation
        p = eg.v_path((1, 2, 3, 4, 5))
        verts = {tuple(sorted((v, i) for i, v in enumerate(w)))
                 for w in p.vertices()}
        g = eg.build_expanded(coxeter.longest((1, 2, 3, 4, 5), 5)[0])
        listed = [W("434234123454321"), W("545345234512345")]
        flat = set(p.vertices())
        assert listed[0] in flat and listed[1] in flat

    def test_disconnected_concatenation(self):
        p = eg.v_path((1, 3))
        assert p.start == (1, 3) and p.end == (1, 3)
        p = eg.v_path((1, 3, 4))
        assert p.start == (1,) + eg.canonical_vertex((3, 4), "sR")
        assert p.end == (1,) + eg.canonical_vertex((3, 4), "tR")


class TestFRPath:
    def test_trivial_cases(self):
        assert eg.fr_path((1, 2, 3, 4), 4, "sink").steps == ()
        assert eg.fr_path((1, 2, 3, 4), 1, "source").steps == ()

    def test_paper_source_flip_cascade(self):
        p = eg.fr_path((1, 2, 3, 4), 4, "source")
        assert p.start == W("1213214321")
        assert p.end == W("2324321234")
        assert p.is_oriented()

    @pytest.mark.parametrize("J,i,endpoint", [
        ((1, 2), 1, "source"), ((1, 2), 2, "source"),
        ((1, 2), 1, "sink"), ((1, 2), 2, "sink"),
        ((1, 2, 3), 2, "source"), ((1, 2, 3), 2, "sink"),
        ((2, 3, 4), 3, "source"), ((1, 2, 3, 4), 2, "sink")])
    def test_endpoint_letter(self, J, i, endpoint):
        p = eg.fr_path(J, i, endpoint)
        assert p.end[-1] == i
        start = eg.canonical_vertex(J, "sR" if endpoint == "source" else "tR")
        assert p.start == start
        if endpoint == "source":
            assert p.is_oriented()
        else:
            assert p.is_reverse_oriented()


class TestRewriteForI:
    @pytest.mark.parametrize("J", [(1,), (1, 2), (1, 2, 3)])
    def test_protected_middle(self, J):
        for i in J:
            p = eg.rewrite_path_for_i(J, i)
            assert p.start == eg.canonical_vertex(J, "sR")
            assert p.end == eg.canonical_vertex(J, "tR")
            assert p.is_oriented()

    def test_middle_never_touches_last_letter(self):
        J, i = (1, 2, 3), 2
        p = eg.rewrite_path_for_i(J, i)
        # within the protected region the last letter stays fixed at i
        seen_i_last = [w for w in p.vertices() if w[-1] == i]
        assert seen_i_last


class TestOrientedPath:
    def test_source_to_sink_exists(self):
        p = eg.oriented_path(eg.canonical_vertex((1, 2, 3), "sR"),
                             eg.canonical_vertex((1, 2, 3), "tR"))
        assert p is not None and p.is_oriented()

    def test_sink_to_source_absent(self):
        p = eg.oriented_path(eg.canonical_vertex((1, 2), "tR"),
                             eg.canonical_vertex((1, 2), "sR"))
        assert p is None

    def test_source_reaches_every_class(self):
        g, cg = eg.parabolic_graph((1, 2, 3), 3)
        s = eg.canonical_vertex((1, 2, 3), "sR")
        for rep in cg.reps:
            assert eg.oriented_path(s, rep) is not None


class TestCycleCensus:
    def test_hexagon(self):
        g = eg.build_expanded(coxeter.evaluate((1, 3, 5), 5))
        census = eg.classify_cycles(g)
        assert census == {"disjoint_square": 0, "distant_hexagon": 1,
                          "distant_octagon": 0, "zamolodchikov": 0}

    def test_octagon(self):
        g = eg.build_expanded(coxeter.evaluate((1, 2, 1, 4), 4))
        assert eg.classify_cycles(g)["distant_octagon"] == 1

    def test_zamolodchikov_and_squares(self):
        g = eg.build_expanded(coxeter.longest((1, 2, 3), 3)[0])
        census = eg.classify_cycles(g)
        assert census["zamolodchikov"] == 1
        assert census["disjoint_square"] == 2

    @pytest.mark.parametrize("word", [(1, 2, 1, 4), (1, 3, 5), (2, 1, 2, 4)])
    def test_flip_invariance(self, word):
        n = 5
        g1 = eg.build_expanded(coxeter.evaluate(word, n))
        g2 = eg.build_expanded(
            coxeter.evaluate(coxeter.dynkin_flip_word(word, n), n))
        assert eg.classify_cycles(g1) == eg.classify_cycles(g2)


class TestCommutationMoves:
    def test_same_class(self):
        p = eg.commutation_path((1, 3, 2), (3, 1, 2))
        assert p.end == (3, 1, 2)
        assert all(s.kind == eg.DISTANT for s in p.steps)

    def test_rejects_cross_class(self):
        with pytest.raises(ValueError):
            eg.commutation_moves((1, 2, 1), (2, 1, 2))
