"""Membrane (induced trivial module) layer: realized generators, the
divided-difference action at the membrane, and graded-rank agreement."""

import pytest

from soergel_forge import coxeter, hecke, induced, thick
from soergel_forge.bimodule import (BSMorphism, compose, merge_vertex,
                                    split_vertex, tensor)
from soergel_forge.laurent import LaurentPoly

N = 3


class TestMembraneTrivalent:
    def test_singleton_base_is_merge(self):
        m = induced.membrane_trivalent((1,), 1, N)
        assert m == merge_vertex(1, N)

    def test_pair_shapes(self):
        m = induced.membrane_trivalent((1, 2), 2, N)
        fam = thick.family((1, 2), N)
        assert m.src == (2,) + fam.t_rep
        assert m.tgt == fam.t_rep
        assert m.degree == -1

    def test_rejects_outside_index(self):
        with pytest.raises(ValueError):
            induced.membrane_trivalent((1,), 2, N)


class TestInduce:
    def test_identity_diagram(self):
        m = induced.induce((1,), (), (), [], N)
        fam = thick.family((1,), N)
        assert m.realization == fam.phi(fam.t_class)
        assert m.right_invariant

    def test_single_membrane_vertex_singleton(self):
        m = induced.induce((1,), (1,), (), [("membrane", 1)], N)
        # for J={1} the realization is the merge sandwiched by identities
        assert m.realization == merge_vertex(1, N)
        assert m.degree() == -1

    def test_plain_layer_then_membrane(self):
        m = induced.induce((1,), (1,), (1,),
                           [("plain", split_vertex(1, N), 0),
                            ("membrane", 1)], N)
        assert m.source.word == (1,) and m.target.word == (1,)
        assert m.degree() == -2
        assert m.right_invariant

    def test_membrane_action_pair(self):
        report = induced.verify_functor_composition((1, 2), N)
        bad = [r for r in report if r["status"] != "pass"]
        assert not bad, bad

    def test_rejects_bad_membrane_letter(self):
        with pytest.raises(ValueError):
            induced.induce((1,), (2,), (), [("membrane", 2)], N)


class TestHomRanks:
    def test_reexport_matches_hecke(self):
        assert induced.tj_hom_rank((1, 2), (1,), (2,), N) \
            == hecke.tj_rank((1, 2), (1,), (2,), N)

    def test_singleton_unit_example(self):
        # both routes give (v + v^-1) * v = v^2 + 1
        report = induced.verify_homsinTJ((1,), (), (), N)
        assert all(r["status"] == "pass" for r in report)
        got = hecke.pairing(hecke.b_parabolic((1,), N),
                            hecke.b_parabolic((1,), N))
        assert got == LaurentPoly.parse({2: 1, 0: 1})

    def test_empty_parabolic_degenerates(self):
        report = induced.verify_homsinTJ((), (1,), (1,), N)
        assert all(r["status"] == "pass" for r in report)

    @pytest.mark.parametrize("J", [(1,), (1, 2), (1, 2, 3)])
    def test_hecke_side_sweep(self, J):
        words = [(), (1,), (2,), (1, 2), (2, 1)]
        for iw in words:
            for jw in words:
                rep = induced.verify_homsinTJ(J, iw, jw, N)
                assert all(r["status"] == "pass" for r in rep), (J, iw, jw)

    def test_bimodule_side_singleton(self):
        rep = induced.verify_homsinTJ((1,), (), (), N,
                                      degree_window=(-1, 3),
                                      bimodule_side=True)
        assert all(r["status"] == "pass" for r in rep)

    def test_bimodule_side_with_strand(self):
        rep = induced.verify_homsinTJ((1,), (1,), (1,), 2,
                                      degree_window=(-2, 2),
                                      bimodule_side=True)
        assert all(r["status"] == "pass" for r in rep)


class TestRightInvariance:
    def test_membrane_vertex_commutes_with_invariants(self):
        m = induced.induce((1, 2), (2,), (), [("membrane", 2)], N)
        assert m.right_invariant
