from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from soergel_forge.polynomials import (MultiPoly, beta_pairs, demazure,
                                       demazure_word, dual_bases,
                                       expand_over_basis, invariant_split,
                                       is_invariant, reflect)

N = 4
F = [None] + [MultiPoly.gen(N, i) for i in range(1, N + 1)]


def poly_strategy(max_terms=4, max_exp=2):
    exps = st.tuples(*(st.integers(0, max_exp) for _ in range(N)))
    coef = st.integers(-5, 5)
    return st.lists(st.tuples(exps, coef), max_size=max_terms).map(
        lambda terms: sum((MultiPoly.monomial(N, e, c) for e, c in terms),
                          MultiPoly.zero(N)))


class TestReflect:
    def test_negates_own_root(self):
        assert reflect(1, F[1]) == F[1].scale(-1)

    def test_fixes_distant_root(self):
        assert reflect(1, F[3]) == F[3]

    def test_adjacent_root(self):
        assert reflect(1, F[2]) == F[1] + F[2]

    def test_out_of_range(self):
        with pytest.raises(IndexError):
            reflect(5, F[1])

    @given(poly_strategy())
    @settings(max_examples=25, deadline=None)
    def test_involution(self, p):
        assert reflect(2, reflect(2, p)) == p

    @given(poly_strategy(max_terms=2), poly_strategy(max_terms=2))
    @settings(max_examples=25, deadline=None)
    def test_ring_automorphism(self, p, q):
        assert reflect(1, p * q) == reflect(1, p) * reflect(1, q)


class TestDemazure:
    def test_own_root_gives_two(self):
        assert demazure(1, F[1]) == MultiPoly.const(N, 2)

    def test_square_of_root_vanishes(self):
        assert demazure(1, F[1] * F[1]).is_zero()

    def test_adjacent_root(self):
        assert demazure(1, F[2]) == MultiPoly.const(N, -1)

    def test_product_rule_example(self):
        assert demazure(1, F[1] * F[2]) == F[2].scale(2) + F[1]

    @given(poly_strategy())
    @settings(max_examples=25, deadline=None)
    def test_squares_to_zero(self, p):
        assert demazure(1, demazure(1, p)).is_zero()

    @given(poly_strategy(max_terms=3), poly_strategy(max_terms=3))
    @settings(max_examples=25, deadline=None)
    def test_twisted_leibniz(self, p, q):
        lhs = demazure(2, p * q)
        rhs = demazure(2, p) * q + reflect(2, p) * demazure(2, q)
        assert lhs == rhs

    def test_result_invariant(self):
        p = F[1] * F[2] * F[2]
        assert is_invariant((1,), demazure(1, p))


class TestDemazureWord:
    def test_single(self):
        assert demazure_word((1,), F[1]) == MultiPoly.const(N, 2)

    def test_braid_agreement(self):
        p = F[1] * F[2] * (F[1] + F[2])
        a = demazure_word((1, 2, 1), p)
        b = demazure_word((2, 1, 2), p)
        assert a == b == MultiPoly.const(N, 6)

    def test_rejects_non_reduced(self):
        with pytest.raises(ValueError):
            demazure_word((1, 1), F[1])

    @given(poly_strategy())
    @settings(max_examples=10, deadline=None)
    def test_braid_agreement_random(self, p):
        assert demazure_word((1, 2, 1), p) == demazure_word((2, 1, 2), p)


class TestInvariantSplit:
    def test_own_root(self):
        p0, p1 = invariant_split(1, F[1])
        assert p0.is_zero() and p1 == MultiPoly.one(N)

    def test_constant(self):
        p0, p1 = invariant_split(1, MultiPoly.const(N, 7))
        assert p0 == MultiPoly.const(N, 7) and p1.is_zero()

    def test_adjacent(self):
        p0, p1 = invariant_split(1, F[2])
        assert p0 == F[2] + F[1].scale(Fraction(1, 2))
        assert p1 == MultiPoly.const(N, Fraction(-1, 2))

    @given(poly_strategy())
    @settings(max_examples=25, deadline=None)
    def test_reassembly_and_invariance(self, p):
        p0, p1 = invariant_split(3, p)
        assert p0 + F[3] * p1 == p
        assert is_invariant((3,), p0) and is_invariant((3,), p1)


class TestIsInvariant:
    def test_square_invariant(self):
        assert is_invariant((1,), F[1] * F[1])

    def test_root_not_invariant(self):
        assert not is_invariant((1,), F[1])

    def test_demazure_output(self):
        p = demazure_word((1, 2, 1), F[1] * F[2] * F[2] * F[1])
        assert is_invariant((1, 2), p)


class TestDualBases:
    def test_empty(self):
        pair = dual_bases((), N)
        assert [g.text() for g in pair.basis] == ["1"]
        assert [g.text() for g in pair.dual] == ["1"]

    def test_singleton(self):
        pair = dual_bases((1,), N)
        assert list(pair.basis) == [MultiPoly.one(N), F[1]]
        assert list(pair.dual) == [F[1].scale(Fraction(1, 2)),
                                   MultiPoly.const(N, Fraction(1, 2))]

    def test_pair_degree_profile(self):
        pair = dual_bases((1, 2), N)
        assert [g.degree() or 0 for g in pair.basis] == [0, 2, 2, 4, 4, 6]
        assert [g.degree() or 0 for g in pair.dual] == [6, 4, 4, 2, 2, 0]

    @pytest.mark.parametrize("J", [(1,), (1, 2), (2, 3), (1, 3), (1, 2, 3)])
    def test_delta_property(self, J):
        pair = dual_bases(J, N)
        top = pair.longest_word()
        for r, g in enumerate(pair.basis):
            for q, gd in enumerate(pair.dual):
                want = MultiPoly.const(N, 1 if r == q else 0)
                assert demazure_word(top, g * gd) == want

    def test_identity_element_is_one(self):
        for J in [(1,), (1, 2)]:
            assert dual_bases(J, N).basis[0] == MultiPoly.one(N)

    def test_expansion(self):
        p = F[1] * F[1] * F[2]
        coeffs = expand_over_basis((1, 2), N, p)
        pair = dual_bases((1, 2), N)
        total = MultiPoly.zero(N)
        for c, g in zip(coeffs, pair.basis):
            assert is_invariant((1, 2), c)
            total = total + c * g
        assert total == p


class TestBeta:
    @pytest.mark.parametrize("J", [(), (1,), (1, 2)])
    def test_summand_count(self, J):
        sizes = {(): 1, (1,): 2, (1, 2): 6}
        assert len(beta_pairs(J, N)) == sizes[J]

    def test_singleton_value(self):
        pairs = beta_pairs((1,), N)
        assert pairs[0] == (MultiPoly.one(N), F[1].scale(Fraction(1, 2)))
        assert pairs[1] == (F[1], MultiPoly.const(N, Fraction(1, 2)))


class TestTextFormat:
    def test_roundtrip(self):
        p = F[1] * F[2].scale(Fraction(3, 2)) + MultiPoly.const(N, -2)
        assert MultiPoly.parse(N, p.text()) == p

    def test_zero(self):
        assert MultiPoly.zero(N).text() == "0"
        assert MultiPoly.parse(N, "0").is_zero()

    def test_deterministic_order(self):
        p = F[2] + F[1] + F[1] * F[1]
        assert p.text() == "1*f1^2 + 1*f1 + 1*f2"
