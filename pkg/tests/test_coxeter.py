import pytest
from hypothesis import given, settings, strategies as st

from soergel_forge import coxeter
from soergel_forge.laurent import LaurentPoly

words = st.lists(st.integers(1, 4), max_size=6).map(tuple)


class TestEval:
    def test_empty(self):
        assert coxeter.evaluate((), 4) == (1, 2, 3, 4, 5)

    def test_longest_of_s3(self):
        w = coxeter.evaluate((1, 2, 1), 4)
        assert coxeter.length(w) == 3
        assert w == (3, 2, 1, 4, 5)

    def test_square_is_identity(self):
        assert coxeter.evaluate((1, 1), 4) == coxeter.identity(4)


class TestReduced:
    def test_braid_word(self):
        assert coxeter.is_reduced((1, 2, 1), 4)

    def test_repeat(self):
        assert not coxeter.is_reduced((1, 1), 4)

    def test_length_four(self):
        assert coxeter.is_reduced((2, 1, 3, 2), 4)


class TestLongest:
    @pytest.mark.parametrize("J,d", [((1,), 1), ((1, 2), 3), ((1, 2, 3), 6),
                                     ((1, 2, 3, 4), 10), ((1, 3), 2)])
    def test_lengths(self, J, d):
        w, dd = coxeter.longest(J, 4)
        assert dd == d == coxeter.length(w)

    def test_full_reversal(self):
        w, _ = coxeter.longest((1, 2, 3), 3)
        assert w == (4, 3, 2, 1)


class TestReducedWords:
    @pytest.mark.parametrize("J,count", [((1, 2), 2), ((1, 2, 3), 16),
                                         ((1, 2, 3, 4), 768)])
    def test_counts(self, J, count):
        w, _ = coxeter.longest(J, max(J))
        assert len(coxeter.reduced_words(w)) == count

    def test_braid_pair(self):
        w, _ = coxeter.longest((1, 2), 2)
        assert coxeter.reduced_words(w) == ((1, 2, 1), (2, 1, 2))

    def test_all_reduced_and_evaluate(self):
        w, _ = coxeter.longest((1, 2, 3), 3)
        for word in coxeter.reduced_words(w):
            assert coxeter.is_reduced(word, 3)
            assert coxeter.evaluate(word, 3) == w

    def test_flip_symmetry(self):
        w1 = coxeter.evaluate((1, 2, 1, 3), 4)
        w2 = coxeter.evaluate(coxeter.dynkin_flip_word((1, 2, 1, 3), 4), 4)
        assert len(coxeter.reduced_words(w1)) == len(coxeter.reduced_words(w2))


class TestOmega:
    def test_reverse(self):
        assert coxeter.omega((1, 2, 3)) == (3, 2, 1)

    def test_empty(self):
        assert coxeter.omega(()) == ()

    def test_palindrome(self):
        assert coxeter.omega((1, 2, 1)) == (1, 2, 1)


class TestHilbert:
    def test_singleton(self):
        assert coxeter.hilbert((1,), 4) == LaurentPoly.parse({1: 1, -1: 1})

    def test_empty(self):
        assert coxeter.hilbert((), 4) == LaurentPoly.const(1)

    def test_pair(self):
        got = coxeter.hilbert((1, 2), 4)
        two = LaurentPoly.parse({1: 1, -1: 1})
        three = LaurentPoly.parse({2: 1, 0: 1, -2: 1})
        assert got == two * three

    @pytest.mark.parametrize("J", [(1,), (1, 2), (1, 3), (1, 2, 3)])
    def test_value_at_one_and_palindromic(self, J):
        h = coxeter.hilbert(J, 4)
        assert h.at_one() == len(coxeter.parabolic_elements(J, 4))
        assert h.is_palindromic()


@given(words)
@settings(max_examples=40, deadline=None)
def test_length_is_inversion_count(word):
    w = coxeter.evaluate(word, 4)
    assert coxeter.length(w) <= len(word)
    assert (coxeter.length(w) - len(word)) % 2 == 0
