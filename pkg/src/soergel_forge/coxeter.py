"""The symmetric group W = S_{n+1} in one-line notation, parabolic
subgroups, and reduced-expression machinery."""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations as iter_permutations

from .laurent import LaurentPoly

Perm = tuple  # images (w(1), ..., w(n+1)), a permutation of 1..n+1
Word = tuple  # sequence of simple-reflection indices in 1..n


def identity(n):
    return tuple(range(1, n + 2))


def simple_reflection(i, n):
    img = list(range(1, n + 2))
    img[i - 1], img[i] = img[i], img[i - 1]
    return tuple(img)


def multiply(p, q):
    """(p q)(k) = p(q(k))."""
    return tuple(p[q[k] - 1] for k in range(len(p)))


def inverse(p):
    inv = [0] * len(p)
    for k, v in enumerate(p):
        inv[v - 1] = k + 1
    return tuple(inv)


def evaluate(word, n):
    """Product of simple transpositions s_{i_1} ... s_{i_d}."""
    w = identity(n)
    for i in word:
        if not 1 <= i <= n:
            raise IndexError(f"letter {i} out of range for n={n}")
        w = multiply(w, simple_reflection(i, n))
    return w


def length(w):
    """Coxeter length = inversion count."""
    m = len(w)
    return sum(1 for a in range(m) for b in range(a + 1, m) if w[a] > w[b])


def is_reduced(word, n):
    return length(evaluate(word, n)) == len(word)


def left_descents(w):
    """Indices i with l(s_i w) < l(w), i.e. i appears after i+1 in w^{-1}."""
    inv = inverse(w)
    return [i for i in range(1, len(w)) if inv[i - 1] > inv[i]]


@lru_cache(maxsize=None)
def _reduced_words(w):
    if length(w) == 0:
        return ((),)
    n = len(w) - 1
    out = []
    for i in left_descents(w):
        rest = multiply(simple_reflection(i, n), w)
        out.extend((i,) + tail for tail in _reduced_words(rest))
    return tuple(sorted(out))


def reduced_words(w):
    """All reduced expressions of w, in lexicographic order."""
    return _reduced_words(tuple(w))


def canonical_reduced_word(w):
    return reduced_words(w)[0]


def runs(J):
    """Maximal connected intervals of a parabolic subset, sorted."""
    js = sorted(set(J))
    out, cur = [], []
    for j in js:
        if cur and j != cur[-1] + 1:
            out.append(tuple(cur))
            cur = []
        cur.append(j)
    if cur:
        out.append(tuple(cur))
    return out


def is_connected(J):
    return len(runs(J)) <= 1


def longest(J, n):
    """Longest element of W_J and its length d_J."""
    img = list(range(1, n + 2))
    d = 0
    for run in runs(J):
        a, b = run[0], run[-1]
        block = list(range(a, b + 2))
        img[a - 1:b + 1] = reversed(block)
        k = len(run)
        d += k * (k + 1) // 2
    return tuple(img), d


def parabolic_elements(J, n):
    """All elements of W_J (product of block symmetric groups)."""
    out = [identity(n)]
    for run in runs(J):
        a, b = run[0], run[-1]
        block = list(range(a, b + 2))
        new = []
        for w in out:
            for perm in iter_permutations(block):
                img = list(w)
                img[a - 1:b + 1] = perm
                new.append(tuple(img))
        out = new
    return out


def omega(word):
    """The sequence run in reverse."""
    return tuple(reversed(word))


def hilbert(J, n):
    """v^{-d_J} sum over W_J of v^{2 l(w)}."""
    _, d = longest(J, n)
    out = LaurentPoly.zero()
    for w in parabolic_elements(J, n):
        out = out + LaurentPoly.v(2 * length(w) - d)
    return out


def dynkin_flip_word(word, n):
    """Conjugate a word by the diagram symmetry i -> n+1-i."""
    return tuple(n + 1 - i for i in word)
