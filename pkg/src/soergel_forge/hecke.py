"""The Hecke algebra of S_{n+1} over Z[v, v^{-1}] in the standard basis.

Normalization (certified by the defining-relation tests): H_s H_w = H_{sw}
when the length goes up, otherwise H_{sw} + (v^{-1} - v) H_w, and
b_i = H_{s_i} + v.  The trace picks out the coefficient of H_e.
"""

from __future__ import annotations

from . import coxeter
from .laurent import LaurentPoly


class HeckeElt:
    """Finitely supported map Perm -> LaurentPoly (standard-basis coords)."""

    __slots__ = ("n", "support")

    def __init__(self, n, support=None):
        self.n = n
        self.support = {} if support is None else support

    @staticmethod
    def zero(n):
        return HeckeElt(n)

    @staticmethod
    def unit(n, coeff=1):
        return HeckeElt.standard(coxeter.identity(n), n, coeff)

    @staticmethod
    def standard(w, n, coeff=1):
        c = coeff if isinstance(coeff, LaurentPoly) else LaurentPoly.const(coeff)
        return HeckeElt(n, {tuple(w): c} if c else {})

    def __eq__(self, other):
        if not isinstance(other, HeckeElt):
            return NotImplemented
        return self.n == other.n and self.support == other.support

    def __hash__(self):
        return hash((self.n, frozenset(self.support.items())))

    def is_zero(self):
        return not self.support

    def __add__(self, other):
        t = dict(self.support)
        for w, c in other.support.items():
            s = t.get(w, LaurentPoly.zero()) + c
            if s:
                t[w] = s
            else:
                t.pop(w, None)
        return HeckeElt(self.n, t)

    def __neg__(self):
        return HeckeElt(self.n, {w: -c for w, c in self.support.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, laurent):
        if isinstance(laurent, int):
            laurent = LaurentPoly.const(laurent)
        if laurent.is_zero():
            return HeckeElt(self.n)
        return HeckeElt(self.n,
                        {w: c * laurent for w, c in self.support.items()})

    def coefficient(self, w):
        return self.support.get(tuple(w), LaurentPoly.zero())

    # -- multiplication ------------------------------------------------------

    def _mult_standard_generator(self, i):
        """Right multiplication by H_{s_i}."""
        vdiff = LaurentPoly.v(-1) - LaurentPoly.v(1)
        out = {}

        def acc(w, c):
            s = out.get(w, LaurentPoly.zero()) + c
            if s:
                out[w] = s
            else:
                out.pop(w, None)

        s = coxeter.simple_reflection(i, self.n)
        for w, c in self.support.items():
            ws = coxeter.multiply(w, s)
            if coxeter.length(ws) > coxeter.length(w):
                acc(ws, c)
            else:
                acc(ws, c)
                acc(w, c * vdiff)
        return HeckeElt(self.n, out)

    def _mult_standard_generator_inverse(self, i):
        """Right multiplication by H_{s_i}^{-1} = H_{s_i} + (v - v^{-1})."""
        vdiff = LaurentPoly.v(1) - LaurentPoly.v(-1)
        return self._mult_standard_generator(i) + self.scale(vdiff)

    def __mul__(self, other):
        if isinstance(other, LaurentPoly):
            return self.scale(other)
        out = HeckeElt.zero(self.n)
        for w, c in other.support.items():
            part = self.scale(c)
            for i in coxeter.canonical_reduced_word(w):
                part = part._mult_standard_generator(i)
            out = out + part
        return out

    def __repr__(self):
        parts = [f"({c.text()})H{list(w)}" for w, c in sorted(self.support.items())]
        return "HeckeElt(" + (" + ".join(parts) or "0") + ")"

    def to_json(self):
        return [{"perm": list(w), "laurent": c.to_json()}
                for w, c in sorted(self.support.items())]


def b_gen(i, n):
    """Kazhdan-Lusztig generator b_i = H_{s_i} + v H_e."""
    return (HeckeElt.standard(coxeter.simple_reflection(i, n), n)
            + HeckeElt.unit(n, LaurentPoly.v(1)))


def b_word(word, n):
    out = HeckeElt.unit(n)
    for i in word:
        out = out * b_gen(i, n)
    return out


def b_parabolic(J, n):
    """b_J = sum over W_J of v^{d_J - l(w)} H_w."""
    _, d = coxeter.longest(J, n)
    out = HeckeElt.zero(n)
    for w in coxeter.parabolic_elements(J, n):
        out = out + HeckeElt.standard(w, n, LaurentPoly.v(d - coxeter.length(w)))
    return out


def epsilon(x):
    """Trace: coefficient of the identity in the standard basis."""
    return x.coefficient(coxeter.identity(x.n))


def omega_inv(x):
    """Antilinear antiinvolution with omega(v^a b_word) = v^{-a} b_reversed.

    On the standard basis: omega(H_w) = H_w^{-1} (bar the coefficients).
    """
    out = HeckeElt.zero(x.n)
    for w, c in x.support.items():
        part = HeckeElt.unit(x.n, c.bar())
        for i in reversed(coxeter.canonical_reduced_word(w)):
            part = part._mult_standard_generator_inverse(i)
        out = out + part
    return out


def pairing(x, y):
    """(x, y) = epsilon(y omega(x))."""
    return epsilon(y * omega_inv(x))


def hom_rank_bs(x_word, y_word, n):
    """Graded rank of the Hom space between the Bott-Samelson bimodules
    attached to the two words, as a free one-sided R-module."""
    return pairing(b_word(x_word, n), b_word(y_word, n))


def tj_rank(J, i_word, j_word, n):
    """Graded rank v^{-d_J} epsilon(b_J b_i b_{omega(j)}); the prefactor is
    applied literally (no divisibility assumption)."""
    _, d = coxeter.longest(J, n)
    val = epsilon(b_parabolic(J, n) * b_word(i_word, n)
                  * b_word(coxeter.omega(j_word), n))
    return val.shift(-d)


def algebroid_compose(x, y, J, n):
    """Renormalized composition x o y = x y / [J]; exact division is
    required and an ArithmeticError signals non-divisibility."""
    hp = coxeter.hilbert(J, n)
    prod = x * y
    return HeckeElt(n, {w: c.divexact(hp) for w, c in prod.support.items()})
