"""Exact arithmetic in the polynomial ring Q[f_1, ..., f_n] of simple roots.

The symmetric group S_{n+1} acts by simple reflections; the action convention
is pinned by the divided-difference suite in the tests:

    s_i(f_i) = -f_i,
    s_i(f_j) = f_j + f_i   if |i - j| == 1,
    s_i(f_j) = f_j         if |i - j| >= 2.

Everything is graded with deg(f_i) = 2, and all coefficients are rationals.
Values are immutable after construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
import re

Exps = tuple  # exponent vector, length n


class MultiPoly:
    """Sparse multivariate polynomial: exponent tuple -> nonzero Fraction."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        self.terms = {} if terms is None else terms

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(nvars):
        return MultiPoly(nvars)

    @staticmethod
    def const(nvars, c):
        c = Fraction(c)
        if c == 0:
            return MultiPoly(nvars)
        return MultiPoly(nvars, {(0,) * nvars: c})

    @staticmethod
    def one(nvars):
        return MultiPoly.const(nvars, 1)

    @staticmethod
    def gen(nvars, i):
        """The simple root f_i, 1-indexed."""
        if not 1 <= i <= nvars:
            raise IndexError(f"f_{i} out of range for n={nvars}")
        e = [0] * nvars
        e[i - 1] = 1
        return MultiPoly(nvars, {tuple(e): Fraction(1)})

    @staticmethod
    def monomial(nvars, exps, c=1):
        c = Fraction(c)
        if c == 0:
            return MultiPoly(nvars)
        return MultiPoly(nvars, {tuple(exps): c})

    # -- ring structure ----------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __add__(self, other):
        if self.nvars != other.nvars:
            raise ValueError("mixed ambient ranks")
        t = dict(self.terms)
        for e, c in other.terms.items():
            s = t.get(e, 0) + c
            if s:
                t[e] = s
            else:
                t.pop(e, None)
        return MultiPoly(self.nvars, t)

    def __neg__(self):
        return MultiPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = Fraction(c)
        if c == 0:
            return MultiPoly(self.nvars)
        return MultiPoly(self.nvars, {e: c * k for e, k in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if self.nvars != other.nvars:
            raise ValueError("mixed ambient ranks")
        a, b = self.terms, other.terms
        if not a or not b:
            return MultiPoly(self.nvars)
        if len(a) > len(b):
            a, b = b, a
        if len(a) == 1:
            (ea, ca), = a.items()
            if not any(ea):
                return MultiPoly(self.nvars, {e: ca * c for e, c in b.items()})
            t = {}
            for e, c in b.items():
                k = tuple(x + y for x, y in zip(e, ea))
                t[k] = ca * c
            return MultiPoly(self.nvars, t)
        t = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                k = tuple(x + y for x, y in zip(ea, eb))
                s = t.get(k, 0) + ca * cb
                if s:
                    t[k] = s
                else:
                    del t[k]
        return MultiPoly(self.nvars, t)

    __rmul__ = __mul__

    # -- grading -----------------------------------------------------------

    def degree(self):
        """Graded degree (deg f_i = 2); None for the zero polynomial."""
        if not self.terms:
            return None
        return 2 * max(sum(e) for e in self.terms)

    def is_homogeneous(self):
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def homogeneous_part(self, degree):
        if degree % 2:
            return MultiPoly(self.nvars)
        k = degree // 2
        return MultiPoly(self.nvars,
                         {e: c for e, c in self.terms.items() if sum(e) == k})

    def constant_term(self):
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def as_constant(self):
        """The value of a constant polynomial; raises otherwise."""
        if not self.terms:
            return Fraction(0)
        if len(self.terms) == 1 and (0,) * self.nvars in self.terms:
            return self.terms[(0,) * self.nvars]
        raise ValueError(f"not a constant: {self}")

    def evaluate(self, point):
        """Evaluate at a tuple of rationals."""
        total = Fraction(0)
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v *= Fraction(x) ** k
            total += v
        return total

    # -- textual format ----------------------------------------------------

    def sorted_terms(self):
        """Terms in descending graded-lexicographic order (print order)."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]),
                      reverse=True)

    def text(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            factors = [str(c)]
            for i, k in enumerate(e):
                if k:
                    factors.append(f"f{i+1}^{k}" if k > 1 else f"f{i+1}")
            parts.append("*".join(factors))
        return " + ".join(parts)

    def __repr__(self):
        return f"MultiPoly({self.nvars}, {self.text()})"

    @staticmethod
    def parse(nvars, s):
        """Inverse of text(): sum of terms c*f1^a1*...*fn^an."""
        s = s.strip()
        if s == "0":
            return MultiPoly(nvars)
        out = MultiPoly(nvars)
        for part in s.split("+"):
            factors = part.strip().split("*")
            c = Fraction(factors[0])
            e = [0] * nvars
            for f in factors[1:]:
                m = re.fullmatch(r"f(\d+)(?:\^(\d+))?", f.strip())
                if not m:
                    raise ValueError(f"bad factor {f!r}")
                e[int(m.group(1)) - 1] += int(m.group(2) or 1)
            out = out + MultiPoly.monomial(nvars, e, c)
        return out


# -- the Weyl group action and divided differences --------------------------
#
# reflect and demazure are Q-linear, so both are assembled from cached images
# of monomials.

@lru_cache(maxsize=None)
def _reflect_monomial(nvars, i, exps):
    p = MultiPoly.one(nvars)
    for j0, k in enumerate(exps):
        if not k:
            continue
        j = j0 + 1
        if j == i:
            img = MultiPoly.gen(nvars, i).scale(-1)
        elif abs(j - i) == 1:
            img = MultiPoly.gen(nvars, j) + MultiPoly.gen(nvars, i)
        else:
            img = MultiPoly.gen(nvars, j)
        for _ in range(k):
            p = p * img
    return p


def reflect(i, poly):
    """Apply the simple reflection s_i."""
    if not 1 <= i <= poly.nvars:
        raise IndexError(f"reflection index {i} out of range")
    out = MultiPoly(poly.nvars)
    for e, c in poly.terms.items():
        out = out + _reflect_monomial(poly.nvars, i, e).scale(c)
    return out


def act(word, poly):
    """Apply s_{i_1} s_{i_2} ... s_{i_d} (leftmost acts last)."""
    for i in reversed(word):
        poly = reflect(i, poly)
    return poly


def divide_by_root(i, poly):
    """Exact division by f_i; raises if any term lacks an f_i factor."""
    t = {}
    for e, c in poly.terms.items():
        if e[i - 1] == 0:
            raise ArithmeticError(
                f"division by f_{i} leaves a remainder on {poly.text()}")
        k = list(e)
        k[i - 1] -= 1
        t[tuple(k)] = c
    return MultiPoly(poly.nvars, t)


@lru_cache(maxsize=None)
def _demazure_monomial(nvars, i, exps):
    m = MultiPoly.monomial(nvars, exps)
    return divide_by_root(i, m - _reflect_monomial(nvars, i, exps))


def demazure(i, poly):
    """The divided-difference operator (P - s_i P) / f_i."""
    if not 1 <= i <= poly.nvars:
        raise IndexError(f"demazure index {i} out of range")
    out = MultiPoly(poly.nvars)
    for e, c in poly.terms.items():
        out = out + _demazure_monomial(poly.nvars, i, e).scale(c)
    return out


@lru_cache(maxsize=None)
def _demazure_word_monomial(nvars, word, exps):
    p = MultiPoly.monomial(nvars, exps)
    for i in reversed(word):
        p = demazure(i, p)
    return p


@lru_cache(maxsize=None)
def _word_is_reduced(word, nvars):
    from . import coxeter
    return coxeter.is_reduced(list(word), nvars)


def demazure_word(word, poly):
    """Composite of divided differences along a reduced word.

    Rejects non-reduced words: the composite along a non-reduced word is a
    well-defined operator but not the one attached to any group element.
    """
    word = tuple(word)
    if not _word_is_reduced(word, poly.nvars):
        raise ValueError(f"word {list(word)} is not reduced")
    out = MultiPoly(poly.nvars)
    for e, c in poly.terms.items():
        out = out + _demazure_word_monomial(poly.nvars, word, e).scale(c)
    return out


def invariant_split(i, poly):
    """Write P = P0 + f_i * P1 with P0, P1 both s_i-invariant."""
    p1 = demazure(i, poly).scale(Fraction(1, 2))
    p0 = (poly + reflect(i, poly)).scale(Fraction(1, 2))
    return p0, p1


def is_invariant(indices, poly):
    """True iff s_i(P) = P for every i in the index set."""
    return all(reflect(i, poly) == poly for i in indices)


# -- Frobenius structure of R over R^J ---------------------------------------

@dataclass(frozen=True)
class DualBasisPair:
    """Graded basis of R over R^J together with its Demazure-dual basis.

    basis[k] corresponds to the group element elements[k] of W_J, listed by
    increasing length; demazure_word over the longest element pairs basis
    against dual by delta.
    """
    parabolic: tuple
    elements: tuple       # reduced word (one per element of W_J), sorted
    basis: tuple          # MultiPoly g_r, deg 2*l(r)
    dual: tuple           # MultiPoly g*_r, deg 2*(d_J - l(r))

    def longest_word(self):
        from . import coxeter
        return coxeter.canonical_reduced_word(
            coxeter.longest(self.parabolic, self._nvars())[0])

    def _nvars(self):
        return self.basis[0].nvars


def _staircase_monomials(J, nvars):
    """Monomials f_{j_1}^{a_1} ... f_{j_k}^{a_k}, 0 <= a_m <= position.

    For a connected run of k indices the exponent of the m-th variable is
    bounded by m, giving (k+1)! monomials whose degree profile matches the
    length generating function of S_{k+1}.  Disconnected sets multiply out
    run by run.
    """
    from itertools import product as iproduct
    runs = _runs(J)
    heights = {}
    for run in runs:
        for pos, j in enumerate(run, start=1):
            heights[j] = pos
    js = sorted(heights)
    out = []
    for combo in iproduct(*(range(heights[j] + 1) for j in js)):
        e = [0] * nvars
        for j, a in zip(js, combo):
            e[j - 1] = a
        out.append(MultiPoly.monomial(nvars, e))
    return out


def _runs(J):
    js = sorted(J)
    runs, cur = [], []
    for j in js:
        if cur and j != cur[-1] + 1:
            runs.append(cur)
            cur = []
        cur.append(j)
    if cur:
        runs.append(cur)
    return runs


@lru_cache(maxsize=None)
def _monomials_of_exponent_sum(nvars, k, support):
    def rec(pos, left):
        if pos == len(support):
            if left == 0:
                yield [0] * nvars
            return
        for a in range(left + 1):
            for rest in rec(pos + 1, left - a):
                rest[support[pos] - 1] = a
                yield rest
    return tuple(tuple(e) for e in rec(0, k))


def monomials_of_exponent_sum(nvars, k, support=None):
    """All exponent tuples with given total exponent, optionally supported
    on a subset of 1-indexed variables."""
    support = tuple(range(1, nvars + 1)) if support is None \
        else tuple(sorted(support))
    return _monomials_of_exponent_sum(nvars, k, support)


def count_monomials(nvars, graded_degree):
    """Dimension of the degree-d part of R (deg f_i = 2)."""
    if graded_degree < 0 or graded_degree % 2:
        return 0
    return comb(graded_degree // 2 + nvars - 1, nvars - 1)


@lru_cache(maxsize=None)
def dual_bases(J, nvars):
    """Construct a DualBasisPair for the parabolic subset J.

    The basis is the staircase monomial family; the duals are solved from
    the delta condition against the longest divided difference.  A failure
    of the linear solve would mean the candidate family is not a basis.
    """
    from . import coxeter
    from .linalg import solve_rational
    J = tuple(sorted(J))
    w_J, d_J = coxeter.longest(J, nvars)
    elements = coxeter.parabolic_elements(J, nvars)
    elements = sorted(elements, key=lambda w: (coxeter.length(w),
                                               coxeter.canonical_reduced_word(w)))
    words = [coxeter.canonical_reduced_word(w) for w in elements]
    lengths = [coxeter.length(w) for w in elements]
    top_word = coxeter.canonical_reduced_word(w_J)

    monos = sorted(_staircase_monomials(J, nvars),
                   key=lambda m: (m.degree() or 0, m.sorted_terms()[0][0]))
    if len(monos) != len(elements):
        raise ArithmeticError("staircase candidate has the wrong cardinality")
    for m, l in zip(monos, lengths):
        if (m.degree() or 0) != 2 * l:
            raise ArithmeticError("staircase degree profile mismatch")

    support = tuple(sorted(J))
    duals = []
    for q, lq in enumerate(lengths):
        target_deg = d_J - lq
        cand = monomials_of_exponent_sum(nvars, target_deg, support)
        # unknown coefficients of g*_q over cand; equations from
        # demazure_word(top)(g_r * g*_q) == delta_{r,q} for all r
        rows, rhs = [], []
        col_of = {e: k for k, e in enumerate(cand)}
        images = []
        for e in cand:
            images.append([demazure_word(top_word,
                                          monos[r] * MultiPoly.monomial(nvars, e))
                           for r in range(len(monos))])
        for r in range(len(monos)):
            want = MultiPoly.const(nvars, 1 if r == q else 0)
            got_keys = set(want.terms)
            for k in range(len(cand)):
                got_keys |= set(images[k][r].terms)
            for key in got_keys:
                row = {}
                for k in range(len(cand)):
                    c = images[k][r].terms.get(key)
                    if c:
                        row[col_of[cand[k]]] = c
                rows.append(row)
                rhs.append(want.terms.get(key, Fraction(0)))
        sol = solve_rational(rows, rhs, len(cand))
        if sol is None:
            raise ArithmeticError(
                f"dual-basis solve inconsistent for J={J}, element #{q}")
        g = MultiPoly(nvars)
        for e, c in zip(cand, sol):
            if c:
                g = g + MultiPoly.monomial(nvars, e, c)
        duals.append(g)

    return DualBasisPair(parabolic=J, elements=tuple(words),
                         basis=tuple(monos), dual=tuple(duals))


def expand_over_basis(J, nvars, poly):
    """Coefficients p_r in R^J with poly = sum p_r * g_r, via the duals."""
    db = dual_bases(J, nvars)
    top = db.longest_word()
    return [demazure_word(top, poly * gd) for gd in db.dual]


def beta_pairs(J, nvars):
    """The central element of R (x)_{R^J} R as a list of (g_r, g*_r) pairs."""
    db = dual_bases(J, nvars)
    return list(zip(db.basis, db.dual))
