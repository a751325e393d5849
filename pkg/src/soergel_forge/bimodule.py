"""Bott-Samelson bimodules as free left modules over R = Q[f_1..f_n].

For a word (i_1, ..., i_d) the bimodule R (x)_{R^{i_1}} ... (x)_{R^{i_d}} R
is free as a left R-module of rank 2^d, with basis the elementary tensors
1 (x) e_1 (x) ... (x) e_d, e_k in {1, f_{i_k}}.  A basis label is a bitmask:
bit k-1 set means slot k holds the root.  Graded bimodule morphisms are
stored columnwise as sparse matrices of polynomials in this basis.

Normalizing a tensor sweeps right to left: the slot-k entry g splits as
g = mu + f_{i_k} * nu with both parts s_{i_k}-invariant, and the invariant
factors migrate one slot leftward.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .polynomials import MultiPoly, invariant_split, demazure
from . import polynomials as pc
from .linalg import solve_rational

Word = tuple


def popcount(m):
    return bin(m).count("1")


# -- elements -----------------------------------------------------------------

class BSElement:
    """Element of B_word in left-basis normal form: mask -> coefficient."""

    __slots__ = ("word", "nvars", "coords")

    def __init__(self, word, nvars, coords=None):
        self.word = tuple(word)
        self.nvars = nvars
        self.coords = {} if coords is None else coords

    def __eq__(self, other):
        return (isinstance(other, BSElement) and self.word == other.word
                and self.coords == other.coords)

    def is_zero(self):
        return not self.coords

    def __add__(self, other):
        t = dict(self.coords)
        for m, p in other.coords.items():
            s = t.get(m)
            s = p if s is None else s + p
            if s.is_zero():
                t.pop(m, None)
            else:
                t[m] = s
        return BSElement(self.word, self.nvars, t)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        if isinstance(c, (int, Fraction)):
            if c == 0:
                return BSElement(self.word, self.nvars)
            return BSElement(self.word, self.nvars,
                             {m: p.scale(c) for m, p in self.coords.items()})
        t = {}
        for m, p in self.coords.items():
            q = c * p
            if not q.is_zero():
                t[m] = q
        return BSElement(self.word, self.nvars, t)

    def degree(self):
        degs = {(p.degree() or 0) + 2 * popcount(m) - len(self.word)
                for m, p in self.coords.items() if p.is_homogeneous()}
        return degs.pop() if len(degs) == 1 else None

    def __repr__(self):
        parts = [f"[{m:0{len(self.word)}b}]({p.text()})"
                 for m, p in sorted(self.coords.items())]
        return "BSElement(" + (" + ".join(parts) or "0") + ")"


def push_in(word, nvars, mask, poly, slot):
    """Multiply poly into tensor slot `slot` (0..d, 0 = left coefficient)
    of the basis element `mask` and renormalize; returns mask -> poly."""
    out = {}
    if poly.is_zero():
        return out
    if slot == 0:
        return {mask: poly}
    high = mask & ~((1 << slot) - 1)

    def rec(k, carry, bits):
        if carry.is_zero():
            return
        if k == 0:
            cur = out.get(bits)
            s = carry if cur is None else cur + carry
            if s.is_zero():
                out.pop(bits, None)
            else:
                out[bits] = s
            return
        i = word[k - 1]
        content = carry * MultiPoly.gen(nvars, i) \
            if (mask >> (k - 1)) & 1 else carry
        mu, nu = invariant_split(i, content)
        rec(k - 1, mu, bits)
        rec(k - 1, nu, bits | (1 << (k - 1)))

    rec(slot, poly, high)
    return out


def normal_form(word, nvars, raws):
    """BSElement of the raw tensor raws[0] (x) raws[1] (x) ... (x) raws[d]."""
    word = tuple(word)
    d = len(word)
    if len(raws) != d + 1:
        raise ValueError("raw tensor has the wrong number of slots")
    out = {}

    def rec(k, carry, bits):
        if carry.is_zero():
            return
        if k == 0:
            content = raws[0] * carry
            if not content.is_zero():
                cur = out.get(bits)
                s = content if cur is None else cur + content
                if s.is_zero():
                    out.pop(bits, None)
                else:
                    out[bits] = s
            return
        i = word[k - 1]
        mu, nu = invariant_split(i, raws[k] * carry)
        rec(k - 1, mu, bits)
        rec(k - 1, nu, bits | (1 << (k - 1)))

    rec(d, MultiPoly.one(nvars), 0)
    return BSElement(word, nvars, out)


def one_tensor(word, nvars):
    return BSElement(word, nvars, {0: MultiPoly.one(nvars)})


def right_multiply(elem, f):
    """Multiply by f in R on the far right, renormalizing."""
    d = len(elem.word)
    out = BSElement(elem.word, elem.nvars)
    for m, c in elem.coords.items():
        pushed = push_in(elem.word, elem.nvars, m, f, d)
        out = out + BSElement(elem.word, elem.nvars, pushed).scale(c)
    return out


def tensor_elements(e1, e2):
    """The element e1 (x) e2 of B_{word1 + word2}, renormalized: the left
    coefficient of e2 rides the junction and is pushed through e1's slots."""
    word = e1.word + e2.word
    d1 = len(e1.word)
    coords = {}
    for m1, c1 in e1.coords.items():
        for m2, c2 in e2.coords.items():
            pushed = push_in(e1.word, e1.nvars, m1, c2, d1)
            for mm, q in pushed.items():
                key = mm | (m2 << d1)
                p = c1 * q
                cur = coords.get(key)
                s = p if cur is None else cur + p
                if s.is_zero():
                    coords.pop(key, None)
                else:
                    coords[key] = s
    return BSElement(word, e1.nvars, coords)


# -- morphisms ------------------------------------------------------------------

class BSMorphism:
    """Graded bimodule morphism between Bott-Samelson bimodules, stored as
    a sparse left-coefficient matrix: cols[src_mask] = {tgt_mask: poly}."""

    __slots__ = ("src", "tgt", "degree", "nvars", "cols")

    def __init__(self, src, tgt, degree, nvars, cols):
        self.src = tuple(src)
        self.tgt = tuple(tgt)
        self.degree = degree
        self.nvars = nvars
        self.cols = cols

    # construction helpers

    @staticmethod
    def zero(src, tgt, degree, nvars):
        return BSMorphism(src, tgt, degree, nvars,
                          tuple({} for _ in range(1 << len(src))))

    @staticmethod
    def identity(word, nvars):
        one = MultiPoly.one(nvars)
        return BSMorphism(word, word, 0, nvars,
                          tuple({m: one} for m in range(1 << len(word))))

    def is_zero(self):
        return all(not c for c in self.cols)

    def __eq__(self, other):
        return (isinstance(other, BSMorphism) and self.src == other.src
                and self.tgt == other.tgt and self.cols == other.cols)

    def same_shape(self, other):
        return self.src == other.src and self.tgt == other.tgt

    def __add__(self, other):
        if not self.same_shape(other):
            raise ValueError("shape mismatch")
        cols = []
        for a, b in zip(self.cols, other.cols):
            t = dict(a)
            for m, p in b.items():
                cur = t.get(m)
                s = p if cur is None else cur + p
                if s.is_zero():
                    t.pop(m, None)
                else:
                    t[m] = s
            cols.append(t)
        return BSMorphism(self.src, self.tgt, self.degree, self.nvars,
                          tuple(cols))

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        c = Fraction(c)
        if c == 0:
            return BSMorphism.zero(self.src, self.tgt, self.degree, self.nvars)
        return BSMorphism(self.src, self.tgt, self.degree, self.nvars,
                          tuple({m: p.scale(c) for m, p in col.items()}
                                for col in self.cols))

    def apply(self, elem):
        """Image of a BSElement of the source."""
        if elem.word != self.src:
            raise ValueError("element/morphism mismatch")
        out = {}
        for m, c in elem.coords.items():
            for t, q in self.cols[m].items():
                p = c * q
                cur = out.get(t)
                s = p if cur is None else cur + p
                if s.is_zero():
                    out.pop(t, None)
                else:
                    out[t] = s
        return BSElement(self.tgt, self.nvars, out)

    def entry(self, tgt_mask, src_mask):
        return self.cols[src_mask].get(tgt_mask, MultiPoly.zero(self.nvars))

    def transpose_rows(self):
        """rows[tgt_mask] = {src_mask: poly} view."""
        rows = {}
        for j, col in enumerate(self.cols):
            for i, p in col.items():
                rows.setdefault(i, {})[j] = p
        return rows

    def check_degree(self):
        """Every entry homogeneous of the bookkept degree."""
        dx, dy = len(self.src), len(self.tgt)
        for j, col in enumerate(self.cols):
            for i, p in col.items():
                want = self.degree + (2 * popcount(j) - dx) \
                    - (2 * popcount(i) - dy)
                if not p.is_homogeneous() or (p.degree() or want) != want:
                    return False
        return True

    def to_json(self):
        return {
            "source": list(self.src),
            "target": list(self.tgt),
            "degree": self.degree,
            "matrix": [[self.entry(i, j).text()
                        for j in range(1 << len(self.src))]
                       for i in range(1 << len(self.tgt))],
        }

    def __repr__(self):
        return (f"BSMorphism({self.src} -> {self.tgt}, deg {self.degree}, "
                f"{sum(len(c) for c in self.cols)} entries)")


def compose(g, f):
    """g after f."""
    if f.tgt != g.src:
        raise ValueError(f"cannot compose {f.tgt} -> with source {g.src}")
    cols = []
    for col in f.cols:
        acc = {}
        for k, p in col.items():
            for i, q in g.cols[k].items():
                r = q * p
                if r.is_zero():
                    continue
                cur = acc.get(i)
                s = r if cur is None else cur + r
                if s.is_zero():
                    acc.pop(i, None)
                else:
                    acc[i] = s
        cols.append(acc)
    return BSMorphism(f.src, g.tgt, f.degree + g.degree, f.nvars, tuple(cols))


def compose_many(*ms):
    """Compose right to left: compose_many(a, b, c) = a o b o c."""
    out = ms[-1]
    for m in reversed(ms[:-1]):
        out = compose(m, out)
    return out


def tensor(f, g):
    """Horizontal juxtaposition f (x) g."""
    if f.nvars != g.nvars:
        raise ValueError("mixed ambient ranks")
    dsx, dsz = len(f.src), len(g.src)
    dy = len(f.tgt)
    src = f.src + g.src
    tgt = f.tgt + g.tgt
    cols = [dict() for _ in range(1 << (dsx + dsz))]
    for jz in range(1 << dsz):
        colg = g.cols[jz]
        for jx in range(1 << dsx):
            colf = f.cols[jx]
            acc = cols[jx | (jz << dsx)]
            for kw, dpoly in colg.items():
                shifted = kw << dy
                if len(dpoly.terms) == 1 and not any(next(iter(dpoly.terms))):
                    c0 = dpoly.terms[next(iter(dpoly.terms))]
                    for ky, c in colf.items():
                        key = ky | shifted
                        p = c.scale(c0)
                        cur = acc.get(key)
                        s = p if cur is None else cur + p
                        if s.is_zero():
                            acc.pop(key, None)
                        else:
                            acc[key] = s
                else:
                    for ky, c in colf.items():
                        pushed = push_in(f.tgt, f.nvars, ky, dpoly, dy)
                        for km, q in pushed.items():
                            key = km | shifted
                            p = c * q
                            if p.is_zero():
                                continue
                            cur = acc.get(key)
                            s = p if cur is None else cur + p
                            if s.is_zero():
                                acc.pop(key, None)
                            else:
                                acc[key] = s
    return BSMorphism(src, tgt, f.degree + g.degree, f.nvars, tuple(cols))


def tensor_many(*ms):
    out = ms[0]
    for m in ms[1:]:
        out = tensor(out, m)
    return out


def embed(m, left, right):
    """id_left (x) m (x) id_right."""
    out = m
    if left:
        out = tensor(BSMorphism.identity(tuple(left), m.nvars), out)
    if right:
        out = tensor(out, BSMorphism.identity(tuple(right), m.nvars))
    return out


def right_mult_morphism(word, nvars, f):
    """Right multiplication by f as an endomorphism of B_word."""
    word = tuple(word)
    d = len(word)
    cols = tuple(push_in(word, nvars, m, f, d) for m in range(1 << d))
    return BSMorphism(word, word, f.degree() or 0, nvars, cols)


def left_mult_morphism(word, nvars, f):
    word = tuple(word)
    cols = tuple(({m: f} if not f.is_zero() else {})
                 for m in range(1 << len(word)))
    return BSMorphism(word, word, f.degree() or 0, nvars, cols)


def region_mult_morphism(word, nvars, slot, f):
    """Multiplication by f placed in the region after tensor slot `slot`
    (0 = far left, d = far right)."""
    word = tuple(word)
    cols = tuple(push_in(word, nvars, m, f, slot) for m in range(1 << len(word)))
    return BSMorphism(word, word, f.degree() or 0, nvars, cols)


def is_bimodule_map(m):
    """Certificate: commutes with right multiplication by every f_k."""
    for k in range(1, m.nvars + 1):
        f = MultiPoly.gen(m.nvars, k)
        lhs = compose(m, right_mult_morphism(m.src, m.nvars, f))
        rhs = compose(right_mult_morphism(m.tgt, m.nvars, f), m)
        if lhs != rhs:
            return False
    return True


# -- diagram generators ---------------------------------------------------------

@lru_cache(maxsize=None)
def counit_dot(i, nvars):
    """B_i -> R, degree +1: multiplication."""
    return BSMorphism((i,), (), 1, nvars,
                      ({0: MultiPoly.one(nvars)}, {0: MultiPoly.gen(nvars, i)}))


@lru_cache(maxsize=None)
def unit_dot(i, nvars):
    """R -> B_i, degree +1: 1 -> (f_i (x) 1 + 1 (x) f_i)/2."""
    half = Fraction(1, 2)
    return BSMorphism((), (i,), 1, nvars,
                      ({0: MultiPoly.gen(nvars, i).scale(half),
                        1: MultiPoly.const(nvars, half)},))


@lru_cache(maxsize=None)
def split_vertex(i, nvars):
    """B_i -> B_i B_i, degree -1: f (x) g -> f (x) 1 (x) g."""
    one = MultiPoly.one(nvars)
    return BSMorphism((i,), (i, i), -1, nvars, ({0: one}, {2: one}))


@lru_cache(maxsize=None)
def merge_vertex(i, nvars):
    """B_i B_i -> B_i, degree -1: middle divided difference."""
    two = MultiPoly.const(nvars, 2)
    return BSMorphism((i, i), (i,), -1, nvars, ({}, {0: two}, {}, {1: two}))


@lru_cache(maxsize=None)
def crossing(i, j, nvars):
    """B_i B_j -> B_j B_i for distant colors: normal-form transport."""
    if abs(i - j) < 2:
        raise ValueError(f"colors {i},{j} are not distant")
    cols = []
    for m in range(4):
        f = MultiPoly.one(nvars)
        if m & 1:
            f = f * MultiPoly.gen(nvars, i)
        if m & 2:
            f = f * MultiPoly.gen(nvars, j)
        cols.append(right_multiply(one_tensor((j, i), nvars), f).coords)
    return BSMorphism((i, j), (j, i), 0, nvars, tuple(cols))


def dual_basis_inclusion(pair, word, nvars):
    """Columns of the 1-tensor-preserving map R (x)_{R^J} R -> B_word over
    the left basis {1 (x) g_r}; word must be a reduced expression of the
    longest element of the pair's parabolic."""
    cols = []
    for g in pair.basis:
        cols.append(right_multiply(one_tensor(word, nvars), g).coords)
    return cols


def solve_factor_through(A_cols, A_elem_degrees, tgt_word, B, nvars):
    """Solve A * X = B where A's columns are elements of B_tgt (as coords)
    spanning an abstract free module with basis-element degrees
    A_elem_degrees.  B is a BSMorphism into the same target.  Returns X as
    a list (over B's source masks) of dicts {basis index r: MultiPoly}.

    Raises ArithmeticError if the system is inconsistent.
    """
    d_tgt = len(tgt_word)
    d_src = len(B.src)
    out = []
    for jcol in range(1 << d_src):
        elem_deg = (2 * popcount(jcol) - d_src) + B.degree
        # unknown polys x_r of degree elem_deg - A_elem_degrees[r]
        monos = []
        var_of = {}
        for r, adeg in enumerate(A_elem_degrees):
            delta = elem_deg - adeg
            if delta < 0 or delta % 2:
                continue
            for e in pc.monomials_of_exponent_sum(nvars, delta // 2):
                var_of[(r, e)] = len(monos)
                monos.append((r, e))
        rows_by_key = {}
        for r, _ in enumerate(A_elem_degrees):
            pass
        target_col = B.cols[jcol]
        keys = set()
        for mask, p in target_col.items():
            keys.update((mask, e) for e in p.terms)
        coeff_rows = {}
        for (r, e), var in var_of.items():
            for mask, p in A_cols[r].items():
                for em, cm in p.terms.items():
                    key = (mask, tuple(x + y for x, y in zip(e, em)))
                    keys.add(key)
                    coeff_rows.setdefault(key, {})[var] = \
                        coeff_rows.get(key, {}).get(var, Fraction(0)) + cm
        rows, rhs = [], []
        for key in keys:
            rows.append(coeff_rows.get(key, {}))
            mask, emono = key
            p = target_col.get(mask)
            rhs.append(p.terms.get(emono, Fraction(0)) if p else Fraction(0))
        sol = solve_rational(rows, rhs, len(monos))
        if sol is None:
            raise ArithmeticError("factorization solve inconsistent")
        coldict = {}
        for (r, e), var in var_of.items():
            c = sol[var]
            if c:
                cur = coldict.get(r, MultiPoly.zero(nvars))
                coldict[r] = cur + MultiPoly.monomial(nvars, e, c)
        out.append(coldict)
    return out


@lru_cache(maxsize=None)
def sixvalent(i, j, nvars):
    """B_i B_j B_i -> B_j B_i B_j for adjacent colors: include/project
    through the parabolic summand, with the complementary idempotent built
    from dots and trivalents and its scalar fixed by idempotency."""
    if abs(i - j) != 1:
        raise ValueError(f"colors {i},{j} are not adjacent")
    id_i = BSMorphism.identity((i,), nvars)
    pi = compose(merge_vertex(i, nvars),
                 tensor_many(id_i, counit_dot(j, nvars), id_i))
    iota = compose(tensor_many(id_i, unit_dot(j, nvars), id_i),
                   split_vertex(i, nvars))
    u = compose(iota, pi)
    uu = compose(u, u)
    lam = None
    for jm, col in enumerate(u.cols):
        for im, p in col.items():
            q = uu.cols[jm].get(im)
            if q is None:
                continue
            ratio_keys = set(p.terms) & set(q.terms)
            if ratio_keys:
                k = next(iter(ratio_keys))
                lam = q.terms[k] / p.terms[k]
                break
        if lam is not None:
            break
    if lam is None or uu != u.scale(lam):
        raise ArithmeticError("dot-corrected composite is not quasi-idempotent")
    e2 = u.scale(Fraction(1) / lam)
    e1 = BSMorphism.identity((i, j, i), nvars) - e2

    J = tuple(sorted((i, j)))
    pair = pc.dual_bases(J, nvars)
    degs = [(g.degree() or 0) - 3 for g in pair.basis]
    inc_iji = dual_basis_inclusion(pair, (i, j, i), nvars)
    inc_jij = dual_basis_inclusion(pair, (j, i, j), nvars)
    proj = solve_factor_through(inc_iji, degs, (i, j, i), e1, nvars)
    cols = []
    for jcol in range(8):
        acc = {}
        for r, coeff in proj[jcol].items():
            for mask, p in inc_jij[r].items():
                q = coeff * p
                if q.is_zero():
                    continue
                cur = acc.get(mask)
                s = q if cur is None else cur + q
                if s.is_zero():
                    acc.pop(mask, None)
                else:
                    acc[mask] = s
        cols.append(acc)
    return BSMorphism((i, j, i), (j, i, j), 0, nvars, tuple(cols))


@lru_cache(maxsize=None)
def aborted_sixvalent(i, j, nvars):
    """The projection B_i B_j B_i -> B_i onto the complementary summand
    (middle dot then merge); composites with braid-move morphisms from
    below vanish."""
    if abs(i - j) != 1:
        raise ValueError(f"colors {i},{j} are not adjacent")
    id_i = BSMorphism.identity((i,), nvars)
    return compose(merge_vertex(i, nvars),
                   tensor_many(id_i, counit_dot(j, nvars), id_i))


@lru_cache(maxsize=None)
def aborted_sixvalent_up(i, j, nvars):
    """B_i -> B_i B_j B_i: the vertical flip of the aborted vertex."""
    if abs(i - j) != 1:
        raise ValueError(f"colors {i},{j} are not adjacent")
    id_i = BSMorphism.identity((i,), nvars)
    return compose(tensor_many(id_i, unit_dot(j, nvars), id_i),
                   split_vertex(i, nvars))


def dots_down(word, nvars):
    """B_word -> R: a counit dot on every strand."""
    out = BSMorphism.identity((), nvars)
    for i in word:
        out = tensor(out, counit_dot(i, nvars))
    return out


def dots_up(word, nvars):
    """R -> B_word: a unit dot on every strand."""
    out = BSMorphism.identity((), nvars)
    for i in word:
        out = tensor(out, unit_dot(i, nvars))
    return out


# -- Hom-space dimensions --------------------------------------------------------

def _hom_unknowns(src, tgt, m, nvars):
    dx, dy = len(src), len(tgt)
    entries = {}
    for jmask in range(1 << dx):
        for imask in range(1 << dy):
            delta = m + (2 * popcount(jmask) - dx) - (2 * popcount(imask) - dy)
            if delta < 0 or delta % 2:
                continue
            entries[(imask, jmask)] = delta
    return entries


@lru_cache(maxsize=None)
def _right_mult_gen(word, nvars, k):
    return right_mult_morphism(word, nvars, MultiPoly.gen(nvars, k))


def hom_space(src, tgt, m, nvars, left_idem=None, right_idem=None):
    """Basis of degree-m bimodule maps B_src -> B_tgt, optionally cut down
    by idempotents: Q o M = M (left_idem) and/or M o P = M (right_idem).

    Returns a list of BSMorphism.
    """
    src, tgt = tuple(src), tuple(tgt)
    entries = _hom_unknowns(src, tgt, m, nvars)
    var_of = {}
    vars_list = []
    entry_vars = {}
    for (imask, jmask), delta in entries.items():
        lst = []
        for e in pc.monomials_of_exponent_sum(nvars, delta // 2):
            var_of[(imask, jmask, e)] = len(vars_list)
            lst.append((len(vars_list), e))
            vars_list.append((imask, jmask, e))
        entry_vars[(imask, jmask)] = lst
    if not vars_list:
        return []

    rows = {}

    def add_term(rowkey, var, coeff):
        row = rows.setdefault(rowkey, {})
        s = row.get(var, Fraction(0)) + coeff
        if s:
            row[var] = s
        else:
            row.pop(var, None)

    # Constraint: for each variable generator f_k,
    #   M o R_src(f_k) == R_tgt(f_k) o M.
    for k in range(1, nvars + 1):
        f = MultiPoly.gen(nvars, k)
        Rs = right_mult_morphism(src, nvars, f)
        Rt = right_mult_morphism(tgt, nvars, f)
        for jmask in range(1 << len(src)):
            for imask in range(1 << len(tgt)):
                acc = {}
                for lmask, rp in Rs.cols[jmask].items():
                    if (imask, lmask) not in entries:
                        continue
                    delta = entries[(imask, lmask)]
                    for e in pc.monomials_of_exponent_sum(nvars, delta // 2):
                        var = var_of[(imask, lmask, e)]
                        for em, cm in rp.terms.items():
                            key = tuple(x + y for x, y in zip(e, em))
                            s = acc.get((key, var), Fraction(0)) + cm
                            acc[(key, var)] = s
                for lmask in range(1 << len(tgt)):
                    if (lmask, jmask) not in entries:
                        continue
                    lp = Rt.cols[lmask].get(imask)
                    if lp is None:
                        continue
                    delta = entries[(lmask, jmask)]
                    for e in pc.monomials_of_exponent_sum(nvars, delta // 2):
                        var = var_of[(lmask, jmask, e)]
                        for em, cm in lp.terms.items():
                            key = tuple(x + y for x, y in zip(e, em))
                            s = acc.get((key, var), Fraction(0)) - cm
                            acc[(key, var)] = s
                for (key, var), cval in acc.items():
                    if cval:
                        add_term(("bi", k, jmask, imask, key), var, cval)

    def add_idem_constraint(side, idem):
        if side == "right":
            # M o idem = M: column j: sum_l M[i][l] idem[l][j] - M[i][j]
            for jmask in range(1 << len(src)):
                for imask in range(1 << len(tgt)):
                    acc = {}
                    for lmask, ip in idem.cols[jmask].items():
                        if (imask, lmask) not in entries:
                            continue
                        delta = entries[(imask, lmask)]
                        for e in pc.monomials_of_exponent_sum(nvars, delta // 2):
                            var = var_of[(imask, lmask, e)]
                            for em, cm in ip.terms.items():
                                key = tuple(x + y for x, y in zip(e, em))
                                acc[(key, var)] = acc.get((key, var),
                                                          Fraction(0)) + cm
                    if (imask, jmask) in entries:
                        delta = entries[(imask, jmask)]
                        for e in pc.monomials_of_exponent_sum(nvars, delta // 2):
                            var = var_of[(imask, jmask, e)]
                            acc[(e, var)] = acc.get((e, var), Fraction(0)) - 1
                    for (key, var), cval in acc.items():
                        if cval:
                            add_term((side, jmask, imask, key), var, cval)
        else:
            # idem o M = M
            for jmask in range(1 << len(src)):
                for imask in range(1 << len(tgt)):
                    acc = {}
                    for lmask in range(1 << len(tgt)):
                        if (lmask, jmask) not in entries:
                            continue
                        ip = idem.cols[lmask].get(imask)
                        if ip is None:
                            continue
                        delta = entries[(lmask, jmask)]
                        for e in pc.monomials_of_exponent_sum(nvars, delta // 2):
                            var = var_of[(lmask, jmask, e)]
                            for em, cm in ip.terms.items():
                                key = tuple(x + y for x, y in zip(e, em))
                                acc[(key, var)] = acc.get((key, var),
                                                          Fraction(0)) + cm
                    if (imask, jmask) in entries:
                        delta = entries[(imask, jmask)]
                        for e in pc.monomials_of_exponent_sum(nvars, delta // 2):
                            var = var_of[(imask, jmask, e)]
                            acc[(e, var)] = acc.get((e, var), Fraction(0)) - 1
                    for (key, var), cval in acc.items():
                        if cval:
                            add_term((side, jmask, imask, key), var, cval)

    if right_idem is not None:
        add_idem_constraint("right", right_idem)
    if left_idem is not None:
        add_idem_constraint("left", left_idem)

    # nullspace basis
    from .linalg import Echelon
    ech = Echelon()
    for row in rows.values():
        ech.add(row)
    pivots = set(ech.pivots)
    free = [v for v in range(len(vars_list)) if v not in pivots]
    basis = []
    for fv in free:
        vec = {fv: Fraction(1)}
        for c in sorted(ech.pivots, reverse=True):
            row = ech.pivots[c]
            val = Fraction(0)
            for kcol, coeff in row.items():
                if kcol != c:
                    val -= coeff * vec.get(kcol, Fraction(0))
            if val:
                vec[c] = val
            else:
                vec.pop(c, None)
        cols = [dict() for _ in range(1 << len(src))]
        for var, cval in vec.items():
            imask, jmask, e = vars_list[var]
            cur = cols[jmask].get(imask, MultiPoly.zero(nvars))
            cols[jmask][imask] = cur + MultiPoly.monomial(nvars, e, cval)
        for col in cols:
            for mkey in [mk for mk, p in col.items() if p.is_zero()]:
                del col[mkey]
        basis.append(BSMorphism(src, tgt, m, nvars, tuple(cols)))
    return basis


def hom_dim_at_degree(src, tgt, m, nvars, left_idem=None, right_idem=None):
    """Rational dimension of the space of degree-m bimodule maps."""
    return len(hom_space(src, tgt, m, nvars, left_idem, right_idem))


def predicted_hom_dim(src, tgt, m, nvars):
    """Hecke-side prediction: coefficient of v^m in the graded rank of the
    Hom space times the Hilbert series of R."""
    from . import hecke
    rank_poly = hecke.hom_rank_bs(tuple(src), tuple(tgt), nvars)
    total = 0
    for e, c in rank_poly.coeffs.items():
        total += c * pc.count_monomials(nvars, m - e)
    return total


def central_elements(word, m, nvars):
    """Basis of elements u of B_word of degree m with f u = u f for all f;
    these are the images of degree-(m) bimodule maps R -> B_word."""
    maps = hom_space((), tuple(word), m, nvars)
    return [h.apply(one_tensor((), nvars)) for h in maps]
