"""Laurent polynomials in v over the rationals (integral in all the places
the Hecke algebra needs; rationals appear only through renormalized
algebroid composition)."""

from __future__ import annotations

from fractions import Fraction


class LaurentPoly:
    """Sparse Laurent polynomial: exponent -> nonzero coefficient."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = {} if coeffs is None else coeffs

    @staticmethod
    def zero():
        return LaurentPoly()

    @staticmethod
    def const(c):
        c = Fraction(c)
        return LaurentPoly({0: c} if c else {})

    @staticmethod
    def v(power=1, coeff=1):
        coeff = Fraction(coeff)
        return LaurentPoly({power: coeff} if coeff else {})

    @staticmethod
    def parse(pairs):
        """From a {exponent: coefficient} mapping."""
        return LaurentPoly({int(e): Fraction(c) for e, c in pairs.items() if c})

    def __bool__(self):
        return bool(self.coeffs)

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        t = dict(self.coeffs)
        for e, c in other.coeffs.items():
            s = t.get(e, 0) + c
            if s:
                t[e] = s
            else:
                del t[e]
        return LaurentPoly(t)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(other)
        t = {}
        for ea, ca in self.coeffs.items():
            for eb, cb in other.coeffs.items():
                e = ea + eb
                s = t.get(e, 0) + ca * cb
                if s:
                    t[e] = s
                else:
                    del t[e]
        return LaurentPoly(t)

    __rmul__ = __mul__

    def bar(self):
        """The involution v -> v^{-1}."""
        return LaurentPoly({-e: c for e, c in self.coeffs.items()})

    def shift(self, k):
        """Multiply by v^k."""
        return LaurentPoly({e + k: c for e, c in self.coeffs.items()})

    def coefficient(self, e):
        return self.coeffs.get(e, Fraction(0))

    def at_one(self):
        return sum(self.coeffs.values(), Fraction(0))

    def is_palindromic(self):
        return self == self.bar()

    def min_exp(self):
        return min(self.coeffs) if self.coeffs else None

    def max_exp(self):
        return max(self.coeffs) if self.coeffs else None

    def divexact(self, other):
        """Exact division; raises ArithmeticError on a remainder."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero Laurent polynomial")
        if self.is_zero():
            return LaurentPoly()
        shift = self.min_exp() - other.min_exp()
        rem = {e - self.min_exp(): c for e, c in self.coeffs.items()}
        div = {e - other.min_exp(): c for e, c in other.coeffs.items()}
        lead = max(div)
        lc = div[lead]
        out = {}
        while rem and max(rem) >= lead:
            e = max(rem)
            q = rem[e] / lc
            out[e - lead] = q
            for eb, cb in div.items():
                k = e - lead + eb
                s = rem.get(k, 0) - q * cb
                if s:
                    rem[k] = s
                else:
                    rem.pop(k, None)
        if rem:
            raise ArithmeticError("inexact Laurent division")
        return LaurentPoly({e + shift: c for e, c in out.items()})

    def text(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs):
            c = self.coeffs[e]
            if e == 0:
                parts.append(str(c))
            else:
                base = f"v^{e}" if e != 1 else "v"
                parts.append(base if c == 1 else f"{c}*{base}")
        return " + ".join(parts)

    def to_json(self):
        return {str(e): str(c) for e, c in sorted(self.coeffs.items())}

    def __repr__(self):
        return f"LaurentPoly({self.text()})"
