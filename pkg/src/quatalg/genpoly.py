"""General polynomials: the variable z commutes with rationals only.

A monomial e_b0 * z * e_b1 * z * ... * z * e_bn is stored as the index
word (b0, ..., bn); its degree is n.  A polynomial is a sparse map from
words to nonzero rational coefficients, so equality of polynomials is
dict equality.  Coefficients from the algebra are expanded through the
basis at construction time, which makes the stored form canonical:
dz^2, zdz and z^2d are three different words for non-central d.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import AlgebraParams, Quat, as_scalar
from .errors import DimensionMismatch


class GenPoly:
    """Element of the general polynomial ring over (a,b/F)."""

    __slots__ = ("params", "terms", "_dense")

    def __init__(self, params: AlgebraParams, terms=None):
        self.params = params
        self.terms = {}
        if terms:
            for word, coeff in terms.items():
                word = tuple(word)
                if not word or any(b not in (0, 1, 2, 3) for b in word):
                    raise ValueError(f"invalid index word {word!r}")
                c = as_scalar(coeff)
                if c:
                    self.terms[word] = c
        self._dense = None

    @classmethod
    def _make(cls, params, terms: dict):
        # terms must already be canonical: tuple keys, nonzero Fractions
        self = object.__new__(cls)
        self.params = params
        self.terms = terms
        self._dense = None
        return self

    @classmethod
    def zero(cls, params):
        return cls._make(params, {})

    @classmethod
    def one(cls, params):
        return cls._make(params, {(0,): Fraction(1)})

    @classmethod
    def constant(cls, params, value):
        c = as_scalar(value)
        return cls._make(params, {(0,): c} if c else {})

    @classmethod
    def z(cls, params):
        """The monomial z itself, stored as the word (0, 0)."""
        return cls._make(params, {(0, 0): Fraction(1)})

    @classmethod
    def from_quat(cls, q: Quat):
        terms = {}
        for idx, c in enumerate(q.coords):
            if c:
                terms[(idx,)] = c
        return cls._make(q.params, terms)

    def _coerce(self, other):
        if isinstance(other, GenPoly):
            if other.params != self.params:
                raise ValueError("operands live in different algebras")
            return other
        if isinstance(other, Quat):
            if other.params != self.params:
                raise ValueError("operands live in different algebras")
            return GenPoly.from_quat(other)
        if isinstance(other, (int, Fraction)):
            return GenPoly.constant(self.params, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for word, c in other.terms.items():
            s = terms.get(word)
            if s is None:
                terms[word] = c
            else:
                s = s + c
                if s:
                    terms[word] = s
                else:
                    del terms[word]
        return GenPoly._make(self.params, terms)

    def __radd__(self, other):
        return self.__add__(other)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.__add__(-other)

    def __neg__(self):
        return GenPoly._make(self.params, {w: -c for w, c in self.terms.items()})

    def scale(self, value) -> "GenPoly":
        """Multiply every coefficient by a central scalar."""
        s = as_scalar(value)
        if not s:
            return GenPoly.zero(self.params)
        return GenPoly._make(self.params, {w: c * s for w, c in self.terms.items()})

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        table = self.params.table
        acc = {}
        for wu, cu in self.terms.items():
            head = wu[:-1]
            row = table[wu[-1]]
            for wv, cv in other.terms.items():
                # the two boundary basis letters merge: e_x e_y = s*e_(x^y)
                coeff, idx = row[wv[0]]
                word = head + (idx,) + wv[1:]
                c = cu * cv * coeff
                s = acc.get(word)
                acc[word] = c if s is None else s + c
        return GenPoly._make(self.params, {w: c for w, c in acc.items() if c})

    def __rmul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other.__mul__(self)

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("only nonnegative integer powers are defined")
        result = GenPoly.one(self.params)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def degree(self):
        """Maximal word degree, or None for the zero polynomial."""
        if not self.terms:
            return None
        return max(len(w) for w in self.terms) - 1

    def substitute(self, d: Quat) -> Quat:
        """Replace z by d and evaluate in the algebra.

        Substitution at any point of the algebra is a ring homomorphism
        on this ring; that property is what distinguishes it from the
        left-coefficient polynomial ring.
        """
        if d.params != self.params:
            raise ValueError("substitution point lives in a different algebra")
        from . import _fast

        coords = _fast.substitute(self, d)
        if coords is not None:
            return Quat._make(self.params, coords)
        return self._substitute_generic(d)

    def _substitute_generic(self, d: Quat) -> Quat:
        params = self.params
        memo: dict[tuple, Quat] = {}

        def value(word):
            got = memo.get(word)
            if got is None:
                if len(word) == 1:
                    got = Quat.basis(params, word[0])
                else:
                    got = value(word[:-1]) * d * Quat.basis(params, word[-1])
                memo[word] = got
            return got

        total = Quat.zero(params)
        for word, coeff in self.terms.items():
            total = total + value(word) * coeff
        return total

    def conj(self) -> "GenPoly":
        """Conjugation operator: P -> (-P + i P i^-1 + j P j^-1 + ij P (ij)^-1)/2.

        For every substitution point x this satisfies
        conj(P)(x) == P(x).conj(); it is linear, degree-preserving and an
        involution.  The three basis inverses exist for any nonzero a, b.
        """
        params = self.params
        acc = -self
        for idx in (1, 2, 3):
            t = Quat.basis(params, idx)
            acc = acc + GenPoly.from_quat(t) * self * GenPoly.from_quat(t.inv())
        return acc.scale(Fraction(1, 2))

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, GenPoly):
            return NotImplemented
        return self.params == other.params and self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "GenPoly(0)"
        parts = [f"{c}*{w}" for w, c in sorted(self.terms.items(), key=lambda t: (len(t[0]), t[0]))]
        return "GenPoly(" + " + ".join(parts) + ")"


def gen_matmul(lhs, rhs):
    """Product of two matrices with GenPoly entries, order preserved."""
    if len(lhs[0]) != len(rhs):
        raise DimensionMismatch("inner dimensions differ")
    params = lhs[0][0].params
    out = []
    for r in range(len(lhs)):
        row = []
        for c in range(len(rhs[0])):
            acc = GenPoly.zero(params)
            for s in range(len(rhs)):
                acc = acc + lhs[r][s] * rhs[s][c]
            row.append(acc)
        out.append(row)
    return out


def gen_matsub(lhs, rhs):
    """Entrywise difference of two GenPoly matrices."""
    return [[x - y for x, y in zip(rl, rr)] for rl, rr in zip(lhs, rhs)]
