"""The free-monoid ring over the algebra, and commutative polynomials over K.

Free side: words in noncommuting variables x1..x4, each of which
commutes with every algebra element, so a monomial is (basis index,
variable word) with the coefficient collected on the left.

Commutative side: polynomials in x1..x4 with coefficients in K = F(i),
used for the symbolic determinant of the embedded matrix.  The
determinant engine is a cofactor expansion memoized on column subsets;
it clears denominators column by column and works on plain integers,
which the determinant's multilinearity in columns makes exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from .algebra import AlgebraParams, KElem, Quat, as_scalar
from .errors import DimensionMismatch, NotInBaseField

_ZERO = Fraction(0)


class FreePoly:
    """Element of the free-monoid ring: sparse map (basis, word) -> Fraction."""

    __slots__ = ("params", "terms")

    def __init__(self, params: AlgebraParams, terms=None):
        self.params = params
        self.terms = {}
        if terms:
            for (beta, word), coeff in terms.items():
                c = as_scalar(coeff)
                if c:
                    self.terms[(beta, tuple(word))] = c

    @classmethod
    def _make(cls, params, terms: dict):
        self = object.__new__(cls)
        self.params = params
        self.terms = terms
        return self

    @classmethod
    def zero(cls, params):
        return cls._make(params, {})

    @classmethod
    def from_quat(cls, q: Quat):
        terms = {}
        for idx, c in enumerate(q.coords):
            if c:
                terms[(idx, ())] = c
        return cls._make(q.params, terms)

    @classmethod
    def x(cls, params, index: int):
        """The generator x_index, index in 1..4."""
        if index not in (1, 2, 3, 4):
            raise ValueError("variable index must be in 1..4")
        return cls._make(params, {(0, (index,)): Fraction(1)})

    def _coerce(self, other):
        if isinstance(other, FreePoly):
            if other.params != self.params:
                raise ValueError("operands live in different algebras")
            return other
        if isinstance(other, Quat):
            if other.params != self.params:
                raise ValueError("operands live in different algebras")
            return FreePoly.from_quat(other)
        if isinstance(other, (int, Fraction)):
            return FreePoly.from_quat(Quat.scalar(self.params, other))
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for key, c in other.terms.items():
            s = terms.get(key)
            if s is None:
                terms[key] = c
            else:
                s = s + c
                if s:
                    terms[key] = s
                else:
                    del terms[key]
        return FreePoly._make(self.params, terms)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.__add__(-other)

    def __neg__(self):
        return FreePoly._make(self.params, {k: -c for k, c in self.terms.items()})

    def scale(self, value) -> "FreePoly":
        s = as_scalar(value)
        if not s:
            return FreePoly.zero(self.params)
        return FreePoly._make(self.params, {k: c * s for k, c in self.terms.items()})

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        table = self.params.table
        acc = {}
        for (b1, w1), c1 in self.terms.items():
            row = table[b1]
            for (b2, w2), c2 in other.terms.items():
                coeff, idx = row[b2]
                key = (idx, w1 + w2)
                c = c1 * c2 * coeff
                s = acc.get(key)
                acc[key] = c if s is None else s + c
        return FreePoly._make(self.params, {k: c for k, c in acc.items() if c})

    def __rmul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other.__mul__(self)

    def degree(self):
        if not self.terms:
            return None
        return max(len(word) for _, word in self.terms)

    def eval_at(self, coords) -> Quat:
        """Substitute central scalars for the x's; a ring homomorphism to D."""
        values = tuple(as_scalar(c) for c in coords)
        if len(values) != 4:
            raise ValueError("need exactly four coordinates")
        out = [_ZERO, _ZERO, _ZERO, _ZERO]
        for (beta, word), c in self.terms.items():
            for v in word:
                c = c * values[v - 1]
            out[beta] += c
        return Quat._make(self.params, tuple(out))

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, FreePoly):
            return NotImplemented
        return self.params == other.params and self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "FreePoly(0)"
        parts = [
            f"{c}*e{b}*x{''.join(map(str, w))}"
            for (b, w), c in sorted(self.terms.items(), key=lambda t: (len(t[0][1]), t[0][1], t[0][0]))
        ]
        return "FreePoly(" + " + ".join(parts) + ")"


class CommPoly:
    """Commutative polynomial in x1..x4 with coefficients in K = F(i).

    Keys are exponent 4-tuples; values are KElem over the same a.
    """

    __slots__ = ("a", "terms")

    def __init__(self, a: Fraction, terms=None):
        self.a = a
        self.terms = {}
        if terms:
            for exps, coeff in terms.items():
                if coeff:
                    self.terms[tuple(exps)] = coeff

    @classmethod
    def _make(cls, a, terms: dict):
        self = object.__new__(cls)
        self.a = a
        self.terms = terms
        return self

    @classmethod
    def zero(cls, a):
        return cls._make(a, {})

    @classmethod
    def const(cls, value: KElem):
        if not value:
            return cls._make(value.a, {})
        return cls._make(value.a, {(0, 0, 0, 0): value})

    @classmethod
    def var(cls, a, index: int, coeff: KElem | None = None):
        """coeff * x_index (default coefficient 1), index in 1..4."""
        if coeff is None:
            coeff = KElem.one(a)
        if not coeff:
            return cls.zero(a)
        exps = [0, 0, 0, 0]
        exps[index - 1] = 1
        return cls._make(a, {tuple(exps): coeff})

    def __add__(self, other):
        if not isinstance(other, CommPoly):
            return NotImplemented
        terms = dict(self.terms)
        for exps, c in other.terms.items():
            s = terms.get(exps)
            if s is None:
                terms[exps] = c
            else:
                s = s + c
                if s:
                    terms[exps] = s
                else:
                    del terms[exps]
        return CommPoly._make(self.a, terms)

    def __sub__(self, other):
        if not isinstance(other, CommPoly):
            return NotImplemented
        return self.__add__(-other)

    def __neg__(self):
        return CommPoly._make(self.a, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, KElem)):
            return self.scale(other)
        if not isinstance(other, CommPoly):
            return NotImplemented
        acc = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exps = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3])
                c = c1 * c2
                s = acc.get(exps)
                acc[exps] = c if s is None else s + c
        return CommPoly._make(self.a, {e: c for e, c in acc.items() if c})

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, KElem)):
            return self.scale(other)
        return NotImplemented

    def scale(self, value) -> "CommPoly":
        if isinstance(value, KElem):
            coeff = value
        else:
            coeff = KElem(as_scalar(value), _ZERO, self.a)
        if not coeff:
            return CommPoly.zero(self.a)
        return CommPoly._make(self.a, {e: c * coeff for e, c in self.terms.items()})

    def degree(self):
        if not self.terms:
            return None
        return max(sum(e) for e in self.terms)

    def eval_at(self, coords) -> KElem:
        values = tuple(as_scalar(c) for c in coords)
        total = KElem.zero(self.a)
        for exps, c in self.terms.items():
            scal = Fraction(1)
            for v, e in zip(values, exps):
                scal *= v ** e
            total = total + c * scal
        return total

    def is_over_base(self) -> bool:
        """True when every coefficient lies in F (zero i-part)."""
        return all(c.v == 0 for c in self.terms.values())

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, CommPoly):
            return NotImplemented
        return self.a == other.a and self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "CommPoly(0)"
        parts = [f"({c.u}+{c.v}i)*x^{e}" for e, c in sorted(self.terms.items())]
        return "CommPoly(" + " + ".join(parts) + ")"


def _pack_shift(rows):
    """Bits per variable so packed exponent adds cannot carry, or None."""
    # conservative: sum over columns of the per-column max exponent
    m = len(rows)
    totals = [0, 0, 0, 0]
    for c in range(m):
        col_max = [0, 0, 0, 0]
        for r in range(m):
            for exps in rows[r][c].terms:
                for v in range(4):
                    if exps[v] > col_max[v]:
                        col_max[v] = exps[v]
        for v in range(4):
            totals[v] += col_max[v]
    bound = max(totals) + 1
    shift = max(bound.bit_length(), 4)
    if 4 * shift > 60:
        return None
    return shift


def comm_det(rows) -> CommPoly:
    """Exact determinant of a square matrix of CommPoly entries.

    Cofactor expansion memoized on column subsets: the minor over the
    bottom s rows and a column set S is computed once and shared by all
    expansions that need it.  Denominators are cleared per column so the
    inner loops run on plain integers.
    """
    m = len(rows)
    if m == 0:
        raise DimensionMismatch("empty matrix")
    for row in rows:
        if len(row) != m:
            raise DimensionMismatch("matrix is not square")
    a = rows[0][0].a

    shift = _pack_shift(rows)
    if shift is None or a.denominator != 1:
        return _comm_det_generic(rows, a)
    a_int = a.numerator

    # clear denominators column by column; det is multilinear in columns
    col_scale = []
    for c in range(m):
        dens = [1]
        for r in range(m):
            for coeff in rows[r][c].terms.values():
                dens.append(coeff.u.denominator)
                dens.append(coeff.v.denominator)
        col_scale.append(lcm(*dens))

    packed = []
    for r in range(m):
        prow = []
        for c in range(m):
            d = col_scale[c]
            entry = {}
            for exps, coeff in rows[r][c].terms.items():
                code = exps[0] + (exps[1] << shift) + (exps[2] << 2 * shift) + (exps[3] << 3 * shift)
                nu = coeff.u.numerator * (d // coeff.u.denominator)
                nv = coeff.v.numerator * (d // coeff.v.denominator)
                entry[code] = (nu, nv)
            prow.append(entry)
        packed.append(prow)

    minors = [None] * (1 << m)
    minors[0] = {0: (1, 0)}
    order = sorted(range(1, 1 << m), key=lambda x: x.bit_count())
    for mask in order:
        row = m - mask.bit_count()
        entries = packed[row]
        acc = {}
        sign = 1
        rest = mask
        while rest:
            low = rest & -rest
            c = low.bit_length() - 1
            rest ^= low
            sub = minors[mask ^ low]
            ent = entries[c]
            if sub and ent:
                for e1, (u1, v1) in ent.items():
                    for e2, (u2, v2) in sub.items():
                        code = e1 + e2
                        u = u1 * u2 + a_int * v1 * v2
                        v = u1 * v2 + v1 * u2
                        if sign < 0:
                            u = -u
                            v = -v
                        got = acc.get(code)
                        if got is None:
                            acc[code] = (u, v)
                        else:
                            acc[code] = (got[0] + u, got[1] + v)
            sign = -sign
        minors[mask] = {e: uv for e, uv in acc.items() if uv[0] or uv[1]}

    scale = 1
    for d in col_scale:
        scale *= d
    lowmask = (1 << shift) - 1
    terms = {}
    for code, (u, v) in minors[(1 << m) - 1].items():
        exps = (
            code & lowmask,
            (code >> shift) & lowmask,
            (code >> 2 * shift) & lowmask,
            (code >> 3 * shift) & lowmask,
        )
        terms[exps] = KElem(Fraction(u, scale), Fraction(v, scale), a)
    return CommPoly(a, terms)


def _comm_det_generic(rows, a) -> CommPoly:
    # fallback lane: same subset memoization, Fraction coefficients
    m = len(rows)
    minors = [None] * (1 << m)
    minors[0] = CommPoly.const(KElem.one(a))
    order = sorted(range(1, 1 << m), key=lambda x: x.bit_count())
    for mask in order:
        row = m - mask.bit_count()
        acc = CommPoly.zero(a)
        sign = 1
        rest = mask
        while rest:
            low = rest & -rest
            c = low.bit_length() - 1
            rest ^= low
            term = rows[row][c] * minors[mask ^ low]
            acc = acc + (term if sign > 0 else -term)
            sign = -sign
        minors[mask] = acc
    return minors[(1 << m) - 1]


def comm_to_free_lift(poly: CommPoly, params: AlgebraParams) -> FreePoly:
    """Lift a commutative polynomial over F to the free-monoid ring.

    Each monomial x1^n1..x4^n4 maps to the sorted word x1..x1x2..x2...
    (ascending variable indices) with the coefficient on the basis
    element 1.  Any lift agrees with this one after substituting central
    scalars; the sorted choice just fixes a canonical form.

    Raises NotInBaseField when some coefficient has a nonzero i-part.
    """
    terms = {}
    for exps, coeff in poly.terms.items():
        if coeff.v != 0:
            raise NotInBaseField(f"coefficient {coeff!r} of x^{exps} is not rational")
        word = (1,) * exps[0] + (2,) * exps[1] + (3,) * exps[2] + (4,) * exps[3]
        terms[(0, word)] = coeff.u
    return FreePoly._make(params, terms)
