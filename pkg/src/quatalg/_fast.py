"""Vectorized exact kernels for the (-1,-1) algebra.

Everything here is a pure optimization: each entry point either returns
a value exactly equal to what the generic implementation produces, or
None so the caller falls back.  The word algebra of the basis (products
of basis elements are +-1 times the XOR-indexed basis element when
a = b = -1) lets degree-n monomial bookkeeping run as int64 array work;
all integer magnitudes are bounded before numpy is trusted with them.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

import numpy as np

_EXACT_FLOAT = 1 << 53  # integer sums below this are exact in float64
_INT64_SAFE = 1 << 61
_LAMBDA_SAFE = 1 << 60
_SMALL_POLY = 30


def _is_hamilton(params) -> bool:
    return params.a == -1 and params.b == -1


def _sign_table(params) -> np.ndarray:
    table = params.table
    out = np.empty((4, 4), dtype=np.int64)
    for x in range(4):
        for y in range(4):
            coeff, _ = table[x][y]
            out[x, y] = int(coeff)
    return out


def _word_index(word) -> int:
    idx = 0
    for b in word:
        idx = (idx << 2) | b
    return idx


def _build_dense(poly):
    """Group a polynomial's terms by degree into index/numerator arrays."""
    by_degree: dict[int, list] = {}
    const = [Fraction(0)] * 4
    for word, coeff in poly.terms.items():
        n = len(word) - 1
        if n == 0:
            const[word[0]] += coeff
        else:
            by_degree.setdefault(n, []).append((word, coeff))
    degs = {}
    for n, items in by_degree.items():
        den = lcm(*(c.denominator for _, c in items))
        idx = np.fromiter((_word_index(w) for w, _ in items), dtype=np.int64, count=len(items))
        nums = np.array(
            [c.numerator * (den // c.denominator) for _, c in items], dtype=object
        )
        degs[n] = (idx, nums, den)
    return {"const": tuple(const), "degs": degs}


def substitute(poly, point):
    """Evaluate poly at a quaternion point, or None when not applicable."""
    params = poly.params
    if not _is_hamilton(params):
        return None
    if poly._dense is None and len(poly.terms) < _SMALL_POLY:
        return None

    dlam = lcm(*(c.denominator for c in point.coords))
    lam = [int(c * dlam) for c in point.coords]
    l1 = sum(abs(v) for v in lam)

    if poly._dense is None:
        if any(len(w) > 26 for w in poly.terms):  # word index must fit in int64
            return None
        poly._dense = _build_dense(poly)
    dense = poly._dense
    max_deg = max(dense["degs"], default=0)
    if l1 > 1 and l1 ** max_deg > _LAMBDA_SAFE:
        return None

    sgn = _sign_table(params)
    # right multiplication by the scaled point, in basis coordinates
    mat = np.empty((4, 4), dtype=np.int64)
    for r in range(4):
        for s in range(4):
            mat[r, s] = lam[r ^ s] * sgn[r, r ^ s]
    perms = [np.array([s ^ x for s in range(4)]) for x in range(4)]
    pscale = [np.array([int(sgn[s ^ x, x]) for s in range(4)], dtype=np.int64) for x in range(4)]

    coords = list(dense["const"])
    for n, (idx, nums, den) in dense["degs"].items():
        count = len(idx)
        v = np.zeros((count, 4), dtype=np.int64)
        d0 = (idx >> (2 * n)) & 3
        v[np.arange(count), d0] = 1
        for t in range(1, n + 1):
            v = v @ mat
            dt = (idx >> (2 * (n - t))) & 3
            for x in range(4):
                rows = dt == x
                if rows.any():
                    v[rows] = v[rows][:, perms[x]] * pscale[x]
        scale = den * dlam ** n
        v_obj = v.astype(object)
        for s in range(4):
            dot = int(np.sum(nums * v_obj[:, s]))
            if dot:
                coords[s] += Fraction(dot, scale)
    return tuple(coords)


def _eps_tables(qs):
    """Per-generator sign tables, or None if the XOR pattern does not hold."""
    eps = []
    for k, q in enumerate(qs, start=1):
        g = k - 1
        if len(q.terms) != 4:
            return None
        table = np.zeros(4, dtype=np.int64)
        seen = 0
        for word, coeff in q.terms.items():
            if len(word) != 2 or word[1] != word[0] ^ g:
                return None
            if coeff == Fraction(1, 4):
                table[word[0]] = 1
            elif coeff == Fraction(-1, 4):
                table[word[0]] = -1
            else:
                return None
            seen |= 1 << word[0]
        if seen != 0b1111:
            return None
        eps.append(table)
    return eps


def h_inv(poly, qs):
    """Inverse isomorphism as (terms, dense-cache), or None when not applicable.

    For each free monomial the choice of one term from every q factor is
    enumerated as an integer grid; the resulting general-polynomial word
    and its sign come out of XOR arithmetic and sign-table lookups.
    """
    params = poly.params
    if not _is_hamilton(params):
        return None
    if len(poly.terms) < _SMALL_POLY:
        return None
    eps = _eps_tables(qs)
    if eps is None:
        return None
    sgn = _sign_table(params)

    by_degree: dict[int, list] = {}
    const = [Fraction(0)] * 4
    for (beta, word), coeff in poly.terms.items():
        n = len(word)
        if n == 0:
            const[beta] += coeff
        else:
            by_degree.setdefault(n, []).append((beta, word, coeff))

    terms: dict = {}
    for b, c in enumerate(const):
        if c:
            terms[(b,)] = c

    if by_degree and max(by_degree) > 10:  # 4**(n+1) accumulator stays small
        return None

    degs = {}
    for n, items in sorted(by_degree.items()):
        den = lcm(*(c.denominator for _, _, c in items))
        nums = [c.numerator * (den // c.denominator) for _, _, c in items]
        weight = sum(abs(v) for v in nums)
        if weight >= _INT64_SAFE:
            return None
        use_float = weight < _EXACT_FLOAT

        size = 1 << (2 * n)
        grid = np.arange(size, dtype=np.int64)
        sdig = [(grid >> (2 * (n - t))) & 3 for t in range(1, n + 1)]

        acc = np.zeros(size << 2, dtype=np.float64 if use_float else np.int64)
        for (beta, word, _), num in zip(items, nums):
            s1 = sdig[0]
            sign = eps[word[0] - 1][s1] * sgn[beta, s1]
            idx = (s1 ^ beta) << (2 * n)
            prev_out = s1 ^ (word[0] - 1)
            for t in range(1, n):
                st = sdig[t]
                sign = sign * sgn[prev_out, st]
                g = word[t] - 1
                sign = sign * eps[g][st]
                idx = idx | ((prev_out ^ st) << (2 * (n - t)))
                prev_out = st ^ g
            idx = idx | prev_out
            if use_float:
                acc += np.bincount(idx, weights=(sign * num).astype(np.float64), minlength=len(acc))
            else:
                np.add.at(acc, idx, sign * num)

        if use_float:
            acc = np.rint(acc).astype(np.int64)
        nz = np.nonzero(acc)[0]
        vals = acc[nz].tolist()
        scale = den << (2 * n)  # den * 4**n
        digit_lists = [((nz >> (2 * (n - t))) & 3).tolist() for t in range(n + 1)]
        words = list(zip(*digit_lists))
        fracs = [Fraction(v, scale) for v in vals]
        terms.update(zip(words, fracs))
        degs[n] = (nz, np.array(vals, dtype=object), scale)

    dense = {"const": tuple(const), "degs": degs}
    return terms, dense
