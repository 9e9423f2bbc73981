"""The vectorized kernels must agree exactly with the generic routes."""

import random
from fractions import Fraction

from quatalg import HAMILTON, FreePoly, GenPoly, Quat, generators
from quatalg import _fast

from conftest import rand_freepoly

H = HAMILTON


def _bulk_genpoly(rng, max_degree, terms):
    out = {}
    for _ in range(terms):
        deg = rng.randint(0, max_degree)
        word = tuple(rng.randint(0, 3) for _ in range(deg + 1))
        out[word] = Fraction(rng.randint(-9, 9), rng.choice((1, 2, 4, 8)))
    return GenPoly(H, out)


def test_substitute_fast_vs_generic():
    rng = random.Random(41)
    for _ in range(25):
        poly = _bulk_genpoly(rng, 4, 60)
        lam = Quat(H, *[Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(4)])
        fast = _fast.substitute(poly, lam)
        assert fast is not None
        assert Quat._make(H, fast) == poly._substitute_generic(lam)


def test_substitute_fast_declines_small_polys():
    poly = GenPoly.z(H)
    assert poly._dense is None
    assert _fast.substitute(poly, Quat.one(H)) is None


def _h_inv_generic(poly, qs):
    cache = {(): GenPoly.one(H)}

    def product(word):
        got = cache.get(word)
        if got is None:
            got = product(word[:-1]) * qs[word[-1] - 1]
            cache[word] = got
        return got

    acc = {}
    for (beta, word), coeff in poly.terms.items():
        left = GenPoly.from_quat(Quat.basis(H, beta) * coeff)
        for w, c in (left * product(word)).terms.items():
            s = acc.get(w)
            acc[w] = c if s is None else s + c
    return {w: c for w, c in acc.items() if c}


def _bulk_freepoly(rng, max_degree, terms):
    out = {}
    while len(out) < terms:
        deg = rng.randint(0, max_degree)
        word = tuple(rng.randint(1, 4) for _ in range(deg))
        key = (rng.randint(0, 3), word)
        out[key] = Fraction(rng.randint(1, 9) * rng.choice((-1, 1)), rng.choice((1, 2, 4)))
    return FreePoly(H, out)


def test_h_inv_fast_vs_generic():
    rng = random.Random(42)
    qs = generators(H)
    for _ in range(15):
        poly = _bulk_freepoly(rng, 4, 45)
        out = _fast.h_inv(poly, qs)
        assert out is not None
        terms, dense = out
        assert terms == _h_inv_generic(poly, qs)
        # the attached dense cache evaluates consistently too
        wrapped = GenPoly._make(H, terms)
        wrapped._dense = dense
        lam = Quat(H, 1, -2, 0, 3)
        assert wrapped.substitute(lam) == wrapped._substitute_generic(lam)


def test_h_inv_fast_declines_other_algebras():
    from quatalg import AlgebraParams

    params = AlgebraParams(-2, -3)
    qs = generators(params)
    poly = rand_freepoly(random.Random(43), params=params, max_degree=2, terms=40)
    assert _fast.h_inv(poly, qs) is None
