"""Shared random generators for the test suite.

Coordinates are drawn from small integers so exact arithmetic stays
cheap; instance generators resample until side conditions (nonzero,
invertible) hold.
"""

from fractions import Fraction

from quatalg import HAMILTON, FreePoly, GenPoly, MatD, Quat, reduced_norm


def rand_quat(rng, params=HAMILTON, lo=-3, hi=3):
    return Quat(params, *[rng.randint(lo, hi) for _ in range(4)])


def rand_nonzero_quat(rng, params=HAMILTON):
    while True:
        q = rand_quat(rng, params)
        if q:
            return q


def rand_genpoly(rng, params=HAMILTON, max_degree=3, terms=8):
    out = {}
    for _ in range(terms):
        deg = rng.randint(0, max_degree)
        word = tuple(rng.randint(0, 3) for _ in range(deg + 1))
        out[word] = Fraction(rng.randint(-4, 4), rng.choice((1, 1, 2, 4)))
    return GenPoly(params, out)


def rand_freepoly(rng, params=HAMILTON, max_degree=3, terms=8):
    out = {}
    for _ in range(terms):
        deg = rng.randint(0, max_degree)
        word = tuple(rng.randint(1, 4) for _ in range(deg))
        out[(rng.randint(0, 3), word)] = Fraction(rng.randint(-4, 4), rng.choice((1, 2)))
    return FreePoly(params, out)


def rand_matd(rng, k, params=HAMILTON):
    return MatD(params, [[rand_quat(rng, params) for _ in range(k)] for _ in range(k)])


def rand_invertible_matd(rng, k, params=HAMILTON):
    while True:
        mat = rand_matd(rng, k, params)
        if reduced_norm(mat) != 0:
            return mat
