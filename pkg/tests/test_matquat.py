"""Matrices over the algebra: embedding, reduced norm, determinants."""

import math
import random

import pytest

from quatalg import (
    HAMILTON,
    AlgebraParams,
    DimensionMismatch,
    MatD,
    NotInvertible,
    Quat,
    UnsupportedAlgebra,
    dieudonne_det,
    embed_matrix,
    mat_inv,
    mat_is_invertible,
    reduced_norm,
)

from conftest import rand_matd, rand_quat

H = HAMILTON
I, J, K = Quat.basis(H, 1), Quat.basis(H, 2), Quat.basis(H, 3)


def _diag(params, *entries):
    k = len(entries)
    zero = Quat.zero(params)
    return MatD(params, [[entries[r] if r == c else zero for c in range(k)] for r in range(k)])


def test_matrix_arithmetic_basics():
    rng = random.Random(19)
    a = rand_matd(rng, 3)
    b = rand_matd(rng, 3)
    ident = MatD.identity(H, 3)
    assert a * ident == a
    assert (a + b) - b == a
    one_by_one = MatD(H, [[I]]) * MatD(H, [[J]])
    assert one_by_one == MatD(H, [[K]])


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        rand_matd(random.Random(0), 2) * rand_matd(random.Random(0), 3)
    with pytest.raises(DimensionMismatch):
        MatD(H, [[Quat.one(H), Quat.zero(H)]])


def test_embed_examples():
    emb = embed_matrix(MatD(H, [[I]]))
    assert emb.entry(0, 0).v == 1 and emb.entry(1, 1).v == -1
    assert not emb.entry(0, 1) and not emb.entry(1, 0)
    ident = MatD.identity(H, 3)
    assert embed_matrix(ident) == embed_matrix(ident) * embed_matrix(ident)


def test_embed_homomorphism():
    rng = random.Random(20)
    for _ in range(15):
        a = rand_matd(rng, 2)
        b = rand_matd(rng, 2)
        assert embed_matrix(a * b) == embed_matrix(a) * embed_matrix(b)
        assert embed_matrix(a + b) == embed_matrix(a) + embed_matrix(b)


def test_embed_homomorphism_general_params():
    params = AlgebraParams(-2, -3)
    rng = random.Random(21)
    for _ in range(10):
        a = rand_matd(rng, 2, params)
        b = rand_matd(rng, 2, params)
        assert embed_matrix(a * b) == embed_matrix(a) * embed_matrix(b)


def test_reduced_norm_examples():
    q = Quat(H, 1, 2, -1, 3)
    assert reduced_norm(MatD(H, [[q]])) == q.nrd()
    assert reduced_norm(MatD.identity(H, 3)) == 1
    assert reduced_norm(_diag(H, I, J)) == 1


def test_reduced_norm_multiplicative():
    rng = random.Random(22)
    for k in (2, 3):
        for _ in range(8):
            a = rand_matd(rng, k)
            b = rand_matd(rng, k)
            assert reduced_norm(a * b) == reduced_norm(a) * reduced_norm(b)


def test_reduced_norm_nonnegative_for_definite():
    rng = random.Random(23)
    for params in (H, AlgebraParams(-2, -5)):
        for _ in range(10):
            assert reduced_norm(rand_matd(rng, 2, params)) >= 0


def test_dieudonne_examples():
    assert dieudonne_det(MatD.identity(H, 2)) == 1.0
    assert dieudonne_det(MatD(H, [[Quat(H, 1, 1, 1, 1)]])) == 2.0
    row = [Quat(H, 1, 2, 0, 0), Quat(H, 0, 0, 3, 1)]
    singular = MatD(H, [row, row])
    assert dieudonne_det(singular) == 0.0


def test_dieudonne_requires_definite():
    split = AlgebraParams(1, -1)
    with pytest.raises(UnsupportedAlgebra):
        dieudonne_det(MatD.identity(split, 2))


def test_dieudonne_relations():
    rng = random.Random(24)
    for k in (1, 2, 3, 4):
        for _ in range(4):
            a = rand_matd(rng, k)
            b = rand_matd(rng, k)
            da, db, dab = dieudonne_det(a), dieudonne_det(b), dieudonne_det(a * b)
            assert math.isclose(da * da, float(reduced_norm(a)), rel_tol=1e-9, abs_tol=1e-9)
            assert math.isclose(dab, da * db, rel_tol=1e-9, abs_tol=1e-9)


def _rank_by_elimination(mat: MatD) -> int:
    # independent invertibility oracle: left row reduction over the algebra
    rows = [list(r) for r in mat.rows]
    k = mat.k
    rank = 0
    for col in range(k):
        pivot = None
        for r in range(rank, k):
            if rows[r][col].nrd() != 0:
                pivot = r
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = rows[rank][col].inv()
        rows[rank] = [inv * x for x in rows[rank]]
        for r in range(k):
            if r != rank and rows[r][col]:
                factor = rows[r][col]
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def test_invertibility_matches_elimination_oracle():
    rng = random.Random(25)
    cases = [rand_matd(rng, 2) for _ in range(15)]
    row = [rand_quat(rng), rand_quat(rng)]
    cases.append(MatD(H, [row, [x * Quat.scalar(H, 2) for x in row]]))  # forced singular
    cases.append(MatD.zeros(H, 2))
    # rows (i, 1) and (-1, i) are left-dependent: (-1, i) = i * (i, 1)
    cases.append(MatD(H, [[I, Quat.one(H)], [-Quat.one(H), I]]))
    for mat in cases:
        assert mat_is_invertible(mat) == (_rank_by_elimination(mat) == mat.k)
    assert reduced_norm(cases[-1]) == 0


def test_mat_inv_round_trip():
    rng = random.Random(26)
    for k in (1, 2, 3):
        for _ in range(6):
            mat = rand_matd(rng, k)
            if not mat_is_invertible(mat):
                continue
            inv = mat_inv(mat)
            assert mat * inv == MatD.identity(H, k)
            assert inv * mat == MatD.identity(H, k)
    with pytest.raises(NotInvertible):
        mat_inv(MatD.zeros(H, 2))
