# Left eigenvalues of quaternion matrices.
#
# lambda is a left eigenvalue of M when M v = lambda v for some nonzero
# vector v.  The characteristic polynomial (a general polynomial of
# degree 2k) has the left eigenvalues as its exact roots: its value at
# any point equals the reduced norm of M - lambda I.  For 4x4 matrices
# with an invertible lower-left block the degree-8 polynomial can be
# traded for one of degree 6.

import random

from quatalg import (
    HAMILTON,
    MatD,
    Quat,
    char_poly,
    format_poly,
    is_left_eigenvalue,
    plant_eigenpair,
    quadratic_2x2,
    reduced_norm,
    schur_sextic,
    sextic_eigen_test,
)

H = HAMILTON
rng = random.Random(7)


def rand_quat():
    return Quat(H, *[rng.randint(-3, 3) for _ in range(4)])


# ------------------------------------------------------------------
# 1x1 warm-up: the characteristic polynomial of [q] vanishes exactly at q
# ------------------------------------------------------------------
q = rand_quat()
p = char_poly(MatD(H, [[q]]))
print("char poly of a 1x1:", format_poly(p))
print("vanishes at its entry:", p.substitute(q) == Quat.zero(H))

# ------------------------------------------------------------------
# planting a ground-truth eigenpair in a 3x3
# ------------------------------------------------------------------
base = MatD(H, [[rand_quat() for _ in range(3)] for _ in range(3)])
vec = (rand_quat() + Quat.one(H), rand_quat(), rand_quat())
lam = rand_quat()
mat = plant_eigenpair(base, vec, lam)
print("\nplanted 3x3: M v == lambda v:", mat.mul_vector(vec) == tuple(lam * v for v in vec))
print("is_left_eigenvalue:", is_left_eigenvalue(mat, lam))

poly = char_poly(mat)
print("degree (2k):", poly.degree())
print("char poly vanishes at lambda:", poly.substitute(lam) == Quat.zero(H))
probe = rand_quat()
print(
    "random probe matches the determinant criterion:",
    (poly.substitute(probe) == Quat.zero(H))
    == (reduced_norm(mat - MatD.identity(H, 3).scale_left(probe)) == 0),
)

# ------------------------------------------------------------------
# 2x2: one quadratic instead of the degree-4 characteristic polynomial
# ------------------------------------------------------------------
zero, one = Quat.zero(H), Quat.one(H)
swap = MatD(H, [[zero, one], [one, zero]])
quad = quadratic_2x2(swap)
print("\nswap-matrix quadratic:", format_poly(quad))
print("roots +1 and -1:", quad.substitute(one) == Quat.zero(H), quad.substitute(-one) == Quat.zero(H))

# ------------------------------------------------------------------
# 4x4: the sextic block reduction
# ------------------------------------------------------------------
while True:
    lam4 = rand_quat()
    vec4 = tuple(rand_quat() + Quat.one(H) for _ in range(4))
    mat4 = plant_eigenpair(
        MatD(H, [[rand_quat() for _ in range(4)] for _ in range(4)]), vec4, lam4
    )
    from quatalg import mat_is_invertible

    if mat_is_invertible(mat4.submatrix((2, 3), (0, 1))):
        break

data = schur_sextic(mat4)
print("\n4x4 corner degrees (e f g h):", [p.degree() for p in (data.e, data.f, data.g, data.h)])
print("sextic degree:", data.sextic.degree(), " (char poly degree:", char_poly(mat4).degree(), ")")
print("sextic test at the planted eigenvalue:", sextic_eigen_test(data, lam4))
probe = rand_quat()
print(
    "sextic test agrees with the determinant at a probe:",
    sextic_eigen_test(data, probe)
    == (reduced_norm(mat4 - MatD.identity(H, 4).scale_left(probe)) == 0),
)
