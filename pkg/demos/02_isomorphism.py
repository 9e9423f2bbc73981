# The isomorphism between general polynomials and the free-monoid ring.
#
# h fixes the algebra and sends z to x1 + i x2 + j x3 + ij x4, where the
# x's commute with algebra constants but not with each other.  It is a
# ring isomorphism; its inverse is pinned down by the preimages of the
# four generators, found by a conjugation-annihilation search.

import random
from fractions import Fraction

from quatalg import (
    HAMILTON,
    FreePoly,
    GenPoly,
    Quat,
    format_free_poly,
    format_poly,
    h_inv,
    h_map,
    preimage_generator,
)

H = HAMILTON
z = GenPoly.z(H)
j = Quat.basis(H, 2)

# ------------------------------------------------------------------
# the forward map
# ------------------------------------------------------------------
print("h(z) =", format_free_poly(h_map(z)))

p = z + GenPoly.from_quat(j) * z * GenPoly.from_quat(j)   # z + j z j
print("h(z + jzj) =", format_free_poly(h_map(p)))          # kills x1, x3

# ------------------------------------------------------------------
# generator preimages: degree-one general polynomials q_k with h(q_k) = x_k
# ------------------------------------------------------------------
for k in (1, 2, 3, 4):
    q_k = preimage_generator(k, H)
    print(f"h^-1(x{k}) =", format_poly(q_k))
    assert h_map(q_k) == FreePoly.x(H, k)

# ------------------------------------------------------------------
# the conjugate of z drops out of the preimages
# ------------------------------------------------------------------
conj_free = FreePoly(H, {(0, (1,)): 1, (1, (2,)): -1, (2, (3,)): -1, (3, (4,)): -1})
print("\nh^-1(x1 - i x2 - j x3 - ij x4) =", format_poly(h_inv(conj_free)))
print("same as the conjugation operator:", h_inv(conj_free) == z.conj())

# ------------------------------------------------------------------
# round trips are exact
# ------------------------------------------------------------------
rng = random.Random(0)
terms = {}
for _ in range(8):
    word = tuple(rng.randint(0, 3) for _ in range(rng.randint(1, 4)))
    terms[word] = Fraction(rng.randint(-4, 4), rng.choice((1, 2, 4)))
poly = GenPoly(H, terms)
print("\nrandom p:", format_poly(poly))
print("h^-1(h(p)) == p:", h_inv(h_map(poly)) == poly)

# evaluation factors through both sides: substituting lambda into p is
# the same as evaluating h(p) at lambda's central coordinates
lam = Quat(H, 1, -2, 0, 3)
print(
    "evaluation compatibility:",
    h_map(poly).eval_at(lam.coords) == poly.substitute(lam),
)
