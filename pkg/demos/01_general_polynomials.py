# Exact quaternion arithmetic and general polynomials.
#
# A "general" polynomial lets the variable z commute with rational
# scalars only, so coefficients can sit on either side of z and in
# between powers.  Unlike the left-coefficient convention, substituting
# a point into a general polynomial is a ring homomorphism, which is
# what makes the rest of this library work.

from fractions import Fraction

from quatalg import HAMILTON, GenPoly, Quat, format_poly, parse_poly

H = HAMILTON  # the rational Hamilton quaternions: i^2 = j^2 = -1, ji = -ij
i = Quat.basis(H, 1)
j = Quat.basis(H, 2)
k = Quat.basis(H, 3)

# ------------------------------------------------------------------
# exact arithmetic in the algebra
# ------------------------------------------------------------------
print("i*j =", format_poly(GenPoly.from_quat(i * j)))
print("j*i =", format_poly(GenPoly.from_quat(j * i)))

q = Quat(H, 1, 1, 1, 1)
print("nrd(1+i+j+k) =", q.nrd())           # q * conj(q), always rational
print("inverse check:", q * q.inv() == Quat.one(H))

# ------------------------------------------------------------------
# general polynomials: dz^2, zdz and z^2 d are all different
# ------------------------------------------------------------------
z = GenPoly.z(H)
p1 = GenPoly.from_quat(i) * z * z
p2 = z * GenPoly.from_quat(i) * z
p3 = z * z * GenPoly.from_quat(i)
print("\ni*z^2          ->", format_poly(p1))
print("z*i*z          ->", format_poly(p2))
print("z^2*i          ->", format_poly(p3))
print("all distinct:", len({format_poly(p) for p in (p1, p2, p3)}) == 3)

# ------------------------------------------------------------------
# substitution is a ring homomorphism on this ring
# ------------------------------------------------------------------
f = GenPoly.from_quat(i) * z                 # f = i z
val = f.substitute(j)
print("\nf = i*z, f(j) =", format_poly(GenPoly.from_quat(val)))
lhs = (f * f).substitute(j)                  # (f^2)(j)
rhs = f.substitute(j) * f.substitute(j)      # f(j)^2
print("(f^2)(j) == f(j)^2:", lhs == rhs)     # fails for left polynomials!

# ------------------------------------------------------------------
# the conjugation operator on polynomials
# ------------------------------------------------------------------
zbar = z.conj()
print("\nconj as a polynomial:", format_poly(zbar))
lam = Quat(H, 2, -1, 3, Fraction(1, 2))
print("agrees with value-level conjugation:", zbar.substitute(lam) == lam.conj())

# ------------------------------------------------------------------
# the expression language round-trips the canonical form
# ------------------------------------------------------------------
text = "z*i*z + j*z*i + z*i*j + 5"
poly = parse_poly(text, H)
printed = format_poly(poly)
print("\nparsed  :", text)
print("printed :", printed)
print("round trip ok:", parse_poly(printed, H) == poly)
