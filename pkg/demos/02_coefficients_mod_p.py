#!/usr/bin/env python3
"""Coefficient arithmetic: GF(p), the torus group ring, specialization."""

from zerohecke import (
    build_root_system,
    monoid_monomial,
    monoid_unit,
    specialize_at_identity,
    torus_ring,
)
from zerohecke.coeffs import TorusRing

# the group ring of the extended torus has rank+1 exponents: slot 0 is the
# loop-rotation factor, the rest are torus characters
rs = build_root_system("A", 2)
ring = torus_ring(rs, 3)
chi = ring.monomial((1, 0, 0))
psi = ring.monomial((0, 1, -1), 2)
print("chi * psi =", chi * psi)
print("chi + psi =", chi + psi)
print()

# in characteristic 2 the square of a sum is the sum of squares
r2 = TorusRing(2, 2)
x = r2.monomial((1, 0))
print("(x + 1)^2 mod 2 =", (x + r2.one()) * (x + r2.one()))
print()

# evaluating every character at the identity of the torus sums coefficients
a = chi + psi
print("a =", a)
print("a(1) =", specialize_at_identity(a))
b = ring.monomial((1, 1, 0), 1) + ring.monomial((2, 0, 0), 2)
print("b =", b, "   b(1) =", specialize_at_identity(b), "(1 + 2 = 0 mod 3)")
print()

# the dominant monoid ring: keys are dominant coweights and multiply additively
theta = rs.highest_coroot
e = monoid_monomial(rs, 3, theta)
print("e_theta * (e_theta + 1) =", e * (e + monoid_unit(rs, 3)))
