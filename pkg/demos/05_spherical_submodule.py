#!/usr/bin/env python3
"""The Grassmannian pullback and the rank-one spherical submodule."""

from zerohecke import (
    build_root_system,
    grassmannian_class,
    grassmannian_pullback,
    spherical_act,
    torus_ring,
    translation_element,
)
from zerohecke.weyl import length, longest_finite_element, reduced_word

rs = build_root_system("A", 1)
ring = torus_ring(rs, 5)
w0 = longest_finite_element(rs)

# pulling back the class at an antidominant coweight lands on the maximal
# coset representative: the translation times the longest finite element
for lam in [(0,), (-1,), (-2,)]:
    pb = grassmannian_pullback(grassmannian_class(rs, lam, ring))
    (key,) = pb.terms
    e = translation_element(rs, lam)
    print(f"lambda={lam}: class at {reduced_word(key)} of length {length(key)}"
          f" = {length(e)} + {length(w0)}")
print()

# the image is spanned by classes at w0 times dominant translations, and a
# dominant coweight shifts that label additively
v = grassmannian_pullback(grassmannian_class(rs, (0,), ring))
print("start:", v)
for step in range(1, 4):
    v = spherical_act((1,), v)
    (key,) = v.terms
    print(f"after {step} shifts by (1,):", reduced_word(key))

# acting by lambda then mu is acting by lambda+mu: the submodule is free of
# rank one over the dominant monoid
a = spherical_act((2,), spherical_act((1,), grassmannian_pullback(
    grassmannian_class(rs, (0,), ring))))
b = spherical_act((3,), grassmannian_pullback(grassmannian_class(rs, (0,), ring)))
print("shift by (1,) then (2,) equals shift by (3,):", a == b)
