#!/usr/bin/env python3
"""The 0-parameter Hecke algebra: idempotents, products, the dominant embedding."""

from zerohecke import (
    PrimeField,
    basis_y,
    basis_ytilde,
    build_root_system,
    embed_dominant,
    generators,
    monoid_monomial,
    multiply_hecke,
    translation_element,
)
from zerohecke.weyl import from_word, length, reduced_word

rs = build_root_system("A", 1)
gf3 = PrimeField(3)
s0, s1 = generators(rs)

y0 = basis_y(s0, gf3)
print("Y_s0 * Y_s0 =", multiply_hecke(y0, y0), " (idempotent)")
yt0 = basis_ytilde(s0, gf3)
print("the sign-twisted generator squares to minus itself:",
      multiply_hecke(yt0, yt0) == yt0.scale(gf3.from_int(-1)))
print()

# products follow lengths: they concatenate when lengths add, absorb otherwise
a = basis_y(from_word(rs, [0, 1]), gf3)
b = basis_y(from_word(rs, [1, 0]), gf3)
print("Y_[0,1] * Y_[1,0] =", multiply_hecke(a, b))
print()

# the dominant coweights embed multiplicatively: translations have additive
# lengths, so Y at a translation times Y at another is Y at the sum
rs2 = build_root_system("C", 2)
for lam, mu in [((1, 1), (1, 1)), ((1, 0), (0, 1))]:
    if not (rs2.is_dominant(lam) and rs2.is_dominant(mu)):
        continue
    ylam = embed_dominant(monoid_monomial(rs2, 3, lam))
    ymu = embed_dominant(monoid_monomial(rs2, 3, mu))
    total = tuple(x + y for x, y in zip(lam, mu))
    (key,) = multiply_hecke(ylam, ymu).terms
    e = translation_element(rs2, total)
    print(f"Theta({lam}) * Theta({mu}) sits at the translation by {total}:",
          key == e, f"(length {length(e)}, word {reduced_word(e)})")
