#!/usr/bin/env python3
"""A tour of the affine Weyl group: elements, lengths, words, Bruhat order."""

from zerohecke import (
    build_root_system,
    bruhat_leq,
    enumerate_ball,
    from_word,
    generators,
    length,
    reduced_word,
    translation_element,
)
from zerohecke.weyl import all_reduced_words, longest_finite_element

rs = build_root_system("A", 2)
print(f"root system {rs}: {rs.num_positive_roots} positive roots")
print("cartan matrix:", rs.cartan)
print("highest root:", rs.highest_root, " highest coroot:", rs.highest_coroot)
print("sum of positive roots:", rs.two_rho)
print()

s0, s1, s2 = generators(rs)
print("the three generators square to the identity:",
      all((s * s).is_identity() for s in (s0, s1, s2)))

x = s0 * s1 * s2
print(f"s0*s1*s2 = {x!r}, length {length(x)}, canonical word {reduced_word(x)}")

lam = rs.highest_coroot
e = translation_element(rs, lam)
print(f"the translation by {lam} has length {length(e)}"
      f" = <lambda, 2rho> = {rs.pairing(lam, rs.two_rho)}")
print()

print("ball sizes by length:", [len(shell) for shell in enumerate_ball(rs, 6)])
w0 = longest_finite_element(rs)
print(f"longest finite element: {w0!r} with reduced words {all_reduced_words(w0)}")
print()

u, w = from_word(rs, [1]), from_word(rs, [0, 1, 2, 1])
print(f"Bruhat: {reduced_word(u)} <= {reduced_word(w)} ?", bruhat_leq(u, w))
print(f"Bruhat: {reduced_word(w)} <= {reduced_word(u)} ?", bruhat_leq(w, u))
