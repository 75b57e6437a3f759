#!/usr/bin/env python3
"""Demazure operators on Schubert classes and the module isomorphism."""

from zerohecke import (
    basis_class,
    basis_y,
    build_root_system,
    demazure_apply,
    hecke_act,
    identity_element,
    multiply_hecke,
    schubert_from_hecke,
    specialize,
    torus_ring,
)
from zerohecke.kmodule import demazure_letters_apply
from zerohecke.weyl import from_word, generator

rs = build_root_system("A", 2)
ring = torus_ring(rs, 3)

# the basis rule: descent classes are fixed, ascent classes move up
v = basis_class(identity_element(rs), ring)
print("[O_1]       . D_0 =", demazure_apply(v, 0))
w = basis_class(generator(rs, 0), ring)
print("[O_s0]      . D_0 =", demazure_apply(w, 0), " (fixed)")
print("([O_1]+[O_s0]) . D_0 =", demazure_apply(v + w, 0), " (collision: 2 mod 3)")
print()

# braid relations: the two reduced words of the finite longest element act alike
start = basis_class(generator(rs, 1), ring)
print("D_1 D_2 D_1 route:", demazure_letters_apply(start, [1, 2, 1]))
print("D_2 D_1 D_2 route:", demazure_letters_apply(start, [2, 1, 2]))
print()

# relabeling basis elements onto classes intertwines product and action
u, x = from_word(rs, [0, 1]), from_word(rs, [1, 2])
yu, yx = basis_y(u, ring), basis_y(x, ring)
via_product = schubert_from_hecke(multiply_hecke(yu, yx))
via_action = hecke_act(schubert_from_hecke(yu), yx)
print("Xi(Y_u Y_x)     =", via_product)
print("Xi(Y_u) . Y_x   =", via_action)
print("agree:", via_product == via_action)
print()

# specializing the torus coefficients commutes with the action
c = ring.monomial((1, 0, 0)) + ring.monomial((0, 1, 0), 2)
vec = basis_class(u, ring).scale(c)
lhs = specialize(demazure_apply(vec, 2))
rhs = demazure_apply(specialize(vec), 2)
print("specialize(v.D) == specialize(v).D:", lhs == rhs, " both =", lhs)
