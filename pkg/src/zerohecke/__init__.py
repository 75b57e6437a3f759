"""Exact-arithmetic affine Weyl groups, 0-parameter Hecke algebras, and
Demazure operators on Schubert classes, over prime fields and the group
ring of the extended torus."""

from .coeffs import (
    DominantMonoidElement,
    FieldElement,
    GroupRingElement,
    PrimeField,
    TorusRing,
    monoid_monomial,
    monoid_unit,
    specialize_at_identity,
    torus_ring,
)
from .hecke import (
    HeckeElement,
    basis_y,
    basis_ytilde,
    convert_basis,
    demazure_product,
    embed_dominant,
    hecke_unit,
    hecke_zero,
    multiply_hecke,
)
from .kmodule import (
    GrassmannianVector,
    SchubertVector,
    basis_class,
    demazure_apply,
    demazure_word_apply,
    grassmannian_class,
    grassmannian_pullback,
    hecke_act,
    hecke_from_schubert,
    schubert_from_hecke,
    specialize,
    spherical_act,
)
from .rootdata import RootSystem, build_root_system
from .weyl import (
    AffineWeylElement,
    ResourceBoundError,
    all_reduced_words,
    antidominant_rep,
    bruhat_leq,
    enumerate_ball,
    from_word,
    generator,
    generators,
    identity_element,
    is_right_descent,
    length,
    longest_finite_element,
    min_coset_rep,
    reduced_word,
    translation_element,
)

__version__ = "0.1.0"
