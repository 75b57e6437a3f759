"""The free module on Schubert classes with its Demazure operator action.

The module is the free torus-group-ring module on the affine Weyl group:
a vector is a finitely supported map from group elements ("classes") to
coefficients.  The Demazure operator of index i fixes a class whose key
has i as a right descent and otherwise moves it up by the generator;
coefficients are never touched (the operators are linear over the
coefficient ring), but distinct keys may collide on the same target, in
which case their coefficients add and may cancel mod p.

All operators act on the RIGHT, and composite operators follow the
opposite-endomorphism convention: ``v . D_w`` applies the letters of the
canonical reduced word of w left to right.  Every function here writes the
vector first and the operator second to keep that order visible.
"""

from __future__ import annotations

import functools
from typing import Mapping

from . import weyl
from .coeffs import PrimeField, TorusRing, specialize_at_identity, torus_ring
from .hecke import HeckeElement, Ring, basis_y
from .rootdata import RootSystem, Vector
from .weyl import AffineWeylElement


class SchubertVector:
    """A sparse vector over the Schubert-class basis of the full flag module."""

    __slots__ = ("system", "ring", "terms")

    def __init__(
        self,
        system: RootSystem,
        ring: Ring,
        terms: Mapping[AffineWeylElement, object] | None = None,
    ):
        self.system = system
        self.ring = ring
        clean = {}
        for w, c in (terms or {}).items():
            if w.system != system:
                raise ValueError(f"class key {w!r} lies in {w.system!r}")
            if c:
                clean[w] = c
        self.terms = clean

    def _check(self, other: "SchubertVector"):
        if not isinstance(other, SchubertVector):
            raise TypeError(f"expected SchubertVector, got {type(other).__name__}")
        if self.system != other.system or self.ring != other.ring:
            raise ValueError("mixed module parameters")

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for w, c in other.terms.items():
            v = terms.get(w)
            v = c if v is None else v + c
            if v:
                terms[w] = v
            elif w in terms:
                del terms[w]
        return SchubertVector(self.system, self.ring, terms)

    def __neg__(self):
        return SchubertVector(
            self.system, self.ring, {w: -c for w, c in self.terms.items()}
        )

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "SchubertVector":
        return SchubertVector(
            self.system, self.ring, {w: v * c for w, v in self.terms.items()}
        )

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, SchubertVector)
            and self.system == other.system
            and self.ring == other.ring
            and self.terms == other.terms
        )

    __hash__ = None

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = [
            f"({c!r})*[S{weyl.reduced_word(w)}]"
            for w, c in sorted(self.terms.items(), key=lambda t: weyl.element_sort_key(t[0]))
        ]
        return " + ".join(bits)


def module_zero(system: RootSystem, ring: Ring) -> SchubertVector:
    return SchubertVector(system, ring)


def basis_class(w: AffineWeylElement, ring: Ring) -> SchubertVector:
    """The Schubert class of w with coefficient one."""
    return SchubertVector(w.system, ring, {w: ring.one()})


# -- the Demazure operators ------------------------------------------------


@functools.lru_cache(maxsize=None)
def demazure_basis_target(w: AffineWeylElement, i: int) -> AffineWeylElement:
    """Where the i-th Demazure operator sends the class of w.

    Descent keys are fixed, ascent keys move up by the generator.  All
    operator machinery (module action, check suites) routes through this
    single rule.
    """
    if weyl.is_right_descent(w, i):
        return w
    return weyl._mul_gen(w, i)


def demazure_apply(v: SchubertVector, i: int) -> SchubertVector:
    """Apply one Demazure operator on the right: ``v . D_i``."""
    if not 0 <= i <= v.system.rank:
        raise ValueError(f"operator index {i} out of range 0..{v.system.rank}")
    terms = {}
    for w, c in v.terms.items():
        target = demazure_basis_target(w, i)
        cur = terms.get(target)
        cur = c if cur is None else cur + c
        if cur:
            terms[target] = cur
        elif target in terms:
            del terms[target]
    return SchubertVector(v.system, v.ring, terms)


def demazure_word_apply(v: SchubertVector, w: AffineWeylElement) -> SchubertVector:
    """Apply the composite operator of w along its canonical reduced word."""
    for i in weyl.reduced_word(w):
        v = demazure_apply(v, i)
    return v


def demazure_letters_apply(v: SchubertVector, letters) -> SchubertVector:
    """Apply operators for an explicit letter sequence, left to right."""
    for i in letters:
        v = demazure_apply(v, i)
    return v


# -- the right Hecke action -------------------------------------------------


def _coerce_action_coeff(v_ring: Ring, h_ring: Ring, c):
    if v_ring == h_ring:
        return c
    if isinstance(v_ring, TorusRing) and isinstance(h_ring, PrimeField):
        return v_ring.lift_field(c)
    raise ValueError(
        f"cannot act with coefficients in {h_ring!r} on a module over {v_ring!r}"
    )


def hecke_act(v: SchubertVector, h: HeckeElement) -> SchubertVector:
    """The right action ``v . h``: each basis term of h acts by its operator.

    Scalars act through the module's own ring; GF(p) coefficients on h are
    lifted to constants when the module is over the torus ring.
    """
    if v.system != h.system:
        raise ValueError("module and algebra over different root systems")
    out = module_zero(v.system, v.ring)
    for x, c in h.terms.items():
        c = _coerce_action_coeff(v.ring, h.ring, c)
        out = out + demazure_word_apply(v, x).scale(c)
    return out


# -- the module isomorphism --------------------------------------------------


def schubert_from_hecke(h: HeckeElement) -> SchubertVector:
    """Relabel an algebra element termwise onto Schubert classes."""
    return SchubertVector(h.system, h.ring, dict(h.terms))


def hecke_from_schubert(v: SchubertVector) -> HeckeElement:
    """Inverse relabeling of :func:`schubert_from_hecke`."""
    return HeckeElement(v.system, v.ring, dict(v.terms))


# -- the Grassmannian side ----------------------------------------------------


class GrassmannianVector:
    """A sparse vector over Schubert classes of the Grassmannian quotient.

    Keys are coweights labeling classes on translations; they are
    normalized to the antidominant representative of their finite Weyl
    orbit, which is the minimal-length labeling of the underlying coset.
    """

    __slots__ = ("system", "ring", "terms")

    def __init__(
        self,
        system: RootSystem,
        ring: Ring,
        terms: Mapping[Vector, object] | None = None,
    ):
        self.system = system
        self.ring = ring
        clean: dict[Vector, object] = {}
        for lam, c in (terms or {}).items():
            key = weyl.antidominant_orbit_rep(system, tuple(lam))
            if not c:
                continue
            cur = clean.get(key)
            cur = c if cur is None else cur + c
            if cur:
                clean[key] = cur
            elif key in clean:
                del clean[key]
        self.terms = clean

    def __eq__(self, other):
        return (
            isinstance(other, GrassmannianVector)
            and self.system == other.system
            and self.ring == other.ring
            and self.terms == other.terms
        )

    __hash__ = None

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(
            f"({c!r})*[G{list(l)}]" for l, c in sorted(self.terms.items())
        )


def grassmannian_class(system: RootSystem, lam: Vector, ring: Ring) -> GrassmannianVector:
    return GrassmannianVector(system, ring, {tuple(lam): ring.one()})


def grassmannian_pullback(g: GrassmannianVector) -> SchubertVector:
    """Pull back classes along the projection from the full flag module.

    The class at an antidominant key goes to the class of the maximal
    representative of its coset: the translation times the longest finite
    element.  Injective, since distinct keys give distinct canonical forms.
    """
    w0 = weyl.longest_finite_element(g.system)
    terms = {}
    for lam, c in g.terms.items():
        key = weyl.translation_element(g.system, lam) * w0
        terms[key] = c
    return SchubertVector(g.system, g.ring, terms)


# -- the antidominant (spherical) submodule -----------------------------------


def is_spherical_key(system: RootSystem, w: AffineWeylElement) -> bool:
    """True iff w is the longest finite element times a dominant translation."""
    w0 = weyl.longest_finite_element(system)
    t = w0 * w
    return t.finite.is_identity() and system.is_dominant(t.translation)


def spherical_act(lam: Vector, v: SchubertVector) -> SchubertVector:
    """Act by a dominant coweight on a vector in the pulled-back submodule.

    Implemented through the dominant-monoid embedding and the Hecke
    action; the basis-level shift rule is a consequence checked in tests.
    """
    system = v.system
    lam = tuple(int(c) for c in lam)
    if not system.is_dominant(lam):
        raise ValueError(f"coweight {lam} is not dominant")
    for w in v.terms:
        if not is_spherical_key(system, w):
            raise ValueError(
                f"support key {w!r} is not of the spherical form "
                "(longest finite element times a dominant translation)"
            )
    h = basis_y(weyl.translation_element(system, lam), PrimeField(_ring_p(v.ring)))
    return hecke_act(v, h)


def _ring_p(ring: Ring) -> int:
    return ring.p


# -- specialization ------------------------------------------------------------


def specialize(v: SchubertVector) -> SchubertVector:
    """Specialize every coefficient at the identity of the torus.

    Returns a vector over GF(p); terms whose coefficient sums to zero mod p
    are dropped.  Specialization commutes with the whole right action since
    the operators never touch coefficients.
    """
    if isinstance(v.ring, PrimeField):
        return v
    field = PrimeField(v.ring.p)
    terms = {}
    for w, c in v.terms.items():
        s = specialize_at_identity(c)
        if s:
            terms[w] = s
    return SchubertVector(v.system, field, terms)


# -- serialization --------------------------------------------------------------


def schubert_to_jsonable(v: SchubertVector) -> list:
    return [
        {"elem": weyl.element_to_jsonable(w), "coeff": v.terms[w].to_jsonable()}
        for w in sorted(v.terms, key=weyl.element_sort_key)
    ]


def schubert_from_jsonable(system: RootSystem, ring: Ring, data: list) -> SchubertVector:
    terms = {}
    for t in data:
        w = weyl.element_from_jsonable(system, t["elem"])
        terms[w] = ring.coeff_from_jsonable(t["coeff"])
    return SchubertVector(system, ring, terms)


def grassmannian_to_jsonable(g: GrassmannianVector) -> list:
    return [
        {"lambda": list(lam), "coeff": g.terms[lam].to_jsonable()}
        for lam in sorted(g.terms)
    ]


def grassmannian_from_jsonable(
    system: RootSystem, ring: Ring, data: list
) -> GrassmannianVector:
    terms = {}
    for t in data:
        terms[tuple(t["lambda"])] = ring.coeff_from_jsonable(t["coeff"])
    return GrassmannianVector(system, ring, terms)


def default_module_ring(system: RootSystem, p: int) -> TorusRing:
    return torus_ring(system, p)
