"""The Iwahori-Hecke algebra of the affine Weyl group with all parameters zero.

Elements are finitely supported maps from group elements to coefficients,
stored in the Y basis throughout: the basis in which every generator is
idempotent and products of basis elements are again basis elements.  The
product of two basis elements is computed by factoring the right operand
into generators and applying the one-step rule

    Y_x * Y_s = Y_(xs)  if xs is longer than x,  else  Y_x,

so the basis product is the Demazure (greedy) product of the underlying
group elements.  The sign-twisted basis labels (the double-coset
characteristic functions) are available through :func:`convert_basis`.

Coefficients are either GF(p) scalars or torus group-ring elements; the
ring is carried explicitly so that the zero element knows its parameters.
"""

from __future__ import annotations

from typing import Mapping

from . import weyl
from .coeffs import DominantMonoidElement, PrimeField, TorusRing
from .rootdata import RootSystem
from .weyl import AffineWeylElement

Ring = PrimeField | TorusRing

BASIS_DIRECTIONS = ("y_to_ytilde", "ytilde_to_y")


class HeckeElement:
    """A sparse algebra element over an explicit coefficient ring."""

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
                raise ValueError(f"basis element {w!r} lies in {w.system!r}")
            if c:
                clean[w] = c
        self.terms = clean

    def _check(self, other: "HeckeElement"):
        if not isinstance(other, HeckeElement):
            raise TypeError(f"expected HeckeElement, got {type(other).__name__}")
        if self.system != other.system or self.ring != other.ring:
            raise ValueError("mixed Hecke algebra parameters")

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
        return HeckeElement(self.system, self.ring, terms)

    def __neg__(self):
        return HeckeElement(self.system, self.ring, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, HeckeElement):
            return multiply_hecke(self, other)
        return NotImplemented

    def scale(self, c) -> "HeckeElement":
        return HeckeElement(self.system, self.ring, {w: v * c for w, v in self.terms.items()})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, HeckeElement)
            and self.system == other.system
            and self.ring == other.ring
            and self.terms == other.terms
        )

    __hash__ = None

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = [
            f"({c!r})*Y{weyl.reduced_word(w)}"
            for w, c in sorted(self.terms.items(), key=lambda t: weyl.element_sort_key(t[0]))
        ]
        return " + ".join(bits)


def hecke_zero(system: RootSystem, ring: Ring) -> HeckeElement:
    return HeckeElement(system, ring)


def hecke_unit(system: RootSystem, ring: Ring) -> HeckeElement:
    return HeckeElement(system, ring, {weyl.identity_element(system): ring.one()})


def basis_y(w: AffineWeylElement, ring: Ring) -> HeckeElement:
    """The basis element Y_w with coefficient one."""
    return HeckeElement(w.system, ring, {w: ring.one()})


def basis_ytilde(w: AffineWeylElement, ring: Ring) -> HeckeElement:
    """The sign-twisted basis element, expressed in Y coordinates."""
    sign = ring.from_int((-1) ** weyl.length(w))
    return HeckeElement(w.system, ring, {w: sign})


def convert_basis(h: HeckeElement, direction: str) -> HeckeElement:
    """Relabel coefficients between the Y basis and the sign-twisted basis.

    Both directions multiply the coefficient of w by (-1)^length(w); the
    direction argument records which labels the input carried.  The map is
    an involution, and the identity map in characteristic 2.
    """
    if direction not in BASIS_DIRECTIONS:
        raise ValueError(f"direction must be one of {BASIS_DIRECTIONS}, got {direction!r}")
    terms = {}
    for w, c in h.terms.items():
        sign = h.ring.from_int((-1) ** weyl.length(w))
        terms[w] = c * sign
    return HeckeElement(h.system, h.ring, terms)


def demazure_product(w: AffineWeylElement, x: AffineWeylElement) -> AffineWeylElement:
    """The greedy product: absorb the letters of x that still go up."""
    acc = w
    for i in weyl.reduced_word(x):
        if not weyl.is_right_descent(acc, i):
            acc = weyl._mul_gen(acc, i)
    return acc


def multiply_hecke(a: HeckeElement, b: HeckeElement) -> HeckeElement:
    """Bilinear extension of the Y-basis product.

    Colliding targets add in the coefficient ring, which can cancel mod p;
    the canonical sparse form prunes them.
    """
    a._check(b)
    terms = {}
    for w, cw in a.terms.items():
        for x, cx in b.terms.items():
            target = demazure_product(w, x)
            c = cw * cx
            v = terms.get(target)
            v = c if v is None else v + c
            if v:
                terms[target] = v
            elif target in terms:
                del terms[target]
    return HeckeElement(a.system, a.ring, terms)


def embed_dominant(m: DominantMonoidElement) -> HeckeElement:
    """Embed the dominant monoid ring: each coweight goes to Y at its translation.

    Multiplicative because lengths are additive on dominant translations;
    that is an assertion of the test suite, not of this function.
    """
    system = m.system
    ring = PrimeField(m.p)
    terms = {}
    for lam, c in m.terms.items():
        terms[weyl.translation_element(system, lam)] = ring.from_int(c)
    return HeckeElement(system, ring, terms)


def to_jsonable(h: HeckeElement, basis: str = "Y") -> list:
    """Terms sorted by (length, canonical word); basis selects the labels."""
    if basis not in ("Y", "Ytilde"):
        raise ValueError(f"basis must be 'Y' or 'Ytilde', got {basis!r}")
    src = h if basis == "Y" else convert_basis(h, "y_to_ytilde")
    out = []
    for w in sorted(src.terms, key=weyl.element_sort_key):
        out.append(
            {"elem": weyl.element_to_jsonable(w), "coeff": src.terms[w].to_jsonable()}
        )
    return out


def from_jsonable(
    system: RootSystem, ring: Ring, data: list, basis: str = "Y"
) -> HeckeElement:
    terms = {}
    for t in data:
        w = weyl.element_from_jsonable(system, t["elem"])
        terms[w] = ring.coeff_from_jsonable(t["coeff"])
    h = HeckeElement(system, ring, terms)
    if basis == "Ytilde":
        h = convert_basis(h, "ytilde_to_y")
    return h
