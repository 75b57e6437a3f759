"""Coefficient arithmetic: GF(p), the torus group ring, the dominant monoid ring.

The group ring of the extended torus is a ring of Laurent "monomial sums"
in rank+1 integer exponents: index 0 is the loop-rotation factor, indices
1..rank the characters of the maximal torus.  Coefficients live in GF(p)
for a configured prime p.  All values are canonical sparse mappings: a zero
coefficient is never stored, so equality is plain dict equality.

Exponents are unbounded Python integers, so there is no wraparound to
guard against.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .rootdata import RootSystem, Vector


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _check_prime(p: int) -> int:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return p


# -- the prime field ------------------------------------------------------


class FieldElement:
    """An element of GF(p).  Supports +, -, *, bool and equality."""

    __slots__ = ("p", "residue")

    def __init__(self, p: int, value: int):
        self.p = p
        self.residue = value % p

    def _check(self, other: "FieldElement"):
        if not isinstance(other, FieldElement):
            raise TypeError(f"expected FieldElement, got {type(other).__name__}")
        if self.p != other.p:
            raise ValueError(f"mixed characteristics {self.p} and {other.p}")

    def __add__(self, other):
        self._check(other)
        return FieldElement(self.p, self.residue + other.residue)

    def __sub__(self, other):
        self._check(other)
        return FieldElement(self.p, self.residue - other.residue)

    def __neg__(self):
        return FieldElement(self.p, -self.residue)

    def __mul__(self, other):
        self._check(other)
        return FieldElement(self.p, self.residue * other.residue)

    def inverse(self) -> "FieldElement":
        if self.residue == 0:
            raise ZeroDivisionError("inverting 0 in GF(p)")
        return FieldElement(self.p, pow(self.residue, self.p - 2, self.p))

    def __bool__(self):
        return self.residue != 0

    def __eq__(self, other):
        return (
            isinstance(other, FieldElement)
            and self.p == other.p
            and self.residue == other.residue
        )

    def __hash__(self):
        return hash((self.p, self.residue))

    def __repr__(self):
        return f"FieldElement({self.p}, {self.residue})"

    def to_jsonable(self) -> int:
        return self.residue


# -- the torus group ring --------------------------------------------------


class GroupRingElement:
    """A finitely supported map from exponent vectors to GF(p), as a ring.

    ``nvars`` is rank+1: one loop-rotation exponent plus one per simple
    root.  Multiplication convolves exponents additively.
    """

    __slots__ = ("p", "nvars", "terms")

    def __init__(self, p: int, nvars: int, terms: Mapping[Vector, int] | None = None):
        self.p = p
        self.nvars = nvars
        clean: dict[Vector, int] = {}
        for exp, c in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != nvars:
                raise ValueError(f"exponent {exp} has length != {nvars}")
            c = c % p
            if c:
                clean[exp] = (clean.get(exp, 0) + c) % p
                if not clean[exp]:
                    del clean[exp]
        self.terms = clean

    def _check(self, other: "GroupRingElement"):
        if not isinstance(other, GroupRingElement):
            raise TypeError(f"expected GroupRingElement, got {type(other).__name__}")
        if self.p != other.p or self.nvars != other.nvars:
            raise ValueError(
                f"mixed ring parameters (p={self.p}, n={self.nvars}) and "
                f"(p={other.p}, n={other.nvars})"
            )

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for exp, c in other.terms.items():
            v = (terms.get(exp, 0) + c) % self.p
            if v:
                terms[exp] = v
            elif exp in terms:
                del terms[exp]
        out = GroupRingElement(self.p, self.nvars)
        out.terms = terms
        return out

    def __neg__(self):
        out = GroupRingElement(self.p, self.nvars)
        out.terms = {exp: self.p - c for exp, c in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        terms: dict[Vector, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                v = (terms.get(exp, 0) + c1 * c2) % self.p
                if v:
                    terms[exp] = v
                elif exp in terms:
                    del terms[exp]
        out = GroupRingElement(self.p, self.nvars)
        out.terms = terms
        return out

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, GroupRingElement)
            and self.p == other.p
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    __hash__ = None

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = [f"{c}*x^{list(e)}" for e, c in sorted(self.terms.items())]
        return " + ".join(bits)

    def to_jsonable(self) -> list:
        return [
            {"exp": list(exp), "coeff": c} for exp, c in sorted(self.terms.items())
        ]


def specialize_at_identity(a: GroupRingElement) -> FieldElement:
    """Evaluate every character at the identity of the torus: sum of coefficients.

    This is the ring homomorphism induced by collapsing all exponents; it
    is checked, not assumed, to be multiplicative in the test suite.
    """
    return FieldElement(a.p, sum(a.terms.values()))


# -- ring descriptors ------------------------------------------------------

# HeckeElement and SchubertVector are generic over their coefficient ring;
# these two small descriptors carry the parameters and build constants.


@dataclass(frozen=True)
class PrimeField:
    p: int

    def __post_init__(self):
        _check_prime(self.p)

    def zero(self) -> FieldElement:
        return FieldElement(self.p, 0)

    def one(self) -> FieldElement:
        return FieldElement(self.p, 1)

    def from_int(self, n: int) -> FieldElement:
        return FieldElement(self.p, n)

    def coeff_from_jsonable(self, data) -> FieldElement:
        return FieldElement(self.p, int(data))


@dataclass(frozen=True)
class TorusRing:
    p: int
    nvars: int

    def __post_init__(self):
        _check_prime(self.p)
        if self.nvars < 1:
            raise ValueError("torus ring needs at least one exponent")

    def zero(self) -> GroupRingElement:
        return GroupRingElement(self.p, self.nvars)

    def one(self) -> GroupRingElement:
        return GroupRingElement(self.p, self.nvars, {(0,) * self.nvars: 1})

    def monomial(self, exponents: Iterable[int], coeff: int = 1) -> GroupRingElement:
        return GroupRingElement(self.p, self.nvars, {tuple(exponents): coeff})

    def from_int(self, n: int) -> GroupRingElement:
        return GroupRingElement(self.p, self.nvars, {(0,) * self.nvars: n})

    def coeff_from_jsonable(self, data) -> GroupRingElement:
        return GroupRingElement(
            self.p, self.nvars, {tuple(t["exp"]): t["coeff"] for t in data}
        )

    def lift_field(self, c: FieldElement) -> GroupRingElement:
        if c.p != self.p:
            raise ValueError(f"mixed characteristics {c.p} and {self.p}")
        return self.from_int(c.residue)


def torus_ring(system: RootSystem, p: int) -> TorusRing:
    """The group ring of the extended torus of the given root system."""
    return TorusRing(p, system.rank + 1)


# -- the dominant monoid ring ----------------------------------------------


class DominantMonoidElement:
    """Finitely supported map from dominant coweights to GF(p), as a ring.

    Keys add coweight-wise under multiplication; dominance is preserved
    because the dominant coweights form a monoid.
    """

    __slots__ = ("system", "p", "terms")

    def __init__(
        self,
        system: RootSystem,
        p: int,
        terms: Mapping[Vector, int] | None = None,
    ):
        self.system = system
        self.p = _check_prime(p)
        clean: dict[Vector, int] = {}
        for lam, c in (terms or {}).items():
            lam = tuple(int(x) for x in lam)
            if not system.is_dominant(lam):
                raise ValueError(f"coweight {lam} is not dominant")
            c = c % p
            if c:
                clean[lam] = (clean.get(lam, 0) + c) % p
                if not clean[lam]:
                    del clean[lam]
        self.terms = clean

    def _check(self, other: "DominantMonoidElement"):
        if not isinstance(other, DominantMonoidElement):
            raise TypeError(
                f"expected DominantMonoidElement, got {type(other).__name__}"
            )
        if self.system != other.system or self.p != other.p:
            raise ValueError("mixed monoid ring parameters")

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for lam, c in other.terms.items():
            v = (terms.get(lam, 0) + c) % self.p
            if v:
                terms[lam] = v
            elif lam in terms:
                del terms[lam]
        out = DominantMonoidElement(self.system, self.p)
        out.terms = terms
        return out

    def __mul__(self, other):
        self._check(other)
        terms: dict[Vector, int] = {}
        for l1, c1 in self.terms.items():
            for l2, c2 in other.terms.items():
                lam = tuple(a + b for a, b in zip(l1, l2))
                v = (terms.get(lam, 0) + c1 * c2) % self.p
                if v:
                    terms[lam] = v
                elif lam in terms:
                    del terms[lam]
        out = DominantMonoidElement(self.system, self.p)
        out.terms = terms
        return out

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, DominantMonoidElement)
            and self.system == other.system
            and self.p == other.p
            and self.terms == other.terms
        )

    __hash__ = None

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*t^{list(l)}" for l, c in sorted(self.terms.items()))


def monoid_unit(system: RootSystem, p: int) -> DominantMonoidElement:
    return DominantMonoidElement(system, p, {(0,) * system.rank: 1})


def monoid_monomial(
    system: RootSystem, p: int, lam: Vector, coeff: int = 1
) -> DominantMonoidElement:
    return DominantMonoidElement(system, p, {tuple(lam): coeff})
