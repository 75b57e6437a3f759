"""Property-check suites over configurable scales.

Each suite replays one family of algebraic identities exhaustively on a
length-truncated ball (plus a randomized linear-combination layer where
coefficients matter) and returns a :class:`CheckReport`.  Failures carry
the offending inputs and both sides in serialized form, so a reported
counterexample can be replayed.

Operator-level suites act on basis classes through
``kmodule.demazure_basis_target`` looked up at call time; corrupting that
rule (as the mutation-sanity tests do) corrupts the suites' subject and
must surface as failures.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from . import hecke, kmodule, weyl
from .coeffs import PrimeField, monoid_monomial, torus_ring
from .rootdata import RootSystem


@dataclass
class CheckReport:
    check_name: str
    instance_count: int = 0
    failures: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def count(self, n: int = 1):
        self.instance_count += n

    def fail(self, record: dict):
        self.failures.append(record)

    def to_jsonable(self) -> dict:
        return {
            "check_name": self.check_name,
            "instance_count": self.instance_count,
            "failures": self.failures,
            "elapsed": self.elapsed,
        }


def _timed(fn):
    def wrapper(*args, **kwargs):
        t0 = time.perf_counter()
        report = fn(*args, **kwargs)
        report.elapsed = time.perf_counter() - t0
        return report

    return wrapper


def _flat_ball(system: RootSystem, n: int):
    return [x for shell in weyl.enumerate_ball(system, n) for x in shell]


def _walk(w, letters):
    # the operator word applied to one basis class, through the live rule
    for i in letters:
        w = kmodule.demazure_basis_target(w, i)
    return w


def _wordstr(x) -> list:
    return list(weyl.reduced_word(x))


def _random_coeff(ring, rng: random.Random):
    exps = tuple(rng.randrange(-2, 3) for _ in range(ring.nvars))
    return ring.monomial(exps, rng.randrange(1, ring.p))


def _random_vector(system, ring, pool, rng: random.Random, max_terms=3):
    terms = {}
    for _ in range(rng.randrange(1, max_terms + 1)):
        terms[rng.choice(pool)] = _random_coeff(ring, rng)
    return kmodule.SchubertVector(system, ring, terms)


# -- suites ----------------------------------------------------------------


@_timed
def check_length_formula(system: RootSystem, max_coord: int = 3) -> CheckReport:
    """Translation length equals the pairing against the positive-root sum."""
    report = CheckReport("length-formula")
    for lam in system.dominant_coweights(max_coord):
        report.count()
        by_inversions = weyl.length(weyl.translation_element(system, lam))
        by_pairing = system.pairing(lam, system.two_rho)
        if by_inversions != by_pairing:
            report.fail(
                {"lambda": list(lam), "inversions": by_inversions, "pairing": by_pairing}
            )
    return report


@_timed
def check_braid(
    system: RootSystem,
    p: int,
    basis_bound: int = 6,
    n_random: int = 20,
    rng: random.Random | None = None,
) -> CheckReport:
    """Alternating Demazure words of the Coxeter order agree, per generator pair."""
    rng = rng or random.Random(0)
    report = CheckReport("braid")
    ball = _flat_ball(system, basis_bound)
    ring = torus_ring(system, p)
    for i in range(system.rank + 1):
        for j in range(i + 1, system.rank + 1):
            m = weyl.coxeter_order(system, i, j)
            if m is None:
                continue
            word_ij = tuple(i if k % 2 == 0 else j for k in range(m))
            word_ji = tuple(j if k % 2 == 0 else i for k in range(m))
            for w in ball:
                report.count()
                lhs = _walk(w, word_ij)
                rhs = _walk(w, word_ji)
                if lhs != rhs:
                    report.fail(
                        {"i": i, "j": j, "m": m, "basis": _wordstr(w),
                         "lhs": _wordstr(lhs), "rhs": _wordstr(rhs)}
                    )
            for _ in range(n_random):
                report.count()
                v = _random_vector(system, ring, ball, rng)
                lhs = kmodule.demazure_letters_apply(v, word_ij)
                rhs = kmodule.demazure_letters_apply(v, word_ji)
                if lhs != rhs:
                    report.fail(
                        {"i": i, "j": j, "m": m,
                         "vector": kmodule.schubert_to_jsonable(v),
                         "lhs": kmodule.schubert_to_jsonable(lhs),
                         "rhs": kmodule.schubert_to_jsonable(rhs)}
                    )
    return report


@_timed
def check_words(
    system: RootSystem,
    p: int,
    word_bound: int = 5,
    basis_bound: int = 7,
    n_random: int = 5,
    rng: random.Random | None = None,
) -> CheckReport:
    """Every reduced word of an element induces the same operator."""
    rng = rng or random.Random(0)
    report = CheckReport("words")
    ball = _flat_ball(system, basis_bound)
    ring = torus_ring(system, p)
    for x in _flat_ball(system, word_bound):
        words = weyl.all_reduced_words(x, max_length=word_bound)
        if len(words) < 2:
            continue
        ref = words[0]
        for w in ball:
            target = _walk(w, ref)
            for other in words[1:]:
                report.count()
                got = _walk(w, other)
                if got != target:
                    report.fail(
                        {"element": _wordstr(x), "word": list(other),
                         "reference_word": list(ref), "basis": _wordstr(w),
                         "lhs": _wordstr(target), "rhs": _wordstr(got)}
                    )
        for _ in range(n_random):
            v = _random_vector(system, ring, ball, rng)
            target = kmodule.demazure_letters_apply(v, ref)
            for other in words[1:]:
                report.count()
                if kmodule.demazure_letters_apply(v, other) != target:
                    report.fail(
                        {"element": _wordstr(x), "word": list(other),
                         "vector": kmodule.schubert_to_jsonable(v)}
                    )
    return report


@_timed
def check_compose(
    system: RootSystem,
    p: int,
    pair_bound: int = 5,
    basis_bound: int = 6,
    n_random: int = 20,
    rng: random.Random | None = None,
) -> CheckReport:
    """Composites multiply along lengths, and every generator is idempotent."""
    rng = rng or random.Random(0)
    report = CheckReport("compose")
    basis = _flat_ball(system, basis_bound)
    ring = torus_ring(system, p)

    for s in range(system.rank + 1):
        for w in basis:
            report.count()
            once = _walk(w, (s,))
            if _walk(once, (s,)) != once:
                report.fail({"generator": s, "basis": _wordstr(w),
                             "lhs": _wordstr(_walk(once, (s,))), "rhs": _wordstr(once)})

    pool = _flat_ball(system, pair_bound)
    pairs = []
    for u in pool:
        for v in pool:
            if 0 < weyl.length(u) + weyl.length(v) <= pair_bound:
                uv = u * v
                if weyl.length(uv) == weyl.length(u) + weyl.length(v):
                    pairs.append((u, v, uv))
    for u, v, uv in pairs:
        wu, wv, wuv = weyl.reduced_word(u), weyl.reduced_word(v), weyl.reduced_word(uv)
        for w in basis:
            report.count()
            lhs = _walk(_walk(w, wu), wv)
            rhs = _walk(w, wuv)
            if lhs != rhs:
                report.fail({"u": list(wu), "v": list(wv), "basis": _wordstr(w),
                             "lhs": _wordstr(lhs), "rhs": _wordstr(rhs)})
    for _ in range(n_random):
        if not pairs:
            break
        report.count()
        u, v, uv = rng.choice(pairs)
        vec = _random_vector(system, ring, basis, rng)
        lhs = kmodule.demazure_word_apply(kmodule.demazure_word_apply(vec, u), v)
        rhs = kmodule.demazure_word_apply(vec, uv)
        if lhs != rhs:
            report.fail({"u": _wordstr(u), "v": _wordstr(v),
                         "vector": kmodule.schubert_to_jsonable(vec)})
    return report


@_timed
def check_xi(
    system: RootSystem,
    p: int,
    exhaustive_bound: int = 4,
    n_random: int = 1000,
    rng: random.Random | None = None,
) -> CheckReport:
    """The basis relabeling intertwines the algebra product with the action."""
    rng = rng or random.Random(0)
    report = CheckReport("xi")
    ring = torus_ring(system, p)
    ball = _flat_ball(system, exhaustive_bound)
    for u in ball:
        yu = hecke.basis_y(u, ring)
        xi_yu = kmodule.schubert_from_hecke(yu)
        for v in ball:
            report.count()
            yv = hecke.basis_y(v, ring)
            lhs = kmodule.schubert_from_hecke(hecke.multiply_hecke(yu, yv))
            rhs = kmodule.hecke_act(xi_yu, yv)
            if lhs != rhs:
                report.fail({"u": _wordstr(u), "v": _wordstr(v),
                             "lhs": kmodule.schubert_to_jsonable(lhs),
                             "rhs": kmodule.schubert_to_jsonable(rhs)})

    def random_hecke():
        terms = {}
        for _ in range(rng.randrange(1, 4)):
            terms[rng.choice(ball)] = _random_coeff(ring, rng)
        return hecke.HeckeElement(system, ring, terms)

    for _ in range(n_random):
        report.count()
        a, b = random_hecke(), random_hecke()
        lhs = kmodule.schubert_from_hecke(hecke.multiply_hecke(a, b))
        rhs = kmodule.hecke_act(kmodule.schubert_from_hecke(a), b)
        if lhs != rhs:
            report.fail({"a": hecke.to_jsonable(a), "b": hecke.to_jsonable(b),
                         "lhs": kmodule.schubert_to_jsonable(lhs),
                         "rhs": kmodule.schubert_to_jsonable(rhs)})
    return report


@_timed
def check_theta(
    system: RootSystem,
    p: int,
    max_coord: int = 2,
    n_random: int = 50,
    rng: random.Random | None = None,
) -> CheckReport:
    """The dominant-monoid embedding is multiplicative on translations."""
    rng = rng or random.Random(0)
    report = CheckReport("theta")
    ring = PrimeField(p)
    dom = system.dominant_coweights(max_coord)
    for lam in dom:
        for mu in dom:
            report.count()
            y_lam = hecke.basis_y(weyl.translation_element(system, lam), ring)
            y_mu = hecke.basis_y(weyl.translation_element(system, mu), ring)
            total = tuple(a + b for a, b in zip(lam, mu))
            expected = hecke.basis_y(weyl.translation_element(system, total), ring)
            if hecke.multiply_hecke(y_lam, y_mu) != expected:
                report.fail({"lambda": list(lam), "mu": list(mu)})
    for _ in range(n_random):
        report.count()
        a = monoid_monomial(system, p, rng.choice(dom), rng.randrange(1, p))
        b = monoid_monomial(system, p, rng.choice(dom), rng.randrange(1, p))
        lhs = hecke.embed_dominant(a * b)
        rhs = hecke.multiply_hecke(hecke.embed_dominant(a), hecke.embed_dominant(b))
        if lhs != rhs:
            report.fail({"a": repr(a), "b": repr(b)})
    return report


@_timed
def check_spherical(
    system: RootSystem,
    p: int,
    max_coord: int = 4,
    pair_coord: int = 2,
) -> CheckReport:
    """The pulled-back submodule is free of rank one over the dominant monoid."""
    report = CheckReport("spherical")
    ring = torus_ring(system, p)
    w0 = weyl.longest_finite_element(system)

    dom = system.dominant_coweights(max_coord)
    image_keys = set()
    for lam in dom:
        anti = tuple(-c for c in lam)
        g = kmodule.grassmannian_class(system, anti, ring)
        (key,) = kmodule.grassmannian_pullback(g).terms
        image_keys.add(key)
    mapped = {}
    for lam in dom:
        report.count()
        key = w0 * weyl.translation_element(system, lam)
        if key in mapped:
            report.fail({"lambda": list(lam), "collides_with": list(mapped[key])})
        mapped[key] = lam
        if key not in image_keys:
            report.fail({"lambda": list(lam), "missing_from_image": _wordstr(key)})
    report.count()
    if set(mapped) != image_keys:
        report.fail({"extra_image_keys": [
            _wordstr(k) for k in sorted(image_keys - set(mapped), key=weyl.element_sort_key)
        ]})

    starts = [kmodule.basis_class(w0, ring)]
    if dom:
        lam0 = max(dom, key=sum)
        if sum(lam0) > 0:
            starts.append(
                kmodule.basis_class(w0 * weyl.translation_element(system, lam0), ring)
            )
    pairs = system.dominant_coweights(pair_coord)
    for lam in pairs:
        for mu in pairs:
            total = tuple(a + b for a, b in zip(lam, mu))
            for v in starts:
                report.count()
                lhs = kmodule.spherical_act(mu, kmodule.spherical_act(lam, v))
                rhs = kmodule.spherical_act(total, v)
                if lhs != rhs:
                    report.fail({"lambda": list(lam), "mu": list(mu),
                                 "vector": kmodule.schubert_to_jsonable(v)})
                for key in lhs.terms:
                    if not kmodule.is_spherical_key(system, key):
                        report.fail({"lambda": list(lam), "mu": list(mu),
                                     "escaped_key": _wordstr(key)})
    return report


@_timed
def check_specialize(
    system: RootSystem,
    p: int,
    n_instances: int = 1000,
    key_bound: int = 4,
    rng: random.Random | None = None,
) -> CheckReport:
    """Specializing at the torus identity intertwines the right action."""
    rng = rng or random.Random(0)
    report = CheckReport("specialize")
    ring = torus_ring(system, p)
    ball = _flat_ball(system, key_bound)
    ops = _flat_ball(system, 3)
    field = PrimeField(p)
    for _ in range(n_instances):
        report.count()
        v = _random_vector(system, ring, ball, rng)
        terms = {}
        for _ in range(rng.randrange(1, 3)):
            terms[rng.choice(ops)] = field.from_int(rng.randrange(1, p))
        h = hecke.HeckeElement(system, field, terms)
        lhs = kmodule.specialize(kmodule.hecke_act(v, h))
        rhs = kmodule.hecke_act(kmodule.specialize(v), h)
        if lhs != rhs:
            report.fail({"vector": kmodule.schubert_to_jsonable(v),
                         "hecke": hecke.to_jsonable(h),
                         "lhs": kmodule.schubert_to_jsonable(lhs),
                         "rhs": kmodule.schubert_to_jsonable(rhs)})
    return report


@_timed
def check_bruhat_oracle(system: RootSystem, max_len: int = 5) -> CheckReport:
    """Descent-recursion Bruhat order equals brute-force subword containment."""
    report = CheckReport("bruhat-oracle")
    ball = _flat_ball(system, max_len)
    for u in ball:
        for w in ball:
            report.count()
            if weyl.bruhat_leq(u, w) != bruhat_subword_oracle(u, w):
                report.fail({"u": _wordstr(u), "w": _wordstr(w),
                             "recursion": weyl.bruhat_leq(u, w)})
    return report


def bruhat_subword_oracle(u, w) -> bool:
    """u <= w iff the canonical word of w has a subword multiplying to u."""
    import itertools

    word = weyl.reduced_word(w)
    k = weyl.length(u)
    if k > len(word):
        return False
    for positions in itertools.combinations(range(len(word)), k):
        if weyl.from_word(u.system, [word[p] for p in positions]) == u:
            return True
    return False


SUITES = (
    "braid",
    "words",
    "compose",
    "xi",
    "theta",
    "spherical",
    "specialize",
    "bruhat-oracle",
    "length-formula",
)


def run_suite(
    name: str, system: RootSystem, p: int, max_length: int, seed: int = 0
) -> CheckReport:
    """Run one named suite at a scale driven by the configured truncation."""
    rng = random.Random(seed)
    n = max_length
    if name == "braid":
        return check_braid(system, p, basis_bound=n, rng=rng)
    if name == "words":
        return check_words(system, p, word_bound=min(n, 6), basis_bound=n + 2, rng=rng)
    if name == "compose":
        return check_compose(system, p, pair_bound=min(n, 6), basis_bound=n, rng=rng)
    if name == "xi":
        return check_xi(system, p, exhaustive_bound=min(n, 4), n_random=200, rng=rng)
    if name == "theta":
        return check_theta(system, p, max_coord=min(n, 3), rng=rng)
    if name == "spherical":
        return check_spherical(system, p, max_coord=min(n, 4))
    if name == "specialize":
        return check_specialize(system, p, n_instances=200, key_bound=min(n, 4), rng=rng)
    if name == "bruhat-oracle":
        return check_bruhat_oracle(system, max_len=min(n, 5))
    if name == "length-formula":
        return check_length_formula(system, max_coord=n)
    raise ValueError(f"unknown check suite {name!r}; choose from {SUITES} or 'all'")
