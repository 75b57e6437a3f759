"""Root-system data for the split simply connected simple groups.

Everything in this package works with two coordinate systems and one
pairing, fixed here once and for all:

* roots are integer vectors in the simple-root basis,
* coweights (cocharacters of the maximal torus) are integer vectors in
  the simple-coroot basis,
* ``cartan[i][j]`` is the value of the j-th simple coroot paired against
  the i-th simple root.

All pairings route through the ``cartan`` matrix, so the transpose
conventions of the non-simply-laced types live in exactly one place.
There is no Euclidean embedding anywhere: arithmetic is exact, on
unbounded Python integers.

>>> rs = build_root_system("A", 2)
>>> rs.num_positive_roots
3
>>> rs.highest_root
(1, 1)
>>> rs.pairing((1, 0), (0, 1))
-1
"""

from __future__ import annotations

import functools
import itertools
from collections import deque

Vector = tuple[int, ...]
Matrix = tuple[Vector, ...]

VALID_TYPES = {
    "A": lambda l: l >= 1,
    "B": lambda l: l >= 2,
    "C": lambda l: l >= 2,
    "D": lambda l: l >= 4,
    "E": lambda l: l in (6, 7, 8),
    "F": lambda l: l == 4,
    "G": lambda l: l == 2,
}

# Number of positive roots per family, used as a self-check on the
# generated tables (the generation itself is one algorithm for all types).
_POSITIVE_ROOT_COUNTS = {
    "A": lambda l: l * (l + 1) // 2,
    "B": lambda l: l * l,
    "C": lambda l: l * l,
    "D": lambda l: l * (l - 1),
    "E": lambda l: {6: 36, 7: 63, 8: 120}[l],
    "F": lambda l: 24,
    "G": lambda l: 6,
}


def _pairing_matrix(lie_type: str, rank: int) -> list[list[int]]:
    """Matrix ``A[i][j] = <coroot_i, root_j>`` for one irreducible type.

    Node numbering: types A-D and E use a chain 0,1,...; D attaches the
    last node to the third-from-last, E attaches the last node to the
    fourth-from-last.  In B the last chain node is short, in C it is long.
    """
    a = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]

    def bond(i, j, aij=-1, aji=-1):
        a[i][j] = aij
        a[j][i] = aji

    if lie_type == "A":
        for i in range(rank - 1):
            bond(i, i + 1)
    elif lie_type == "B":
        for i in range(rank - 2):
            bond(i, i + 1)
        bond(rank - 2, rank - 1, -1, -2)
    elif lie_type == "C":
        for i in range(rank - 2):
            bond(i, i + 1)
        bond(rank - 2, rank - 1, -2, -1)
    elif lie_type == "D":
        for i in range(rank - 2):
            bond(i, i + 1)
        bond(rank - 3, rank - 1)
    elif lie_type == "E":
        for i in range(rank - 2):
            bond(i, i + 1)
        bond(rank - 4, rank - 1)
    elif lie_type == "F":
        bond(0, 1)
        bond(1, 2, -1, -2)
        bond(2, 3)
    elif lie_type == "G":
        bond(0, 1, -3, -1)
    return a


def _symmetrizers(a: list[list[int]]) -> tuple[int, ...]:
    """Half square lengths d_i with d_i * a[i][j] = d_j * a[j][i], min = 1."""
    from fractions import Fraction

    rank = len(a)
    d: list[Fraction | None] = [None] * rank
    d[0] = Fraction(1)
    queue = deque([0])
    while queue:
        i = queue.popleft()
        for j in range(rank):
            if i != j and a[i][j] != 0 and d[j] is None:
                d[j] = d[i] * Fraction(a[i][j], a[j][i])
                queue.append(j)
    assert all(x is not None for x in d), "Dynkin diagram not connected"
    lo = min(d)
    out = tuple(x / lo for x in d)
    assert all(x.denominator == 1 for x in out)
    return tuple(int(x) for x in out)


class RootSystem:
    """Cartan data of one irreducible type, immutable after construction.

    Do not instantiate directly; use :func:`build_root_system`, which
    validates the (type, rank) pair and interns the instances.
    """

    def __init__(self, lie_type: str, rank: int):
        if lie_type not in VALID_TYPES or not VALID_TYPES[lie_type](rank):
            raise ValueError(
                f"invalid root system type ({lie_type!r}, {rank}): supported are "
                "A(l>=1), B(l>=2), C(l>=2), D(l>=4), E(6,7,8), F(4), G(2)"
            )
        self.lie_type = lie_type
        self.rank = rank

        a = _pairing_matrix(lie_type, rank)
        self._a = tuple(tuple(row) for row in a)
        # spec convention: cartan[i][j] = <coroot_j, root_i>
        self.cartan: Matrix = tuple(tuple(a[j][i] for j in range(rank)) for i in range(rank))
        self.symmetrizers = _symmetrizers(a)

        self.positive_roots: tuple[Vector, ...] = self._generate_positive_roots()
        expected = _POSITIVE_ROOT_COUNTS[lie_type](rank)
        if len(self.positive_roots) != expected:
            raise AssertionError(
                f"root closure for {lie_type}{rank} produced "
                f"{len(self.positive_roots)} roots, expected {expected}"
            )

        self.highest_root: Vector = self._find_highest_root()
        self.two_rho: Vector = tuple(
            sum(col) for col in zip(*self.positive_roots)
        )
        self.highest_coroot: Vector = self._coroot_of_highest_root()

        self.simple_reflections_coweight = tuple(
            self._simple_reflection_coweight(i) for i in range(rank)
        )
        self.simple_reflections_root = tuple(
            self._simple_reflection_root(i) for i in range(rank)
        )
        self.theta_reflection_coweight = self._reflection_coweight(
            self.highest_root, self.highest_coroot
        )
        self.theta_reflection_root = self._reflection_root(
            self.highest_root, self.highest_coroot
        )
        assert self.pairing(self.highest_coroot, self.highest_root) == 2

    # -- generation ------------------------------------------------------

    def _coroot_pairing(self, i: int, beta: Vector) -> int:
        # <coroot_i, beta> for beta in root coordinates
        return sum(self._a[i][k] * beta[k] for k in range(self.rank))

    def _generate_positive_roots(self) -> tuple[Vector, ...]:
        # Build by height: beta + alpha_i is a root iff the alpha_i-string
        # through beta has q = p - <beta, coroot_i> >= 1, where p is the
        # largest k with beta - k*alpha_i already found.
        rank = self.rank
        simples = [tuple(int(i == j) for j in range(rank)) for i in range(rank)]
        found = set(simples)
        level = list(simples)
        levels = [list(simples)]
        while level:
            nxt = []
            for beta in level:
                for i in range(rank):
                    p = 0
                    lower = list(beta)
                    while True:
                        lower[i] -= 1
                        if tuple(lower) in found:
                            p += 1
                        else:
                            break
                    if p - self._coroot_pairing(i, beta) >= 1:
                        gamma = list(beta)
                        gamma[i] += 1
                        gamma = tuple(gamma)
                        if gamma not in found:
                            found.add(gamma)
                            nxt.append(gamma)
            if nxt:
                levels.append(nxt)
            level = nxt
        ordered = []
        for lev in levels:
            ordered.extend(sorted(lev))
        return tuple(ordered)

    def _find_highest_root(self) -> Vector:
        top = max(self.positive_roots, key=lambda r: (sum(r), r))
        for beta in self.positive_roots:
            if any(b > t for b, t in zip(beta, top)):
                raise AssertionError("highest root is not coordinatewise maximal")
        return top

    def _coroot_of_highest_root(self) -> Vector:
        # For beta = sum c_i alpha_i the coroot is sum c_i d_i / d_beta coroot_i.
        from fractions import Fraction

        theta = self.highest_root
        d = self.symmetrizers
        norm = Fraction(
            sum(
                theta[i] * d[i] * self._coroot_pairing(i, theta)
                for i in range(self.rank)
            ),
            2,
        )
        coords = [Fraction(theta[i] * d[i], 1) / norm for i in range(self.rank)]
        assert all(c.denominator == 1 for c in coords)
        return tuple(int(c) for c in coords)

    # -- reflections -----------------------------------------------------

    def _reflection_coweight(self, beta: Vector, beta_coroot: Vector) -> Matrix:
        # lam -> lam - <lam, beta> beta_coroot, acting on coroot coordinates
        rank = self.rank
        col = [sum(self.cartan[i][k] * beta[i] for i in range(rank)) for k in range(rank)]
        return tuple(
            tuple(int(m == k) - beta_coroot[m] * col[k] for k in range(rank))
            for m in range(rank)
        )

    def _reflection_root(self, beta: Vector, beta_coroot: Vector) -> Matrix:
        # gamma -> gamma - <beta_coroot, gamma> beta, acting on root coordinates
        rank = self.rank
        row = [
            sum(beta_coroot[j] * self._a[j][k] for j in range(rank))
            for k in range(rank)
        ]
        return tuple(
            tuple(int(m == k) - beta[m] * row[k] for k in range(rank))
            for m in range(rank)
        )

    def _simple_reflection_coweight(self, i: int) -> Matrix:
        alpha = tuple(int(i == j) for j in range(self.rank))
        return self._reflection_coweight(alpha, alpha)

    def _simple_reflection_root(self, i: int) -> Matrix:
        alpha = tuple(int(i == j) for j in range(self.rank))
        return self._reflection_root(alpha, alpha)

    # -- queries ---------------------------------------------------------

    @property
    def num_positive_roots(self) -> int:
        return len(self.positive_roots)

    def pairing(self, lam: Vector, beta: Vector) -> int:
        """Pair a coweight against a root, both in their simple bases.

        >>> build_root_system("A", 2).pairing((1, 1), (2, 2))
        4
        """
        if len(lam) != self.rank or len(beta) != self.rank:
            raise ValueError(
                f"dimension mismatch: rank is {self.rank}, got coweight of "
                f"length {len(lam)} and root of length {len(beta)}"
            )
        return sum(
            beta[i] * sum(self.cartan[i][j] * lam[j] for j in range(self.rank))
            for i in range(self.rank)
        )

    def is_dominant(self, lam: Vector) -> bool:
        """True iff the coweight pairs >= 0 with every simple root."""
        if len(lam) != self.rank:
            raise ValueError(f"coweight of length {len(lam)} for rank {self.rank}")
        return all(
            sum(self.cartan[i][j] * lam[j] for j in range(self.rank)) >= 0
            for i in range(self.rank)
        )

    def dominant_coweights(self, max_coord: int) -> list[Vector]:
        """All dominant coweights with coordinates in 0..max_coord."""
        out = []
        for coords in itertools.product(range(max_coord + 1), repeat=self.rank):
            if self.is_dominant(coords):
                out.append(coords)
        return out

    # -- plumbing --------------------------------------------------------

    def __repr__(self):
        return f"RootSystem({self.lie_type!r}, {self.rank})"

    def __eq__(self, other):
        return (
            isinstance(other, RootSystem)
            and self.lie_type == other.lie_type
            and self.rank == other.rank
        )

    def __hash__(self):
        return hash(("RootSystem", self.lie_type, self.rank))

    def to_jsonable(self) -> dict:
        return {"type": self.lie_type, "rank": self.rank}


@functools.lru_cache(maxsize=None)
def build_root_system(lie_type: str, rank: int) -> RootSystem:
    """Construct (and intern) the root system of one irreducible type.

    >>> build_root_system("G", 2).num_positive_roots
    6
    >>> build_root_system("A", 0)
    Traceback (most recent call last):
        ...
    ValueError: invalid root system type ('A', 0): supported are A(l>=1), \
B(l>=2), C(l>=2), D(l>=4), E(6,7,8), F(4), G(2)
    """
    return RootSystem(lie_type, int(rank))


def root_system_from_jsonable(data: dict) -> RootSystem:
    return build_root_system(data["type"], data["rank"])
