"""Finite subgroups of T^2 = (R/Z)^2 and torsion-point enumeration.

A finite subgroup F is encoded by its annihilator: the lattice of characters
(lam, mu) in Z^2 that are trivial on F.  Writing M for a row basis of that
lattice, F = M^-1 Z^2 / Z^2 and |F| = det M.  M is kept in the row Hermite
form ::

    [[a, b],
     [0, d]]      a, d > 0,  0 <= b < d

which is unique per lattice, so equal subgroups compare equal.

Under this duality meets of subgroups are sums of annihilators and joins are
intersections, which is how the lattice operations below are computed.

The curve E is modelled as the real torus (R/Z)^2 and E x E as (R/Z)^4;
this carries all the torsion structure needed for intersection counts.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import gcd, lcm
from typing import NamedTuple

import numpy as np

from .reps import Character, canonical_primitive


class TorsionPoint(NamedTuple):
    """A torsion point of T^2 (or of E), coordinates reduced into [0, 1)."""

    x: Fraction
    y: Fraction

    @classmethod
    def of(cls, x, y) -> TorsionPoint:
        x, y = Fraction(x), Fraction(y)
        return cls(x - (x.numerator // x.denominator), y - (y.numerator // y.denominator))

    def order(self) -> int:
        return lcm(self.x.denominator, self.y.denominator)

    def __add__(self, other):
        return TorsionPoint.of(self.x + other.x, self.y + other.y)

    def __mul__(self, k: int):
        return TorsionPoint.of(self.x * k, self.y * k)

    __rmul__ = __mul__

    def __str__(self) -> str:
        return f"({self.x},{self.y})"


def egcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(a, b) >= 0 and a*x + b*y = g."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def hermite_form(rows: Iterable[Sequence[int]]) -> tuple[tuple[int, int], tuple[int, int]]:
    """Row Hermite form of the full-rank sublattice of Z^2 spanned by ``rows``."""
    top = (0, 0)
    second = 0
    for r0, r1 in rows:
        if r0 == 0:
            second = gcd(second, r1)
            continue
        g, x, y = egcd(top[0], r0)
        new_top = (x * top[0] + y * r0, x * top[1] + y * r1)
        # combination killing the first coordinate
        second = gcd(second, (r0 // g) * top[1] - (top[0] // g) * r1)
        top = new_top
    a, b = top
    if a == 0 or second == 0:
        raise ValueError("vectors do not span a full-rank lattice")
    if a < 0:
        a, b = -a, -b
    return (a, b % second), (0, second)


def smith_invariants(m: Sequence[Sequence[int]]) -> tuple[int, int]:
    """Invariant factors (d1, d2), d1 | d2, of a nonsingular 2x2 integer matrix."""
    (a, b), (c, d) = m
    d1 = gcd(gcd(a, b), gcd(c, d))
    det = abs(a * d - b * c)
    if det == 0:
        raise ValueError("singular matrix")
    return d1, det // d1


@dataclass(frozen=True, slots=True)
class FiniteSubgroup:
    """Finite subgroup of T^2, stored as the Hermite basis of its annihilator."""

    a: int
    b: int
    d: int

    @classmethod
    def from_annihilator(cls, rows: Iterable[Sequence[int]]) -> FiniteSubgroup:
        (a, b), (_, d) = hermite_form(rows)
        return cls(a, b, d)

    @classmethod
    def trivial(cls) -> FiniteSubgroup:
        return cls(1, 0, 1)

    @classmethod
    def torsion(cls, n: int) -> FiniteSubgroup:
        """The full n-torsion subgroup T[n] x T[n]."""
        return cls(n, 0, n)

    @classmethod
    def cyclic(cls, n: int) -> FiniteSubgroup:
        """The standard cyclic subgroup of order n, generated by (1/n, 0)."""
        return subgroup_from_generators([TorsionPoint.of(Fraction(1, n), 0)])

    @property
    def matrix(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return (self.a, self.b), (0, self.d)

    def order(self) -> int:
        return self.a * self.d

    def generators(self) -> list[TorsionPoint]:
        """Columns of M^-1 reduced mod Z^2: (1/a, 0) and (-b/(ad), 1/d)."""
        gens = [
            TorsionPoint.of(Fraction(1, self.a), 0),
            TorsionPoint.of(Fraction(-self.b, self.a * self.d), Fraction(1, self.d)),
        ]
        return [g for g in gens if g != (0, 0)]

    def elements(self) -> list[TorsionPoint]:
        """All |F| elements, in a fixed order."""
        g1, g2 = (
            TorsionPoint.of(Fraction(1, self.a), 0),
            TorsionPoint.of(Fraction(-self.b, self.a * self.d), Fraction(1, self.d)),
        )
        return [g1 * i + g2 * j for j in range(self.d) for i in range(self.a)]

    def character_is_trivial(self, c: Sequence[int]) -> bool:
        """True iff the character (lam, mu) vanishes on F."""
        lam, mu = c
        if lam % self.a:
            return False
        return (mu - (lam // self.a) * self.b) % self.d == 0

    def is_cyclic(self) -> bool:
        return smith_invariants(self.matrix)[0] == 1

    def invariants(self) -> tuple[int, int]:
        """(d1, d2) with F isomorphic to Z/d1 x Z/d2 and d1 | d2."""
        return smith_invariants(self.matrix)

    def cyclic_generator(self) -> TorsionPoint:
        """An element of order |F|; raises ValueError if F is not cyclic."""
        n = self.order()
        if not self.is_cyclic():
            raise ValueError(f"{self} is not cyclic")
        for p in self.elements():
            if p.order() == n:
                return p
        raise AssertionError("cyclic subgroup without a generator")

    def __str__(self) -> str:
        if self.order() == 1:
            return "trivial"
        return "<" + ", ".join(str(g) for g in self.generators()) + ">"


class CodimOneSubgroup(NamedTuple):
    """H_v^j = ker(z_v^j): identity component ker z_v, with j components."""

    v: Character
    components: int = 1

    @classmethod
    def of(cls, lam: int, mu: int, components: int = 1) -> CodimOneSubgroup:
        v, g = canonical_primitive(lam, mu)
        if g != 1:
            raise ValueError(f"direction ({lam},{mu}) is not primitive")
        if components < 1:
            raise ValueError("components must be >= 1")
        return cls(v, components)

    def torsion(self, m: int) -> FiniteSubgroup:
        """The finite subgroup ker(z_v^j) intersected with the m-torsion."""
        lam, mu = self.v
        j = self.components
        return FiniteSubgroup.from_annihilator([(m, 0), (0, m), (j * lam, j * mu)])


H1 = CodimOneSubgroup(Character(1, 0), 1)
H2 = CodimOneSubgroup(Character(0, 1), 1)


def subgroup_from_generators(gens: Iterable[Sequence]) -> FiniteSubgroup:
    """Canonical form of the subgroup generated by the given torsion points."""
    pts = [TorsionPoint.of(*g) for g in gens]
    n = lcm(1, *(p.order() for p in pts))
    # n * L is spanned by n*e1, n*e2 and the scaled generators
    rows = [(n, 0), (0, n)] + [(int(p.x * n), int(p.y * n)) for p in pts]
    (p, q), (_, r) = hermite_form(rows)
    # annihilator basis = rows of n * (B^T)^-1 for B = [[p, q], [0, r]];
    # integral because Z^2 is contained in L
    if n % p or n % r or (n * q) % (p * r):
        raise AssertionError("annihilator is not integral")
    return FiniteSubgroup.from_annihilator([(n // p, 0), (-(n * q) // (p * r), n // r)])


def order(f: FiniteSubgroup) -> int:
    return f.order()


def is_cyclic(f: FiniteSubgroup) -> bool:
    return f.is_cyclic()


def meet(f1: FiniteSubgroup, f2: FiniteSubgroup) -> FiniteSubgroup:
    """Intersection F1 n F2 (annihilator of the sum of annihilators)."""
    return FiniteSubgroup.from_annihilator(list(f1.matrix) + list(f2.matrix))


def join(f1: FiniteSubgroup, f2: FiniteSubgroup) -> FiniteSubgroup:
    """The subgroup generated by F1 and F2."""
    return subgroup_from_generators(f1.generators() + f2.generators())


def contains(f1: FiniteSubgroup, f2: FiniteSubgroup) -> bool:
    """True iff F2 is a subgroup of F1."""
    return all(f2.character_is_trivial(row) for row in f1.matrix)


def codim1_contains(f: FiniteSubgroup, h: CodimOneSubgroup) -> bool:
    """True iff F lies in H_v^j, i.e. j*(lam*a + mu*b) is integral on every generator."""
    lam, mu = h.v
    j = h.components
    return all((j * (lam * g.x + mu * g.y)).denominator == 1 for g in f.generators())


def n_index(f: FiniteSubgroup, v: Sequence[int]) -> int:
    """n_v(F): the n with <F, ker z_v> = ker z_v^n, i.e. least n with F in ker z_v^n."""
    lam, mu = v
    return lcm(1, *((lam * g.x + mu * g.y).denominator for g in f.generators()))


def meets_h1_trivially(f: FiniteSubgroup) -> bool:
    """True iff F n H_1 = {1}, H_1 = 1 x T the kernel of z_(1,0).

    F n H_1 is the kernel of the projection of F onto its first coordinate;
    it is trivial iff that projection, a cyclic group of order n_(1,0)(F),
    has the same order as F.
    """
    return n_index(f, (1, 0)) == f.order()


def enclosing_codim1(f: FiniteSubgroup) -> CodimOneSubgroup:
    """A connected codimension-one H = ker z_v with F in H and H n H_1 = 1.

    Needs F n H_1 = 1 (which forces F cyclic).  With F generated by
    Q = (a/n, b/n), a is a unit mod n; taking s = a^-1 mod n, sQ = (1/n, sb/n)
    also generates F and lies on the line through (1, sb), whose kernel
    character is (sb, -1).
    """
    if not f.is_cyclic():
        raise ValueError(f"{f} is not cyclic")
    if not meets_h1_trivially(f):
        raise ValueError(f"{f} meets H_1 nontrivially")
    n = f.order()
    q = f.cyclic_generator()
    a, b = int(q.x * n), int(q.y * n)
    s = pow(a, -1, n) if n > 1 else 0
    c = (s * b) % n if n > 1 else 0
    v, _ = canonical_primitive(c, -1)
    return CodimOneSubgroup(v, 1)


def torsion_points(n: int) -> list[TorsionPoint]:
    """All n^2 points of E[n] in the real-torus model."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return [TorsionPoint(Fraction(i, n), Fraction(j, n)) for i in range(n) for j in range(n)]


def exact_order_count(n: int) -> int:
    """Number of points of exact order n, counted by enumeration."""
    return sum(1 for p in torsion_points(n) if p.order() == n)


def jordan_totient2(n: int) -> int:
    """n^2 * prod_{p | n} (1 - p^-2), from the factorisation of n."""
    result = Fraction(n * n)
    m, p = n, 2
    while p * p <= m:
        if m % p == 0:
            result *= 1 - Fraction(1, p * p)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        result *= 1 - Fraction(1, m * m)
    return int(result)


def det2(v1: Sequence[int], v2: Sequence[int]) -> int:
    return v1[0] * v2[1] - v1[1] * v2[0]


def intersection_count_oracle(v1: Sequence[int], v2: Sequence[int]) -> int:
    """Count points of C_v1 n C_v2 on E x E by brute force.

    C_v = {(P, Q) : lam P + mu Q = e}.  Every solution is D-torsion with
    D = |det(v1, v2)| (adj(M) M = D I), so it suffices to scan the D^4
    points of (1/D)Z^4 / Z^4.
    """
    D = abs(det2(v1, v2))
    if D == 0:
        raise ValueError(f"parallel directions {tuple(v1)}, {tuple(v2)}: infinite intersection")
    (l1, m1), (l2, m2) = v1, v2
    # P = (p1, p2)/D, Q = (q1, q2)/D; the conditions hold coordinatewise on E
    p1, p2, q1, q2 = np.meshgrid(*(np.arange(D),) * 4, indexing="ij")
    ok = (
        ((l1 * p1 + m1 * q1) % D == 0)
        & ((l1 * p2 + m1 * q2) % D == 0)
        & ((l2 * p1 + m2 * q1) % D == 0)
        & ((l2 * p2 + m2 * q2) % D == 0)
    )
    return int(ok.sum())


def primitive_directions(bound: int) -> list[Character]:
    """Canonical primitive characters with both coordinates in [-bound, bound]."""
    return [
        Character(lam, mu)
        for lam, mu in product(range(-bound, bound + 1), repeat=2)
        if Character(lam, mu).is_primitive()
    ]
