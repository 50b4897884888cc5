"""Fiber-type divisors on the abelian surface X = E x E.

For a primitive character v = (lam, mu) let C_v be the curve
{(P, Q) : lam P + mu Q = e}, a copy of E.  Divisors here are integer
combinations of the classes C_v; translates of C_v are identified with C_v,
so only directions and multiplicities matter.  The intersection pairing is

    C_v . C_w = det(v, w)^2,

in particular C_v . C_v = 0.  Riemann-Roch on an abelian surface gives
chi(O(D)) = chi(O(-D)) = D.D / 2.

Line bundles are evaluated with the sign convention O(-D) for the
representation-sphere side ("minus") and O(D) for "plus".
"""

from __future__ import annotations

from collections.abc import Iterator, Mapping, Sequence
from typing import NamedTuple

from .reps import Character, TorusRep, canonical_primitive


class NotEffectiveError(ValueError):
    pass


class FixedPointError(ValueError):
    """A representation with a trivial summand has no associated divisor."""


class CohDims(NamedTuple):
    h0: int
    h1: int
    h2: int

    def euler(self) -> int:
        return self.h0 - self.h1 + self.h2

    def reversed(self) -> CohDims:
        return CohDims(self.h2, self.h1, self.h0)


class Divisor(Mapping):
    """Integer combination sum m_v C_v over canonical primitive directions v."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=None):
        acc: dict[Character, int] = {}
        if coeffs:
            items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
            for v, m in items:
                v = Character(*v)
                if not v.is_primitive():
                    raise ValueError(f"{tuple(v)} is not a canonical primitive direction")
                acc[v] = acc.get(v, 0) + m
        self._coeffs = {v: m for v, m in sorted(acc.items()) if m}

    @classmethod
    def _trusted(cls, coeffs: dict) -> Divisor:
        obj = object.__new__(cls)
        obj._coeffs = coeffs
        return obj

    @classmethod
    def curve(cls, lam: int, mu: int, m: int = 1) -> Divisor:
        v, g = canonical_primitive(lam, mu)
        if g != 1:
            raise ValueError(f"({lam},{mu}) is not primitive")
        return cls({v: m})

    def __getitem__(self, v):
        return self._coeffs[v]

    def __iter__(self) -> Iterator[Character]:
        return iter(self._coeffs)

    def __len__(self) -> int:
        return len(self._coeffs)

    def __contains__(self, v) -> bool:
        return v in self._coeffs

    def items(self):
        return self._coeffs.items()

    def values(self):
        return self._coeffs.values()

    def keys(self):
        return self._coeffs.keys()

    def __eq__(self, other):
        if isinstance(other, Divisor):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self._coeffs.items()))

    def __add__(self, other: Divisor) -> Divisor:
        return Divisor(list(self._coeffs.items()) + list(other._coeffs.items()))

    def __neg__(self) -> Divisor:
        return Divisor({v: -m for v, m in self._coeffs.items()})

    def __sub__(self, other: Divisor) -> Divisor:
        return self + (-other)

    def __mul__(self, k: int) -> Divisor:
        return Divisor({v: k * m for v, m in self._coeffs.items()})

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"Divisor({ {tuple(v): m for v, m in self._coeffs.items()} })"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        return " + ".join(
            (f"{m}" if m != 1 else "") + f"C({v[0]},{v[1]})" for v, m in self._coeffs.items()
        )

    def is_effective(self) -> bool:
        return not self._coeffs or min(self._coeffs.values()) >= 0

    def directions(self) -> list[Character]:
        return list(self._coeffs)

    def total_multiplicity(self) -> int:
        return sum(self._coeffs.values())

    def to_json(self) -> list[dict]:
        return [{"v": [v[0], v[1]], "m": m} for v, m in self._coeffs.items()]

    @classmethod
    def from_json(cls, data: Sequence[Mapping]) -> Divisor:
        return cls((tuple(entry["v"]), entry["m"]) for entry in data)


def divisor_of_rep(w: Mapping[Character, int]) -> Divisor:
    """The divisor D_W = sum over characters of mult * X(ker z).

    X(ker z_{g v}) for primitive v is the union of the g^2 translates of C_v
    by E[g], hence the class g^2 C_v.
    """
    coeffs: dict[Character, int] = {}
    for c, mult in w.items():
        if c[0] == 0 and c[1] == 0:
            raise FixedPointError(
                "representation has a trivial summand; S^W needs W with no fixed points"
            )
        v, g = canonical_primitive(c[0], c[1])
        coeffs[v] = coeffs.get(v, 0) + mult * g * g
    return Divisor._trusted(dict(sorted(coeffs.items())))


def curve_pairing(v: Sequence[int], w: Sequence[int]) -> int:
    det = v[0] * w[1] - v[1] * w[0]
    return det * det


def pairing(d1: Mapping[Character, int], d2: Mapping[Character, int]) -> int:
    """Intersection number D1 . D2."""
    return sum(m1 * m2 * curve_pairing(v, w) for v, m1 in d1.items() for w, m2 in d2.items())


def intersection_matrix(d: Divisor) -> list[list[int]]:
    """Gram matrix C_v . C_w over the directions of ``d``, in sorted order."""
    dirs = d.directions()
    return [[curve_pairing(v, w) for w in dirs] for v in dirs]


def _require_effective(d: Divisor) -> None:
    if not d.is_effective():
        raise NotEffectiveError(f"divisor {d} is not effective")


def is_ample(d: Divisor) -> bool:
    """Nakai-Moishezon for effective fiber-type divisors.

    Two non-parallel directions give D.D > 0 through the cross terms, and any
    irreducible curve missing one fiber direction is a translate of it, so it
    meets the other.  A single direction has D.D = 0.
    """
    _require_effective(d)
    ample = len(d) >= 2
    assert ample == (pairing(d, d) > 0)
    return ample


def self_intersection(d: Mapping[Character, int]) -> int:
    """D.D in linear time.

    Summing det(v, w)^2 over ordered pairs expands to twice the Gram
    determinant of the moments sum m lam^2, sum m mu^2, sum m lam mu.
    """
    sll = smm = slm = 0
    for (lam, mu), m in d.items():
        sll += m * lam * lam
        smm += m * mu * mu
        slm += m * lam * mu
    return 2 * (sll * smm - slm * slm)


def euler_char(d: Divisor) -> int:
    """chi(O(D)) = D.D / 2 (Riemann-Roch on an abelian surface)."""
    self_int = self_intersection(d)
    assert self_int % 2 == 0, "odd self-intersection"
    return self_int // 2


def coh_dims(d: Divisor, sign: str = "plus") -> CohDims:
    """(h0, h1, h2) of O(D) for sign 'plus', of O(-D) for sign 'minus'.

    Zero divisor: the structure sheaf of a 2-dimensional complex torus,
    h^q = binom(2, q).  One direction with total multiplicity a: O(D) is
    pulled back from a degree-a bundle on E, giving (a, a, 0).  Two or more
    directions: D is ample, Kodaira vanishing leaves h0 = chi.  The 'minus'
    values are the Serre duals.
    """
    if sign not in ("plus", "minus"):
        raise ValueError(f"sign must be 'plus' or 'minus', not {sign!r}")
    _require_effective(d)
    k = len(d)
    if k == 0:
        dims = CohDims(1, 2, 1)
    elif k == 1:
        alpha = d.total_multiplicity()
        dims = CohDims(alpha, alpha, 0)
    else:
        dims = CohDims(euler_char(d), 0, 0)
    return dims if sign == "plus" else dims.reversed()


def restriction_map_rank(d: Divisor, degree: int) -> int:
    """Rank of H^k(X, O(-D)) -> H^k(X, O_X) induced by O(-D) -> O_X."""
    _require_effective(d)
    k = len(d)
    if degree == 0:
        return 1 if k == 0 else 0
    if degree == 1:
        # one direction: the image is the pulled-back line H^1(E, O_E)
        return {0: 2, 1: 1}.get(k, 0)
    if degree == 2:
        # dual to the inclusion of constants H^0(O_X) -> H^0(O(D))
        return 1
    raise ValueError(f"degree must be 0, 1 or 2, not {degree}")
