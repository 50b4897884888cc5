"""Rational equivariant elliptic cohomology, at the level of dimensions.

Both theories are 2-periodic, so every answer is a pair (even, odd) of
complex dimensions.

* T^2-theory on a representation sphere S^W (W without trivial summands):
  the cohomology of O(-D_W) on X = E x E, with H^0 + H^2 in even degrees and
  H^1 in odd degrees.
* T-theory on CP(V): V (x) w is a T^2-representation on which H_1 acts
  freely, so EC_T(CP(V)_+) is read off the long exact sequence of
  S(V (x) w)_+ -> S^0 -> S^{V (x) w}, i.e. from kernel and cokernel of
  H^*(X, O(-D)) -> H^*(X, O_X).  The reduced value subtracts the point
  EC_T(S^0) = (1, 1).

>>> ec_cp(parse_circle_rep("eps + 4z"))
GradedDims(even=0, odd=4)
"""

from __future__ import annotations

from collections.abc import Mapping
from typing import NamedTuple

from .divisor import CohDims, Divisor, coh_dims, divisor_of_rep, restriction_map_rank
from .reps import CircleRep, parse_circle_rep, tensor_with_w  # noqa: F401 (parse_circle_rep: doctest)


class GradedDims(NamedTuple):
    even: int
    odd: int

    def euler(self) -> int:
        return self.even - self.odd

    def __sub__(self, other: GradedDims) -> GradedDims:
        return GradedDims(self.even - other.even, self.odd - other.odd)


class LesTable(NamedTuple):
    """Dimension data of H^k(O(-D)) -> H^k(O_X) for k = 0, 1, 2."""

    source: CohDims
    target: CohDims
    rank: tuple[int, int, int]
    kernel: tuple[int, int, int]
    cokernel: tuple[int, int, int]

    def to_json(self) -> dict:
        return {name: list(value) for name, value in self._asdict().items()}

    @classmethod
    def from_json(cls, data: Mapping) -> LesTable:
        return cls(
            CohDims(*data["source"]),
            CohDims(*data["target"]),
            tuple(data["rank"]),
            tuple(data["kernel"]),
            tuple(data["cokernel"]),
        )


POINT = GradedDims(1, 1)
STRUCTURE_SHEAF = Divisor()


def ec_t_point() -> GradedDims:
    """EC_T of a point: H^0(C, O_C) and H^1(C, O_C) are both one-dimensional."""
    return POINT


def ec_t2_sphere(w: Mapping) -> GradedDims:
    """EC_{T^2}(S^W) for a representation W with no trivial summand."""
    c = coh_dims(divisor_of_rep(w), "minus")
    return GradedDims(c.h0 + c.h2, c.h1)


def cp_divisor(v: CircleRep) -> Divisor:
    return divisor_of_rep(tensor_with_w(v))


def les_table(v: CircleRep) -> LesTable:
    if not v:
        raise ValueError("CP(V) needs a nonzero representation V")
    d = cp_divisor(v)
    s0, s1, s2 = source = coh_dims(d, "minus")
    t0, t1, t2 = target = coh_dims(STRUCTURE_SHEAF, "plus")
    r0 = restriction_map_rank(d, 0)
    r1 = restriction_map_rank(d, 1)
    r2 = restriction_map_rank(d, 2)
    assert 0 <= r0 <= min(s0, t0) and 0 <= r1 <= min(s1, t1) and 0 <= r2 <= min(s2, t2)
    return LesTable(
        source,
        target,
        (r0, r1, r2),
        (s0 - r0, s1 - r1, s2 - r2),
        (t0 - r0, t1 - r1, t2 - r2),
    )


def ec_cp_from_table(t: LesTable, reduced: bool = True) -> GradedDims:
    # even degrees: degree-0 cokernel and degree-1 kernel;
    # odd degrees: degree-1 cokernel and degree-2 kernel
    unreduced = GradedDims(t.cokernel[0] + t.kernel[1], t.cokernel[1] + t.kernel[2])
    if not reduced:
        return unreduced
    out = unreduced - POINT
    assert out.even >= 0 and out.odd >= 0, f"negative reduced dimension {out}"
    return out


def ec_cp(v: CircleRep, reduced: bool = True) -> GradedDims:
    """EC_T^*(CP(V)) as (even, odd); reduced by default."""
    return ec_cp_from_table(les_table(v), reduced)


def d_invariant(v: Mapping[int, int]) -> int:
    """d = sum_{i<j} a_i a_j (i - j)^2, computed as A sum a i^2 - (sum a i)^2."""
    total = first = second = 0
    for i, a in v.items():
        total += a
        first += a * i
        second += a * i * i
    return total * second - first * first


def closed_form(v: CircleRep) -> GradedDims:
    """Reduced EC_T(CP(V)) straight from the isotypic data of V."""
    if not v:
        raise ValueError("CP(V) needs a nonzero representation V")
    if len(v) == 1:
        alpha = v.dim()
        return GradedDims(alpha - 1, alpha - 1)
    return GradedDims(0, d_invariant(v))
