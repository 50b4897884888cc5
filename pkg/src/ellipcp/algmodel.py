"""Finite combinatorics of the algebraic model for T^2.

Every finite subgroup F of T^2 is an intersection H_A^{n_A} n H_B^{n_B} of
two codimension-one subgroups.  In the annihilator picture (see
:mod:`ellipcp.lattice`) this is just a choice of basis (n_A A, n_B B) of the
character lattice trivial on F; we use its Hermite basis.  With that choice
H^*(BT^2/F) = Q[x_A, x_B], x_A and x_B being Euler classes of the
characters n_A A and n_B B, and the Euler class of a character trivial on F
is the linear form p x_A + q x_B read off from its coordinates in that basis.

Values of O_F-modules are only ever evaluated on an explicit finite family
of subgroups.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .lattice import CodimOneSubgroup, FiniteSubgroup, codim1_contains, meet
from .reps import Character, canonical_primitive, fixed_dim


@dataclass(frozen=True)
class Splitting:
    """F = ker(z_A^{n_A}) n ker(z_B^{n_B})."""

    a_dir: Character
    n_a: int
    b_dir: Character
    n_b: int

    @property
    def basis(self) -> tuple[tuple[int, int], tuple[int, int]]:
        """The characters n_A A and n_B B, a basis of F's annihilator."""
        return (
            (self.n_a * self.a_dir[0], self.n_a * self.a_dir[1]),
            (self.n_b * self.b_dir[0], self.n_b * self.b_dir[1]),
        )

    def coordinates(self, c: Sequence[int]) -> tuple[int, int] | None:
        """(p, q) with c = p n_A A + q n_B B, or None if c is nontrivial on F."""
        (a1, a2), (b1, b2) = self.basis
        det = a1 * b2 - a2 * b1
        p_num = c[0] * b2 - c[1] * b1
        q_num = a1 * c[1] - a2 * c[0]
        if p_num % det or q_num % det:
            return None
        return p_num // det, q_num // det

    def subgroup(self) -> FiniteSubgroup:
        return FiniteSubgroup.from_annihilator(self.basis)


def decompose(f: FiniteSubgroup) -> Splitting:
    """Split F as H_A^{n_A} n H_B^{n_B} using the Hermite basis of its annihilator.

    The rows (a, b) and (0, d) give A = (a, b)/gcd, n_A = gcd(a, b) and
    B = (0, 1), n_B = d.  Each n is automatically the index n_i(F): a smaller
    multiple of that direction would not lie in the annihilator.
    """
    (a, b), (_, d) = f.matrix
    a_dir, n_a = canonical_primitive(a, b)
    b_dir, n_b = canonical_primitive(0, d)
    split = Splitting(a_dir, n_a, b_dir, n_b)
    if meet(
        CodimOneSubgroup(a_dir, n_a).torsion(f.order()),
        CodimOneSubgroup(b_dir, n_b).torsion(f.order()),
    ) != f:
        raise AssertionError(f"splitting {split} does not reconstruct {f}")
    return split


class EulerPolynomial:
    """Polynomial in x_A, x_B with rational coefficients; deg x_A = deg x_B = -2."""

    __slots__ = ("terms", "splitting")

    def __init__(self, terms: Mapping[tuple[int, int], Fraction] | None = None, splitting=None):
        self.terms = {
            k: Fraction(c) for k, c in sorted((terms or {}).items()) if c != 0
        }
        self.splitting = splitting

    @classmethod
    def one(cls, splitting=None) -> EulerPolynomial:
        return cls({(0, 0): 1}, splitting)

    @classmethod
    def linear(cls, p: int, q: int, splitting=None) -> EulerPolynomial:
        return cls({(1, 0): p, (0, 1): q}, splitting)

    def __mul__(self, other: EulerPolynomial) -> EulerPolynomial:
        if self.splitting and other.splitting and self.splitting != other.splitting:
            raise ValueError("Euler classes in different coordinates")
        acc: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                k = (i1 + i2, j1 + j2)
                acc[k] = acc.get(k, 0) + c1 * c2
        return EulerPolynomial(acc, self.splitting or other.splitting)

    def __eq__(self, other):
        if isinstance(other, EulerPolynomial):
            return self.terms == other.terms
        if isinstance(other, int):
            return self.terms == ({(0, 0): Fraction(other)} if other else {})
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def is_homogeneous(self) -> bool:
        return len({i + j for i, j in self.terms}) <= 1

    def degree(self) -> int:
        """Cohomological degree of a homogeneous class (-2 per variable)."""
        if not self.is_homogeneous():
            raise ValueError(f"{self} is not homogeneous")
        if not self.terms:
            return 0
        i, j = next(iter(self.terms))
        return -2 * (i + j)

    def is_linear_form(self) -> bool:
        return bool(self.terms) and all(i + j == 1 for i, j in self.terms)

    def __repr__(self) -> str:
        return f"EulerPolynomial({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (i, j), c in sorted(self.terms.items(), key=lambda t: (-(t[0][0] + t[0][1]), -t[0][0])):
            mono = "*".join(
                s for s in (_power("x_A", i), _power("x_B", j)) if s
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def _power(name: str, k: int) -> str:
    if k == 0:
        return ""
    return name if k == 1 else f"{name}^{k}"


def euler_class(w: Mapping[Character, int], f: FiniteSubgroup) -> EulerPolynomial:
    """F-component of e(W): product of linear forms over the characters trivial on F."""
    split = decompose(f)
    result = EulerPolynomial.one(split)
    for c, mult in w.items():
        if not f.character_is_trivial(c):
            continue
        coords = split.coordinates(c)
        assert coords is not None, f"{c} is trivial on {f} but not in its annihilator basis"
        factor = EulerPolynomial.linear(*coords, split)
        for _ in range(mult):
            result = result * factor
    return result


def euler_class_virtual(
    w_plus: Mapping[Character, int], w_minus: Mapping[Character, int], f: FiniteSubgroup
) -> tuple[EulerPolynomial, EulerPolynomial]:
    """e(W+ - W-) as the uncancelled fraction (e(W+), e(W-))."""
    return euler_class(w_plus, f), euler_class(w_minus, f)


def suspension_profile(
    w: Mapping[Character, int], family: Iterable[FiniteSubgroup]
) -> dict[FiniteSubgroup, int]:
    """Real suspension degree 2 dim(W^F) at each F of the family."""
    return {f: 2 * fixed_dim(w, f) for f in family}


def enumerate_subgroups(f: FiniteSubgroup) -> list[FiniteSubgroup]:
    """All subgroups of F, sorted by (order, Hermite data).

    Subgroups of F correspond to lattices between F's annihilator and Z^2;
    these are scanned through their Hermite forms [[a, b], [0, d]] with
    a*d dividing |F|.
    """
    n = f.order()
    found = []
    for a in _divisors(n):
        for d in _divisors(n // a):
            for b in range(d):
                g = FiniteSubgroup(a, b, d)
                # g <= f  iff  annihilator(f) lies in annihilator(g)
                if all(g.character_is_trivial(row) for row in f.matrix):
                    found.append(g)
    found.sort(key=lambda g: (g.order(), g.a, g.b, g.d))
    return found


def _divisors(n: int) -> list[int]:
    return [k for k in range(1, n + 1) if n % k == 0]


@dataclass(frozen=True)
class Descriptor:
    """Graded Q-vector space up to isomorphism.

    kind is one of 'zero', 'SigmaQ' (Q in degree 1), 'Sigma2Q^r' (Q^r in
    degree 2), or 'SigmaPoly' (the suspension of Q[t], deg t = -2, so Q in
    every degree 1 - 2m, m >= 0).
    """

    kind: str
    rank: int = 0

    def dim(self, degree: int) -> int:
        if self.kind == "SigmaQ":
            return 1 if degree == 1 else 0
        if self.kind == "Sigma2Q^r":
            return self.rank if degree == 2 else 0
        if self.kind == "SigmaPoly":
            return 1 if degree <= 1 and degree % 2 == 1 else 0
        return 0

    def total_dim(self) -> int | None:
        """Total dimension, or None when infinite."""
        if self.kind == "SigmaPoly":
            return None
        return {"zero": 0, "SigmaQ": 1, "Sigma2Q^r": self.rank}[self.kind]

    def __str__(self) -> str:
        return {
            "zero": "0",
            "SigmaQ": "ΣQ",
            "Sigma2Q^r": f"Σ²Q^{self.rank}",
            "SigmaPoly": "ΣQ[x_A,x_B]/(x_v) ≅ ΣQ[t]",
        }[self.kind]


ZERO = Descriptor("zero")


@dataclass(frozen=True)
class CellModelTable:
    """Values of a natural cell's algebraic model at each subgroup level.

    ``top`` is the level of T^2 itself, ``codim1`` maps codimension-one
    subgroups (identity components) to their value and anything absent there
    is zero, ``bottom`` maps finite subgroups to their value.
    """

    top: Descriptor = ZERO
    codim1: dict[Character, Descriptor] = field(default_factory=dict)
    bottom: dict[FiniteSubgroup, Descriptor] = field(default_factory=dict)

    def at_codim1(self, v: Character) -> Descriptor:
        return self.codim1.get(v, ZERO)

    def at_finite(self, f: FiniteSubgroup) -> Descriptor:
        return self.bottom.get(f, ZERO)


def cell_model_codim1(v: Sequence[int], family: Iterable[FiniteSubgroup]) -> CellModelTable:
    """Model of the natural cell T^2/H_v+ with H_v = ker z_v.

    At H_v the cokernel of multiplication by e(z_v) is Q, suspended once.
    At a finite F inside H_v, e(z_v) is the linear form x_v and the cokernel
    is the suspension of Q[x_A, x_B]/(x_v); at F not inside H_v, e(z_v) = 1
    and nothing survives.
    """
    direction, g = canonical_primitive(v[0], v[1])
    if g != 1:
        raise ValueError(f"{tuple(v)} is not primitive")
    h = CodimOneSubgroup(direction, 1)
    bottom = {
        f: Descriptor("SigmaPoly") if codim1_contains(f, h) else ZERO for f in family
    }
    return CellModelTable(ZERO, {direction: Descriptor("SigmaQ")}, bottom)


def cell_model_finite(f: FiniteSubgroup) -> CellModelTable:
    """Model of T^2/F+: zero above the bottom, the suspended Burnside ring at it."""
    return CellModelTable(ZERO, {}, {f: Descriptor("Sigma2Q^r", len(enumerate_subgroups(f)))})


def all_subgroups_up_to(order: int) -> list[FiniteSubgroup]:
    """Every finite subgroup of T^2 with |F| <= order."""
    out = []
    for a, d in product(range(1, order + 1), repeat=2):
        if a * d <= order:
            out.extend(FiniteSubgroup(a, b, d) for b in range(d))
    return out
