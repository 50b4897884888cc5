"""Characters and complex representations of the circle T and the torus T^2.

A circle representation V = sum_n a_n z^n is stored as a map n -> a_n.
A torus representation is a map (lam, mu) -> multiplicity, where (lam, mu)
is the character x^lam y^mu of T^2.  Torus characters are kept exactly as
given (not reduced to primitive form).

The text grammar for circle representations is::

    REP  := TERM ('+' TERM)*
    TERM := [alpha] ('eps' | 'z' ['^' n])

with alpha a positive integer and n any integer (``z^-2`` or ``z^(-2)``).
Whitespace is ignored.  The literal ``0`` denotes the zero representation.

>>> V = parse_circle_rep("eps + 4z")
>>> str(V)
'eps + 4z'
>>> tensor_with_w(V)
TorusRep({(0, 1): 1, (1, 1): 4})
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Iterator, Mapping
from math import gcd
from typing import TYPE_CHECKING, NamedTuple

if TYPE_CHECKING:
    from .lattice import FiniteSubgroup


class ParseError(ValueError):
    """Malformed representation text; ``pos`` is the 0-based offending offset."""

    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.text = text
        self.pos = pos


class Character(NamedTuple):
    """The character x^lam y^mu of T^2."""

    lam: int
    mu: int

    def is_trivial(self) -> bool:
        return self.lam == 0 and self.mu == 0

    def is_primitive(self) -> bool:
        """True iff this is a canonical primitive character."""
        return gcd(self.lam, self.mu) == 1 and (self.lam > 0 or (self.lam == 0 and self.mu > 0))

    def primitive(self) -> tuple[Character, int]:
        """Split into ``(v, g)`` with v canonical primitive and self = +-g*v."""
        return canonical_primitive(self.lam, self.mu)

    def __str__(self) -> str:
        return f"x^{self.lam}y^{self.mu}"


def canonical_primitive(lam: int, mu: int) -> tuple[Character, int]:
    g = gcd(lam, mu)
    if g == 0:
        raise ValueError("the trivial character has no primitive direction")
    lam, mu = lam // g, mu // g
    if lam < 0 or (lam == 0 and mu < 0):
        lam, mu = -lam, -mu
    return Character(lam, mu), g


class _Multiset(Mapping):
    """Immutable finite map key -> positive multiplicity."""

    __slots__ = ("_terms", "_hash")

    @classmethod
    def _trusted(cls, terms: dict):
        """Wrap an already-canonical dict (sorted keys, positive values)."""
        obj = object.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    def __init__(self, terms=None):
        acc: dict = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for key, mult in items:
                key = self._key(key)
                if mult < 0:
                    raise ValueError(f"negative multiplicity {mult} for {key}")
                if mult:
                    acc[key] = acc.get(key, 0) + mult
        self._terms = dict(sorted(acc.items()))
        self._hash = None

    @staticmethod
    def _key(key):
        return key

    def __getitem__(self, key):
        return self._terms[key]

    def __iter__(self) -> Iterator:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __contains__(self, key) -> bool:
        return key in self._terms

    def items(self):
        return self._terms.items()

    def values(self):
        return self._terms.values()

    def keys(self):
        return self._terms.keys()

    def __eq__(self, other):
        if type(other) is type(self):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, tuple(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        terms = {tuple(k) if isinstance(k, tuple) else k: m for k, m in self._terms.items()}
        return f"{type(self).__name__}({terms!r})"

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return type(self)(list(self._terms.items()) + list(other._terms.items()))

    def dim(self) -> int:
        return sum(self._terms.values())


class CircleRep(_Multiset):
    """A complex T-representation: exponent n -> multiplicity of z^n."""

    __slots__ = ()

    @staticmethod
    def _key(key):
        return int(key)

    def n_isotypic(self) -> int:
        return len(self)

    def __str__(self) -> str:
        return format_circle_rep(self)


class TorusRep(_Multiset):
    """A complex T^2-representation: Character -> multiplicity."""

    __slots__ = ()

    @staticmethod
    def _key(key):
        return key if type(key) is Character else Character(*key)

    def has_trivial(self) -> bool:
        return Character(0, 0) in self._terms

    def __str__(self) -> str:
        return format_torus_rep(self)


_CIRCLE_TERM = re.compile(
    r"(?P<mult>\d+)?\s*(?:(?P<eps>eps)|z(?:\s*\^\s*(?:\(\s*(?P<pexp>[+-]?\d+)\s*\)|(?P<exp>[+-]?\d+)))?)"
)
_TORUS_TERM = re.compile(
    r"(?P<mult>\d+)?\s*(?:(?P<eps>eps)|"
    r"(?:x(?:\s*\^\s*(?:\(\s*(?P<px>[+-]?\d+)\s*\)|(?P<x>[+-]?\d+)))?(?P<hasx>))?\s*"
    r"(?:y(?:\s*\^\s*(?:\(\s*(?P<py>[+-]?\d+)\s*\)|(?P<y>[+-]?\d+)))?(?P<hasy>))?)"
)


def _split_terms(text: str) -> Iterator[tuple[str, int]]:
    """Yield (term, offset) for the '+'-separated pieces of ``text``."""
    start = 0
    for i, ch in enumerate(text):
        if ch == "+":
            # '+' directly after '^' or '(' is a sign, not a separator
            before = text[:i].rstrip()
            if before.endswith("^") or before.endswith("("):
                continue
            yield text[start:i], start
            start = i + 1
    yield text[start:], start


def _strip(term: str, offset: int) -> tuple[str, int]:
    lead = len(term) - len(term.lstrip())
    return term.strip(), offset + lead


def _multiplicity(m, text: str, pos: int) -> int:
    if m.group("mult") is None:
        return 1
    mult = int(m.group("mult"))
    if mult == 0:
        raise ParseError("zero multiplicity", text, pos)
    return mult


def parse_circle_rep(text: str) -> CircleRep:
    """Parse e.g. ``"eps + 4z"`` or ``"3z^5"`` into a CircleRep."""
    if text.strip() == "0":
        return CircleRep()
    terms: list[tuple[int, int]] = []
    for raw, offset in _split_terms(text):
        term, pos = _strip(raw, offset)
        if not term:
            raise ParseError("empty term", text, pos)
        m = _CIRCLE_TERM.fullmatch(term)
        if m is None:
            bad = _CIRCLE_TERM.match(term)
            raise ParseError("unexpected character", text, pos + (bad.end() if bad else 0))
        mult = _multiplicity(m, text, pos)
        if m.group("eps"):
            exp = 0
        else:
            e = m.group("pexp") or m.group("exp")
            exp = int(e) if e is not None else 1
        terms.append((exp, mult))
    return CircleRep(terms)


def format_circle_rep(v: Mapping[int, int]) -> str:
    """Canonical printer: terms sorted by exponent, e.g. ``eps + z + 3z^2``."""
    if not v:
        return "0"
    parts = []
    for n, mult in sorted(v.items()):
        coeff = "" if mult == 1 else str(mult)
        if n == 0:
            parts.append(f"{coeff}eps" if coeff else "eps")
        elif n == 1:
            parts.append(f"{coeff}z")
        else:
            parts.append(f"{coeff}z^{n}")
    return " + ".join(parts)


def parse_torus_rep(text: str) -> TorusRep:
    """Parse e.g. ``"x^0y^1 + 4x^1y^1"``; a bare ``eps`` is the trivial character."""
    if text.strip() == "0":
        return TorusRep()
    terms: list[tuple[Character, int]] = []
    for raw, offset in _split_terms(text):
        term, pos = _strip(raw, offset)
        if not term:
            raise ParseError("empty term", text, pos)
        m = _TORUS_TERM.fullmatch(term)
        if m is None or not (m.group("eps") or m.group("hasx") is not None or m.group("hasy") is not None):
            bad = _TORUS_TERM.match(term)
            raise ParseError("unexpected character", text, pos + (bad.end() if bad else 0))
        mult = _multiplicity(m, text, pos)
        if m.group("eps"):
            lam = mu = 0
        else:
            lam = mu = 0
            if m.group("hasx") is not None:
                e = m.group("px") or m.group("x")
                lam = int(e) if e is not None else 1
            if m.group("hasy") is not None:
                e = m.group("py") or m.group("y")
                mu = int(e) if e is not None else 1
        terms.append((Character(lam, mu), mult))
    return TorusRep(terms)


def format_torus_rep(w: Mapping[Character, int]) -> str:
    if not w:
        return "0"
    return " + ".join(
        (f"{mult}" if mult != 1 else "") + f"x^{c[0]}y^{c[1]}" for c, mult in sorted(w.items())
    )


def tensor_with_w(v: Mapping[int, int]) -> TorusRep:
    """V -> V (x) w: each z^n becomes the T^2-character (n, 1)."""
    # (n, 1) is injective in n, so sorted input stays sorted and duplicate-free
    return TorusRep._trusted({Character(n, 1): mult for n, mult in v.items()})


def fixed_dim(w: Mapping[Character, int], f: FiniteSubgroup) -> int:
    """Complex dimension of the F-fixed subrepresentation W^F."""
    return sum(mult for c, mult in w.items() if f.character_is_trivial(c))

