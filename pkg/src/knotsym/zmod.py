"""Exact arithmetic in Z/(n) and its quotients under negation and swap.

The classification of knot symmetries is parametrized by residues mod n
taken up to sign (class ``SignClass``) and by pairs of residues taken up
to simultaneous negation and swap (class ``TurnPair``).  Everything here
is exact integer arithmetic; no floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import total_ordering

from .errors import ArgumentError


@total_ordering
@dataclass(frozen=True)
class Mod:
    """A residue in Z/(n), stored as the representative in [0, n)."""

    value: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise ArgumentError(f"modulus must be >= 1, got {self.modulus}")
        object.__setattr__(self, "value", self.value % self.modulus)

    def _check(self, other):
        if self.modulus != other.modulus:
            raise ArgumentError(
                f"mismatched moduli: {self.modulus} != {other.modulus}"
            )

    def __add__(self, other):
        self._check(other)
        return Mod(self.value + other.value, self.modulus)

    def __sub__(self, other):
        self._check(other)
        return Mod(self.value - other.value, self.modulus)

    def __neg__(self):
        return Mod(-self.value, self.modulus)

    def __mul__(self, other):
        if isinstance(other, int):
            return Mod(self.value * other, self.modulus)
        self._check(other)
        return Mod(self.value * other.value, self.modulus)

    __rmul__ = __mul__

    def __lt__(self, other):
        self._check(other)
        return self.value < other.value

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"Mod({self.value}, {self.modulus})"

    def is_unit(self):
        return math.gcd(self.value, self.modulus) == 1

    def is_zero(self):
        return self.value == 0


def as_mod(a, n) -> Mod:
    """Coerce an int or Mod to a residue mod n, checking moduli agree."""
    if isinstance(a, Mod):
        if a.modulus != n:
            raise ArgumentError(f"expected modulus {n}, got {a.modulus}")
        return a
    return Mod(int(a), n)


def generates_unit_ideal(a: Mod, b: Mod) -> bool:
    """Whether the pair {a, b} generates the unit ideal in Z/(n)."""
    if a.modulus != b.modulus:
        raise ArgumentError(
            f"mismatched moduli: {a.modulus} != {b.modulus}"
        )
    return math.gcd(a.value, b.value, a.modulus) == 1


@dataclass(frozen=True)
class SignClass:
    """A residue mod n up to sign: the class {a, -a}.

    The canonical representative is min(a, n - a), so it always lies in
    [0, n//2].
    """

    rep: Mod

    def __post_init__(self):
        a = self.rep
        canonical = min(a.value, (a.modulus - a.value) % a.modulus)
        object.__setattr__(self, "rep", Mod(canonical, a.modulus))

    @property
    def value(self):
        return self.rep.value

    @property
    def modulus(self):
        return self.rep.modulus

    def is_unit(self):
        return self.rep.is_unit()

    def is_zero(self):
        return self.rep.is_zero()

    def __repr__(self):
        return f"SignClass({self.value} mod {self.modulus})"


def sign_class(a, n) -> SignClass:
    return SignClass(as_mod(a, n))


def enumerate_sign_classes(n: int) -> list[SignClass]:
    """All classes of Z/(n) under negation, one canonical rep each."""
    if n < 1:
        raise ArgumentError(f"n must be >= 1, got {n}")
    return [SignClass(Mod(a, n)) for a in range(n // 2 + 1)]


def unit_sign_classes(n: int) -> list[SignClass]:
    """The sign classes whose representatives are units mod n."""
    return [c for c in enumerate_sign_classes(n) if c.is_unit()]


@dataclass(frozen=True)
class TurnPair:
    """A pair (a, b) of nonzero residues generating the unit ideal,
    up to the equivalence (a,b) ~ (-a,-b) ~ (b,a) ~ (-b,-a).

    The canonical representative is the lexicographic minimum of the
    four-element orbit.
    """

    a: Mod
    b: Mod

    def __post_init__(self):
        a, b = self.a, self.b
        if a.modulus != b.modulus:
            raise ArgumentError(
                f"mismatched moduli: {a.modulus} != {b.modulus}"
            )
        if a.is_zero() or b.is_zero():
            raise ArgumentError(f"pair entries must be nonzero: ({a}, {b})")
        if not generates_unit_ideal(a, b):
            raise ArgumentError(
                f"({a.value}, {b.value}) does not generate the unit ideal "
                f"mod {a.modulus}"
            )
        ca, cb = min(self._orbit_values(a.value, b.value, a.modulus))
        object.__setattr__(self, "a", Mod(ca, a.modulus))
        object.__setattr__(self, "b", Mod(cb, a.modulus))

    @staticmethod
    def _orbit_values(a, b, n):
        return [
            (a % n, b % n),
            ((-a) % n, (-b) % n),
            (b % n, a % n),
            ((-b) % n, (-a) % n),
        ]

    @property
    def modulus(self):
        return self.a.modulus

    @property
    def values(self):
        return (self.a.value, self.b.value)

    def orbit(self):
        """The four (possibly coinciding) equivalent value pairs."""
        return self._orbit_values(self.a.value, self.b.value, self.modulus)

    def __repr__(self):
        return f"TurnPair(({self.a.value}, {self.b.value}) mod {self.modulus})"


def turn_pair(a, b, n) -> TurnPair:
    return TurnPair(as_mod(a, n), as_mod(b, n))


def enumerate_turn_pairs(n: int) -> list[TurnPair]:
    """All turn-pair classes mod n, one canonical rep each, sorted."""
    if n < 2:
        raise ArgumentError(f"n must be >= 2, got {n}")
    seen = {}
    for a in range(1, n):
        for b in range(1, n):
            if math.gcd(a, b, n) != 1:
                continue
            t = turn_pair(a, b, n)
            seen[t.values] = t
    return [seen[k] for k in sorted(seen)]


@dataclass(frozen=True)
class GroupSpec:
    """A finite cyclic group C_n (n >= 2) or dihedral group D_n (n >= 1).

    D_n has order 2n and presentation <rho, sigma | rho^n = sigma^2 =
    (rho sigma)^2 = e>.  D_1 is the order-2 group generated by a single
    orientation-reversing element; C_2 is the same abstract group viewed
    in the cyclic family.
    """

    kind: str  # "cyclic" | "dihedral"
    n: int

    def __post_init__(self):
        if self.kind not in ("cyclic", "dihedral"):
            raise ArgumentError(f"unknown group kind {self.kind!r}")
        if self.kind == "cyclic" and self.n < 2:
            raise ArgumentError(f"cyclic groups need n >= 2, got {self.n}")
        if self.kind == "dihedral" and self.n < 1:
            raise ArgumentError(f"dihedral groups need n >= 1, got {self.n}")

    @property
    def order(self):
        return self.n if self.kind == "cyclic" else 2 * self.n

    @property
    def is_cyclic(self):
        return self.kind == "cyclic"

    @property
    def is_dihedral(self):
        return self.kind == "dihedral"

    def __str__(self):
        return ("C" if self.is_cyclic else "D") + str(self.n)


def cyclic(n: int) -> GroupSpec:
    return GroupSpec("cyclic", n)


def dihedral(n: int) -> GroupSpec:
    return GroupSpec("dihedral", n)


def parse_group(text: str) -> GroupSpec:
    """Parse 'C6' or 'D4' style group names."""
    text = text.strip()
    if len(text) < 2 or text[0] not in "CD":
        raise ArgumentError(f"cannot parse group {text!r}")
    try:
        n = int(text[1:])
    except ValueError:
        raise ArgumentError(f"cannot parse group {text!r}") from None
    return cyclic(n) if text[0] == "C" else dihedral(n)
