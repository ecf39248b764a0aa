"""Existence constructions: torus-knot symmetry structures, the
strand-permutation combinatorics of the alternating amphichiral family,
and the composite-knot bracelet patterns.

The amphichiral family is modeled at the permutation and
linking-number level: the verification burden is that the interlaced
tangles join the parallel strands into a single component.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ArgumentError, ConstructionError, SearchExhaustedError
from .symtypes import (
    DIHB, DIHD, DIHF, SI, SNAC, SNASI, SIFP, SIP, SymmetryType, TWOR,
)
from .zmod import dihedral


class Permutation:
    """A bijection of {1..a}, stored as the tuple of images."""

    def __init__(self, images):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ArgumentError(f"{images} is not a bijection of 1..{len(images)}")
        self.images = images

    @classmethod
    def identity(cls, size):
        return cls(range(1, size + 1))

    @classmethod
    def from_transpositions(cls, size, swaps):
        images = list(range(1, size + 1))
        for i, j in swaps:
            images[i - 1], images[j - 1] = images[j - 1], images[i - 1]
        return cls(images)

    @property
    def size(self):
        return len(self.images)

    def __call__(self, i):
        return self.images[i - 1]

    def then(self, other: "Permutation") -> "Permutation":
        """Left-to-right composition: first self, then other."""
        if other.size != self.size:
            raise ArgumentError("permutation sizes differ")
        return Permutation(other(self(i)) for i in range(1, self.size + 1))

    def power(self, k: int) -> "Permutation":
        out = Permutation.identity(self.size)
        for _ in range(k):
            out = out.then(self)
        return out

    def orbits(self):
        seen = set()
        out = []
        for start in range(1, self.size + 1):
            if start in seen:
                continue
            orbit = [start]
            seen.add(start)
            nxt = self(start)
            while nxt != start:
                orbit.append(nxt)
                seen.add(nxt)
                nxt = self(nxt)
            out.append(tuple(orbit))
        return out

    def is_single_cycle(self):
        return len(self.orbits()) == 1

    def cycle_string(self):
        parts = [c for c in self.orbits() if len(c) > 1]
        if not parts:
            return "id"
        return "".join("(" + ",".join(map(str, c)) + ")" for c in parts)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Permutation{self.cycle_string()}"


# ---------------------------------------------------------------------------
# Torus knot structures
# ---------------------------------------------------------------------------

def torus_symmetry_structure(p: int, q: int, n: int) -> SymmetryType:
    """The declared D_n-symmetry type of the (p, q) torus knot.

    With both reductions mod n nonzero the type is SIFP-(p, q); when
    one vanishes the rotation becomes periodic and the type degenerates
    to SIP with the surviving parameter.
    """
    if p < 2 or q < 2:
        raise ArgumentError(f"need p, q >= 2, got ({p}, {q})")
    if math.gcd(p, q) != 1:
        raise ArgumentError(f"({p}, {q}) must be coprime")
    if n < 2:
        raise ArgumentError(f"need n >= 2, got {n}")
    pbar, qbar = p % n, q % n
    assert not (pbar == 0 and qbar == 0), "coprime p, q cannot both vanish mod n"
    if qbar == 0:
        return SymmetryType(SIP, (pbar,), dihedral(n))
    if pbar == 0:
        return SymmetryType(SIP, (qbar,), dihedral(n))
    return SymmetryType(SIFP, (pbar, qbar), dihedral(n))


def realize_parameters(n: int, a: int, b: int) -> tuple[int, int]:
    """Coprime torus-knot exponents (p, q), both >= 2, with p = a and
    q = b mod n.

    Searches lifts q = b + x*n against each lift of a; some lift of b
    is coprime to any fixed lift of a, so the bounded search should
    never exhaust.
    """
    a, b = a % n, b % n
    if a == 0:
        raise ArgumentError("the first parameter must be nonzero mod n")
    if math.gcd(a, math.gcd(b, n)) != 1:
        raise ArgumentError(
            f"({a}, {b}) must generate the unit ideal mod {n}"
        )
    for p in range(a if a >= 2 else a + n, 64 * n, n):
        for q in range(b if b >= 2 else b + n, 64 * n, n):
            if math.gcd(p, q) == 1:
                assert p % n == a and q % n == b
                return p, q
    raise SearchExhaustedError(
        f"no coprime lift of ({a}, {b}) mod {n} found below {64 * n}"
    )


# ---------------------------------------------------------------------------
# The alternating amphichiral family at the permutation level
# ---------------------------------------------------------------------------

def snasi_tangle_permutations(a: int):
    """The strand involutions of the alternating tangle and its mirror.

    On a strands (a odd), the tangle swaps (1, a-1)(2, a-2)... fixing
    strand a; its mirror swaps (2, a)(3, a-1)... fixing strand 1.
    """
    if a < 1 or a % 2 == 0:
        raise ArgumentError(f"strand count must be odd, got {a}")
    tprime = Permutation.from_transpositions(
        a, [(i, a - i) for i in range(1, (a + 1) // 2)])
    mirror = Permutation.from_transpositions(
        a, [(i, a + 2 - i) for i in range(2, a // 2 + 2)])
    return tprime, mirror


def snasi_strand_cycle(a: int) -> Permutation:
    """One tangle followed by its mirror: the cycle 1,3,5..a,2,4..a-1."""
    tprime, mirror = snasi_tangle_permutations(a)
    return tprime.then(mirror)


def snasi_single_component(n: int, a: int) -> bool:
    """Whether the 2n interlaced tangles on a strands close to a knot.

    Composes the n tangle/mirror pairs around the bracelet and checks
    the resulting permutation acts with a single orbit; true whenever
    gcd(a, n) = 1.
    """
    if n < 2 or n % 2 != 0:
        raise ArgumentError(f"n must be even and >= 2, got {n}")
    if a < 1 or a % 2 == 0:
        raise ArgumentError(f"a must be odd, got {a}")
    if math.gcd(a, n) != 1:
        raise ArgumentError(f"need gcd(a, n) = 1, got gcd({a}, {n})")
    return snasi_strand_cycle(a).power(n).is_single_cycle()


def snasi_declared_type(n: int, a: int) -> SymmetryType:
    """The declared type of the a-strand cabling of the alternating
    amphichiral knot: SNASI-(a) over D_n, with the knot linking the
    rotoreflection axis a times."""
    if not snasi_single_component(n, a):
        raise ConstructionError(
            f"the ({n}, {a}) tangle pattern closes to a link, not a knot"
        )
    t = SymmetryType(SNASI, (a,), dihedral(n))
    return t


def snasi_axis_linking(n: int, a: int) -> int:
    """The declared linking number of the constructed knot with the
    rotoreflection axis (each strand contributes one pass)."""
    if not snasi_single_component(n, a):
        raise ConstructionError(f"({n}, {a}) does not close to a knot")
    return a


# ---------------------------------------------------------------------------
# Composite-knot bracelets
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BraceletSpec:
    """A bracelet of connect-summands with an order-2 symmetric base
    knot, optionally mirroring every other summand."""

    n: int
    base_c2_type: str  # one of TWOR, SI, SNAC
    alternation: bool = False

    def __post_init__(self):
        if self.base_c2_type not in (TWOR, SI, SNAC):
            raise ArgumentError(
                f"base must be one of {TWOR}, {SI}, {SNAC}; "
                f"got {self.base_c2_type!r}"
            )
        if self.n < 2:
            raise ArgumentError(f"need n >= 2, got {self.n}")
        if self.base_c2_type in (SI, SNAC) and self.n % 2 != 0:
            raise ArgumentError(
                f"a {self.base_c2_type}-based bracelet needs even n, "
                f"got {self.n}"
            )


def bracelet_type(spec: BraceletSpec) -> SymmetryType:
    """The D_n-symmetry type of the bracelet connect-sum.

    A reflection-symmetric summand yields DihB; strong-inversion and
    negative-amphichiral summands, alternated with their mirrors,
    yield DihD and DihF.  All three apply only to composite knots.
    """
    if spec.base_c2_type == TWOR:
        return SymmetryType(DIHB, (), dihedral(spec.n))
    if not spec.alternation:
        raise ArgumentError(
            f"a {spec.base_c2_type}-based bracelet must alternate summands "
            "with their mirrors"
        )
    name = DIHD if spec.base_c2_type == SI else DIHF
    return SymmetryType(name, (), dihedral(spec.n))
