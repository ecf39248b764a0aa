"""Orthogonal representations of C_n and D_n on R^2 and R^4.

Representations are stored symbolically as block sums of named
irreducibles; matrices are produced on demand.  Equality, chirality and
the enumeration of faithful classes are exact integer computations, so
floating point only enters at matrix evaluation.

Irreducible labels, with their values on the generators:

    cyclic C_n:   1 (trivial), w[sign] (rho -> -1, n even),
                  w[a] (rho -> rotation by 2*pi*a/n)
    dihedral D_n: 1, v[sign] (rho -> -1, sigma -> +1, n even),
                  v[sigma] (rho -> +1, sigma -> -1),
                  v[inv] (rho -> -1, sigma -> -1, n even),
                  v[a] (rho -> rotation by 2*pi*a/n, sigma -> x-reflection)

Reducible rotation blocks decompose as w[0] = 1 + 1,
w[n/2] = w[sign] + w[sign], v[0] = v[sigma] + 1 and
v[n/2] = v[inv] + v[sign]; comparisons normalize these away.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from itertools import combinations_with_replacement

import numpy as np

from .errors import ArgumentError
from .zmod import GroupSpec, cyclic, dihedral, parse_group, \
    enumerate_turn_pairs, unit_sign_classes

ONE = "one"
SIGN = "sign"
SIGMA = "sigma"
INV = "inv"
ROT = "rot"

_CYCLIC_KINDS = (ONE, SIGN, ROT)
_DIHEDRAL_KINDS = (ONE, SIGN, SIGMA, INV, ROT)


@dataclass(frozen=True)
class Label:
    """One named irreducible (or reducible rotation) block."""

    family: str  # "C" | "D"
    kind: str
    a: int | None = None  # rotation parameter, present iff kind == ROT

    def __post_init__(self):
        if self.family not in ("C", "D"):
            raise ArgumentError(f"unknown family {self.family!r}")
        kinds = _CYCLIC_KINDS if self.family == "C" else _DIHEDRAL_KINDS
        if self.kind not in kinds:
            raise ArgumentError(
                f"label kind {self.kind!r} is not a {self.family} label"
            )
        if (self.a is None) == (self.kind == ROT):
            raise ArgumentError("rotation labels carry a parameter; others do not")

    @property
    def dim(self):
        return 2 if self.kind == ROT else 1

    def text(self):
        if self.kind == ONE:
            return "1"
        letter = "w" if self.family == "C" else "v"
        if self.kind == ROT:
            return f"{letter}[{self.a}]"
        return f"{letter}[{self.kind}]"

    def __repr__(self):
        return f"Label({self.family}:{self.text()})"


def w_one():
    return Label("C", ONE)


def w_sign():
    return Label("C", SIGN)


def w_rot(a):
    return Label("C", ROT, int(a))


def v_one():
    return Label("D", ONE)


def v_sign():
    return Label("D", SIGN)


def v_sigma():
    return Label("D", SIGMA)


def v_inv():
    return Label("D", INV)


def v_rot(a):
    return Label("D", ROT, int(a))


def sigma_shift_action(n: int, shift: int, label: Label) -> Label:
    """Action of the automorphism sigma -> rho^shift * sigma on labels.

    These automorphisms fix rho, form a cyclic group of order n, fix the
    labels 1, v[sigma] and v[a], and exchange v[sign] with v[inv] when
    the shift is odd (both characters send rho to -1, so precomposing
    flips their value on sigma).
    """
    if label.family != "D":
        raise ArgumentError("only dihedral labels carry a sigma-shift action")
    shift = shift % n if n >= 1 else shift
    if shift % 2 == 1 and label.kind in (SIGN, INV):
        return Label("D", INV if label.kind == SIGN else SIGN)
    return label


@dataclass(frozen=True)
class GroupElement:
    """rho^rot * sigma^ref in the given group (ref = 0 for cyclic)."""

    group: GroupSpec
    rot: int
    ref: int = 0

    def __post_init__(self):
        if self.ref not in (0, 1):
            raise ArgumentError(f"ref must be 0 or 1, got {self.ref}")
        if self.ref == 1 and not self.group.is_dihedral:
            raise ArgumentError("reflections only exist in dihedral groups")
        object.__setattr__(self, "rot", self.rot % self.group.n)

    def __mul__(self, other):
        if self.group != other.group:
            raise ArgumentError("elements of different groups")
        sign = -1 if self.ref else 1
        return GroupElement(
            self.group, self.rot + sign * other.rot, self.ref ^ other.ref
        )

    @property
    def is_identity(self):
        return self.rot == 0 and self.ref == 0

    def __repr__(self):
        s = f"rho^{self.rot}"
        if self.ref:
            s += "*sigma"
        return s


def group_elements(group: GroupSpec):
    refs = (0, 1) if group.is_dihedral else (0,)
    return [GroupElement(group, i, j) for j in refs for i in range(group.n)]


@dataclass(frozen=True)
class RepSum:
    """An ordered block sum of labels over one group.

    The total dimension must be 2 (circle actions) or 4 (sphere
    actions).
    """

    group: GroupSpec
    blocks: tuple[Label, ...]

    def __post_init__(self):
        blocks = tuple(
            Label(lab.family, ROT, lab.a % self.group.n)
            if lab.kind == ROT else lab
            for lab in self.blocks
        )
        object.__setattr__(self, "blocks", blocks)
        fam = "C" if self.group.is_cyclic else "D"
        for lab in self.blocks:
            if lab.family != fam:
                raise ArgumentError(
                    f"label {lab.text()} does not belong to {self.group}"
                )
            if lab.kind in (SIGN, INV) and self.group.n % 2 == 1:
                raise ArgumentError(
                    f"{lab.text()} is not a representation of {self.group} "
                    "(needs even n)"
                )
        if self.dim not in (2, 4):
            raise ArgumentError(
                f"block dimensions sum to {self.dim}; expected 2 or 4"
            )

    @property
    def dim(self):
        return sum(lab.dim for lab in self.blocks)

    @property
    def n(self):
        return self.group.n

    def text(self):
        return f"{self.group}: " + "+".join(lab.text() for lab in self.blocks)

    def __repr__(self):
        return f"RepSum({self.text()})"


def rep(group: GroupSpec, *blocks) -> RepSum:
    return RepSum(group, tuple(blocks))


def cyclic_pair_rep(n, a, b) -> RepSum:
    return rep(cyclic(n), w_rot(a), w_rot(b))


def dihedral_pair_rep(n, a, b) -> RepSum:
    return rep(dihedral(n), v_rot(a), v_rot(b))


# ---------------------------------------------------------------------------
# Parsing / printing
# ---------------------------------------------------------------------------

_LABEL_RE = re.compile(r"^([wv])\[([^\]]+)\]$")


def rep_from_string(text: str) -> RepSum:
    """Parse 'C6: w[1]+w[sign]+1' style representation strings."""
    if ":" not in text:
        raise ArgumentError(f"missing group prefix in {text!r}")
    head, _, body = text.partition(":")
    group = parse_group(head)
    fam = "C" if group.is_cyclic else "D"
    blocks = []
    for tok in body.split("+"):
        tok = tok.strip()
        if not tok:
            raise ArgumentError(f"empty label in {text!r}")
        if tok == "1":
            blocks.append(Label(fam, ONE))
            continue
        m = _LABEL_RE.match(tok)
        if not m:
            raise ArgumentError(f"cannot parse label {tok!r}")
        letter, inner = m.groups()
        if (letter == "w") != group.is_cyclic:
            raise ArgumentError(
                f"label {tok!r} does not match group {group}"
            )
        if inner == "sign":
            blocks.append(Label(fam, SIGN))
        elif inner == "sigma":
            blocks.append(Label(fam, SIGMA))
        elif inner == "inv":
            blocks.append(Label(fam, INV))
        else:
            try:
                a = int(inner, 0)
            except ValueError:
                raise ArgumentError(f"cannot parse label {tok!r}") from None
            blocks.append(Label(fam, ROT, a % group.n))
    return RepSum(group, tuple(blocks))


def rep_to_string(r: RepSum) -> str:
    return r.text()


# ---------------------------------------------------------------------------
# Evaluation
# ---------------------------------------------------------------------------

def rotation2(angle: float) -> np.ndarray:
    c, s = math.cos(angle), math.sin(angle)
    return np.array([[c, -s], [s, c]])


REFLECTION2 = np.array([[-1.0, 0.0], [0.0, 1.0]])


def _block_matrix(lab: Label, n: int, g: GroupElement) -> np.ndarray:
    i, j = g.rot, g.ref
    if lab.kind == ONE:
        return np.array([[1.0]])
    if lab.kind == SIGN:
        return np.array([[(-1.0) ** i]])
    if lab.kind == SIGMA:
        return np.array([[(-1.0) ** j]])
    if lab.kind == INV:
        return np.array([[(-1.0) ** (i + j)]])
    m = rotation2(2.0 * math.pi * lab.a * i / n)
    if j:
        m = m @ REFLECTION2
    return m


def evaluate(r: RepSum, g: GroupElement) -> np.ndarray:
    """The block-diagonal orthogonal matrix of g under the representation."""
    if g.group != r.group:
        raise ArgumentError(f"{g!r} is not an element of {r.group}")
    mats = [_block_matrix(lab, r.n, g) for lab in r.blocks]
    out = np.zeros((r.dim, r.dim))
    pos = 0
    for m in mats:
        k = m.shape[0]
        out[pos:pos + k, pos:pos + k] = m
        pos += k
    return out


def fixed_dim(r: RepSum, g: GroupElement) -> int:
    """Multiplicity of eigenvalue +1 of evaluate(r, g), computed exactly.

    The fixed subsphere of S^3 has dimension fixed_dim - 1 (empty when
    the multiplicity is 0).
    """
    if g.group != r.group:
        raise ArgumentError(f"{g!r} is not an element of {r.group}")
    n, (i, j) = r.n, (g.rot, g.ref)
    total = 0
    for lab in r.blocks:
        if lab.kind == ONE:
            total += 1
        elif lab.kind == SIGN:
            total += 1 - (i % 2)
        elif lab.kind == SIGMA:
            total += 1 - (j % 2)
        elif lab.kind == INV:
            total += 1 - ((i + j) % 2)
        elif j == 1:
            total += 1  # any 2d reflection fixes a line
        else:
            total += 2 if (lab.a * i) % n == 0 else 0
    return total


def element_det(r: RepSum, g: GroupElement) -> int:
    """Determinant of evaluate(r, g), computed exactly."""
    if g.group != r.group:
        raise ArgumentError(f"{g!r} is not an element of {r.group}")
    i, j = g.rot, g.ref
    d = 1
    for lab in r.blocks:
        if lab.kind == SIGN:
            d *= (-1) ** i
        elif lab.kind == SIGMA:
            d *= (-1) ** j
        elif lab.kind == INV:
            d *= (-1) ** (i + j)
        elif lab.kind == ROT and j == 1:
            d *= -1
    return d


def is_faithful(r: RepSum) -> bool:
    """Whether no nontrivial group element acts as the identity."""
    for g in group_elements(r.group):
        if g.is_identity:
            continue
        if fixed_dim(r, g) == r.dim:
            return False
    return True


# ---------------------------------------------------------------------------
# Normalization and comparison
# ---------------------------------------------------------------------------

def normalize_blocks(r: RepSum) -> tuple[Label, ...]:
    """Expand reducible rotation blocks into irreducible labels.

    Rotation parameters are kept as given (not folded under a -> -a),
    since the sign pattern distinguishes SO(4)-classes of chiral sums.
    """
    n = r.n
    fam = "C" if r.group.is_cyclic else "D"
    out = []
    for lab in r.blocks:
        if lab.kind != ROT:
            out.append(lab)
        elif lab.a % n == 0:
            if fam == "C":
                out += [Label("C", ONE), Label("C", ONE)]
            else:
                out += [Label("D", SIGMA), Label("D", ONE)]
        elif n % 2 == 0 and lab.a % n == n // 2:
            if fam == "C":
                out += [Label("C", SIGN), Label("C", SIGN)]
            else:
                out += [Label("D", INV), Label("D", SIGN)]
        else:
            out.append(Label(fam, ROT, lab.a % n))
    return tuple(out)


def _iso_multiset(r: RepSum):
    """Multiset key identifying the O(m)-isomorphism class."""
    key = []
    for lab in normalize_blocks(r):
        if lab.kind == ROT:
            key.append((ROT, min(lab.a % r.n, (-lab.a) % r.n)))
        else:
            key.append((lab.kind, None))
    return tuple(sorted(key))


def o4_isomorphic(r1: RepSum, r2: RepSum) -> bool:
    """Conjugacy in the full orthogonal group: same irreducible multiset."""
    if r1.group != r2.group:
        raise ArgumentError(f"group mismatch: {r1.group} vs {r2.group}")
    return _iso_multiset(r1) == _iso_multiset(r2)


def is_chiral(r: RepSum) -> bool:
    """Whether the representation admits no odd-dimensional subrepresentation.

    Equivalently, whether its O(4)- and SO(4)-conjugacy classes differ.
    A block sum is chiral exactly when every normalized block is an
    irreducible 2-dimensional rotation, i.e. for w[a]+w[b] when
    {a, b} avoids {0, n/2}.
    """
    if r.dim != 4:
        raise ArgumentError(f"chirality is defined for dimension 4, got {r.dim}")
    return all(lab.kind == ROT for lab in normalize_blocks(r))


def _rotation_pair(r: RepSum):
    labs = normalize_blocks(r)
    return [lab.a % r.n for lab in labs if lab.kind == ROT]


def so4_conjugate(r1: RepSum, r2: RepSum) -> bool:
    """Conjugacy in SO(4).

    For amphichiral representations this coincides with O(4)-conjugacy.
    A chiral sum of two rotation blocks with parameters {a, b} is
    SO(4)-conjugate to the one with {a', b'} iff {a, b} = {a', b'} or
    {a, b} = {-a', -b'} as multisets of residues: negating a single
    rotation parameter requires a determinant -1 conjugator.
    """
    if r1.group != r2.group:
        raise ArgumentError(f"group mismatch: {r1.group} vs {r2.group}")
    if r1.dim != 4 or r2.dim != 4:
        raise ArgumentError("SO(4)-conjugacy applies to 4-dimensional sums")
    if not o4_isomorphic(r1, r2):
        return False
    if not is_chiral(r1):
        return True
    n = r1.n
    p1 = sorted(_rotation_pair(r1))
    p2 = sorted(_rotation_pair(r2))
    neg2 = sorted((-a) % n for a in p2)
    return p1 == p2 or p1 == neg2


def mirror_conjugate(r: RepSum) -> RepSum:
    """Conjugate by diag(-1, 1, 1, 1).

    Negates the rotation parameter of the block containing the first
    coordinate; 1-dimensional blocks and reflections are unchanged.
    """
    if not r.blocks:
        return r
    first, rest = r.blocks[0], r.blocks[1:]
    if first.kind == ROT:
        first = Label(first.family, ROT, (-first.a) % r.n)
    return RepSum(r.group, (first,) + rest)


# ---------------------------------------------------------------------------
# Enumeration of the faithful O(4) classes
# ---------------------------------------------------------------------------

CYC_A, CYC_B, CYC_C = "CycA", "CycB", "CycC"
DIH_FAMILIES = tuple("Dih" + ch for ch in "ABCDEFGHIJKL")
(DIH_A, DIH_B, DIH_C, DIH_D, DIH_E, DIH_F,
 DIH_G, DIH_H, DIH_I, DIH_J, DIH_K, DIH_L) = DIH_FAMILIES


def _gen_twice_classes(n):
    """Sign classes a with <a> = <2> in Z/(n), i.e. gcd(a, n) = 2."""
    return [c for c in range(n // 2 + 1) if math.gcd(c, n) == 2]


def enumerate_cyclic_o4(n: int):
    """All faithful C_n classes on R^4 up to SO(4), as (rep, family) pairs.

    Families: CycA = w[a]+w[b] with {a,b} generating the unit ideal
    (rotation pairs are refined by the turn-pair classes, plus the
    b = 0 axis cases), CycB = w[a]+w[sign]+1 with a a unit (n even),
    CycC = the same shape with <a> = <2> (n = 2 mod 4).
    """
    if n < 3:
        raise ArgumentError(f"enumerate_cyclic_o4 needs n >= 3, got {n}")
    out = []
    for c in unit_sign_classes(n):
        out.append((rep(cyclic(n), w_rot(c.value), w_rot(0)), CYC_A))
    for t in enumerate_turn_pairs(n):
        out.append((cyclic_pair_rep(n, t.a.value, t.b.value), CYC_A))
    if n % 2 == 0:
        for c in unit_sign_classes(n):
            out.append(
                (rep(cyclic(n), w_rot(c.value), w_sign(), w_one()), CYC_B)
            )
    if n % 4 == 2:
        for a in _gen_twice_classes(n):
            out.append((rep(cyclic(n), w_rot(a), w_sign(), w_one()), CYC_C))
    assert all(is_faithful(r) for r, _ in out)
    return out


def enumerate_dihedral_o4(n: int):
    """All faithful D_n classes on R^4 up to SO(4) and sigma-shift.

    The sigma-shift automorphisms exchange v[sign] and v[inv]; the
    preferred representatives use v[sign], so v[inv] never appears and
    dim Fix(sigma) >= dim Fix(rho*sigma) throughout.
    """
    if n < 2:
        raise ArgumentError(f"enumerate_dihedral_o4 needs n >= 2, got {n}")
    D = dihedral(n)
    out = []
    for c in unit_sign_classes(n):
        out.append((rep(D, v_rot(c.value), v_rot(0)), DIH_A))
    for t in enumerate_turn_pairs(n):
        out.append((dihedral_pair_rep(n, t.a.value, t.b.value), DIH_A))
    for c in unit_sign_classes(n):
        out.append((rep(D, v_rot(c.value), v_one(), v_one()), DIH_B))
        out.append((rep(D, v_rot(c.value), v_sigma(), v_sigma()), DIH_C))
    if n % 2 == 0:
        for c in unit_sign_classes(n):
            a = c.value
            out.append((rep(D, v_rot(a), v_sign(), v_one()), DIH_D))
            out.append((rep(D, v_rot(a), v_sign(), v_sigma()), DIH_E))
            out.append((rep(D, v_rot(a), v_sign(), v_sign()), DIH_F))
    if n % 4 == 2:
        for a in _gen_twice_classes(n):
            out.append((rep(D, v_rot(a), v_sign(), v_one()), DIH_G))
            out.append((rep(D, v_rot(a), v_sign(), v_sigma()), DIH_H))
            out.append((rep(D, v_rot(a), v_sign(), v_sign()), DIH_I))
    if n == 2:
        s, g = v_sign, v_sigma
        out.append((rep(D, s(), s(), s(), g()), DIH_J))
        out.append((rep(D, s(), s(), g(), g()), DIH_K))
        out.append((rep(D, s(), g(), g(), g()), DIH_L))
    out = [(r, fam) for r, fam in out if is_faithful(r)]
    return out


def classify_family(r: RepSum) -> str:
    """The enumeration family (CycA..CycC / DihA..DihL) containing r."""
    n = r.n
    labs = normalize_blocks(r)
    counts = {}
    rots = []
    for lab in labs:
        if lab.kind == ROT:
            rots.append(lab.a % n)
        else:
            counts[lab.kind] = counts.get(lab.kind, 0) + 1
    # canonicalize under the sigma-shift swap of v[sign] and v[inv]
    if r.group.is_dihedral and counts.get(INV, 0) > counts.get(SIGN, 0):
        counts[SIGN], counts[INV] = counts.get(INV, 0), counts.get(SIGN, 0)
    c_one = counts.get(ONE, 0)
    c_sign = counts.get(SIGN, 0)
    c_sigma = counts.get(SIGMA, 0)
    c_inv = counts.get(INV, 0)

    if not is_faithful(r):
        raise ArgumentError(f"{r.text()} is not faithful")

    if r.group.is_cyclic:
        if len(rots) == 2:
            return CYC_A
        if len(rots) == 1 and (c_one, c_sign) in ((2, 0), (0, 2)):
            return CYC_A  # w[a] + w[0] or w[a] + w[n/2]
        if len(rots) == 1 and c_sign == 1 and c_one == 1:
            a = rots[0]
            if math.gcd(a, n) == 1:
                return CYC_B
            if math.gcd(a, n) == 2 and n % 4 == 2:
                return CYC_C
        raise ArgumentError(f"{r.text()} lies in no faithful C_n family")

    # dihedral: reconstruct the defining block shape from the counts.
    # Pairs of 1-dimensional characters recombine as v[0] = sigma+1 and
    # v[n/2] = inv+sign, matching the shapes of families A..L.
    shape = (len(rots), c_one, c_sign, c_sigma, c_inv)
    if shape == (2, 0, 0, 0, 0):
        return DIH_A
    if shape == (1, 1, 0, 1, 0):
        return DIH_A  # v[a] + v[0]
    if shape == (1, 0, 1, 0, 1):
        return DIH_A  # v[a] + v[n/2]
    if len(rots) == 1 and (c_one, c_sign, c_sigma, c_inv) in (
        ((2, 0, 0, 0)), ((1, 1, 0, 0)), ((0, 1, 1, 0)), ((0, 2, 0, 0)),
        ((0, 0, 2, 0)),
    ):
        a = rots[0]
        unit = math.gcd(a, n) == 1
        twice = math.gcd(a, n) == 2 and n % 4 == 2
        table = {
            (2, 0, 0, 0): (DIH_B, None),
            (0, 0, 2, 0): (DIH_C, None),
            (1, 1, 0, 0): (DIH_D, DIH_G),
            (0, 1, 1, 0): (DIH_E, DIH_H),
            (0, 2, 0, 0): (DIH_F, DIH_I),
        }
        base, alt = table[(c_one, c_sign, c_sigma, c_inv)]
        if unit:
            return base
        if twice and alt is not None:
            return alt
        raise ArgumentError(f"{r.text()} lies in no faithful D_n family")
    if len(rots) == 0 and n == 2:
        key = (c_one, c_sign, c_sigma)
        # n = 2: v[1] = v[inv] + v[sign] and v[0] = v[sigma] + 1, so the
        # canonical character multiset determines the family.
        table = {
            (1, 1, 1): DIH_A,   # v[1] + v[0]
            (0, 2, 0): DIH_A,   # v[1] + v[1] (sign, sign, inv, inv)
            (2, 1, 0): DIH_B,
            (0, 1, 2): DIH_C,
            (1, 2, 0): DIH_D,
            (0, 2, 1): DIH_E,
            (0, 3, 0): DIH_F,
            (2, 1, 1): DIH_G,   # v[0] + v[sign] + 1
            (1, 1, 2): DIH_H,
            (1, 2, 1): DIH_I,
            (0, 3, 1): DIH_J,
            (0, 2, 2): DIH_K,
            (0, 1, 3): DIH_L,
        }
        if key in table:
            return table[key]
    raise ArgumentError(f"{r.text()} lies in no faithful D_n family")


def brute_force_classes(group: GroupSpec):
    """Independent enumeration: every 4-dimensional block sum, filtered
    for faithfulness and deduplicated by SO(4)-conjugacy and sigma-shift.

    Used as an oracle against enumerate_cyclic_o4 / enumerate_dihedral_o4.
    """
    n = group.n
    if group.is_cyclic:
        alphabet = [w_one(), w_rot(0)] + [w_rot(a) for a in range(1, n)]
        if n % 2 == 0:
            alphabet.append(w_sign())
    else:
        alphabet = [v_one(), v_sigma(), v_rot(0)] + \
            [v_rot(a) for a in range(1, n)]
        if n % 2 == 0:
            alphabet += [v_sign(), v_inv()]
    sums = []
    for size in (2, 3, 4):
        for combo in combinations_with_replacement(alphabet, size):
            if sum(lab.dim for lab in combo) != 4:
                continue
            r = RepSum(group, combo)
            if is_faithful(r):
                sums.append(r)

    def equivalent(r1, r2):
        if so4_conjugate(r1, r2):
            return True
        if group.is_dihedral:
            shifted = RepSum(
                group,
                tuple(sigma_shift_action(n, 1, lab) for lab in r2.blocks),
            )
            return so4_conjugate(r1, shifted)
        return False

    classes = []
    for r in sums:
        if not any(equivalent(r, c) for c in classes):
            classes.append(r)
    return classes


# ---------------------------------------------------------------------------
# Invariant round circles
# ---------------------------------------------------------------------------

TRIVIAL_AXIS_PLUS_FAMILY = "trivial-axis-plus-family"
EXACTLY_TWO = "exactly-two"
INFINITELY_MANY_ISOTOPIC = "infinitely-many-isotopic"
REFLECTION_AXIS_PLUS_FAMILY = "reflection-axis-plus-family"


def invariant_round_circles(r: RepSum) -> str:
    """Census of invariant round circles of a 4-dimensional cyclic action.

    Requires the rotation parameter a of the leading block to avoid
    {0, n/2}.  Returns one of the module-level census tags:

    - w[a]+w[0]: the pointwise-fixed circle plus an isotopic family,
    - w[a]+w[b], b not in {0, a, -a}: exactly two invariant circles,
    - w[a]+w[b], b = +-a: infinitely many, all equivariantly isotopic,
    - w[a]+w[sign]+1: the reflection axis plus an isotopic family.
    """
    if not r.group.is_cyclic or r.dim != 4:
        raise ArgumentError("expected a 4-dimensional cyclic representation")
    n = r.n
    kinds = [lab.kind for lab in r.blocks]
    if kinds == [ROT, ROT]:
        a, b = r.blocks[0].a % n, r.blocks[1].a % n
        if a in (0, (n // 2 if n % 2 == 0 else None)):
            raise ArgumentError(f"leading parameter a={a} must avoid 0 and n/2")
        if b == 0:
            return TRIVIAL_AXIS_PLUS_FAMILY
        if b == a or b == (-a) % n:
            return INFINITELY_MANY_ISOTOPIC
        return EXACTLY_TWO
    if kinds == [ROT, SIGN, ONE]:
        a = r.blocks[0].a % n
        if a == 0 or (n % 2 == 0 and a == n // 2):
            raise ArgumentError(f"leading parameter a={a} must avoid 0 and n/2")
        return REFLECTION_AXIS_PLUS_FAMILY
    raise ArgumentError(
        f"{r.text()} is outside the invariant-circle census hypotheses"
    )
