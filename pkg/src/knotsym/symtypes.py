"""The symmetry-type taxonomy, the classifier, restrictions, and the
decision tree over computed full-symmetry-group data.

A symmetry type records the conjugacy class of a faithful action of a
finite cyclic or dihedral group on (S^3, K), up to relabelling the
group so the preferred rotation acts on the knot by a 1/n-turn.  Types
of order-2 symmetries get their own six names; larger groups fall into
three cyclic and seven dihedral families.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field

from .errors import (
    ArgumentError, ClassificationError, InadmissiblePair, NotAKnotAction,
    RULE_AXIS_LINKING, RULE_FIXED_SPHERE, RULE_MESSAGES, RULE_NESTING,
    RULE_SNAC_CONFLICT,
)
from . import orthrep
from .orthrep import (
    CYC_A, CYC_B, CYC_C, DIH_A, DIH_B, DIH_C, DIH_D, DIH_E, DIH_F, DIH_G,
    DIH_H, DIH_I, DIH_J, DIH_K, DIH_L, GroupElement, RepSum, classify_family,
    group_elements, normalize_blocks, rep, v_one, v_rot, v_sigma, v_sign,
    w_one, w_rot, w_sign, element_det, fixed_dim,
)
from .zmod import (
    GroupSpec, cyclic, dihedral, enumerate_turn_pairs, parse_group,
    sign_class, turn_pair, unit_sign_classes,
)

# The six order-2 type names (Table of C_2 types).
F2P, SPAC, TWOP, SNAC, SI, TWOR = "F2P", "SPAc", "2P", "SNAc", "SI", "2R"
C2_NAMES = (F2P, SPAC, TWOP, SNAC, SI, TWOR)

# Family names for n >= 3 cyclic and n >= 2 dihedral symmetric knots.
PER, FPER, RREF = "Per", "FPer", "RRef"
SIFP, SIP, SNAP, SNASI = "SIFP", "SIP", "SNAP", "SNASI"
DIHB, DIHD, DIHF = "DihB", "DihD", "DihF"

CYCLIC_NAMES = (PER, FPER, RREF)
DIHEDRAL_NAMES = (SIFP, SIP, SNAP, SNASI, DIHB, DIHD, DIHF)

# name -> (fix_knot_dim, fix_sphere_dim, prime, good_diagram) for order 2;
# dimension -1 encodes the empty fixed set.
_C2_TABLE = {
    F2P: (-1, -1, True, False),
    SPAC: (-1, 0, True, True),
    TWOP: (-1, 1, True, True),
    SNAC: (0, 0, True, True),
    SI: (0, 1, True, True),
    TWOR: (0, 2, False, True),
}

# knot-reversing order-2 types (dihedral-family order-2 degenerations)
_C2_REVERSING = (SNAC, SI, TWOR)

# name -> (param_count, needs_even_n, prime, good_diagram, order2_name)
_CYCLIC_TABLE = {
    FPER: (2, False, True, False, F2P),
    PER: (1, False, True, True, TWOP),
    RREF: (1, True, True, True, SPAC),
}

# name -> (param_count, needs_even_n, prime, good, rho_name, sigma_name,
#          rho_sigma_name, order2_name)
_DIHEDRAL_TABLE = {
    SIFP: (2, False, True, False, FPER, SI, SI, SI),
    SIP: (1, False, True, True, PER, SI, SI, SI),
    SNAP: (1, False, True, False, PER, SNAC, SNAC, SNAC),
    SNASI: (1, True, True, False, RREF, SI, SNAC, None),
    DIHB: (0, False, False, True, PER, TWOR, TWOR, TWOR),
    DIHD: (0, True, False, True, RREF, TWOR, SI, None),
    DIHF: (0, True, False, False, FPER, TWOR, SNAC, None),
}


@dataclass(frozen=True)
class SymmetryType:
    """One row of the classification tables, with its parameters.

    Parameters are stored canonically: a single parameter as the
    sign-class representative in [1, n/2], a pair as the turn-pair
    canonical form.  Order-2 types carry no parameters and always use
    the order-2 vocabulary.
    """

    name: str
    params: tuple = ()
    group: GroupSpec = field(default_factory=lambda: cyclic(2))

    def __post_init__(self):
        object.__setattr__(self, "params", tuple(int(p) for p in self.params))
        n = self.group.n
        if self.name in C2_NAMES:
            if self.group.order != 2:
                raise ArgumentError(
                    f"{self.name} is an order-2 type; got group {self.group}"
                )
            object.__setattr__(self, "group", cyclic(2))
            if self.params:
                raise ArgumentError(f"{self.name} carries no parameters")
            return
        if self.name in CYCLIC_NAMES:
            if not self.group.is_cyclic or n < 3:
                raise ArgumentError(
                    f"{self.name} needs a cyclic group with n >= 3, "
                    f"got {self.group}"
                )
            count, even, *_ = _CYCLIC_TABLE[self.name]
        elif self.name in DIHEDRAL_NAMES:
            if not self.group.is_dihedral or n < 2:
                raise ArgumentError(
                    f"{self.name} needs a dihedral group with n >= 2, "
                    f"got {self.group}"
                )
            count, even, *_ = _DIHEDRAL_TABLE[self.name]
        else:
            raise ArgumentError(f"unknown symmetry type name {self.name!r}")
        if even and n % 2 == 1:
            raise ArgumentError(f"{self.name} requires even n, got n={n}")
        if len(self.params) != count:
            raise ArgumentError(
                f"{self.name} takes {count} parameter(s), got {self.params}"
            )
        if count == 1:
            a = sign_class(self.params[0], n)
            if not a.is_unit():
                raise ArgumentError(
                    f"{self.name} parameter must be a unit mod {n}, "
                    f"got {self.params[0]}"
                )
            object.__setattr__(self, "params", (a.value,))
        elif count == 2:
            t = turn_pair(self.params[0], self.params[1], n)
            object.__setattr__(self, "params", t.values)

    # -- table columns ----------------------------------------------------

    @property
    def prime_admissible(self):
        if self.name in C2_NAMES:
            return _C2_TABLE[self.name][2]
        if self.name in CYCLIC_NAMES:
            return _CYCLIC_TABLE[self.name][2]
        return _DIHEDRAL_TABLE[self.name][2]

    @property
    def good_diagram(self):
        if self.name in C2_NAMES:
            return _C2_TABLE[self.name][3]
        if self.name in CYCLIC_NAMES:
            return _CYCLIC_TABLE[self.name][3]
        return _DIHEDRAL_TABLE[self.name][3]

    @property
    def is_order2(self):
        return self.name in C2_NAMES

    def fixed_dims(self):
        """(dim Fix on knot, dim Fix on S^3) for order-2 types."""
        if not self.is_order2:
            raise ArgumentError(f"{self.name} is not an order-2 type")
        k, s, *_ = _C2_TABLE[self.name]
        return k, s

    def rho_action_name(self):
        """Name of the cyclic type of the rotation subgroup (dihedral only)."""
        if self.name not in DIHEDRAL_NAMES:
            raise ArgumentError(f"{self.name} has no rho-type column")
        return _DIHEDRAL_TABLE[self.name][4]

    def reflection_action_names(self):
        """(sigma-type, rho*sigma-type) column pair (dihedral only)."""
        if self.name not in DIHEDRAL_NAMES:
            raise ArgumentError(f"{self.name} has no reflection columns")
        row = _DIHEDRAL_TABLE[self.name]
        return row[5], row[6]

    def order2_name(self):
        """The order-2 vocabulary name of this family's degenerate case."""
        if self.is_order2:
            return self.name
        if self.name in CYCLIC_NAMES:
            return _CYCLIC_TABLE[self.name][4]
        return _DIHEDRAL_TABLE[self.name][7]

    def fper_subcase(self):
        """Informational fine type of a freely-periodic symmetry.

        'truly-free' when both turn parameters are units (the whole
        group acts freely), 'biperiodic' when their product vanishes
        mod n (two complementary periodic factors), 'semi-periodic'
        otherwise.
        """
        if self.name not in (FPER, SIFP):
            raise ArgumentError(f"{self.name} has no freely-periodic subcase")
        a, b = self.params
        n = self.group.n
        if math.gcd(a, n) == 1 and math.gcd(b, n) == 1:
            return "truly-free"
        if (a * b) % n == 0:
            return "biperiodic"
        return "semi-periodic"

    # -- serialization -----------------------------------------------------

    def __str__(self):
        params = f"({','.join(str(p) for p in self.params)})" if self.params else ""
        return f"{self.name}{params}/{self.group}"

    def __repr__(self):
        return f"SymmetryType({self})"


_TYPE_RE = re.compile(r"^([A-Za-z0-9]+?)(?:\(([0-9,\s]+)\))?/([CD]\d+)$")


def type_from_string(text: str) -> SymmetryType:
    """Parse 'Per(2)/C5', 'SIFP(1,1)/D2', '2R/C2' style type strings."""
    m = _TYPE_RE.match(text.strip())
    if not m:
        raise ArgumentError(f"cannot parse type string {text!r}")
    name, params, group = m.groups()
    params = tuple(int(p) for p in params.split(",")) if params else ()
    g = parse_group(group)
    if name in C2_NAMES and g.order == 2:
        return SymmetryType(name)
    return SymmetryType(name, params, g)


def type_to_string(t: SymmetryType) -> str:
    return str(t)


# ---------------------------------------------------------------------------
# Order-2 classification from fixed-set dimensions
# ---------------------------------------------------------------------------

def c2_type(fix_knot_dim: int, fix_sphere_dim: int) -> SymmetryType:
    """The order-2 type with the given fixed-set dimensions (-1 = empty).

    Raises InadmissiblePair for the two combinations no knot symmetry
    can realize: an empty knot fixed set with a fixed 2-sphere, and a
    knot fixed set larger than its ambient fixed set.
    """
    if fix_knot_dim not in (-1, 0):
        raise ArgumentError(f"fix_knot_dim must be -1 or 0, got {fix_knot_dim}")
    if fix_sphere_dim not in (-1, 0, 1, 2):
        raise ArgumentError(
            f"fix_sphere_dim must be in -1..2, got {fix_sphere_dim}"
        )
    if fix_knot_dim > fix_sphere_dim:
        raise InadmissiblePair(RULE_NESTING, RULE_MESSAGES[RULE_NESTING])
    if fix_knot_dim == -1 and fix_sphere_dim == 2:
        raise InadmissiblePair(
            RULE_FIXED_SPHERE, RULE_MESSAGES[RULE_FIXED_SPHERE]
        )
    table = {
        (-1, -1): F2P,
        (-1, 0): SPAC,
        (-1, 1): TWOP,
        (0, 0): SNAC,
        (0, 1): SI,
        (0, 2): TWOR,
    }
    return SymmetryType(table[(fix_knot_dim, fix_sphere_dim)])


# ---------------------------------------------------------------------------
# Classification of representations
# ---------------------------------------------------------------------------

def _classify_order2(r: RepSum) -> SymmetryType:
    """Order-2 route: the group kind prescribes the knot-side action.

    In the cyclic family the generator rotates the knot (free action);
    in the dihedral family it reflects the knot (two fixed points).
    """
    tau = GroupElement(r.group, 1, 0) if r.group.is_cyclic \
        else GroupElement(r.group, 0, 1)
    sphere_dim = fixed_dim(r, tau) - 1
    knot_dim = 0 if r.group.is_dihedral else -1
    family = "CycB" if r.group.is_cyclic else "DihChar"
    try:
        return c2_type(knot_dim, sphere_dim)
    except InadmissiblePair as exc:
        raise NotAKnotAction(family, exc.rule, RULE_MESSAGES[exc.rule]) from exc


def classify(r: RepSum) -> SymmetryType:
    """The symmetry type of a faithful 4-dimensional representation.

    Raises NotAKnotAction for the representation families that are
    never realized by a knot symmetry: CycC and DihG/DihH (a power of
    the rotation fixes a 2-sphere while acting freely on the knot),
    DihI (the amphichiral reflections need their fixed points both on
    and off the knot), DihJ/DihK/DihL (a knot-reversing element with
    empty ambient fixed set), and the DihB/DihD/DihF shapes whose turn
    parameter is not 1 (the knot must link the invariant axis once).
    """
    if r.dim != 4:
        raise ArgumentError(f"classification needs dimension 4, got {r.dim}")
    if not orthrep.is_faithful(r):
        raise ArgumentError(f"{r.text()} is not faithful")
    if r.group.order == 2:
        return _classify_order2(r)
    n = r.n
    family = classify_family(r)

    if family == CYC_C:
        raise NotAKnotAction(
            CYC_C, RULE_FIXED_SPHERE, RULE_MESSAGES[RULE_FIXED_SPHERE]
        )
    if family in (DIH_G, DIH_H):
        raise NotAKnotAction(
            family, RULE_FIXED_SPHERE, RULE_MESSAGES[RULE_FIXED_SPHERE]
        )
    if family == DIH_I:
        raise NotAKnotAction(
            DIH_I, RULE_SNAC_CONFLICT, RULE_MESSAGES[RULE_SNAC_CONFLICT]
        )
    if family in (DIH_J, DIH_K, DIH_L):
        raise NotAKnotAction(family, RULE_NESTING, RULE_MESSAGES[RULE_NESTING])

    labs = normalize_blocks(r)
    rots = [lab.a % n for lab in labs if lab.kind == orthrep.ROT]

    if family == CYC_A:
        a, b = rots if len(rots) == 2 else (rots[0], None)
        if len(rots) == 1:
            # one irreducible rotation block plus two characters
            chars = sorted(lab.kind for lab in labs if lab.kind != orthrep.ROT)
            if chars == [orthrep.ONE, orthrep.ONE]:
                b = 0
            else:  # sign + sign, i.e. w[n/2]
                b = n // 2
        if len(rots) == 0:
            raise ArgumentError(f"{r.text()} has no rotation block")
        if b % n == 0:
            return SymmetryType(PER, (a,), cyclic(n))
        return SymmetryType(FPER, (a, b), cyclic(n))
    if family == CYC_B:
        a = rots[0]
        return SymmetryType(RREF, (a,), cyclic(n))

    # at n = 2 every rotation block decomposes into characters, and the
    # only unit parameter is 1
    rot_param = rots[0] if rots else 1

    if family == DIH_A:
        if len(rots) == 2:
            a, b = rots
        elif len(rots) == 1:
            a = rots[0]
            kinds = [lab.kind for lab in labs if lab.kind != orthrep.ROT]
            b = 0 if orthrep.SIGMA in kinds else n // 2
        else:  # n = 2: v[1]+v[0] has a sigma character, v[1]+v[1] does not
            a = 1
            kinds = [lab.kind for lab in labs]
            b = 0 if orthrep.SIGMA in kinds else n // 2
        if b % n == 0:
            return SymmetryType(SIP, (a,), dihedral(n))
        return SymmetryType(SIFP, (a, b), dihedral(n))
    if family == DIH_C:
        return SymmetryType(SNAP, (rot_param,), dihedral(n))
    if family == DIH_E:
        return SymmetryType(SNASI, (rot_param,), dihedral(n))
    if family in (DIH_B, DIH_D, DIH_F):
        a = sign_class(rot_param, n)
        if a.value != 1:
            raise NotAKnotAction(
                family, RULE_AXIS_LINKING, RULE_MESSAGES[RULE_AXIS_LINKING]
            )
        name = {DIH_B: DIHB, DIH_D: DIHD, DIH_F: DIHF}[family]
        return SymmetryType(name, (), dihedral(n))
    raise ClassificationError(f"no classification rule for family {family}")


# ---------------------------------------------------------------------------
# Enumeration of admissible types
# ---------------------------------------------------------------------------

def admissible_types(group: GroupSpec) -> list[SymmetryType]:
    """All symmetry types of nontrivial knots for the given group.

    Order-2 groups get the six (cyclic family) or three (dihedral
    family) order-2 types; larger groups get the table rows with
    parameters ranging over unit sign classes and turn pairs.
    """
    n = group.n
    if group.order < 2:
        raise ArgumentError(f"group order must be >= 2, got {group.order}")
    if group.order == 2:
        if group.is_cyclic:
            return [SymmetryType(name) for name in C2_NAMES]
        return [SymmetryType(name) for name in _C2_REVERSING]
    out = []
    if group.is_cyclic:
        for a in unit_sign_classes(n):
            out.append(SymmetryType(PER, (a.value,), group))
        for t in enumerate_turn_pairs(n):
            out.append(SymmetryType(FPER, t.values, group))
        if n % 2 == 0:
            for a in unit_sign_classes(n):
                out.append(SymmetryType(RREF, (a.value,), group))
        return out
    for t in enumerate_turn_pairs(n):
        out.append(SymmetryType(SIFP, t.values, group))
    for a in unit_sign_classes(n):
        out.append(SymmetryType(SIP, (a.value,), group))
    for a in unit_sign_classes(n):
        out.append(SymmetryType(SNAP, (a.value,), group))
    if n % 2 == 0:
        for a in unit_sign_classes(n):
            out.append(SymmetryType(SNASI, (a.value,), group))
    out.append(SymmetryType(DIHB, (), group))
    if n % 2 == 0:
        out.append(SymmetryType(DIHD, (), group))
        out.append(SymmetryType(DIHF, (), group))
    return out


def representative_rep(t: SymmetryType) -> RepSum:
    """A standard representation realizing the type's ambient action."""
    if t.is_order2:
        builders = {
            F2P: rep(cyclic(2), w_rot(1), w_rot(1)),
            SPAC: rep(cyclic(2), w_rot(1), w_sign(), w_one()),
            TWOP: rep(cyclic(2), w_rot(1), w_rot(0)),
            SNAC: rep(dihedral(1), v_sigma(), v_sigma(), v_sigma(), v_one()),
            SI: rep(dihedral(1), v_sigma(), v_sigma(), v_one(), v_one()),
            TWOR: rep(dihedral(1), v_sigma(), v_one(), v_one(), v_one()),
        }
        return builders[t.name]
    n = t.group.n
    if t.name == PER:
        return rep(cyclic(n), w_rot(t.params[0]), w_rot(0))
    if t.name == FPER:
        return rep(cyclic(n), w_rot(t.params[0]), w_rot(t.params[1]))
    if t.name == RREF:
        return rep(cyclic(n), w_rot(t.params[0]), w_sign(), w_one())
    if t.name == SIFP:
        return rep(dihedral(n), v_rot(t.params[0]), v_rot(t.params[1]))
    if t.name == SIP:
        return rep(dihedral(n), v_rot(t.params[0]), v_rot(0))
    if t.name == SNAP:
        return rep(dihedral(n), v_rot(t.params[0]), v_sigma(), v_sigma())
    if t.name == SNASI:
        return rep(dihedral(n), v_rot(t.params[0]), v_sign(), v_sigma())
    if t.name == DIHB:
        return rep(dihedral(n), v_rot(1), v_one(), v_one())
    if t.name == DIHD:
        return rep(dihedral(n), v_rot(1), v_sign(), v_one())
    if t.name == DIHF:
        return rep(dihedral(n), v_rot(1), v_sign(), v_sign())
    raise ArgumentError(f"no representative for {t}")


# ---------------------------------------------------------------------------
# Per-element action labels and the freely-periodic / amphichiral scan
# ---------------------------------------------------------------------------

def element_action_summary(t: SymmetryType):
    """For each nontrivial group element: (element, det, ambient fixed dim).

    The determinant and the fixed-subspace dimension of the element's
    ambient action determine whether it is freely periodic (det +1,
    empty fixed set) or amphichiral (det -1).
    """
    r = representative_rep(t)
    out = []
    for g in group_elements(r.group):
        if g.is_identity:
            continue
        out.append((g, element_det(r, g), fixed_dim(r, g)))
    return out


def has_freely_periodic_element(t: SymmetryType) -> bool:
    return any(d == 1 and f == 0 for _, d, f in element_action_summary(t))


def has_amphichiral_element(t: SymmetryType) -> bool:
    return any(d == -1 for _, d, _ in element_action_summary(t))


def mixes_free_and_amphichiral(t: SymmetryType) -> bool:
    """Whether a single action contains both a freely-periodic and an
    amphichiral element.

    No prime-admissible type does; among composite-only types exactly
    DihF mixes them (its rotation is a fixed-point-free double rotation
    while its reflections reverse ambient orientation), which is why
    the free-plus-amphichiral exclusion applies to prime knots only.
    """
    return has_freely_periodic_element(t) and has_amphichiral_element(t)


def free_amphichiral_violations(group: GroupSpec):
    """Prime-admissible types mixing freely-periodic and amphichiral
    elements; always empty."""
    return [
        t for t in admissible_types(group)
        if t.prime_admissible and mixes_free_and_amphichiral(t)
    ]


# ---------------------------------------------------------------------------
# Restrictions to subgroups
# ---------------------------------------------------------------------------

def _order2_cyclic(name, _n):
    """Translate a cyclic family name to order-2 vocabulary."""
    return SymmetryType({PER: TWOP, FPER: F2P, RREF: SPAC}[name])


def restrict_cyclic(t: SymmetryType, d: int) -> SymmetryType:
    """The type of the restriction to the index-d subgroup of C_n.

    The subgroup generated by rho^d is cyclic of order m = n/d, which
    must be at least 2.  Parameters reduce mod m; a freely-periodic
    type degenerates to Per(a+b) when either reduced parameter
    vanishes; a rotoreflection restricts to a rotation for even d.
    Order-2 results are reported in the order-2 vocabulary.
    """
    if t.name not in CYCLIC_NAMES:
        raise ArgumentError(f"{t} is not a C_n type for n >= 3")
    n = t.group.n
    if d < 1 or n % d != 0:
        raise ArgumentError(f"d={d} does not divide n={n}")
    m = n // d
    if m < 2:
        raise ArgumentError(
            f"subgroup of order n/d = {m} is trivial; need n/d >= 2"
        )
    if t.name == PER:
        name, params = PER, (t.params[0] % m,)
    elif t.name == FPER:
        a, b = t.params[0] % m, t.params[1] % m
        if a != 0 and b != 0:
            name, params = FPER, (a, b)
        else:
            name, params = PER, ((a + b) % m,)
    else:  # RREF
        name = PER if d % 2 == 0 else RREF
        params = (t.params[0] % m,)
    if m == 2:
        return _order2_cyclic(name, m)
    return SymmetryType(name, params, cyclic(m))


def restrict_dihedral(t: SymmetryType, d: int, r: int) -> SymmetryType:
    """The type of the restriction to the dihedral subgroup generated
    by rho^d and rho^r sigma.

    Requires d | n and 0 <= r < d.  The subgroup is D_{n/d}; when
    d = n it is an order-2 group and the result uses the order-2
    vocabulary.  For the types whose reflections fall into two
    conjugacy classes (SNASI, DihD, DihF), the parity of r selects
    which class the subgroup's reflections carry.
    """
    if t.name not in DIHEDRAL_NAMES:
        raise ArgumentError(f"{t} is not a D_n type for n >= 2")
    n = t.group.n
    if d < 1 or n % d != 0:
        raise ArgumentError(f"d={d} does not divide n={n}")
    if not 0 <= r < d:
        raise ArgumentError(f"need 0 <= r < d, got r={r}, d={d}")
    m = n // d

    if t.name == SIFP:
        a, b = t.params[0] % m, t.params[1] % m
        if a != 0 and b != 0:
            name, params = SIFP, (a, b)
        else:
            name, params = SIP, ((a + b) % m,)
    elif t.name == SIP:
        name, params = SIP, (t.params[0] % m,)
    elif t.name == SNAP:
        name, params = SNAP, (t.params[0] % m,)
    elif t.name == SNASI:
        a = t.params[0] % m
        if d % 2 == 0:
            name = SIP if r % 2 == 0 else SNAP
        else:
            name = SNASI
        params = (a,)
    elif t.name == DIHB:
        name, params = DIHB, ()
    elif t.name == DIHD:
        if d % 2 == 0:
            name, params = (DIHB, ()) if r % 2 == 0 else (SIP, (1,))
        else:
            name, params = DIHD, ()
    else:  # DIHF
        if d % 2 == 0:
            name, params = (DIHB, ()) if r % 2 == 0 else (SNAP, (1,))
        else:
            name, params = DIHF, ()

    if m == 1:
        order2 = {
            SIFP: SI, SIP: SI, SNAP: SNAC, SNASI: None,
            DIHB: TWOR, DIHD: None, DIHF: None,
        }[name]
        if order2 is None:
            # even-n-only families never restrict to D_1 directly: d = n
            # is even, so the parity branches above already replaced them
            raise ClassificationError(f"{name} cannot restrict to order 2")
        return SymmetryType(order2)
    return SymmetryType(name, params, dihedral(m))


def restrict_dihedral_to_cyclic(t: SymmetryType, d: int) -> SymmetryType:
    """The type of the restriction to the cyclic subgroup <rho^d>."""
    if t.name not in DIHEDRAL_NAMES:
        raise ArgumentError(f"{t} is not a D_n type for n >= 2")
    n = t.group.n
    rho_name = t.rho_action_name()
    if rho_name == FPER and t.name == DIHF:
        params = (1, n // 2)
    elif t.name in (DIHB, DIHD):
        params = (1,)
    else:
        params = t.params
    if n == 2:
        base = SymmetryType({PER: TWOP, FPER: F2P, RREF: SPAC}[rho_name])
        if d != 1:
            raise ArgumentError(f"d={d} gives a trivial subgroup of C_2")
        return base
    cyc = SymmetryType(rho_name, params, cyclic(n))
    return cyc if d == 1 else restrict_cyclic(cyc, d)


# ---------------------------------------------------------------------------
# Decision tree over computed symmetry-group data
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SnappyProfile:
    """Shape of a knot's full symmetry group as computed by hyperbolic
    software: group shape and order, whether it contains an inversion
    or an amphichiral element, and for order 2 the cusp matrix signs
    (action on meridian and longitude)."""

    group_shape: str  # "trivial" | "cyclic" | "dihedral"
    order: int = 1
    invertible: bool = False
    amphichiral: bool = False
    cusp_action: tuple | None = None

    def __post_init__(self):
        if self.group_shape not in ("trivial", "cyclic", "dihedral"):
            raise ArgumentError(f"unknown group shape {self.group_shape!r}")
        if (self.cusp_action is not None) != (self.order == 2):
            raise ArgumentError("cusp_action is present iff order = 2")
        if self.cusp_action is not None:
            x, y = self.cusp_action
            if x not in (-1, 1) or y not in (-1, 1):
                raise ArgumentError(f"cusp entries must be +-1, got {self.cusp_action}")


def snappy_decide(profile: SnappyProfile) -> set[str]:
    """The set of type families compatible with the profile.

    Returns a set because periodic, semi-periodic and freely periodic
    symmetries of the same order are indistinguishable at this level
    (Per vs FPer, SIP vs SIFP); secondary parameters are never
    determined.  Order-2 profiles are resolved exactly by the cusp
    matrix, except that (+1, +1) leaves {2P, F2P}.
    """
    if profile.group_shape == "trivial":
        return set()
    if profile.order == 2:
        x, y = profile.cusp_action
        table = {
            (1, 1): {TWOP, F2P},
            (-1, 1): {SPAC},
            (1, -1): {SNAC},
            (-1, -1): {SI},
        }
        return table[(x, y)]
    if profile.order < 2:
        raise ClassificationError(f"nontrivial group of order {profile.order}?")
    if profile.group_shape == "cyclic":
        if profile.invertible:
            raise ClassificationError(
                "a cyclic symmetry group of order > 2 cannot contain an inversion"
            )
        return {RREF} if profile.amphichiral else {PER, FPER}
    # dihedral
    if profile.invertible and profile.amphichiral:
        return {SNASI}
    if profile.invertible:
        return {SIP, SIFP}
    if profile.amphichiral:
        return {SNAP}
    raise ClassificationError(
        "a dihedral symmetry group must contain an inversion or an "
        "amphichiral element"
    )
