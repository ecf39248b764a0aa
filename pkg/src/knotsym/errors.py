"""Exception hierarchy shared by all knotsym modules."""


class KnotSymError(Exception):
    """Base class for all errors raised by knotsym."""


class ArgumentError(KnotSymError, ValueError):
    """A precondition on an argument was violated (CLI exit code 2)."""


class NotAKnotAction(KnotSymError):
    """A representation that cannot arise as a symmetry of any knot.

    ``rule`` names the geometric obstruction, ``family`` the eliminated
    representation family (CLI exit code 3).
    """

    def __init__(self, family, rule, message):
        super().__init__(f"{family} eliminated: {message} [{rule}]")
        self.family = family
        self.rule = rule


class InadmissiblePair(KnotSymError):
    """A fixed-set dimension pair ruled out for order-2 symmetries."""

    def __init__(self, rule, message):
        super().__init__(f"{message} [{rule}]")
        self.rule = rule


class ClassificationError(KnotSymError):
    """Observed data matches no row of the classification tables."""


class ResolutionError(KnotSymError):
    """A numeric result was too far from certifiable (exit code 4)."""


class ProximityError(ResolutionError):
    """Curves too close together for the requested sample resolution."""


class InvarianceError(KnotSymError):
    """A curve failed the invariance check under a declared action."""


class TransversalityError(KnotSymError):
    """A curve meets an axis needed by the detection algorithm."""


class OrderError(KnotSymError):
    """A circle map did not have the declared finite order."""


class ConventionError(KnotSymError):
    """A circle map lift has the wrong rotation number for the convention."""


class GroupRelationError(KnotSymError):
    """Supplied maps fail the defining relations of the group."""

    def __init__(self, message, deviations=None):
        super().__init__(message)
        self.deviations = dict(deviations or {})


class ConstructionError(KnotSymError):
    """A combinatorial construction failed its own verification."""


class SearchExhaustedError(KnotSymError):
    """A bounded search ended without finding a certified witness."""


# Named obstruction rules quoted by NotAKnotAction / InadmissiblePair.
RULE_FIXED_SPHERE = "fixed-sphere-meets-knot"
RULE_NESTING = "fixed-set-nesting"
RULE_AXIS_LINKING = "axis-linking-must-be-one"
RULE_SNAC_CONFLICT = "snac-fixed-points-conflict"

RULE_MESSAGES = {
    RULE_FIXED_SPHERE: (
        "an element fixes a 2-sphere pointwise, which must meet the knot "
        "in two points, but the element acts freely on the knot"
    ),
    RULE_NESTING: (
        "an element reverses the knot, so it fixes two knot points, "
        "but its fixed set in the 3-sphere is too small to contain them"
    ),
    RULE_AXIS_LINKING: (
        "a reflection fixes a 2-sphere, forcing the knot to link the "
        "rotation axis exactly once, so the turn parameter must be 1"
    ),
    RULE_SNAC_CONFLICT: (
        "the fixed points of the orientation-reversing involution must "
        "lie on the knot, but they sit on an axis disjoint from it"
    ),
}
