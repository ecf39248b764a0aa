"""Classify explicit orthogonal representations into symmetry types.

A symmetry of a knot determines a faithful representation of the group
on R^4.  The classifier names its type, and rejects the representation
shapes that no knot can realize, citing the geometric obstruction.
"""

from knotsym import classify, rep_from_string
from knotsym.errors import NotAKnotAction

EXAMPLES = [
    "C5: w[2]+w[0]",        # rotation by 2/5 turns: periodic
    "C7: w[2]+w[3]",        # double rotation: freely periodic
    "C6: w[1]+w[sign]+1",   # rotoreflection
    "D5: v[2]+v[0]",        # periodic plus strong inversions
    "D4: v[1]+v[sign]+v[sigma]",  # SNASI
    "D4: v[1]+v[sign]+v[sign]",   # DihF: composite knots only
]

for text in EXAMPLES:
    t = classify(rep_from_string(text))
    tags = []
    if not t.prime_admissible:
        tags.append("composite knots only")
    if t.name in ("FPer", "SIFP"):
        tags.append(t.fper_subcase())
    extra = f"  ({', '.join(tags)})" if tags else ""
    print(f"{text:<28} -> {t}{extra}")

# Some faithful representations exist but never act on a knot.  A free
# action with a power that fixes a 2-sphere, for instance, would force
# that sphere to meet the knot, contradicting freeness:
print()
for text in [
    "C6: w[2]+w[sign]+1",          # CycC
    "D6: v[2]+v[sign]+1",          # DihG
    "D6: v[2]+v[sign]+v[sign]",    # DihI
    "D2: v[sign]+v[sign]+v[sign]+v[sigma]",  # DihJ
]:
    try:
        classify(rep_from_string(text))
    except NotAKnotAction as exc:
        print(f"{text:<40} rejected: {exc.family} [{exc.rule}]")
